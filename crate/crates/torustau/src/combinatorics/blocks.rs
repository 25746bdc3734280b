//! Toric conformal blocks, dual partition functions and the two
//! combinatorial tau-function routes.
//!
//! Normalization conventions. The transcendent Q(tau) used across this
//! crate is the "flow" normalization: the one whose theta-log-derivatives
//! enter the determinant relation and whose free limit (m = 0) is
//! Q = a tau + nu. The charge-lattice series are then divided by
//!
//! * theta4(Q - rho) theta4(Q + rho) for the Fourier-of-blocks form,
//! * theta2(Q - rho~) theta2(Q + rho~), rho~ = rho - m(tau+1)/2, for the
//!   direct charge-sum form,
//!
//! which are the half-period translates of the theta1 prefactors that make
//! each series rho-independent in this normalization. Both routes then
//! agree with each other and with exp(integral of H) without any leftover
//! tau-dependent factor.

use super::partition::{enumerate_partitions, Partition};
use super::zfun::{z_inst, z_pert_ratio};
use crate::accum::ordered_sum;
use crate::error::{Error, Result};
use crate::specfun::{c64, ci, dedekind_eta, theta, ModularParameter, SeriesControl, TWO_PI};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Monodromy-side parameters of the block series.
#[derive(Debug, Clone, Copy)]
pub struct BlockParams {
    /// A-cycle exponent.
    pub a: Complex64,
    /// Puncture exponent.
    pub m: Complex64,
    /// B-cycle angle (Fourier normalization, phases e^{2 pi i nu n}).
    pub nu: Complex64,
    /// U(1) twist of the determinant gluing.
    pub rho: Complex64,
    pub mp: ModularParameter,
}

impl BlockParams {
    pub fn new(
        a: Complex64,
        m: Complex64,
        nu: Complex64,
        rho: Complex64,
        mp: ModularParameter,
    ) -> Result<Self> {
        // a in Z + 1/2 degenerates the hypergeometric data and the
        // charge-lattice sums.
        let frac = a.re - a.re.floor();
        if a.im.abs() < 1e-9 && (frac - 0.5).abs() < 1e-9 {
            return Err(Error::Domain(format!(
                "A-cycle exponent a = {a} too close to Z + 1/2"
            )));
        }
        Ok(Self { a, m, nu, rho, mp })
    }

    /// rho~ = rho - m (tau + 1)/2, the twist seen by the rank-1 gauge.
    pub fn rho_tilde(&self) -> Complex64 {
        self.rho - self.m * (self.mp.tau + 1.0) / 2.0
    }
}

/// Caps on the combinatorial sums. Both sums enumerate every term within
/// the caps; tails are bounded by Gaussian lattice estimates.
#[derive(Debug, Clone, Copy)]
pub struct TruncationConfig {
    /// Cap on |Y1| + |Y2|.
    pub max_boxes: u32,
    /// Cap on |n| and |k| in the charge reparametrization.
    pub max_charge: i64,
}

impl TruncationConfig {
    pub fn new(max_boxes: u32, max_charge: i64) -> Result<Self> {
        if max_charge < 0 {
            return Err(Error::Domain("max_charge must be >= 0".into()));
        }
        Ok(Self {
            max_boxes,
            max_charge,
        })
    }
}

/// Precomputed partition pairs grouped by total box count, shared by every
/// charge sector of a sum.
pub struct PartitionPairTable {
    parts: Vec<Partition>,
    /// (index of Y1, index of Y2, |Y1|, |Y2|) for all pairs with
    /// |Y1| + |Y2| <= max_boxes, in a fixed deterministic order.
    pairs: Vec<(usize, usize, u32, u32)>,
}

impl PartitionPairTable {
    pub fn new(max_boxes: u32) -> Self {
        let parts = enumerate_partitions(max_boxes);
        let mut pairs = Vec::new();
        for (i1, y1) in parts.iter().enumerate() {
            for (i2, y2) in parts.iter().enumerate() {
                if y1.size() + y2.size() <= max_boxes {
                    pairs.push((i1, i2, y1.size(), y2.size()));
                }
            }
        }
        Self { parts, pairs }
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// Instanton sum sum_{Y1,Y2} q^{|Y1|+|Y2|} Zinst(sigma', sigma'+m | Y, Y)
/// at sigma' = (a', -a'). This is the partition-pair part of the conformal
/// block; the caller supplies charge-dependent prefactors.
fn instanton_sum(
    a_shifted: Complex64,
    m: Complex64,
    mp: &ModularParameter,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    let sigma = [a_shifted, -a_shifted];
    let mu = [a_shifted + m, -a_shifted + m];
    let mut terms = Vec::with_capacity(table.pairs.len());
    for &(i1, i2, s1, s2) in &table.pairs {
        let yv = [&table.parts[i1], &table.parts[i2]];
        let weight = mp.q.powu(s1 + s2);
        terms.push(weight * z_inst(sigma, mu, yv, yv)?);
    }
    Ok(ordered_sum(&terms))
}

/// Toric conformal block
/// B(a', m, q) = (eta e^{-i pi tau/12})^{-2 m^2} e^{-i pi tau/6} q^{a'^2}
///               sum_{Y} q^{|Y|} Zinst(...),
/// normalized so that max_boxes = 0 gives exactly the prefactor. The
/// perturbative charge ratio is supplied by the caller (it depends on the
/// integer shift, not on the partitions).
pub fn conformal_block(
    a_shifted: Complex64,
    m: Complex64,
    mp: &ModularParameter,
    trunc: &TruncationConfig,
) -> Result<Complex64> {
    let table = PartitionPairTable::new(trunc.max_boxes);
    conformal_block_with_table(a_shifted, m, mp, &table)
}

pub fn conformal_block_with_table(
    a_shifted: Complex64,
    m: Complex64,
    mp: &ModularParameter,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    let ctl = SeriesControl::default();
    let eta = dedekind_eta(mp, &ctl)?;
    let pref = (eta * (-ci() * PI * mp.tau / 12.0).exp()).powc(-2.0 * m * m)
        * (-ci() * PI * mp.tau / 6.0).exp()
        * (ci() * TWO_PI * mp.tau * a_shifted * a_shifted).exp();
    Ok(pref * instanton_sum(a_shifted, m, mp, table)?)
}

/// The block including its perturbative charge factor, as it enters the
/// Fourier sums: Zpert-ratio(n) * B(a + n/2, m, q).
fn charged_block(
    p: &BlockParams,
    n: i64,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    let zp = z_pert_ratio([p.a, -p.a], [n, 0], p.m)?;
    let a_shifted = p.a + n as f64 / 2.0;
    Ok(zp * conformal_block_with_table(a_shifted, p.m, &p.mp, table)?)
}

/// Dual partition function with integer (shift = 0) or half-integer
/// (shift = 1/2) charge shifts:
/// Z^D_s = sum_u e^{4 pi i nu (u+s)} Zpert-ratio(2(u+s)) B(a + u + s, m, q).
pub fn dual_partition_function(
    shift_half: bool,
    p: &BlockParams,
    trunc: &TruncationConfig,
) -> Result<Complex64> {
    let table = PartitionPairTable::new(trunc.max_boxes);
    dual_partition_function_with_table(shift_half, p, trunc, &table)
}

pub fn dual_partition_function_with_table(
    shift_half: bool,
    p: &BlockParams,
    trunc: &TruncationConfig,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    // n runs over even (shift 0) or odd (shift 1/2) integers with
    // |n| <= max_charge; u + s = n/2.
    let parity = if shift_half { 1 } else { 0 };
    let ns: Vec<i64> = (-trunc.max_charge..=trunc.max_charge)
        .filter(|n| n.rem_euclid(2) == parity)
        .collect();
    let terms = ns
        .par_iter()
        .map(|&n| {
            let phase = (ci() * TWO_PI * p.nu * n as f64).exp();
            Ok(phase * charged_block(p, n, table)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ordered_sum(&terms))
}

/// Inner double sum of the Fourier-of-blocks representation:
/// sum_{n,k} e^{2 pi i nu n} q^{(k+n/2)^2} e^{4 pi i (k+n/2)(rho+1/2)}
///           Zpert-ratio(n) B(a+n/2, m, q).
pub fn fourier_block_sum(
    p: &BlockParams,
    trunc: &TruncationConfig,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    let mc = trunc.max_charge;
    let ns: Vec<i64> = (-mc..=mc).collect();
    let sector_sums = ns
        .par_iter()
        .map(|&n| {
            let block = charged_block(p, n, table)?;
            let nu_phase = (ci() * TWO_PI * p.nu * n as f64).exp();
            // The k-lattice weight |q|^{(k+n/2)^2} is centered at -n/2;
            // truncate the window where convergence is manifest.
            let k0 = (-n).div_euclid(2);
            let mut terms = Vec::with_capacity((2 * mc + 1) as usize);
            for k in (k0 - mc)..=(k0 + mc) {
                let half = k as f64 + n as f64 / 2.0;
                let lattice = (ci() * TWO_PI * p.mp.tau * half * half).exp()
                    * (ci() * 2.0 * TWO_PI * half * (p.rho + 0.5)).exp();
                terms.push(lattice);
            }
            Ok(nu_phase * block * ordered_sum(&terms))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ordered_sum(&sector_sums))
}

/// Tau-function as a discrete Fourier transform of conformal blocks,
/// normalized to the flow transcendent Q:
/// T = eta^2 * (inner double sum) / (theta4(Q - rho) theta4(Q + rho)).
pub fn tau_fourier_blocks(
    p: &BlockParams,
    q_transcendent: Complex64,
    trunc: &TruncationConfig,
) -> Result<Complex64> {
    let table = PartitionPairTable::new(trunc.max_boxes);
    tau_fourier_blocks_with_table(p, q_transcendent, trunc, &table)
}

pub fn tau_fourier_blocks_with_table(
    p: &BlockParams,
    q_transcendent: Complex64,
    trunc: &TruncationConfig,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    let ctl = SeriesControl::default();
    let eta = dedekind_eta(&p.mp, &ctl)?;
    let t4m = theta(4, q_transcendent - p.rho, &p.mp, &ctl)?;
    let t4p = theta(4, q_transcendent + p.rho, &p.mp, &ctl)?;
    let denom = t4m * t4p;
    if denom.norm() < 1e-12 {
        return Err(Error::ThetaZero(format!(
            "theta4(Q -+ rho) prefactor at Q = {q_transcendent}"
        )));
    }
    Ok(eta * eta * fourier_block_sum(p, trunc, table)? / denom)
}

/// Tau-function as the direct sum over charged partition pairs,
/// normalized to the flow transcendent Q. Charges are iterated in the
/// (n, k) = (q1 - q2, q1 + q2) parametrization over the square
/// |n|, |k| <= max_charge with n = k (mod 2).
pub fn tau_combinatorial(
    p: &BlockParams,
    q_transcendent: Complex64,
    trunc: &TruncationConfig,
) -> Result<Complex64> {
    let table = PartitionPairTable::new(trunc.max_boxes);
    tau_combinatorial_with_table(p, q_transcendent, trunc, &table)
}

pub fn tau_combinatorial_with_table(
    p: &BlockParams,
    q_transcendent: Complex64,
    trunc: &TruncationConfig,
    table: &PartitionPairTable,
) -> Result<Complex64> {
    let ctl = SeriesControl::default();
    let eta = dedekind_eta(&p.mp, &ctl)?;
    let tau = p.mp.tau;
    let rho_t = p.rho_tilde();

    let t2m = theta(2, q_transcendent - rho_t, &p.mp, &ctl)?;
    let t2p = theta(2, q_transcendent + rho_t, &p.mp, &ctl)?;
    let denom = t2m * t2p;
    if denom.norm() < 1e-12 {
        return Err(Error::ThetaZero(format!(
            "theta2(Q -+ rho~) prefactor at Q = {q_transcendent}"
        )));
    }

    let pref = (eta * (-ci() * PI * tau / 12.0).exp()).powc(2.0 - 2.0 * p.m * p.m)
        * (-ci() * TWO_PI * (p.rho - tau / 2.0 * (p.m + 0.5) - p.m / 2.0)).exp();

    let sum = charge_sum(p, trunc, table, None)?;
    Ok(pref * sum / denom)
}

/// Per-sector contribution record for the CSV debug dump.
#[derive(Debug, Clone, Copy)]
pub struct SectorContribution {
    pub n: i64,
    pub k: i64,
    pub boxes1: u32,
    pub boxes2: u32,
    pub value: Complex64,
}

/// The raw charge sum of the direct representation. When `sectors` is
/// provided, per-(n,k,|Y1|,|Y2|) aggregates are appended to it.
pub fn charge_sum(
    p: &BlockParams,
    trunc: &TruncationConfig,
    table: &PartitionPairTable,
    mut sectors: Option<&mut Vec<SectorContribution>>,
) -> Result<Complex64> {
    let mc = trunc.max_charge;
    let tau = p.mp.tau;
    let rho_shift = p.rho - p.m * (tau + 1.0) / 2.0 - tau / 2.0;

    // The total-charge lattice weight combines the Gaussian q^{k^2/4} with
    // the phase q^{-k/2} from rho_shift, so decay is governed by
    // |q|^{((k+1)^2 - 1)/4}: center the k-window at -1 (always keeping
    // k = 0 inside so the vacuum sector survives any truncation).
    let k_lo = -1 - mc;
    let k_hi = (-1 + mc).max(0);
    let mut sector_list = Vec::new();
    for n in -mc..=mc {
        for k in k_lo..=k_hi {
            if (n + k).rem_euclid(2) == 0 {
                sector_list.push((n, k));
            }
        }
    }

    let sector_values = sector_list
        .par_iter()
        .map(|&(n, k)| {
            let q1 = (n + k) / 2;
            let q2 = (k - n) / 2;
            let sigma = [p.a + q1 as f64, -p.a + q2 as f64];
            let mu = [sigma[0] + p.m, sigma[1] + p.m];
            let zp = z_pert_ratio([p.a, -p.a], [q1, q2], p.m)?;
            // e^{2 pi i tau (Q+a)^2/2} e^{2 pi i [nu n - k rho_shift]}
            let gauss = (q1 as f64 + p.a) * (q1 as f64 + p.a)
                + (q2 as f64 - p.a) * (q2 as f64 - p.a);
            let phase = (ci() * TWO_PI * tau * gauss / 2.0).exp()
                * (ci() * TWO_PI * (p.nu * n as f64 - rho_shift * k as f64)).exp();

            let mut by_sizes: Vec<((u32, u32), Complex64)> = Vec::new();
            let mut terms = Vec::with_capacity(table.pairs.len());
            for &(i1, i2, s1, s2) in &table.pairs {
                let yv = [&table.parts[i1], &table.parts[i2]];
                let w = p.mp.q.powu(s1 + s2) * z_inst(sigma, mu, yv, yv)?;
                let term = phase * zp * w;
                terms.push(term);
                if let Some(e) = by_sizes.iter_mut().find(|(sz, _)| *sz == (s1, s2)) {
                    e.1 += term;
                } else {
                    by_sizes.push(((s1, s2), term));
                }
            }
            Ok((n, k, by_sizes, ordered_sum(&terms)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut totals = Vec::with_capacity(sector_values.len());
    for (n, k, by_sizes, total) in sector_values {
        if let Some(out) = sectors.as_deref_mut() {
            for ((s1, s2), v) in by_sizes {
                out.push(SectorContribution {
                    n,
                    k,
                    boxes1: s1,
                    boxes2: s2,
                    value: v,
                });
            }
        }
        totals.push(total);
    }
    Ok(ordered_sum(&totals))
}

/// Solve for the transcendent from the dual partition ratio:
/// theta3(2Q|2tau) / theta2(2Q|2tau) = Z^D_0 / Z^D_{1/2}
/// (integer over half-integer shifts), returning the flow-normalized root
/// nearest the seed (defaults to the free-motion value a tau + nu).
pub fn transcendent_from_blocks(
    p: &BlockParams,
    trunc: &TruncationConfig,
    prev: Option<Complex64>,
) -> Result<Complex64> {
    let table = PartitionPairTable::new(trunc.max_boxes);
    let z0 = dual_partition_function_with_table(false, p, trunc, &table)?;
    let zh = dual_partition_function_with_table(true, p, trunc, &table)?;
    if zh.norm() < 1e-280 * z0.norm().max(1.0) {
        return Err(Error::DegenerateRatio(
            "half-integer dual partition function vanished".into(),
        ));
    }
    let ratio = z0 / zh;
    let seed = prev.unwrap_or(p.a * p.mp.tau + p.nu);
    crate::transcendent::solve_theta_ratio(ratio, &p.mp, seed)
}
