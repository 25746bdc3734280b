//! Isomonodromic tau-function of the one-point torus.
//!
//! The tau-function of the elliptic Painleve VI flow (the 2-particle
//! non-autonomous Calogero-Moser system in the center of mass frame) is
//! computed three independent ways and cross-validated:
//!
//! * [`combinatorics`] — Nekrasov-Okounkov charge-lattice series over pairs
//!   of charged partitions (conformal blocks and their dual resummations),
//! * [`fredholm`] — a truncated Fredholm determinant built from
//!   hypergeometric trinion solutions glued across the a-cycle,
//! * [`dynamics`] — direct integration of the flow and its Hamiltonian.
//!
//! The Painleve transcendent Q(tau) is extracted from theta-function ratios
//! of either the dual partition functions or the determinant, and the three
//! routes are tied together by the log-derivative relation between the
//! determinant and the tau-function.
//!
//! See the crate examples for runnable tours of each subsystem; the
//! `torustau` binary exposes the same machinery as a small CLI.

pub mod accum;
pub mod cli;
pub mod combinatorics;
pub mod dynamics;
pub mod error;
pub mod fredholm;
pub mod specfun;
pub mod transcendent;

pub use error::{Error, Result};
