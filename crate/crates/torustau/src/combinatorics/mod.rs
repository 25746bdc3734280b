//! Partition/Maya combinatorics and the Nekrasov-Okounkov representation
//! of the tau-function: bifundamental factors, instanton and perturbative
//! partition functions, toric conformal blocks, dual partition functions
//! and transcendent extraction from block ratios.

pub mod blocks;
pub mod maya;
pub mod partition;
pub mod zfun;

pub use blocks::{
    charge_sum, conformal_block, dual_partition_function, fourier_block_sum, tau_combinatorial,
    tau_fourier_blocks, transcendent_from_blocks, BlockParams, PartitionPairTable,
    SectorContribution, TruncationConfig,
};
pub use maya::{charge_sum_identity, maya_to_young, young_to_maya, MayaDiagram};
pub use partition::{arm, enumerate_partitions, leg, Partition};
pub use zfun::{z_bif, z_inst, z_pert_ratio};
