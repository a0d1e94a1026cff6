//! Moments, cumulants, Wick polynomials and their brute-force oracles.

pub mod moments;
pub mod partitions;
pub mod wick;

pub use moments::{cumulants, moment_functional, moments_from_cumulants, MomentSpec};
pub use partitions::{
    bell_recursion_moment, ls_partition_cumulants, ls_partition_moments, set_partitions,
    SetPartition,
};
pub use wick::{
    partial_derivation, partial_derivation_map, verify_characterization,
    verify_characterization_of_map, wick, wick_expansion, wick_inverse, wick_inverse_map, wick_map,
    wick_product, CharacterizationFailure, CharacterizationReport,
};
