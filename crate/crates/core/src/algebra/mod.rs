//! Exact rationals, multisets and sparse linear combinations: the
//! vector-space substrate for the Hopf-algebraic layers.

pub mod lincomb;
pub mod multiset;
pub mod rational;

pub use lincomb::{
    tensor, tensor_apply_left, tensor_apply_right, tensor_map_left, tensor_map_right, tensor_swap,
    BasisMonoid, Combination,
};
pub use multiset::{decompositions, multiset_binomial, Letter, Multiset, DECOMPOSITION_GUARD};
pub use rational::Rat;

/// An element of the monoid algebra over multisets: a sparse exact polynomial.
pub type HElem = Combination<Multiset>;

/// An element of the tensor square, as produced by the coproduct.
pub type TensorElem = Combination<(Multiset, Multiset)>;
