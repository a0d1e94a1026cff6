//! Exact Hopf-algebraic calculus of multivariate moments, cumulants and Wick
//! polynomials.
//!
//! The crate is organized in layers:
//!
//! - [`algebra`]: exact rationals, letters, multisets and sparse linear
//!   combinations over any ordered basis.
//! - [`hopf`]: the binomial coproduct on multisets, convolution of linear
//!   functionals, exact star-series (exponential, logarithm, Neumann
//!   inverse), and deformations of product and coproduct by unital
//!   functionals.
//! - [`cumulant`]: moment specifications, the moment/cumulant transforms,
//!   Wick polynomials through three independent routes, formal partial
//!   derivations, and brute-force set-partition and single-letter recursion
//!   oracles kept permanently next to the production paths.
//! - [`forest`]: the polynomial Hopf algebra on forests of multisets with a
//!   closed-form antipode, the character lift, and the comodule route to
//!   convolution inverses and Wick polynomials.
//! - [`tree`]: edge-decorated non-planar rooted trees with the
//!   extraction-contraction coproduct, character convolution and graded
//!   inverses, deformed tree products, the centering character, and the
//!   corolla embedding of the multiset algebra.
//! - [`render`]: text, LaTeX and JSON forms for polynomials and functionals.
//! - [`synth`]: seeded deterministic rational test data.
//!
//! Everything is computed in exact rational arithmetic; star series are
//! finite sums by grading, so no tolerances appear anywhere.

pub mod algebra;
pub mod cumulant;
pub mod error;
pub mod forest;
pub mod hopf;
pub mod render;
pub mod synth;
pub mod tree;

pub use algebra::{decompositions, multiset_binomial, HElem, Letter, Multiset, Rat, TensorElem};
pub use cumulant::{
    bell_recursion_moment, cumulants, ls_partition_cumulants, ls_partition_moments,
    moment_functional, moments_from_cumulants, partial_derivation, verify_characterization, wick,
    wick_expansion, wick_inverse, wick_product, MomentSpec,
};
pub use error::{Error, Result};
pub use forest::{
    comodule_coaction, forest_antipode, forest_coproduct, forest_counit, inverse_via_antipode,
    psi_hat, wick_via_antipode, Forest, ForestElem, ForestFunctional,
};
pub use hopf::{
    antipode, convolve_op, coproduct, counit, deformed_coproduct, deformed_product, phi,
    phi_inverse, Deformation, Functional, FunctionalKind, HEndo,
};
pub use tree::{
    centering_character, corolla_embed, corolla_restrict, deformed_tree_product,
    extraction_contraction, psi_lambda, tree_char_convolve, tree_char_inverse, trees_up_to,
    trees_with_edges, DecTree, TreeCharacter, TreeElem, TreeForest,
};
