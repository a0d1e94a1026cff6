//! The Hopf algebra structure on multisets, the dual convolution calculus,
//! and deformations of product and coproduct by unital functionals.

pub mod coalgebra;
pub mod deform;
pub mod endo;
pub mod functional;

pub use coalgebra::{antipode, antipode_basis, coproduct, coproduct_elem, counit};
pub use deform::{deformed_coproduct, deformed_product, Deformation};
pub use endo::{convolve_op, phi, phi_inverse, HEndo};
pub use functional::{Functional, FunctionalKind};
