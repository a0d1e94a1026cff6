//! Deformations of the product and coproduct by conjugation with the
//! invertible maps `phi(lambda)` attached to unital functionals.

use crate::algebra::{tensor_map_left, tensor_map_right, HElem, Multiset, TensorElem};
use crate::error::Result;
use crate::hopf::coalgebra::coproduct_elem;
use crate::hopf::endo::{phi, phi_inverse, HEndo};
use crate::hopf::functional::Functional;

/// The deformed Hopf structure attached to a unital functional: the product
/// `x .deformed y = phi_inv(phi(x) phi(y))`, the matching coproduct, and the
/// functional itself in its role as deformed counit. Building one of these
/// once and reusing it keeps the memo tables of `phi` warm.
pub struct Deformation {
    lambda: Functional,
    forward: HEndo,
    backward: HEndo,
}

impl Deformation {
    /// Fails unless `lambda` is unital.
    pub fn new(lambda: &Functional) -> Result<Self> {
        Ok(Deformation {
            lambda: lambda.clone(),
            forward: phi(lambda)?,
            backward: phi_inverse(lambda)?,
        })
    }

    /// The deformed counit, which is the functional itself.
    pub fn counit(&self) -> &Functional {
        &self.lambda
    }

    pub fn phi(&self) -> &HEndo {
        &self.forward
    }

    pub fn phi_inverse(&self) -> &HEndo {
        &self.backward
    }

    /// Deformed product: associative, commutative, unit unchanged.
    pub fn product(&self, x: &HElem, y: &HElem) -> Result<HElem> {
        let fx = self.forward.apply(x)?;
        let fy = self.forward.apply(y)?;
        self.backward.apply(&fx.mul(&fy))
    }

    /// Deformed coproduct of a basis multiset.
    pub fn coproduct(&self, a: &Multiset) -> Result<TensorElem> {
        self.coproduct_elem(&HElem::basis(a.clone()))
    }

    /// Deformed coproduct of a general element, with like terms collected.
    pub fn coproduct_elem(&self, x: &HElem) -> Result<TensorElem> {
        let pushed = self.forward.apply(x)?;
        let split = coproduct_elem(&pushed)?;
        let left = tensor_map_left(&split, |a| self.backward.on_basis(a))?;
        tensor_map_right(&left, |b| self.backward.on_basis(b))
    }
}

/// One-shot deformed product; see [`Deformation::product`].
pub fn deformed_product(lambda: &Functional, x: &HElem, y: &HElem) -> Result<HElem> {
    Deformation::new(lambda)?.product(x, y)
}

/// One-shot deformed coproduct; see [`Deformation::coproduct`].
pub fn deformed_coproduct(lambda: &Functional, a: &Multiset) -> Result<TensorElem> {
    Deformation::new(lambda)?.coproduct(a)
}
