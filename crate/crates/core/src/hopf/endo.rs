//! Linear endomorphisms of the multiset algebra and the convolution action
//! of functionals on them.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::algebra::{decompositions, multiset_binomial, HElem, Multiset};
use crate::error::Result;
use crate::hopf::functional::Functional;

type BasisRule = dyn Fn(&Multiset) -> Result<HElem> + Send + Sync;

struct Inner {
    rule: Box<BasisRule>,
    memo: RwLock<HashMap<Multiset, HElem>>,
}

/// A linear map of the multiset algebra into itself, given on basis
/// multisets and extended linearly. Basis images are memoized.
#[derive(Clone)]
pub struct HEndo {
    inner: Arc<Inner>,
}

impl HEndo {
    pub fn from_basis_rule(
        rule: impl Fn(&Multiset) -> Result<HElem> + Send + Sync + 'static,
    ) -> Self {
        HEndo {
            inner: Arc::new(Inner {
                rule: Box::new(rule),
                memo: RwLock::new(HashMap::new()),
            }),
        }
    }

    pub fn identity() -> Self {
        HEndo::from_basis_rule(|a| Ok(HElem::basis(a.clone())))
    }

    pub fn on_basis(&self, a: &Multiset) -> Result<HElem> {
        if let Some(hit) = self.inner.memo.read().expect("memo lock").get(a) {
            return Ok(hit.clone());
        }
        let value = (self.inner.rule)(a)?;
        self.inner
            .memo
            .write()
            .expect("memo lock")
            .insert(a.clone(), value.clone());
        Ok(value)
    }

    pub fn apply(&self, x: &HElem) -> Result<HElem> {
        x.map_linear(|a| self.on_basis(a))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &HEndo) -> HEndo {
        let (f, g) = (self.clone(), other.clone());
        HEndo::from_basis_rule(move |a| f.apply(&g.on_basis(a)?))
    }

    /// Convolution of two endomorphisms:
    /// `(f * g)(A) = sum binom(A; B1 B2) f(B1) g(B2)` with the product in H.
    pub fn convolve(&self, other: &HEndo) -> HEndo {
        let (f, g) = (self.clone(), other.clone());
        HEndo::from_basis_rule(move |a| {
            let mut out = HElem::zero();
            for parts in decompositions(a, 2, true)? {
                let coeff = multiset_binomial(a, &parts);
                let left = f.on_basis(&parts[0])?;
                let right = g.on_basis(&parts[1])?;
                for (m, r) in left.mul(&right).iter() {
                    out.add_term(m.clone(), r * &coeff);
                }
            }
            Ok(out)
        })
    }
}

/// Convolution of a functional with an endomorphism:
/// `(f * g)(A) = sum binom(A; B1 B2) f(B1) g(B2)`.
///
/// No unitality is required of `f`; this is the map written `phi` below when
/// `g` is the identity.
pub fn convolve_op(f: &Functional, g: &HEndo) -> HEndo {
    let (f, g) = (f.clone(), g.clone());
    HEndo::from_basis_rule(move |a| {
        let mut out = HElem::zero();
        for parts in decompositions(a, 2, true)? {
            let coeff = multiset_binomial(a, &parts) * f.eval(&parts[0])?;
            for (m, r) in g.on_basis(&parts[1])?.iter() {
                out.add_term(m.clone(), r * &coeff);
            }
        }
        Ok(out)
    })
}

/// The canonical action of a unital functional: `phi(lambda) = lambda * id`.
/// Invertible with inverse `phi` of the convolution inverse.
pub fn phi(lambda: &Functional) -> Result<HEndo> {
    lambda.require_unital()?;
    Ok(convolve_op(lambda, &HEndo::identity()))
}

/// Inverse of [`phi`], computed through the Neumann inverse.
pub fn phi_inverse(lambda: &Functional) -> Result<HEndo> {
    Ok(convolve_op(&lambda.neumann_inverse()?, &HEndo::identity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Letter, Multiset, Rat};
    use std::collections::BTreeMap;
    use std::str::FromStr;

    fn ms(s: &str) -> Multiset {
        Multiset::from_str(s).unwrap()
    }

    fn gaussian() -> Functional {
        let mut table = BTreeMap::new();
        for (m, v) in [
            ("1", 1),
            ("a", 0),
            ("a^2", 1),
            ("a^3", 0),
            ("a^4", 3),
            ("a^5", 0),
            ("a^6", 15),
        ] {
            table.insert(ms(m), Rat::from_int(v));
        }
        Functional::from_table(table, 6)
    }

    #[test]
    fn counit_convolved_with_identity_is_identity() {
        let e = convolve_op(&Functional::counit(), &HEndo::identity());
        for s in ["1", "a", "a^2 b", "a^3"] {
            assert_eq!(e.on_basis(&ms(s)).unwrap(), HElem::basis(ms(s)));
        }
    }

    #[test]
    fn gaussian_inverse_action_gives_centered_square() {
        let w = convolve_op(&gaussian().neumann_inverse().unwrap(), &HEndo::identity());
        let expected = HElem::basis(ms("a^2")).sub(&HElem::one());
        assert_eq!(w.on_basis(&ms("a^2")).unwrap(), expected);
    }

    #[test]
    fn zeta_acts_as_derivation() {
        let d = convolve_op(
            &Functional::zeta(Letter::new("a").unwrap()),
            &HEndo::identity(),
        );
        assert_eq!(
            d.on_basis(&ms("a^3")).unwrap(),
            HElem::basis(ms("a^2")).scale(&Rat::from_int(3))
        );
    }

    #[test]
    fn phi_of_counit_is_identity() {
        let id = phi(&Functional::counit()).unwrap();
        assert_eq!(
            id.on_basis(&ms("a^2 b")).unwrap(),
            HElem::basis(ms("a^2 b"))
        );
    }

    #[test]
    fn phi_of_gaussian_on_a_squared() {
        let f = phi(&gaussian()).unwrap();
        let expected = HElem::basis(ms("a^2")).add(&HElem::one());
        assert_eq!(f.on_basis(&ms("a^2")).unwrap(), expected);
    }

    #[test]
    fn phi_inverse_undoes_phi() {
        let mu = gaussian();
        let forward = phi(&mu).unwrap();
        let backward = phi_inverse(&mu).unwrap();
        let both = backward.compose(&forward);
        for s in ["1", "a", "a^2", "a^3", "a^4", "a^5", "a^6"] {
            assert_eq!(both.on_basis(&ms(s)).unwrap(), HElem::basis(ms(s)));
        }
    }

    #[test]
    fn phi_rejects_non_unital() {
        assert!(phi(&Functional::zero()).is_err());
    }
}
