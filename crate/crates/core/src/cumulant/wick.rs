//! Wick polynomials: the centered polynomial family attached to a moment
//! functional, with three independent routes kept side by side, the deformed
//! Wick product, formal partial derivations and the centering/derivation
//! characterization check.

use crate::algebra::{decompositions, multiset_binomial, HElem, Letter, Multiset, Rat};
use crate::error::Result;
use crate::hopf::{convolve_op, Deformation, Functional, HEndo};

/// The Wick map `W = inverse(mu) * id` as a reusable endomorphism.
pub fn wick_map(mu: &Functional) -> Result<HEndo> {
    mu.require_unital()?;
    Ok(convolve_op(&mu.neumann_inverse()?, &HEndo::identity()))
}

/// The composition inverse of the Wick map, `mu * id`.
pub fn wick_inverse_map(mu: &Functional) -> Result<HEndo> {
    mu.require_unital()?;
    Ok(convolve_op(mu, &HEndo::identity()))
}

/// Wick polynomial of an element.
pub fn wick(mu: &Functional, x: &HElem) -> Result<HElem> {
    wick_map(mu)?.apply(x)
}

/// Preimage of an element under the Wick map.
pub fn wick_inverse(mu: &Functional, x: &HElem) -> Result<HElem> {
    wick_inverse_map(mu)?.apply(x)
}

/// The alternating-sum closed expansion of a Wick polynomial:
/// `W(A) = A + sum_{n>=1} (-1)^n sum binom(A; B1..Bn B) mu(B1)..mu(Bn) B`
/// over nonempty `B1..Bn`. An independent route that must agree with
/// [`wick`].
pub fn wick_expansion(mu: &Functional, a: &Multiset) -> Result<HElem> {
    mu.require_unital()?;
    let mut out = HElem::basis(a.clone());
    for n in 1..=a.degree() {
        let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
        // n nonempty moment parts plus one (possibly empty) surviving part
        for parts in decompositions(a, n + 1, true)? {
            if parts[..n as usize].iter().any(Multiset::is_empty) {
                continue;
            }
            let mut coeff = multiset_binomial(a, &parts) * sign.clone();
            for part in &parts[..n as usize] {
                coeff *= mu.eval(part)?;
            }
            out.add_term(parts[n as usize].clone(), coeff);
        }
    }
    Ok(out)
}

/// Product of Wick polynomials in the deformed algebra attached to `mu`.
pub fn wick_product(mu: &Functional, x: &HElem, y: &HElem) -> Result<HElem> {
    Deformation::new(mu)?.product(x, y)
}

/// The formal partial derivation with respect to a letter, as convolution
/// with the letter's infinitesimal character.
pub fn partial_derivation_map(letter: Letter) -> HEndo {
    convolve_op(&Functional::zeta(letter), &HEndo::identity())
}

/// Apply the formal partial derivation to an element.
pub fn partial_derivation(letter: &Letter, x: &HElem) -> Result<HElem> {
    partial_derivation_map(letter.clone()).apply(x)
}

/// Where a characterization check failed, and on what.
#[derive(Clone, Debug)]
pub enum CharacterizationFailure {
    /// `mu(W(A))` was nonzero on a nonempty multiset.
    NotCentered { multiset: Multiset, value: Rat },
    /// The map did not commute with a partial derivation.
    DerivationMismatch {
        letter: Letter,
        multiset: Multiset,
        lhs: HElem,
        rhs: HElem,
    },
}

/// Outcome of [`verify_characterization`].
#[derive(Clone, Debug)]
pub struct CharacterizationReport {
    pub checked: usize,
    pub witness: Option<CharacterizationFailure>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks the two defining identities of the Wick map derived from `mu`:
/// centering (`mu(W(A)) = 0` for nonempty `A`) and commutation with every
/// partial derivation, over all basis multisets up to `max_degree`.
pub fn verify_characterization(
    mu: &Functional,
    alphabet: &[Letter],
    max_degree: u32,
) -> Result<CharacterizationReport> {
    let w = wick_map(mu)?;
    verify_characterization_of_map(mu, &w, alphabet, max_degree)
}

/// Same checks against a caller-supplied candidate map; a corrupted map
/// fails with a witness.
pub fn verify_characterization_of_map(
    mu: &Functional,
    candidate: &HEndo,
    alphabet: &[Letter],
    max_degree: u32,
) -> Result<CharacterizationReport> {
    mu.require_unital()?;
    let mut checked = 0;
    for a in Multiset::enumerate(alphabet, max_degree) {
        let image = candidate.on_basis(&a)?;
        if !a.is_empty() {
            let centered = image.apply_functional(|m| mu.eval(m))?;
            checked += 1;
            if !centered.is_zero() {
                return Ok(CharacterizationReport {
                    checked,
                    witness: Some(CharacterizationFailure::NotCentered {
                        multiset: a,
                        value: centered,
                    }),
                });
            }
        }
        for letter in alphabet {
            let d = partial_derivation_map(letter.clone());
            let lhs = d.apply(&image)?;
            let rhs = candidate.apply(&d.on_basis(&a)?)?;
            checked += 1;
            if lhs != rhs {
                return Ok(CharacterizationReport {
                    checked,
                    witness: Some(CharacterizationFailure::DerivationMismatch {
                        letter: letter.clone(),
                        multiset: a,
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    Ok(CharacterizationReport {
        checked,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn ms(s: &str) -> Multiset {
        s.parse().unwrap()
    }

    fn single_letter_table(values: &[i64]) -> Functional {
        let a = Letter::new("a").unwrap();
        let mut table = BTreeMap::new();
        for (k, v) in values.iter().enumerate() {
            table.insert(Multiset::single(a.clone(), k as u32), Rat::from_int(*v));
        }
        Functional::from_table(table, values.len() as u32 - 1)
    }

    fn gaussian() -> Functional {
        single_letter_table(&[1, 0, 1, 0, 3, 0, 15])
    }

    fn poisson() -> Functional {
        // rate 1: Bell numbers
        single_letter_table(&[1, 1, 2, 5, 15, 52, 203])
    }

    #[test]
    fn gaussian_wick_is_hermite_four() {
        let w = wick(&gaussian(), &HElem::basis(ms("a^4"))).unwrap();
        let expected = HElem::basis(ms("a^4"))
            .sub(&HElem::basis(ms("a^2")).scale(&Rat::from_int(6)))
            .add(&HElem::one().scale(&Rat::from_int(3)));
        assert_eq!(w, expected);
    }

    #[test]
    fn wick_fixes_the_unit() {
        assert_eq!(wick(&gaussian(), &HElem::one()).unwrap(), HElem::one());
    }

    #[test]
    fn centered_second_wick_polynomial() {
        let mu = gaussian();
        let w = wick(&mu, &HElem::basis(ms("a^2"))).unwrap();
        let expected = HElem::basis(ms("a^2")).sub(&HElem::one());
        assert_eq!(w, expected);
    }

    #[test]
    fn expansion_agrees_with_convolution_route() {
        for mu in [gaussian(), poisson()] {
            for s in ["1", "a", "a^2", "a^3", "a^4", "a^5", "a^6"] {
                let lhs = wick_expansion(&mu, &ms(s)).unwrap();
                let rhs = wick(&mu, &HElem::basis(ms(s))).unwrap();
                assert_eq!(lhs, rhs, "routes disagree on {s}");
            }
        }
    }

    #[test]
    fn expansion_of_empty_multiset_is_unit() {
        assert_eq!(
            wick_expansion(&gaussian(), &Multiset::empty()).unwrap(),
            HElem::one()
        );
    }

    #[test]
    fn poisson_wick_square() {
        let got = wick_expansion(&poisson(), &ms("a^2")).unwrap();
        let expected = HElem::basis(ms("a^2")).sub(&HElem::basis(ms("a")).scale(&Rat::from_int(2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn wick_inverse_composes_to_identity() {
        let mu = gaussian();
        let x = HElem::basis(ms("a^3"));
        assert_eq!(wick_inverse(&mu, &wick(&mu, &x).unwrap()).unwrap(), x);
        assert_eq!(wick_inverse(&mu, &HElem::one()).unwrap(), HElem::one());
        let expected = HElem::basis(ms("a^2")).add(&HElem::one());
        assert_eq!(
            wick_inverse(&mu, &HElem::basis(ms("a^2"))).unwrap(),
            expected
        );
    }

    #[test]
    fn defining_recursion_reconstructs_the_monomial() {
        // each monomial is the moment-weighted sum of Wick polynomials of
        // its parts, i.e. convolving the moments against the Wick map gives
        // back the identity
        for mu in [gaussian(), poisson()] {
            let reconstructed = convolve_op(&mu, &wick_map(&mu).unwrap());
            for s in ["1", "a", "a^2", "a^3", "a^4", "a^5", "a^6"] {
                assert_eq!(
                    reconstructed.on_basis(&ms(s)).unwrap(),
                    HElem::basis(ms(s)),
                    "recursion failed on {s}"
                );
            }
        }
    }

    #[test]
    fn wick_product_matches_wick_of_product() {
        let mu = gaussian();
        let wa = wick(&mu, &HElem::basis(ms("a"))).unwrap();
        let pair = wick_product(&mu, &wa, &wa).unwrap();
        assert_eq!(pair, wick(&mu, &HElem::basis(ms("a^2"))).unwrap());

        let triple = wick_product(&mu, &pair, &wa).unwrap();
        let he3 = HElem::basis(ms("a^3")).sub(&HElem::basis(ms("a")).scale(&Rat::from_int(3)));
        assert_eq!(triple, wick(&mu, &HElem::basis(ms("a^3"))).unwrap());
        assert_eq!(triple, he3);
    }

    #[test]
    fn wick_product_unit() {
        let mu = gaussian();
        let x = HElem::basis(ms("a^2")).scale(&Rat::new(2, 3).unwrap());
        assert_eq!(wick_product(&mu, &x, &HElem::one()).unwrap(), x);
    }

    #[test]
    fn partial_derivation_examples() {
        let a = Letter::new("a").unwrap();
        assert_eq!(
            partial_derivation(&a, &HElem::basis(ms("a^3"))).unwrap(),
            HElem::basis(ms("a^2")).scale(&Rat::from_int(3))
        );
        assert_eq!(
            partial_derivation(&a, &HElem::basis(ms("b^2"))).unwrap(),
            HElem::zero()
        );
        assert_eq!(
            partial_derivation(&a, &HElem::basis(ms("a b"))).unwrap(),
            HElem::basis(ms("b"))
        );
    }

    #[test]
    fn partial_derivation_satisfies_leibniz() {
        let a = Letter::new("a").unwrap();
        let x = HElem::basis(ms("a^2 b"));
        let y = HElem::basis(ms("a c"));
        let lhs = partial_derivation(&a, &x.mul(&y)).unwrap();
        let rhs = partial_derivation(&a, &x)
            .unwrap()
            .mul(&y)
            .add(&x.mul(&partial_derivation(&a, &y).unwrap()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn characterization_passes_for_gaussian_and_poisson() {
        let alphabet = vec![Letter::new("a").unwrap()];
        for mu in [gaussian(), poisson()] {
            let report = verify_characterization(&mu, &alphabet, 6).unwrap();
            assert!(report.passed(), "witness: {:?}", report.witness);
        }
    }

    #[test]
    fn wick_rejects_degrees_above_the_truncation() {
        let mu = single_letter_table(&[1, 0, 1, 0, 3]);
        let err = wick(&mu, &HElem::basis(ms("a^6"))).unwrap_err();
        assert!(matches!(
            err,
            crate::error::Error::DegreeExceeded { max_degree: 4, .. }
        ));
    }

    #[test]
    fn corrupted_map_fails_with_witness() {
        let mu = gaussian();
        let w = wick_map(&mu).unwrap();
        // bump the coefficient of the unit term in the image of a^2
        let corrupted = HEndo::from_basis_rule(move |m| {
            let mut image = w.on_basis(m)?;
            if *m == "a^2".parse().unwrap() {
                image.add_term(Multiset::empty(), Rat::one());
            }
            Ok(image)
        });
        let alphabet = vec![Letter::new("a").unwrap()];
        let report = verify_characterization_of_map(&mu, &corrupted, &alphabet, 4).unwrap();
        match report.witness {
            Some(CharacterizationFailure::NotCentered { multiset, value }) => {
                assert_eq!(multiset, ms("a^2"));
                assert_eq!(value, Rat::one());
            }
            other => panic!("expected a centering witness, got {other:?}"),
        }
    }
}
