//! The bialgebra structure on multisets: binomial coproduct, counit and the
//! antipode that negates letters.

use crate::algebra::{
    decompositions, multiset_binomial, Combination, HElem, Multiset, Rat, TensorElem,
};
use crate::error::Result;

/// Binomial coproduct on a basis multiset: the sum over ordered two-part
/// decompositions weighted by the multiset multinomial.
pub fn coproduct(a: &Multiset) -> Result<TensorElem> {
    let mut out = TensorElem::zero();
    for parts in decompositions(a, 2, true)? {
        let coeff = multiset_binomial(a, &parts);
        let mut it = parts.into_iter();
        let b1 = it.next().expect("two parts");
        let b2 = it.next().expect("two parts");
        out.add_term((b1, b2), coeff);
    }
    Ok(out)
}

/// Linear extension of [`coproduct`].
pub fn coproduct_elem(x: &HElem) -> Result<TensorElem> {
    let mut out = TensorElem::zero();
    for (m, r) in x.iter() {
        for (pair, c) in coproduct(m)?.iter() {
            out.add_term(pair.clone(), c * r);
        }
    }
    Ok(out)
}

/// Indicator of the empty multiset.
pub fn counit(a: &Multiset) -> Rat {
    if a.is_empty() {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// The antipode: multiplicative extension of letter negation, so a basis
/// multiset picks up the sign `(-1)^degree`.
pub fn antipode(x: &HElem) -> HElem {
    let mut out = HElem::zero();
    for (m, r) in x.iter() {
        let sign = if m.degree() % 2 == 0 { r.clone() } else { -r };
        out.add_term(m.clone(), sign);
    }
    out
}

/// Antipode of a single basis multiset.
pub fn antipode_basis(a: &Multiset) -> HElem {
    antipode(&Combination::basis(a.clone()))
}
