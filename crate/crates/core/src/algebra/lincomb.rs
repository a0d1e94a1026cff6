//! Sparse rational linear combinations over an ordered basis.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::multiset::Multiset;
use crate::algebra::rational::Rat;
use crate::error::Result;

/// A basis carrying a commutative monoid structure, so that linear
/// combinations over it form a commutative algebra.
pub trait BasisMonoid: Ord + Clone {
    fn unit() -> Self;
    fn monoid_mul(&self, other: &Self) -> Self;
}

impl BasisMonoid for Multiset {
    fn unit() -> Self {
        Multiset::empty()
    }
    fn monoid_mul(&self, other: &Self) -> Self {
        self.product(other)
    }
}

impl<A: BasisMonoid, B: BasisMonoid> BasisMonoid for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }
    fn monoid_mul(&self, other: &Self) -> Self {
        (self.0.monoid_mul(&other.0), self.1.monoid_mul(&other.1))
    }
}

/// A finitely supported map basis -> nonzero rational. Zero coefficients are
/// never stored, so equality of the maps is equality of the vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Combination<B: Ord + Clone> {
    terms: BTreeMap<B, Rat>,
}

impl<B: Ord + Clone> Default for Combination<B> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        let mut c = Self::zero();
        c.add_term(b, Rat::one());
        c
    }

    pub fn term(b: B, coeff: Rat) -> Self {
        let mut c = Self::zero();
        c.add_term(b, coeff);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Rat)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (b, r) in terms {
            c.add_term(b, r);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rat {
        self.terms.get(b).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, b: B, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, r) in &other.terms {
            out.add_term(b.clone(), r.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, r) in &other.terms {
            out.add_term(b.clone(), -r);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(b, r)| (b.clone(), r * factor))
                .collect(),
        }
    }

    /// Push every basis element through `f`, collecting like terms.
    pub fn map_basis<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> B2) -> Combination<B2> {
        let mut out = Combination::zero();
        for (b, r) in &self.terms {
            out.add_term(f(b), r.clone());
        }
        out
    }

    /// Linear extension of a basis-level map into combinations.
    pub fn map_linear<B2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> Result<Combination<B2>>,
    ) -> Result<Combination<B2>> {
        let mut out = Combination::zero();
        for (b, r) in &self.terms {
            for (b2, r2) in f(b)?.terms {
                out.add_term(b2, r2 * r.clone());
            }
        }
        Ok(out)
    }

    /// Pair every basis element with a scalar and sum.
    pub fn apply_functional(&self, mut f: impl FnMut(&B) -> Result<Rat>) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (b, r) in &self.terms {
            acc += f(b)? * r.clone();
        }
        Ok(acc)
    }
}

impl<B: BasisMonoid> Combination<B> {
    pub fn one() -> Self {
        Self::basis(B::unit())
    }

    /// Bilinear extension of the basis monoid product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ra) in &self.terms {
            for (b, rb) in &other.terms {
                out.add_term(a.monoid_mul(b), ra * rb);
            }
        }
        out
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for Combination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (b, r)) in self.terms.iter().enumerate() {
            let negative = r.is_negative();
            let mag = r.abs();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let basis = b.to_string();
            if basis == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{mag} {basis}")?;
            }
        }
        Ok(())
    }
}

/// Tensor two combinations into a combination over pairs.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(
    left: &Combination<A>,
    right: &Combination<B>,
) -> Combination<(A, B)> {
    let mut out = Combination::zero();
    for (a, ra) in left.iter() {
        for (b, rb) in right.iter() {
            out.add_term((a.clone(), b.clone()), ra * rb);
        }
    }
    out
}

/// Apply a combination-valued map to the left tensor leg.
pub fn tensor_map_left<A, B, A2>(
    t: &Combination<(A, B)>,
    mut f: impl FnMut(&A) -> Result<Combination<A2>>,
) -> Result<Combination<(A2, B)>>
where
    A: Ord + Clone,
    B: Ord + Clone,
    A2: Ord + Clone,
{
    let mut out = Combination::zero();
    for ((a, b), r) in t.iter() {
        for (a2, r2) in f(a)?.iter() {
            out.add_term((a2.clone(), b.clone()), r * r2);
        }
    }
    Ok(out)
}

/// Apply a combination-valued map to the right tensor leg.
pub fn tensor_map_right<A, B, B2>(
    t: &Combination<(A, B)>,
    mut f: impl FnMut(&B) -> Result<Combination<B2>>,
) -> Result<Combination<(A, B2)>>
where
    A: Ord + Clone,
    B: Ord + Clone,
    B2: Ord + Clone,
{
    let mut out = Combination::zero();
    for ((a, b), r) in t.iter() {
        for (b2, r2) in f(b)?.iter() {
            out.add_term((a.clone(), b2.clone()), r * r2);
        }
    }
    Ok(out)
}

/// Contract the left leg with a scalar-valued map.
pub fn tensor_apply_left<A, B>(
    t: &Combination<(A, B)>,
    mut f: impl FnMut(&A) -> Result<Rat>,
) -> Result<Combination<B>>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let mut out = Combination::zero();
    for ((a, b), r) in t.iter() {
        out.add_term(b.clone(), f(a)? * r.clone());
    }
    Ok(out)
}

/// Contract the right leg with a scalar-valued map.
pub fn tensor_apply_right<A, B>(
    t: &Combination<(A, B)>,
    mut f: impl FnMut(&B) -> Result<Rat>,
) -> Result<Combination<A>>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let mut out = Combination::zero();
    for ((a, b), r) in t.iter() {
        out.add_term(a.clone(), f(b)? * r.clone());
    }
    Ok(out)
}

/// Swap tensor legs.
pub fn tensor_swap<A: Ord + Clone, B: Ord + Clone>(t: &Combination<(A, B)>) -> Combination<(B, A)> {
    t.map_basis(|(a, b)| (b.clone(), a.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn hx(s: &str) -> Combination<Multiset> {
        Combination::basis(Multiset::from_str(s).unwrap())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = hx("a").sub(&hx("a"));
        assert!(x.is_zero());
        let mut y = Combination::zero();
        y.add_term(Multiset::from_str("a").unwrap(), Rat::zero());
        assert!(y.is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = hx("a");
        let one = Combination::<Multiset>::one();
        let lhs = a.add(&one).mul(&a.sub(&one));
        let rhs = hx("a^2").sub(&one);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_and_zero_laws() {
        let x = hx("a^2").add(&hx("b").scale(&Rat::from_int(3)));
        assert_eq!(x.mul(&Combination::one()), x);
        assert_eq!(Combination::<Multiset>::zero().mul(&x), Combination::zero());
    }

    #[test]
    fn display_formatting() {
        let x = hx("a^2")
            .sub(&hx("a").scale(&Rat::from_int(2)))
            .add(&Combination::one().scale(&Rat::new(1, 2).unwrap()));
        assert_eq!(x.to_string(), "1/2 - 2 a + a^2");
        assert_eq!(Combination::<Multiset>::zero().to_string(), "0");
        assert_eq!(hx("a").neg().to_string(), "-a");
    }
}
