//! The polynomial Hopf algebra on forests of multisets: commutative words of
//! nonempty multisets, the multiplicative coproduct, a closed-form antipode,
//! the character lift, and the comodule route to convolution inverses and
//! Wick polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    decompositions, multiset_binomial, BasisMonoid, Combination, HElem, Multiset, Rat,
};
use crate::error::{Error, Result};
use crate::hopf::Functional;

/// A commutative word of nonempty multisets; the empty word is the unit.
/// Parts are kept in the graded multiset order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Forest {
    parts: BTreeMap<Multiset, u32>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::default()
    }

    /// The canonical injection of a multiset: the empty multiset goes to the
    /// empty word, anything else to a one-part word.
    pub fn from_multiset(m: &Multiset) -> Self {
        let mut parts = BTreeMap::new();
        if !m.is_empty() {
            parts.insert(m.clone(), 1);
        }
        Forest { parts }
    }

    pub fn from_parts<I: IntoIterator<Item = Multiset>>(it: I) -> Self {
        let mut parts = BTreeMap::new();
        for m in it {
            if !m.is_empty() {
                *parts.entry(m).or_insert(0) += 1;
            }
        }
        Forest { parts }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts, counted with multiplicity.
    pub fn part_count(&self) -> u32 {
        self.parts.values().sum()
    }

    /// Total degree: the sum of the degrees of all parts.
    pub fn degree(&self) -> u32 {
        self.parts.iter().map(|(m, c)| m.degree() * c).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Multiset, u32)> {
        self.parts.iter().map(|(m, &c)| (m, c))
    }

    /// Parts expanded with multiplicity, in canonical order.
    pub fn parts(&self) -> Vec<Multiset> {
        let mut out = Vec::new();
        for (m, c) in &self.parts {
            for _ in 0..*c {
                out.push(m.clone());
            }
        }
        out
    }

    /// The free commutative product: concatenation of words.
    pub fn mul(&self, other: &Forest) -> Forest {
        let mut parts = self.parts.clone();
        for (m, c) in &other.parts {
            *parts.entry(m.clone()).or_insert(0) += c;
        }
        Forest { parts }
    }
}

impl BasisMonoid for Forest {
    fn unit() -> Self {
        Forest::empty()
    }
    fn monoid_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let rendered: Vec<String> = self.parts().iter().map(|m| m.to_string()).collect();
        f.write_str(&rendered.join(" * "))
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" {
            return Ok(Forest::empty());
        }
        let mut parts = Vec::new();
        for chunk in t.split(" * ") {
            let m = Multiset::from_str(chunk)?;
            if m.is_empty() {
                return Err(Error::parse(s, 0, "forest parts must be nonempty"));
            }
            parts.push(m);
        }
        Ok(Forest::from_parts(parts))
    }
}

/// An element of the forest algebra.
pub type ForestElem = Combination<Forest>;

/// An element of its tensor square.
pub type ForestTensor = Combination<(Forest, Forest)>;

/// An element of forest tensor multiset algebra, the target of the coaction.
pub type CoactionElem = Combination<(Forest, Multiset)>;

/// Coproduct on a generator: the binomial coproduct pushed through the
/// injection, so both legs are forests.
pub fn generator_coproduct(a: &Multiset) -> Result<ForestTensor> {
    let mut out = ForestTensor::zero();
    for parts in decompositions(a, 2, true)? {
        let coeff = multiset_binomial(a, &parts);
        out.add_term(
            (
                Forest::from_multiset(&parts[0]),
                Forest::from_multiset(&parts[1]),
            ),
            coeff,
        );
    }
    Ok(out)
}

/// Coproduct of a forest: the multiplicative extension of the generator
/// coproduct over the word.
pub fn forest_coproduct(u: &Forest) -> Result<ForestTensor> {
    let mut out = ForestTensor::one();
    for part in u.parts() {
        out = out.mul(&generator_coproduct(&part)?);
    }
    Ok(out)
}

/// Counit of the forest algebra: indicator of the empty word.
pub fn forest_counit(u: &Forest) -> Rat {
    if u.is_empty() {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// Closed-form antipode on a generator:
/// `S(A) = sum_{n>=1} (-1)^n sum binom(A; B1..Bn) B1 * .. * Bn`
/// over nonempty parts.
pub fn generator_antipode(a: &Multiset) -> Result<ForestElem> {
    if a.is_empty() {
        return Ok(ForestElem::one());
    }
    let mut out = ForestElem::zero();
    for n in 1..=a.degree() {
        let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
        for parts in decompositions(a, n, false)? {
            let coeff = multiset_binomial(a, &parts) * sign.clone();
            out.add_term(Forest::from_parts(parts), coeff);
        }
    }
    Ok(out)
}

/// Antipode of a forest: the multiplicative extension of the closed formula.
pub fn forest_antipode(u: &Forest) -> Result<ForestElem> {
    let mut out = ForestElem::one();
    for part in u.parts() {
        out = out.mul(&generator_antipode(&part)?);
    }
    Ok(out)
}

/// The classical graded recursion for the antipode, kept as an independent
/// oracle for the closed formula:
/// `S(A) = -A - sum binom(A; B1 B2) [S(B1)] * B2` over nonempty `B1, B2`.
pub fn generator_antipode_recursive(a: &Multiset) -> Result<ForestElem> {
    fn go(a: &Multiset, memo: &mut HashMap<Multiset, ForestElem>) -> Result<ForestElem> {
        if a.is_empty() {
            return Ok(ForestElem::one());
        }
        if let Some(hit) = memo.get(a) {
            return Ok(hit.clone());
        }
        let mut out = ForestElem::basis(Forest::from_multiset(a)).neg();
        for parts in decompositions(a, 2, false)? {
            let coeff = multiset_binomial(a, &parts);
            let left = go(&parts[0], memo)?;
            let right = ForestElem::basis(Forest::from_multiset(&parts[1]));
            out = out.sub(&left.mul(&right).scale(&coeff));
        }
        memo.insert(a.clone(), out.clone());
        Ok(out)
    }
    go(a, &mut HashMap::new())
}

/// The multiplicative lift of a unital functional to the forest algebra: the
/// unique character restricting to the functional on one-part words.
#[derive(Clone)]
pub struct ForestFunctional {
    base: Functional,
}

impl ForestFunctional {
    pub fn lift(base: &Functional) -> Result<Self> {
        base.require_unital()?;
        Ok(ForestFunctional { base: base.clone() })
    }

    pub fn base(&self) -> &Functional {
        &self.base
    }

    /// Value on a forest: the product of the base values on the parts.
    pub fn eval_forest(&self, u: &Forest) -> Result<Rat> {
        let mut acc = Rat::one();
        for (m, c) in u.iter() {
            acc *= self.base.eval(m)?.pow(c);
        }
        Ok(acc)
    }

    pub fn eval_elem(&self, x: &ForestElem) -> Result<Rat> {
        x.apply_functional(|u| self.eval_forest(u))
    }

    /// Convolution against the forest coproduct, evaluated pointwise. The
    /// restriction of this to one-part words is the plain convolution of the
    /// restrictions.
    pub fn convolve_eval(&self, other: &ForestFunctional, u: &Forest) -> Result<Rat> {
        let mut acc = Rat::zero();
        for ((l, r), coeff) in forest_coproduct(u)?.iter() {
            acc += coeff * &(self.eval_forest(l)? * other.eval_forest(r)?);
        }
        Ok(acc)
    }
}

/// Convolution inverse of a unital functional computed through the forest
/// antipode: `inverse(lambda) = lift(lambda) after antipode`, restricted to
/// one-part words.
pub fn inverse_via_antipode(lambda: &Functional) -> Result<Functional> {
    let lifted = ForestFunctional::lift(lambda)?;
    let max_degree = lambda.max_degree();
    Ok(Functional::from_rule(
        move |a| lifted.eval_elem(&generator_antipode(a)?),
        max_degree,
        crate::hopf::FunctionalKind::Unital,
    ))
}

/// The coaction turning the multiset algebra into a left comodule over the
/// forest algebra: inject the left coproduct leg.
pub fn comodule_coaction(a: &Multiset) -> Result<CoactionElem> {
    let mut out = CoactionElem::zero();
    for parts in decompositions(a, 2, true)? {
        let coeff = multiset_binomial(a, &parts);
        let mut it = parts.into_iter();
        let b1 = it.next().expect("two parts");
        let b2 = it.next().expect("two parts");
        out.add_term((Forest::from_multiset(&b1), b2), coeff);
    }
    Ok(out)
}

/// Wick polynomial through the twisted-antipode route:
/// apply `lift(mu) after antipode` to the coaction's left leg.
pub fn wick_via_antipode(mu: &Functional, a: &Multiset) -> Result<HElem> {
    let lifted = ForestFunctional::lift(mu)?;
    let mut out = HElem::zero();
    for ((forest, rest), coeff) in comodule_coaction(a)?.iter() {
        let twisted = lifted.eval_elem(&forest_antipode(forest)?)?;
        out.add_term(rest.clone(), coeff * &twisted);
    }
    Ok(out)
}

/// The action of a lifted character on the multiset algebra through the
/// coaction; a comodule morphism.
pub fn psi_hat(lambda: &ForestFunctional, a: &Multiset) -> Result<HElem> {
    let mut out = HElem::zero();
    for ((forest, rest), coeff) in comodule_coaction(a)?.iter() {
        out.add_term(rest.clone(), coeff * &lambda.eval_forest(forest)?);
    }
    Ok(out)
}
