//! Letters and multisets of letters: the monomial basis of everything else.
//!
//! A `Multiset` is a finitely supported map from letters to positive counts,
//! i.e. a commutative monomial. The text form is bit-exact:
//! `mset := "1" | term (" " term)*` with `term := letter ("^" count)?` and
//! letters sorted ascending, e.g. `a^2 b`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::rational::Rat;
use crate::error::{Error, Result};

/// Degree cap for decomposition enumeration; larger inputs are refused.
pub const DECOMPOSITION_GUARD: u32 = 24;

/// An index symbol. Equality is symbol equality; the order is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(String);

impl Letter {
    /// Validates `[a-zA-Z][a-zA-Z0-9_]*`.
    pub fn new(symbol: &str) -> Result<Self> {
        let mut chars = symbol.chars();
        let ok = match chars.next() {
            Some(c) if c.is_ascii_alphabetic() => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if ok {
            Ok(Letter(symbol.to_owned()))
        } else {
            Err(Error::parse(symbol, 0, "invalid letter"))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finitely supported map letter -> positive count, with cached degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Multiset {
    counts: BTreeMap<Letter, u32>,
    degree: u32,
}

impl Multiset {
    pub fn empty() -> Self {
        Multiset::default()
    }

    pub fn single(letter: Letter, count: u32) -> Self {
        let mut m = Multiset::empty();
        if count > 0 {
            m.degree = count;
            m.counts.insert(letter, count);
        }
        m
    }

    pub fn from_pairs<I: IntoIterator<Item = (Letter, u32)>>(pairs: I) -> Self {
        let mut counts: BTreeMap<Letter, u32> = BTreeMap::new();
        for (letter, count) in pairs {
            if count > 0 {
                *counts.entry(letter).or_insert(0) += count;
            }
        }
        let degree = counts.values().sum();
        Multiset { counts, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// True when every multiplicity is one, i.e. the multiset is a plain set.
    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&c| c == 1)
    }

    pub fn count(&self, letter: &Letter) -> u32 {
        self.counts.get(letter).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Letter, u32)> {
        self.counts.iter().map(|(l, &c)| (l, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Letter> {
        self.counts.keys()
    }

    /// Pointwise sum of counts; the monoid product.
    pub fn product(&self, other: &Multiset) -> Multiset {
        let mut counts = self.counts.clone();
        for (letter, count) in &other.counts {
            *counts.entry(letter.clone()).or_insert(0) += count;
        }
        Multiset {
            counts,
            degree: self.degree + other.degree,
        }
    }

    /// Pointwise difference, assuming `other` is contained in `self`.
    pub(crate) fn minus(&self, other: &Multiset) -> Multiset {
        let mut counts = self.counts.clone();
        for (letter, count) in &other.counts {
            let slot = counts.get_mut(letter).expect("contained");
            *slot -= count;
            if *slot == 0 {
                counts.remove(letter);
            }
        }
        let degree = self.degree - other.degree;
        Multiset { counts, degree }
    }

    /// Every multiset contained in `self`, sorted ascending.
    pub fn submultisets(&self) -> Vec<Multiset> {
        let mut out = vec![Multiset::empty()];
        for (letter, count) in &self.counts {
            let mut next = Vec::with_capacity(out.len() * (*count as usize + 1));
            for m in &out {
                for k in 0..=*count {
                    let mut counts = m.counts.clone();
                    if k > 0 {
                        counts.insert(letter.clone(), k);
                    }
                    next.push(Multiset {
                        degree: m.degree + k,
                        counts,
                    });
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    /// All multisets over `alphabet` with degree at most `max_degree`,
    /// sorted ascending.
    pub fn enumerate(alphabet: &[Letter], max_degree: u32) -> Vec<Multiset> {
        let mut out = vec![Multiset::empty()];
        for letter in alphabet {
            let mut next = Vec::new();
            for m in &out {
                for k in 0..=(max_degree - m.degree) {
                    let mut counts = m.counts.clone();
                    if k > 0 {
                        counts.insert(letter.clone(), k);
                    }
                    next.push(Multiset {
                        degree: m.degree + k,
                        counts,
                    });
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }
}

/// Graded order: first by degree, then lexicographically on the flattened
/// letter word (`a^2` reads `aa`, so `a^2 < a b < b^2`).
impl Ord for Multiset {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut left = self.counts.iter().map(|(l, &c)| (l, c));
        let mut right = other.counts.iter().map(|(l, &c)| (l, c));
        let (mut lrun, mut rrun) = (left.next(), right.next());
        loop {
            match (&mut lrun, &mut rrun) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ll, lc)), Some((rl, rc))) => match (*ll).cmp(*rl) {
                    Ordering::Equal => {
                        let step = (*lc).min(*rc);
                        *lc -= step;
                        *rc -= step;
                        if *lc == 0 {
                            lrun = left.next();
                        }
                        if *rc == 0 {
                            rrun = right.next();
                        }
                    }
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (letter, count) in &self.counts {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *count == 1 {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{count}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Multiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(s, 0, "empty multiset"));
        }
        if t == "1" {
            return Ok(Multiset::empty());
        }
        let mut pairs = Vec::new();
        for term in t.split_whitespace() {
            let (letter_str, count) = match term.find('^') {
                Some(pos) => {
                    let count: u32 = term[pos + 1..]
                        .parse()
                        .map_err(|_| Error::parse(s, pos + 1, "bad exponent"))?;
                    if count == 0 {
                        return Err(Error::parse(s, pos + 1, "exponent must be positive"));
                    }
                    (&term[..pos], count)
                }
                None => (term, 1),
            };
            pairs.push((Letter::new(letter_str)?, count));
        }
        Ok(Multiset::from_pairs(pairs))
    }
}

/// The multiset multinomial: zero unless the parts multiply to `a`, otherwise
/// the product over letters of `a(x)! / (b_1(x)! ... b_n(x)!)`.
pub fn multiset_binomial(a: &Multiset, parts: &[Multiset]) -> Rat {
    let mut total = Multiset::empty();
    for part in parts {
        total = total.product(part);
    }
    if total != *a {
        return Rat::zero();
    }
    let mut numer = Rat::one();
    let mut denom = Rat::one();
    for (letter, count) in a.iter() {
        numer *= Rat::factorial(count);
        for part in parts {
            denom *= Rat::factorial(part.count(letter));
        }
    }
    (numer / denom).expect("factorials are nonzero")
}

/// Every ordered `n`-tuple of multisets whose product is `a`, each part
/// nonempty unless `allow_empty`; tuples come out sorted lexicographically
/// under the graded multiset order. Refuses degrees above
/// [`DECOMPOSITION_GUARD`].
pub fn decompositions(a: &Multiset, n: u32, allow_empty: bool) -> Result<Vec<Vec<Multiset>>> {
    assert!(n >= 1, "decompositions needs at least one part");
    if a.degree() > DECOMPOSITION_GUARD {
        return Err(Error::EnumerationGuard {
            size: a.degree(),
            limit: DECOMPOSITION_GUARD,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    split(a, n, allow_empty, &mut current, &mut out);
    Ok(out)
}

fn split(
    remaining: &Multiset,
    parts_left: u32,
    allow_empty: bool,
    current: &mut Vec<Multiset>,
    out: &mut Vec<Vec<Multiset>>,
) {
    if parts_left == 1 {
        if allow_empty || !remaining.is_empty() {
            current.push(remaining.clone());
            out.push(current.clone());
            current.pop();
        }
        return;
    }
    for part in remaining.submultisets() {
        if !allow_empty {
            if part.is_empty() {
                continue;
            }
            // each later part still needs at least one letter
            if remaining.degree() - part.degree() < parts_left - 1 {
                continue;
            }
        }
        let rest = remaining.minus(&part);
        current.push(part);
        split(&rest, parts_left - 1, allow_empty, current, out);
        current.pop();
    }
}
