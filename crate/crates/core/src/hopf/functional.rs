//! Linear functionals on the multiset algebra, with the convolution product
//! and its exact star-series calculus.
//!
//! A `Functional` owns an evaluation rule and a memo table; cloning shares
//! both. Star series need no tolerance: a power `(f - eps)^(star n)` vanishes
//! on every multiset of degree below `n`, so each evaluation is a finite sum
//! computed exactly.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use crate::algebra::{decompositions, multiset_binomial, Letter, Multiset, Rat};
use crate::error::{Error, Result};

/// Declared flavour of a functional. The flag is metadata set by the
/// constructor; algebraic preconditions (unitality, vanishing at the unit)
/// are re-checked where operations require them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctionalKind {
    General,
    Unital,
    InfinitesimalCharacter,
    Character,
}

type Rule = dyn Fn(&Multiset) -> Result<Rat> + Send + Sync;

struct Inner {
    rule: Box<Rule>,
    memo: RwLock<HashMap<Multiset, Rat>>,
    max_degree: Option<u32>,
    kind: FunctionalKind,
}

/// An element of the dual space, evaluated up to an optional truncation
/// degree. Immutable and safe to share across threads.
#[derive(Clone)]
pub struct Functional {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for Functional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Functional")
            .field("max_degree", &self.inner.max_degree)
            .field("kind", &self.inner.kind)
            .finish_non_exhaustive()
    }
}

impl Functional {
    pub fn from_rule(
        rule: impl Fn(&Multiset) -> Result<Rat> + Send + Sync + 'static,
        max_degree: Option<u32>,
        kind: FunctionalKind,
    ) -> Self {
        Functional {
            inner: Arc::new(Inner {
                rule: Box::new(rule),
                memo: RwLock::new(HashMap::new()),
                max_degree,
                kind,
            }),
        }
    }

    /// A functional backed by an explicit table. Entries missing from the
    /// table are hard errors, not zeros.
    pub fn from_table(table: BTreeMap<Multiset, Rat>, max_degree: u32) -> Self {
        let unital = table
            .get(&Multiset::empty())
            .map(|v| v.is_one())
            .unwrap_or(false);
        let kind = if unital {
            FunctionalKind::Unital
        } else {
            FunctionalKind::General
        };
        Functional::from_rule(
            move |a| {
                table.get(a).cloned().ok_or_else(|| Error::MissingEntry {
                    multiset: a.to_string(),
                })
            },
            Some(max_degree),
            kind,
        )
    }

    /// The counit: indicator of the empty multiset. Unit of convolution.
    pub fn counit() -> Self {
        Functional::from_rule(
            |a| {
                Ok(if a.is_empty() {
                    Rat::one()
                } else {
                    Rat::zero()
                })
            },
            None,
            FunctionalKind::Character,
        )
    }

    /// The zero functional.
    pub fn zero() -> Self {
        Functional::from_rule(|_| Ok(Rat::zero()), None, FunctionalKind::General)
    }

    /// The infinitesimal character that picks out a single letter.
    pub fn zeta(letter: Letter) -> Self {
        Functional::from_rule(
            move |a| {
                Ok(if a.degree() == 1 && a.count(&letter) == 1 {
                    Rat::one()
                } else {
                    Rat::zero()
                })
            },
            None,
            FunctionalKind::InfinitesimalCharacter,
        )
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.inner.max_degree
    }

    pub fn kind(&self) -> FunctionalKind {
        self.inner.kind
    }

    /// Evaluate on a basis multiset. Fails above the truncation degree.
    pub fn eval(&self, a: &Multiset) -> Result<Rat> {
        if let Some(max) = self.inner.max_degree {
            if a.degree() > max {
                return Err(Error::DegreeExceeded {
                    degree: a.degree(),
                    max_degree: max,
                });
            }
        }
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

    /// Checks `f(empty) = 1` and returns the offending value otherwise.
    pub fn require_unital(&self) -> Result<()> {
        let v = self.eval(&Multiset::empty())?;
        if v.is_one() {
            Ok(())
        } else {
            Err(Error::NotUnital {
                found: v.to_string(),
            })
        }
    }

    /// Spot-checks the declared kind on every basis multiset over `alphabet`
    /// up to `max_degree`: the value at the empty multiset, multiplicativity
    /// for characters, the Leibniz property for infinitesimal characters.
    /// Kinds are metadata; this is the lazy validation of the flag.
    pub fn spot_check_kind(&self, alphabet: &[Letter], max_degree: u32) -> Result<()> {
        match self.inner.kind {
            FunctionalKind::General => Ok(()),
            FunctionalKind::Unital => self.require_unital(),
            FunctionalKind::Character => {
                self.require_unital()?;
                let basis = Multiset::enumerate(alphabet, max_degree);
                for a in &basis {
                    for b in &basis {
                        if a.degree() + b.degree() > max_degree {
                            continue;
                        }
                        let joint = self.eval(&a.product(b))?;
                        let split = self.eval(a)? * self.eval(b)?;
                        if joint != split {
                            return Err(Error::InvalidSpec(format!(
                                "not a character: f({a} . {b}) = {joint} but f({a}) f({b}) = {split}"
                            )));
                        }
                    }
                }
                Ok(())
            }
            FunctionalKind::InfinitesimalCharacter => {
                self.require_vanishing()?;
                let basis = Multiset::enumerate(alphabet, max_degree);
                for a in &basis {
                    for b in &basis {
                        if a.degree() + b.degree() > max_degree {
                            continue;
                        }
                        let joint = self.eval(&a.product(b))?;
                        let split =
                            self.eval(a)? * counit_value(b) + counit_value(a) * self.eval(b)?;
                        if joint != split {
                            return Err(Error::InvalidSpec(format!(
                                "not infinitesimal: f({a} . {b}) = {joint}, Leibniz value {split}"
                            )));
                        }
                    }
                }
                Ok(())
            }
        }
    }

    fn require_vanishing(&self) -> Result<()> {
        let v = self.eval(&Multiset::empty())?;
        if v.is_zero() {
            Ok(())
        } else {
            Err(Error::NotVanishing {
                found: v.to_string(),
            })
        }
    }

    fn derived_degree(&self, other: &Functional) -> Option<u32> {
        match (self.inner.max_degree, other.inner.max_degree) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        }
    }

    pub fn add(&self, other: &Functional) -> Functional {
        let (f, g) = (self.clone(), other.clone());
        Functional::from_rule(
            move |a| Ok(f.eval(a)? + g.eval(a)?),
            self.derived_degree(other),
            FunctionalKind::General,
        )
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        let (f, g) = (self.clone(), other.clone());
        Functional::from_rule(
            move |a| Ok(f.eval(a)? - g.eval(a)?),
            self.derived_degree(other),
            FunctionalKind::General,
        )
    }

    pub fn scale(&self, factor: Rat) -> Functional {
        let f = self.clone();
        Functional::from_rule(
            move |a| Ok(f.eval(a)? * factor.clone()),
            self.inner.max_degree,
            FunctionalKind::General,
        )
    }

    /// Convolution against the binomial coproduct:
    /// `(f * g)(A) = sum binom(A; B1 B2) f(B1) g(B2)`.
    pub fn convolve(&self, other: &Functional) -> Functional {
        let (f, g) = (self.clone(), other.clone());
        Functional::from_rule(
            move |a| {
                let mut acc = Rat::zero();
                for parts in decompositions(a, 2, true)? {
                    let coeff = multiset_binomial(a, &parts);
                    acc += coeff * f.eval(&parts[0])? * g.eval(&parts[1])?;
                }
                Ok(acc)
            },
            self.derived_degree(other),
            FunctionalKind::General,
        )
    }

    /// Convolution inverse of a unital functional via the Neumann series
    /// `sum_n (eps - f)^(star n)`, truncated exactly at `n = |A|`.
    pub fn neumann_inverse(&self) -> Result<Functional> {
        self.require_unital()?;
        let powers = StarPowers::new(Functional::counit().sub(self));
        let max_degree = self.inner.max_degree;
        Ok(Functional::from_rule(
            move |a| {
                let mut acc = Rat::zero();
                for n in 0..=a.degree() {
                    acc += powers.power(n).eval(a)?;
                }
                Ok(acc)
            },
            max_degree,
            FunctionalKind::Unital,
        ))
    }

    /// Star exponential of a functional vanishing at the unit:
    /// `eps + sum_{n>=1} f^(star n) / n!`.
    pub fn exp_star(&self) -> Result<Functional> {
        self.require_vanishing()?;
        let powers = StarPowers::new(self.clone());
        let max_degree = self.inner.max_degree;
        Ok(Functional::from_rule(
            move |a| {
                let mut acc = counit_value(a);
                for n in 1..=a.degree() {
                    let term = powers.power(n).eval(a)?;
                    acc += (term / Rat::factorial(n)).expect("factorial nonzero");
                }
                Ok(acc)
            },
            max_degree,
            FunctionalKind::Unital,
        ))
    }

    /// Star logarithm of a unital functional:
    /// `sum_{n>=1} (-1)^(n-1)/n (f - eps)^(star n)`.
    pub fn log_star(&self) -> Result<Functional> {
        self.require_unital()?;
        let powers = StarPowers::new(self.sub(&Functional::counit()));
        let max_degree = self.inner.max_degree;
        Ok(Functional::from_rule(
            move |a| {
                let mut acc = Rat::zero();
                for n in 1..=a.degree() {
                    let term = powers.power(n).eval(a)?;
                    let sign = if n % 2 == 1 { Rat::one() } else { -Rat::one() };
                    acc += (term * sign / Rat::from_int(i64::from(n))).expect("n nonzero");
                }
                Ok(acc)
            },
            max_degree,
            FunctionalKind::General,
        ))
    }

    /// `n`-th convolution power (`n = 0` gives the counit).
    pub fn star_power(&self, n: u32) -> Functional {
        StarPowers::new(self.clone()).power(n)
    }
}

fn counit_value(a: &Multiset) -> Rat {
    if a.is_empty() {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// A lazily extended chain of convolution powers sharing memo tables.
struct StarPowers {
    base: Functional,
    cache: Mutex<Vec<Functional>>,
}

impl StarPowers {
    fn new(base: Functional) -> Self {
        StarPowers {
            base,
            cache: Mutex::new(vec![Functional::counit()]),
        }
    }

    fn power(&self, n: u32) -> Functional {
        let mut cache = self.cache.lock().expect("power cache");
        while cache.len() <= n as usize {
            let previous = cache.last().expect("power 0 present").clone();
            cache.push(previous.convolve(&self.base));
        }
        cache[n as usize].clone()
    }
}
