//! Moment specifications and the moment/cumulant transforms.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Letter, Multiset, Rat};
use crate::error::{Error, Result};
use crate::hopf::Functional;

/// A complete table of joint moments over a finite alphabet, truncated at a
/// declared degree. Every multiset of degree up to the bound must be present:
/// a missing moment is an error, never an implicit zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentSpec {
    alphabet: Vec<Letter>,
    max_degree: u32,
    values: BTreeMap<Multiset, Rat>,
}

#[derive(Serialize, Deserialize)]
struct RawMomentSpec {
    alphabet: Vec<String>,
    max_degree: u32,
    moments: BTreeMap<String, String>,
}

impl MomentSpec {
    pub fn new(
        alphabet: Vec<Letter>,
        max_degree: u32,
        values: BTreeMap<Multiset, Rat>,
    ) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::InvalidSpec("empty alphabet".into()));
        }
        let mut sorted = alphabet.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != alphabet.len() {
            return Err(Error::InvalidSpec("duplicate letters in alphabet".into()));
        }
        for m in values.keys() {
            if m.degree() > max_degree {
                return Err(Error::InvalidSpec(format!(
                    "moment `{m}` exceeds the declared degree {max_degree}"
                )));
            }
            for letter in m.support() {
                if !alphabet.contains(letter) {
                    return Err(Error::UnknownLetter(letter.to_string()));
                }
            }
        }
        match values.get(&Multiset::empty()) {
            Some(v) if v.is_one() => {}
            Some(v) => {
                return Err(Error::InvalidSpec(format!(
                    "the empty multiset must map to 1, found {v}"
                )))
            }
            None => {
                return Err(Error::InvalidSpec(
                    "missing value at the empty multiset".into(),
                ))
            }
        }
        for m in Multiset::enumerate(&sorted, max_degree) {
            if !values.contains_key(&m) {
                return Err(Error::InvalidSpec(format!(
                    "missing moment for `{m}` below degree {max_degree}"
                )));
            }
        }
        let mut alphabet = alphabet;
        alphabet.sort();
        Ok(MomentSpec {
            alphabet,
            max_degree,
            values,
        })
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn values(&self) -> &BTreeMap<Multiset, Rat> {
        &self.values
    }

    pub fn to_json(&self) -> String {
        let raw = RawMomentSpec {
            alphabet: self.alphabet.iter().map(|l| l.to_string()).collect(),
            max_degree: self.max_degree,
            moments: self
                .values
                .iter()
                .map(|(m, v)| (m.to_string(), v.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawMomentSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(format!("bad JSON: {e}")))?;
        let alphabet = raw
            .alphabet
            .iter()
            .map(|s| Letter::new(s))
            .collect::<Result<Vec<_>>>()?;
        let mut values = BTreeMap::new();
        for (mset, value) in &raw.moments {
            values.insert(Multiset::from_str(mset)?, Rat::from_str(value)?);
        }
        MomentSpec::new(alphabet, raw.max_degree, values)
    }
}

/// The unital moment functional of a spec, truncated at the spec's degree.
pub fn moment_functional(spec: &MomentSpec) -> Functional {
    Functional::from_table(spec.values().clone(), spec.max_degree())
}

/// Joint cumulants as the star logarithm of the moment functional.
pub fn cumulants(mu: &Functional) -> Result<Functional> {
    mu.log_star()
}

/// Joint moments as the star exponential of the cumulant functional.
pub fn moments_from_cumulants(kappa: &Functional) -> Result<Functional> {
    kappa.exp_star()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multiset {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Vec<Letter> {
        s.split(',').map(|l| Letter::new(l).unwrap()).collect()
    }

    pub(crate) fn gaussian_spec(max_degree: u32) -> MomentSpec {
        let a = Letter::new("a").unwrap();
        let mut values = BTreeMap::new();
        for k in 0..=max_degree {
            // (2m-1)!! for even k = 2m, zero for odd k
            let v = if k % 2 == 1 {
                Rat::zero()
            } else {
                let mut acc = Rat::one();
                let mut odd = 1i64;
                for _ in 0..k / 2 {
                    acc *= Rat::from_int(odd);
                    odd += 2;
                }
                acc
            };
            values.insert(Multiset::single(a.clone(), k), v);
        }
        MomentSpec::new(vec![a], max_degree, values).unwrap()
    }

    #[test]
    fn gaussian_fourth_moment() {
        let mu = moment_functional(&gaussian_spec(4));
        assert_eq!(mu.eval(&ms("a^4")).unwrap(), Rat::from_int(3));
        assert_eq!(mu.eval(&Multiset::empty()).unwrap(), Rat::one());
    }

    #[test]
    fn missing_moment_is_rejected() {
        let a = Letter::new("a").unwrap();
        let mut values = BTreeMap::new();
        for k in [0u32, 1, 2, 4] {
            values.insert(Multiset::single(a.clone(), k), Rat::zero());
        }
        values.insert(Multiset::empty(), Rat::one());
        let err = MomentSpec::new(vec![a], 4, values).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(ref m) if m.contains("a^3")));
    }

    #[test]
    fn empty_multiset_must_map_to_one() {
        let a = Letter::new("a").unwrap();
        let mut values = BTreeMap::new();
        values.insert(Multiset::empty(), Rat::from_int(2));
        values.insert(Multiset::single(a.clone(), 1), Rat::zero());
        assert!(MomentSpec::new(vec![a], 1, values).is_err());
    }

    #[test]
    fn gaussian_cumulants() {
        let kappa = cumulants(&moment_functional(&gaussian_spec(6))).unwrap();
        assert_eq!(kappa.eval(&Multiset::empty()).unwrap(), Rat::zero());
        assert_eq!(kappa.eval(&ms("a^2")).unwrap(), Rat::one());
        for s in ["a", "a^3", "a^4", "a^5", "a^6"] {
            assert_eq!(kappa.eval(&ms(s)).unwrap(), Rat::zero(), "kappa({s})");
        }
    }

    #[test]
    fn covariance_from_log_star() {
        let mut values = BTreeMap::new();
        let (p, q, r) = (Rat::from_int(2), Rat::new(1, 3).unwrap(), Rat::from_int(5));
        values.insert(ms("1"), Rat::one());
        values.insert(ms("a"), p.clone());
        values.insert(ms("b"), q.clone());
        values.insert(ms("a b"), r.clone());
        values.insert(ms("a^2"), Rat::zero());
        values.insert(ms("b^2"), Rat::zero());
        let spec = MomentSpec::new(letters("a,b"), 2, values).unwrap();
        let kappa = cumulants(&moment_functional(&spec)).unwrap();
        assert_eq!(kappa.eval(&ms("a b")).unwrap(), r - p * q);
    }

    #[test]
    fn all_ones_cumulants_give_bell_moments() {
        use crate::cumulant::partitions::bell_recursion_moment;
        let a = Letter::new("a").unwrap();
        let mut table = BTreeMap::new();
        table.insert(Multiset::empty(), Rat::zero());
        for k in 1..=8 {
            table.insert(Multiset::single(a.clone(), k), Rat::one());
        }
        let kappa = Functional::from_table(table, 8);
        let mu = moments_from_cumulants(&kappa).unwrap();
        let bell = [1i64, 2, 5, 15, 52, 203, 877, 4140];
        let ones = vec![Rat::one(); 8];
        for (idx, expected) in bell.iter().enumerate() {
            let degree = idx as u32 + 1;
            let m = Multiset::single(a.clone(), degree);
            assert_eq!(mu.eval(&m).unwrap(), Rat::from_int(*expected));
            assert_eq!(
                mu.eval(&m).unwrap(),
                bell_recursion_moment(&ones, degree as usize)
            );
        }
    }

    #[test]
    fn zero_cumulants_give_counit() {
        let mu = moments_from_cumulants(&Functional::zero()).unwrap();
        assert_eq!(mu.eval(&Multiset::empty()).unwrap(), Rat::one());
        assert_eq!(mu.eval(&ms("a^3 b")).unwrap(), Rat::zero());
    }

    #[test]
    fn isserlis_pairing_count() {
        // only kappa(a^2) = 1: the fourth moment counts the 3 pair matchings
        let a = Letter::new("a").unwrap();
        let mut table = BTreeMap::new();
        for k in 0..=4 {
            let v = if k == 2 { Rat::one() } else { Rat::zero() };
            table.insert(Multiset::single(a.clone(), k), v);
        }
        let mu = moments_from_cumulants(&Functional::from_table(table, 4)).unwrap();
        assert_eq!(mu.eval(&ms("a^4")).unwrap(), Rat::from_int(3));
    }

    #[test]
    fn json_round_trip() {
        let spec = gaussian_spec(4);
        let parsed = MomentSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(parsed, spec);
    }
}
