//! Deterministic synthetic data: seeded rational moment tables, functionals
//! and tree characters for tests, examples and verification runs. The same
//! seed always produces the same values, on every platform.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Letter, Multiset, Rat};
use crate::cumulant::MomentSpec;
use crate::hopf::Functional;
use crate::tree::{trees_up_to, DecTree, TreeCharacter};

/// SplitMix64: a tiny, stable pseudorandom stream.
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// A small rational with numerator in `-9..=9` and denominator in `1..=4`.
    pub fn small_rat(&mut self) -> Rat {
        let numer = (self.next_u64() % 19) as i64 - 9;
        let denom = (self.next_u64() % 4) as i64 + 1;
        Rat::new(numer, denom).expect("positive denominator")
    }
}

/// A complete moment spec with small random rational values.
pub fn moment_spec(alphabet: &[Letter], max_degree: u32, seed: u64) -> MomentSpec {
    let mut rng = Rng::new(seed);
    let mut values = BTreeMap::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        let v = if m.is_empty() {
            Rat::one()
        } else {
            rng.small_rat()
        };
        values.insert(m, v);
    }
    MomentSpec::new(alphabet.to_vec(), max_degree, values).expect("synthetic spec is complete")
}

/// A unital functional tabulated on every multiset up to `max_degree`.
pub fn unital_functional(alphabet: &[Letter], max_degree: u32, seed: u64) -> Functional {
    let mut rng = Rng::new(seed);
    let mut table = BTreeMap::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        let v = if m.is_empty() {
            Rat::one()
        } else {
            rng.small_rat()
        };
        table.insert(m, v);
    }
    Functional::from_table(table, max_degree)
}

/// A functional vanishing at the empty multiset, tabulated as above.
pub fn vanishing_functional(alphabet: &[Letter], max_degree: u32, seed: u64) -> Functional {
    let mut rng = Rng::new(seed);
    let mut table = BTreeMap::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        let v = if m.is_empty() {
            Rat::zero()
        } else {
            rng.small_rat()
        };
        table.insert(m, v);
    }
    Functional::from_table(table, max_degree)
}

/// A general linear functional with no constraint at the empty multiset.
pub fn linear_functional(alphabet: &[Letter], max_degree: u32, seed: u64) -> Functional {
    let mut rng = Rng::new(seed);
    let mut table = BTreeMap::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        table.insert(m, rng.small_rat());
    }
    Functional::from_table(table, max_degree)
}

/// A moment functional on a set alphabet, tabulated only on plain subsets;
/// enough for the set-partition transforms.
pub fn subset_moment_functional(alphabet: &[Letter], seed: u64) -> Functional {
    let mut rng = Rng::new(seed);
    let mut table = BTreeMap::new();
    let full = Multiset::from_pairs(alphabet.iter().map(|l| (l.clone(), 1)));
    for m in full.submultisets() {
        let v = if m.is_empty() {
            Rat::one()
        } else {
            rng.small_rat()
        };
        table.insert(m, v);
    }
    Functional::from_table(table, alphabet.len() as u32)
}

/// Cumulants on a set alphabet, vanishing at the empty multiset.
pub fn subset_cumulant_functional(alphabet: &[Letter], seed: u64) -> Functional {
    let mut rng = Rng::new(seed);
    let mut table = BTreeMap::new();
    let full = Multiset::from_pairs(alphabet.iter().map(|l| (l.clone(), 1)));
    for m in full.submultisets() {
        let v = if m.is_empty() {
            Rat::zero()
        } else {
            rng.small_rat()
        };
        table.insert(m, v);
    }
    Functional::from_table(table, alphabet.len() as u32)
}

/// A rational character tabulated on every decorated tree up to `max_edges`.
pub fn tree_character(d: u32, max_edges: u32, seed: u64) -> TreeCharacter {
    let mut rng = Rng::new(seed);
    let mut table = HashMap::new();
    for t in trees_up_to(max_edges, d) {
        if t.edge_count() > 0 {
            table.insert(t, rng.small_rat());
        }
    }
    TreeCharacter::from_table(table, max_edges)
}

/// The standard letters `a`, `b`, `c`, ... of a small alphabet.
pub fn letters(count: usize) -> Vec<Letter> {
    (0..count)
        .map(|i| {
            let name = char::from(b'a' + i as u8).to_string();
            Letter::new(&name).expect("single letters are valid")
        })
        .collect()
}

/// A decorated corolla-free sample tree for quick checks.
pub fn sample_tree() -> DecTree {
    "(1:(2:()),3:())".parse().expect("fixed sample parses")
}
