//! Set-partition and single-letter recursion oracles for the moment-cumulant
//! transforms. These are independent routes kept alongside the star-series
//! implementations; both are part of the public surface.

use crate::algebra::{Letter, Multiset, Rat};
use crate::error::{Error, Result};
use crate::hopf::Functional;

/// A partition of `{0, .., n-1}` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// All set partitions of an `n`-element ground set, enumerated through
/// restricted-growth strings in lexicographic order.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    if n == 0 {
        return vec![SetPartition { blocks: vec![] }];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        out.push(blocks_from_rgs(&rgs));
        // advance the restricted-growth string
        let mut pos = n - 1;
        loop {
            if pos == 0 {
                return out;
            }
            let max_prefix = rgs[..pos].iter().copied().max().unwrap_or(0);
            if rgs[pos] <= max_prefix {
                rgs[pos] += 1;
                for slot in rgs.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break;
            }
            pos -= 1;
        }
    }
}

fn blocks_from_rgs(rgs: &[usize]) -> SetPartition {
    let block_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); block_count];
    for (element, &block) in rgs.iter().enumerate() {
        blocks[block].push(element);
    }
    SetPartition { blocks }
}

fn set_letters(b: &Multiset) -> Result<Vec<Letter>> {
    for (letter, count) in b.iter() {
        if count > 1 {
            return Err(Error::NotASet {
                multiset: b.to_string(),
                letter: letter.to_string(),
                count,
            });
        }
    }
    Ok(b.support().cloned().collect())
}

fn block_multiset(letters: &[Letter], block: &[usize]) -> Multiset {
    Multiset::from_pairs(block.iter().map(|&i| (letters[i].clone(), 1)))
}

/// First Leonov-Shiryaev relation by brute force: the moment of a set `B` is
/// the sum over set partitions of the products of block cumulants.
pub fn ls_partition_moments(kappa: &Functional, b: &Multiset) -> Result<Rat> {
    let letters = set_letters(b)?;
    let mut acc = Rat::zero();
    for partition in set_partitions(letters.len()) {
        let mut product = Rat::one();
        for block in partition.blocks() {
            product *= kappa.eval(&block_multiset(&letters, block))?;
        }
        acc += product;
    }
    Ok(acc)
}

/// Second Leonov-Shiryaev relation by brute force: the cumulant of a set `B`
/// as the Moebius-weighted sum over set partitions of block-moment products.
pub fn ls_partition_cumulants(mu: &Functional, b: &Multiset) -> Result<Rat> {
    let letters = set_letters(b)?;
    if letters.is_empty() {
        return Ok(Rat::zero());
    }
    let mut acc = Rat::zero();
    for partition in set_partitions(letters.len()) {
        let parts = partition.block_count() as u32;
        let weight = if (parts - 1).is_multiple_of(2) {
            Rat::factorial(parts - 1)
        } else {
            -Rat::factorial(parts - 1)
        };
        let mut product = weight;
        for block in partition.blocks() {
            product *= mu.eval(&block_multiset(&letters, block))?;
        }
        acc += product;
    }
    Ok(acc)
}

/// Single-letter moment from cumulants by the classical recursion
/// `mu_n = sum_m C(n-1, m-1) kappa_m mu_{n-m}`. `kappa[i]` holds the
/// cumulant of order `i + 1`.
pub fn bell_recursion_moment(kappa: &[Rat], n: usize) -> Rat {
    let mut moments: Vec<Rat> = Vec::with_capacity(n + 1);
    moments.push(Rat::one());
    for order in 1..=n {
        let mut acc = Rat::zero();
        for m in 1..=order.min(kappa.len()) {
            let coeff = Rat::binomial(order as u32 - 1, m as u32 - 1);
            acc += coeff * kappa[m - 1].clone() * moments[order - m].clone();
        }
        moments.push(acc);
    }
    moments[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;
    use std::str::FromStr;

    fn ms(s: &str) -> Multiset {
        Multiset::from_str(s).unwrap()
    }

    fn constant_functional(value: i64) -> Functional {
        let v = Rat::from_int(value);
        Functional::from_rule(
            move |_| Ok(v.clone()),
            None,
            crate::hopf::FunctionalKind::General,
        )
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (n, expected) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), *expected, "n = {n}");
        }
    }

    #[test]
    fn partitions_cover_and_are_disjoint() {
        for partition in set_partitions(5) {
            let mut seen = [false; 5];
            for block in partition.blocks() {
                assert!(!block.is_empty());
                for &e in block {
                    assert!(!seen[e], "element repeated");
                    seen[e] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn moments_of_all_ones_count_partitions() {
        let kappa = constant_functional(1);
        assert_eq!(
            ls_partition_moments(&kappa, &ms("a b c")).unwrap(),
            Rat::from_int(5)
        );
    }

    #[test]
    fn single_letter_is_identity() {
        let kappa = constant_functional(7);
        assert_eq!(
            ls_partition_moments(&kappa, &ms("a")).unwrap(),
            Rat::from_int(7)
        );
        let mu = constant_functional(7);
        assert_eq!(
            ls_partition_cumulants(&mu, &ms("a")).unwrap(),
            Rat::from_int(7)
        );
    }

    #[test]
    fn two_letter_moment_splits_into_two_partitions() {
        let (p, q, c) = (Rat::from_int(2), Rat::from_int(3), Rat::new(1, 2).unwrap());
        let mut table = BTreeMap::new();
        table.insert(ms("a"), p.clone());
        table.insert(ms("b"), q.clone());
        table.insert(ms("a b"), c.clone());
        let kappa = Functional::from_table(table, 2);
        assert_eq!(ls_partition_moments(&kappa, &ms("a b")).unwrap(), c + p * q);
    }

    #[test]
    fn two_letter_cumulant_is_covariance() {
        let (p, q, r) = (Rat::from_int(2), Rat::from_int(3), Rat::from_int(11));
        let mut table = BTreeMap::new();
        table.insert(ms("a"), p.clone());
        table.insert(ms("b"), q.clone());
        table.insert(ms("a b"), r.clone());
        let mu = Functional::from_table(table, 2);
        assert_eq!(ls_partition_cumulants(&mu, &ms("a b")).unwrap(), r - p * q);
    }

    #[test]
    fn all_ones_three_set_cumulant_vanishes() {
        // 1 partition of size 1, 3 of size 2, 1 of size 3:
        // 1*1 - 1*3 + 2*1 = 0
        let mu = constant_functional(1);
        assert_eq!(
            ls_partition_cumulants(&mu, &ms("a b c")).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn multisets_are_rejected() {
        let f = constant_functional(1);
        assert!(matches!(
            ls_partition_moments(&f, &ms("a^2")),
            Err(Error::NotASet { .. })
        ));
        assert!(matches!(
            ls_partition_cumulants(&f, &ms("a^2 b")),
            Err(Error::NotASet { .. })
        ));
    }

    #[test]
    fn bell_recursion_examples() {
        let ones = vec![Rat::one(); 8];
        assert_eq!(bell_recursion_moment(&ones, 4), Rat::from_int(15));
        assert_eq!(bell_recursion_moment(&ones, 0), Rat::one());
        let bell = [1i64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, expected) in bell.iter().enumerate() {
            assert_eq!(bell_recursion_moment(&ones, n), Rat::from_int(*expected));
        }
        // deterministic variable: only the first cumulant is nonzero
        let m = Rat::from_int(4);
        assert_eq!(bell_recursion_moment(std::slice::from_ref(&m), 3), m.pow(3));
    }
}
