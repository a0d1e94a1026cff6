//! Characters on the forest algebra of decorated trees: convolution, graded
//! inverses, the comodule action, deformed tree products and the centering
//! character.
//!
//! A character is stored by its values on trees only; forest values are
//! formed multiplicatively on demand, so multiplicativity holds by
//! construction. The coproduct here is not cocommutative, so left and right
//! inverses are computed by different recursions; the group structure makes
//! them agree, which the tests confirm.

use std::collections::HashMap;
use std::sync::{Arc, RwLock, Weak};

use crate::algebra::Rat;
use crate::error::Result;
use crate::tree::coproduct::extraction_contraction;
use crate::tree::{DecTree, TreeElem, TreeForest};

type TreeRule = dyn Fn(&DecTree) -> Result<Rat> + Send + Sync;

struct Inner {
    rule: Box<TreeRule>,
    memo: RwLock<HashMap<DecTree, Rat>>,
    max_edges: Option<u32>,
}

/// A multiplicative functional on tree forests, determined by its tree
/// values; the empty forest always maps to one.
#[derive(Clone)]
pub struct TreeCharacter {
    inner: Arc<Inner>,
}

impl TreeCharacter {
    pub fn from_rule(
        rule: impl Fn(&DecTree) -> Result<Rat> + Send + Sync + 'static,
        max_edges: Option<u32>,
    ) -> Self {
        TreeCharacter {
            inner: Arc::new(Inner {
                rule: Box::new(rule),
                memo: RwLock::new(HashMap::new()),
                max_edges,
            }),
        }
    }

    /// Backed by an explicit table on trees; missing entries are errors.
    pub fn from_table(table: HashMap<DecTree, Rat>, max_edges: u32) -> Self {
        TreeCharacter::from_rule(
            move |t| {
                table
                    .get(t)
                    .cloned()
                    .ok_or_else(|| crate::error::Error::MissingEntry {
                        multiset: t.to_string(),
                    })
            },
            Some(max_edges),
        )
    }

    /// The counit character: one on the empty forest, zero on nonempty trees.
    pub fn counit() -> Self {
        TreeCharacter::from_rule(|_| Ok(Rat::zero()), None)
    }

    pub fn max_edges(&self) -> Option<u32> {
        self.inner.max_edges
    }

    /// Value on a tree. The single-node tree is the empty forest and always
    /// evaluates to one.
    pub fn eval_tree(&self, t: &DecTree) -> Result<Rat> {
        if t.edge_count() == 0 {
            return Ok(Rat::one());
        }
        if let Some(max) = self.inner.max_edges {
            if t.edge_count() > max {
                return Err(crate::error::Error::DegreeExceeded {
                    degree: t.edge_count(),
                    max_degree: max,
                });
            }
        }
        if let Some(hit) = self.inner.memo.read().expect("memo lock").get(t) {
            return Ok(hit.clone());
        }
        let value = (self.inner.rule)(t)?;
        self.inner
            .memo
            .write()
            .expect("memo lock")
            .insert(t.clone(), value.clone());
        Ok(value)
    }

    /// Multiplicative extension to forests.
    pub fn eval_forest(&self, f: &TreeForest) -> Result<Rat> {
        let mut acc = Rat::one();
        for (t, c) in f.iter() {
            acc *= self.eval_tree(t)?.pow(c);
        }
        Ok(acc)
    }

    pub fn eval_elem(&self, x: &TreeElem) -> Result<Rat> {
        x.apply_functional(|t| self.eval_tree(t))
    }
}

/// Convolution of characters against the extraction-contraction coproduct,
/// again a character.
pub fn tree_char_convolve(alpha: &TreeCharacter, beta: &TreeCharacter) -> TreeCharacter {
    let (alpha, beta) = (alpha.clone(), beta.clone());
    let max_edges = match (alpha.max_edges(), beta.max_edges()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) | (None, Some(a)) => Some(a),
        (None, None) => None,
    };
    TreeCharacter::from_rule(
        move |t| {
            let mut acc = Rat::zero();
            for ((sigma, rest), coeff) in extraction_contraction(t)?.iter() {
                acc += coeff * &(alpha.eval_forest(sigma)? * beta.eval_tree(rest)?);
            }
            Ok(acc)
        },
        max_edges,
    )
}

/// Convolution inverse by graded recursion: on a tree, every coproduct term
/// other than the empty extraction contracts to a strictly smaller tree, so
/// solving `alpha star inverse = counit` determines the inverse bottom-up.
pub fn tree_char_inverse(alpha: &TreeCharacter) -> TreeCharacter {
    let alpha = alpha.clone();
    let max_edges = alpha.max_edges();
    let inner = Arc::new_cyclic(|weak: &Weak<Inner>| {
        let weak = weak.clone();
        Inner {
            rule: Box::new(move |t: &DecTree| {
                let me = TreeCharacter {
                    inner: weak.upgrade().expect("self-reference alive"),
                };
                let mut acc = Rat::zero();
                for ((sigma, rest), coeff) in extraction_contraction(t)?.iter() {
                    if sigma.is_empty() {
                        // this is the term holding the unknown value
                        continue;
                    }
                    acc += coeff * &(alpha.eval_forest(sigma)? * me.eval_tree(rest)?);
                }
                Ok(-acc)
            }),
            memo: RwLock::new(HashMap::new()),
            max_edges,
        }
    });
    TreeCharacter { inner }
}

/// The comodule action of a character: contract the extracted leg.
pub fn psi_lambda(lambda: &TreeCharacter, x: &TreeElem) -> Result<TreeElem> {
    let mut out = TreeElem::zero();
    for (t, r) in x.iter() {
        for ((sigma, rest), coeff) in extraction_contraction(t)?.iter() {
            out.add_term(
                rest.clone(),
                coeff * &(lambda.eval_forest(sigma)? * r.clone()),
            );
        }
    }
    Ok(out)
}

/// The deformed tree product: conjugate the root-identification product by
/// the action of `lambda`.
pub fn deformed_tree_product(
    lambda: &TreeCharacter,
    x: &TreeElem,
    y: &TreeElem,
) -> Result<TreeElem> {
    let inverse = tree_char_inverse(lambda);
    let px = psi_lambda(lambda, x)?;
    let py = psi_lambda(lambda, y)?;
    psi_lambda(&inverse, &px.mul(&py))
}

/// The centering character of a moment character: its convolution inverse.
/// Convolving it back onto the moments kills every nonempty tree, which is
/// the defining property, and the graded recursion makes it unique.
pub fn centering_character(mu: &TreeCharacter) -> TreeCharacter {
    tree_char_inverse(mu)
}
