//! Edge-decorated non-planar rooted trees and forests thereof: the tree
//! product by root identification, the extraction-contraction coproduct, the
//! character calculus with its deformed products, and the corolla embedding
//! of the multiset algebra.

pub mod character;
pub mod coproduct;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{BasisMonoid, Combination, Letter, Multiset};
use crate::error::{Error, Result};

pub use character::{
    centering_character, deformed_tree_product, psi_lambda, tree_char_convolve, tree_char_inverse,
    TreeCharacter,
};
pub use coproduct::{
    extraction_contraction, forest_extraction_contraction, trees_up_to, trees_with_edges,
    EDGE_GUARD,
};

/// A non-planar rooted tree whose edges carry positive integer decorations.
/// Children are kept sorted by decoration, then by the child's canonical
/// encoding, and the rendered form is cached; equality is syntactic equality
/// of canonical forms. The single-node tree doubles as the empty forest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecTree {
    children: Vec<(u32, DecTree)>,
    edges: u32,
    canonical: String,
}

impl DecTree {
    /// The single-node tree.
    pub fn leaf() -> Self {
        DecTree {
            children: Vec::new(),
            edges: 0,
            canonical: "()".to_owned(),
        }
    }

    /// Builds and canonicalizes a node from its child edges. Decorations
    /// must be positive.
    pub fn node(mut children: Vec<(u32, DecTree)>) -> Self {
        assert!(
            children.iter().all(|(d, _)| *d > 0),
            "edge decorations are positive integers"
        );
        children
            .sort_by(|(da, ta), (db, tb)| da.cmp(db).then_with(|| ta.canonical.cmp(&tb.canonical)));
        let edges = children.iter().map(|(_, t)| t.edges + 1).sum();
        let inner: Vec<String> = children
            .iter()
            .map(|(d, t)| format!("{d}:{}", t.canonical))
            .collect();
        DecTree {
            canonical: format!("({})", inner.join(",")),
            children,
            edges,
        }
    }

    /// A single edge with the given decoration: the planted tree of depth one.
    pub fn planted(decoration: u32) -> Self {
        DecTree::node(vec![(decoration, DecTree::leaf())])
    }

    pub fn edge_count(&self) -> u32 {
        self.edges
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn children(&self) -> &[(u32, DecTree)] {
        &self.children
    }

    pub fn canonical(&self) -> &str {
        &self.canonical
    }

    /// The tree product: identify the two roots, merging child edges.
    pub fn product(&self, other: &DecTree) -> DecTree {
        let mut children = self.children.clone();
        children.extend(other.children.iter().cloned());
        DecTree::node(children)
    }

    /// Largest decoration appearing anywhere in the tree (zero for a leaf).
    pub fn max_decoration(&self) -> u32 {
        self.children
            .iter()
            .map(|(d, t)| (*d).max(t.max_decoration()))
            .max()
            .unwrap_or(0)
    }
}

/// Graded syntactic order: by edge count, then by canonical encoding.
impl Ord for DecTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.edges
            .cmp(&other.edges)
            .then_with(|| self.canonical.cmp(&other.canonical))
    }
}

impl PartialOrd for DecTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisMonoid for DecTree {
    fn unit() -> Self {
        DecTree::leaf()
    }
    fn monoid_mul(&self, other: &Self) -> Self {
        self.product(other)
    }
}

impl fmt::Display for DecTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical)
    }
}

impl FromStr for DecTree {
    type Err = Error;

    /// Grammar: `t := "(" elist ")"` with `elist := eps | e ("," e)*` and
    /// `e := decoration ":" t`. Sibling order in the input is irrelevant;
    /// the result is canonical.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let tree = parse_tree(s.trim(), bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::parse(s, pos, "trailing input after tree"));
        }
        Ok(tree)
    }
}

fn parse_tree(input: &str, bytes: &[u8], pos: &mut usize) -> Result<DecTree> {
    expect(input, bytes, pos, b'(')?;
    let mut children = Vec::new();
    if bytes.get(*pos) == Some(&b')') {
        *pos += 1;
        return Ok(DecTree::leaf());
    }
    loop {
        let decoration = parse_decoration(input, bytes, pos)?;
        expect(input, bytes, pos, b':')?;
        let child = parse_tree(input, bytes, pos)?;
        children.push((decoration, child));
        match bytes.get(*pos) {
            Some(b',') => *pos += 1,
            Some(b')') => {
                *pos += 1;
                return Ok(DecTree::node(children));
            }
            _ => return Err(Error::parse(input, *pos, "expected `,` or `)`")),
        }
    }
}

fn parse_decoration(input: &str, bytes: &[u8], pos: &mut usize) -> Result<u32> {
    let start = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::parse(input, *pos, "expected a decoration"));
    }
    let value: u32 = input[start..*pos]
        .parse()
        .map_err(|_| Error::parse(input, start, "decoration out of range"))?;
    if value == 0 {
        return Err(Error::parse(input, start, "decorations are positive"));
    }
    Ok(value)
}

fn expect(input: &str, bytes: &[u8], pos: &mut usize, which: u8) -> Result<()> {
    if bytes.get(*pos) == Some(&which) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::parse(
            input,
            *pos,
            format!("expected `{}`", which as char),
        ))
    }
}

/// A commutative word of trees, each with at least one edge; the empty word
/// is the unit and is identified with the single-node tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct TreeForest {
    components: BTreeMap<DecTree, u32>,
}

impl TreeForest {
    pub fn empty() -> Self {
        TreeForest::default()
    }

    /// A single-component forest; the single-node tree gives the empty word.
    pub fn from_tree(t: &DecTree) -> Self {
        let mut components = BTreeMap::new();
        if t.edge_count() > 0 {
            components.insert(t.clone(), 1);
        }
        TreeForest { components }
    }

    pub fn from_trees<I: IntoIterator<Item = DecTree>>(it: I) -> Self {
        let mut components = BTreeMap::new();
        for t in it {
            if t.edge_count() > 0 {
                *components.entry(t).or_insert(0) += 1;
            }
        }
        TreeForest { components }
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn edge_count(&self) -> u32 {
        self.components
            .iter()
            .map(|(t, c)| t.edge_count() * c)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DecTree, u32)> {
        self.components.iter().map(|(t, &c)| (t, c))
    }

    /// Components expanded with multiplicity, in canonical order.
    pub fn components(&self) -> Vec<DecTree> {
        let mut out = Vec::new();
        for (t, c) in &self.components {
            for _ in 0..*c {
                out.push(t.clone());
            }
        }
        out
    }

    /// Disjoint union.
    pub fn mul(&self, other: &TreeForest) -> TreeForest {
        let mut components = self.components.clone();
        for (t, c) in &other.components {
            *components.entry(t.clone()).or_insert(0) += c;
        }
        TreeForest { components }
    }
}

impl BasisMonoid for TreeForest {
    fn unit() -> Self {
        TreeForest::empty()
    }
    fn monoid_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl fmt::Display for TreeForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let rendered: Vec<String> = self.components().iter().map(|t| t.to_string()).collect();
        f.write_str(&rendered.join(" * "))
    }
}

impl FromStr for TreeForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" {
            return Ok(TreeForest::empty());
        }
        let mut components = Vec::new();
        for chunk in t.split(" * ") {
            let tree = DecTree::from_str(chunk)?;
            if tree.edge_count() == 0 {
                return Err(Error::parse(s, 0, "forest components need an edge"));
            }
            components.push(tree);
        }
        Ok(TreeForest::from_trees(components))
    }
}

/// Linear combinations of trees.
pub type TreeElem = Combination<DecTree>;

/// Linear combinations of tree forests.
pub type TreeForestElem = Combination<TreeForest>;

/// The target of the coaction: forest tensor tree.
pub type TreeTensor = Combination<(TreeForest, DecTree)>;

/// The target of the full coproduct: forest tensor forest.
pub type TreeForestTensor = Combination<(TreeForest, TreeForest)>;

/// Embed a multiset as a corolla: one root edge per letter occurrence, the
/// decoration being the letter's 1-based position in `alphabet`.
pub fn corolla_embed(a: &Multiset, alphabet: &[Letter]) -> Result<DecTree> {
    let mut children = Vec::new();
    for (letter, count) in a.iter() {
        let position = alphabet
            .iter()
            .position(|l| l == letter)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))?;
        for _ in 0..count {
            children.push((position as u32 + 1, DecTree::leaf()));
        }
    }
    Ok(DecTree::node(children))
}

/// Recover the multiset of a corolla; fails on trees of depth two or more or
/// on decorations outside the alphabet.
pub fn corolla_restrict(t: &DecTree, alphabet: &[Letter]) -> Result<Multiset> {
    let mut pairs = Vec::new();
    for (decoration, child) in t.children() {
        if !child.is_leaf() {
            return Err(Error::InvalidSpec(format!(
                "`{t}` is not a corolla: it has depth greater than one"
            )));
        }
        let index = *decoration as usize - 1;
        let letter = alphabet
            .get(index)
            .ok_or_else(|| Error::UnknownLetter(decoration.to_string()))?;
        pairs.push((letter.clone(), 1));
    }
    Ok(Multiset::from_pairs(pairs))
}
