//! The extraction-contraction coproduct: sum over edge subsets of the
//! extracted subforest tensor the tree with those components contracted.

use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::tree::{DecTree, TreeForest, TreeForestTensor, TreeTensor};

/// Edge subsets are enumerated as bitmasks; trees above this edge count are
/// refused rather than hanging.
pub const EDGE_GUARD: u32 = 20;

/// Flattened view of a tree: node 0 is the root, every other node records
/// its parent and the decoration of the edge above it. Edge `i` is the
/// parent edge of node `i + 1`.
struct Arena {
    parents: Vec<(usize, u32)>,
}

impl Arena {
    fn build(t: &DecTree) -> Self {
        let mut arena = Arena {
            parents: Vec::with_capacity(t.edge_count() as usize),
        };
        arena.visit(t, 0);
        arena
    }

    fn visit(&mut self, t: &DecTree, node: usize) {
        for (decoration, child) in t.children() {
            self.parents.push((node, *decoration));
            let child_id = self.parents.len();
            self.visit(child, child_id);
        }
    }

    fn edge_count(&self) -> usize {
        self.parents.len()
    }

    /// Topmost node reachable from `node` through selected parent edges:
    /// the representative of its component in the selected subforest. Two
    /// selected edges sharing any node, the root included, end up in the
    /// same component.
    fn representative(&self, mut node: usize, mask: u64) -> usize {
        while node > 0 && mask & (1 << (node - 1)) != 0 {
            node = self.parents[node - 1].0;
        }
        node
    }

    /// The extracted component rooted at `node`, following selected edges.
    fn extract(&self, node: usize, mask: u64, children_of: &[Vec<usize>]) -> DecTree {
        let mut children = Vec::new();
        for &child in &children_of[node] {
            if mask & (1 << (child - 1)) != 0 {
                let (_, decoration) = self.parents[child - 1];
                children.push((decoration, self.extract(child, mask, children_of)));
            }
        }
        DecTree::node(children)
    }

    /// The contracted tree below `rep`, following unselected edges between
    /// component representatives.
    fn contract(&self, rep: usize, mask: u64, children_of: &[Vec<usize>]) -> DecTree {
        let mut children = Vec::new();
        self.contract_into(rep, mask, children_of, &mut children);
        DecTree::node(children)
    }

    /// Walks the component of `node`, collecting its outgoing unselected
    /// edges with their contracted subtrees.
    fn contract_into(
        &self,
        node: usize,
        mask: u64,
        children_of: &[Vec<usize>],
        out: &mut Vec<(u32, DecTree)>,
    ) {
        for &child in &children_of[node] {
            if mask & (1 << (child - 1)) != 0 {
                self.contract_into(child, mask, children_of, out);
            } else {
                let (_, decoration) = self.parents[child - 1];
                out.push((decoration, self.contract(child, mask, children_of)));
            }
        }
    }
}

/// Extraction-contraction of a single tree: the sum over all edge subsets of
/// the extracted subforest tensor the contracted tree, coefficients counting
/// coinciding terms.
pub fn extraction_contraction(t: &DecTree) -> Result<TreeTensor> {
    if t.edge_count() > EDGE_GUARD {
        return Err(Error::EnumerationGuard {
            size: t.edge_count(),
            limit: EDGE_GUARD,
        });
    }
    let arena = Arena::build(t);
    let node_count = arena.edge_count() + 1;
    let mut children_of = vec![Vec::new(); node_count];
    for node in 1..node_count {
        let (parent, _) = arena.parents[node - 1];
        children_of[parent].push(node);
    }

    let mut out = TreeTensor::zero();
    for mask in 0u64..(1 << arena.edge_count()) {
        // component representatives of the selected edges
        let mut reps = Vec::new();
        for edge in 0..arena.edge_count() {
            if mask & (1 << edge) != 0 {
                let (parent, _) = arena.parents[edge];
                let rep = arena.representative(parent, mask);
                if !reps.contains(&rep) {
                    reps.push(rep);
                }
            }
        }
        let extracted = TreeForest::from_trees(
            reps.iter()
                .map(|&rep| arena.extract(rep, mask, &children_of)),
        );
        let contracted = arena.contract(0, mask, &children_of);
        out.add_term((extracted, contracted), Rat::one());
    }
    Ok(out)
}

/// Multiplicative extension of the coproduct to forests.
pub fn forest_extraction_contraction(f: &TreeForest) -> Result<TreeForestTensor> {
    let mut out = TreeForestTensor::one();
    for component in f.components() {
        let part = extraction_contraction(&component)?
            .map_basis(|(sigma, rest)| (sigma.clone(), TreeForest::from_tree(rest)));
        out = out.mul(&part);
    }
    Ok(out)
}

/// All decorated trees with exactly `edges` edges over decorations
/// `1..=d`, in canonical order.
pub fn trees_with_edges(edges: u32, d: u32) -> Vec<DecTree> {
    let mut by_edges: Vec<Vec<DecTree>> = vec![vec![DecTree::leaf()]];
    for target in 1..=edges {
        // planted units of each positive cost: an edge with any decoration
        // above a smaller tree
        let mut units: Vec<(u32, DecTree)> = Vec::new();
        for cost in 1..=target {
            for subtree in &by_edges[(cost - 1) as usize] {
                for decoration in 1..=d {
                    units.push((cost, DecTree::node(vec![(decoration, subtree.clone())])));
                }
            }
        }
        let mut found = Vec::new();
        let mut chosen = Vec::new();
        multisets_of_units(&units, 0, target, &mut chosen, &mut found);
        found.sort_unstable();
        found.dedup();
        by_edges.push(found);
    }
    by_edges.swap_remove(edges as usize)
}

fn multisets_of_units(
    units: &[(u32, DecTree)],
    from: usize,
    remaining: u32,
    chosen: &mut Vec<DecTree>,
    out: &mut Vec<DecTree>,
) {
    if remaining == 0 {
        let mut merged = DecTree::leaf();
        for unit in chosen.iter() {
            merged = merged.product(unit);
        }
        out.push(merged);
        return;
    }
    for index in from..units.len() {
        let (cost, unit) = &units[index];
        if *cost <= remaining {
            chosen.push(unit.clone());
            multisets_of_units(units, index, remaining - cost, chosen, out);
            chosen.pop();
        }
    }
}

/// All decorated trees with at most `max_edges` edges, the leaf included.
pub fn trees_up_to(max_edges: u32, d: u32) -> Vec<DecTree> {
    let mut out = Vec::new();
    for e in 0..=max_edges {
        out.extend(trees_with_edges(e, d));
    }
    out
}
