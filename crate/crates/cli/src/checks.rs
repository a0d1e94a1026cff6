//! The `hopf-check` and `tree check` verification suites: each law is run
//! exhaustively over its stated range and reported as one pass/fail line.

use hopfwick::algebra::{tensor_apply_left, tensor_apply_right, tensor_swap};
use hopfwick::synth;
use hopfwick::tree::coproduct::forest_extraction_contraction;
use hopfwick::tree::TreeForest;
use hopfwick::{
    coproduct, corolla_embed, counit, extraction_contraction, tree_char_convolve,
    tree_char_inverse, trees_up_to, verify_characterization, DecTree, HElem, MomentSpec, Multiset,
    Rat,
};

use crate::error::{CliError, CliResult};

pub struct CheckOutcome {
    pub lines: Vec<String>,
    pub all_passed: bool,
}

fn record(lines: &mut Vec<String>, all: &mut bool, name: &str, passed: bool) {
    lines.push(format!("{name}: {}", if passed { "PASS" } else { "FAIL" }));
    *all &= passed;
}

/// Hopf-algebra axioms on multisets over three letters, the convolution
/// group law, star-series inversion, and (when moments are supplied) the
/// centering/derivation characterization of the Wick map.
pub fn hopf_check(max_degree: u32, moments: Option<&MomentSpec>) -> CliResult<CheckOutcome> {
    let letters = synth::letters(3);
    let basis = Multiset::enumerate(&letters, max_degree);
    let mut lines = Vec::new();
    let mut all = true;

    let mut coassociative = true;
    let mut cocommutative = true;
    let mut counital = true;
    for a in &basis {
        let split = coproduct(a).map_err(CliError::from)?;
        let left = hopfwick::algebra::tensor_map_left(&split, coproduct)
            .map_err(CliError::from)?
            .map_basis(|((x, y), z)| (x.clone(), y.clone(), z.clone()));
        let right = hopfwick::algebra::tensor_map_right(&split, coproduct)
            .map_err(CliError::from)?
            .map_basis(|(x, (y, z))| (x.clone(), y.clone(), z.clone()));
        coassociative &= left == right;
        cocommutative &= tensor_swap(&split) == split;
        let l = tensor_apply_left(&split, |b| Ok(counit(b))).map_err(CliError::from)?;
        let r = tensor_apply_right(&split, |b| Ok(counit(b))).map_err(CliError::from)?;
        counital &= l == HElem::basis(a.clone()) && r == HElem::basis(a.clone());
    }
    record(
        &mut lines,
        &mut all,
        &format!("coassociativity (3 letters, degree <= {max_degree})"),
        coassociative,
    );
    record(
        &mut lines,
        &mut all,
        &format!("cocommutativity (3 letters, degree <= {max_degree})"),
        cocommutative,
    );
    record(
        &mut lines,
        &mut all,
        &format!("counit laws (3 letters, degree <= {max_degree})"),
        counital,
    );

    let antipode =
        hopfwick::HEndo::from_basis_rule(|a| Ok(hopfwick::hopf::coalgebra::antipode_basis(a)));
    let id = hopfwick::HEndo::identity();
    let s_then = antipode.convolve(&id);
    let then_s = id.convolve(&antipode);
    let mut antipode_ok = true;
    for a in &basis {
        let expected = HElem::one().scale(&counit(a));
        antipode_ok &= s_then.on_basis(a).map_err(CliError::from)? == expected
            && then_s.on_basis(a).map_err(CliError::from)? == expected;
    }
    record(
        &mut lines,
        &mut all,
        &format!("antipode convolution identity (degree <= {max_degree})"),
        antipode_ok,
    );

    let lambda = synth::unital_functional(&letters, max_degree, 1);
    let inverse = lambda.neumann_inverse().map_err(CliError::from)?;
    let mut group_ok = true;
    for a in &basis {
        group_ok &= lambda.convolve(&inverse).eval(a).map_err(CliError::from)? == counit(a)
            && inverse.convolve(&lambda).eval(a).map_err(CliError::from)? == counit(a);
    }
    record(
        &mut lines,
        &mut all,
        &format!("convolution group law (degree <= {max_degree})"),
        group_ok,
    );

    let kappa = synth::vanishing_functional(&letters, max_degree, 2);
    let back = kappa
        .exp_star()
        .map_err(CliError::from)?
        .log_star()
        .map_err(CliError::from)?;
    let mut series_ok = true;
    for a in &basis {
        series_ok &=
            back.eval(a).map_err(CliError::from)? == kappa.eval(a).map_err(CliError::from)?;
    }
    record(
        &mut lines,
        &mut all,
        &format!("log of exp inversion (degree <= {max_degree})"),
        series_ok,
    );

    if let Some(spec) = moments {
        let mu = hopfwick::moment_functional(spec);
        let report = verify_characterization(&mu, spec.alphabet(), spec.max_degree())
            .map_err(CliError::from)?;
        record(
            &mut lines,
            &mut all,
            &format!(
                "Wick characterization (centering and derivations, degree <= {})",
                spec.max_degree()
            ),
            report.passed(),
        );
        if let Some(witness) = report.witness {
            lines.push(format!("  witness: {witness:?}"));
        }
    }

    Ok(CheckOutcome {
        lines,
        all_passed: all,
    })
}

/// Tree-side suite: extraction-contraction coassociativity and counit laws,
/// tree product laws, character inverses and the corolla intertwining.
pub fn tree_check(max_edges: u32, d: u32) -> CliResult<CheckOutcome> {
    let trees = trees_up_to(max_edges, d);
    let mut lines = Vec::new();
    let mut all = true;

    let mut coassociative = true;
    let mut counital = true;
    for t in &trees {
        let split = extraction_contraction(t).map_err(CliError::from)?;
        let left = hopfwick::algebra::tensor_map_left(&split, forest_extraction_contraction)
            .map_err(CliError::from)?
            .map_basis(|((x, y), z)| (x.clone(), y.clone(), TreeForest::from_tree(z)));
        let right = hopfwick::algebra::tensor_map_right(&split, extraction_contraction)
            .map_err(CliError::from)?
            .map_basis(|(x, (y, z))| (x.clone(), y.clone(), TreeForest::from_tree(z)));
        coassociative &= left == right;
        let l = tensor_apply_left(&split, |f| {
            Ok(if f.is_empty() {
                Rat::one()
            } else {
                Rat::zero()
            })
        })
        .map_err(CliError::from)?;
        counital &= l == hopfwick::TreeElem::basis(t.clone());
    }
    record(
        &mut lines,
        &mut all,
        &format!("coproduct coassociativity (d = {d}, edges <= {max_edges})"),
        coassociative,
    );
    record(
        &mut lines,
        &mut all,
        &format!("coproduct counit law (d = {d}, edges <= {max_edges})"),
        counital,
    );

    let mut product_ok = true;
    let small: Vec<&DecTree> = trees.iter().filter(|t| t.edge_count() <= 2).collect();
    for x in &small {
        for y in &small {
            product_ok &= x.product(y) == y.product(x);
            product_ok &= x.product(&DecTree::leaf()) == **x;
            for z in &small {
                product_ok &= x.product(y).product(z) == x.product(&y.product(z));
            }
        }
    }
    record(
        &mut lines,
        &mut all,
        "tree product laws (edges <= 2 factors)",
        product_ok,
    );

    let mu = synth::tree_character(d, max_edges, 3);
    let inverse = tree_char_inverse(&mu);
    let left = tree_char_convolve(&inverse, &mu);
    let right = tree_char_convolve(&mu, &inverse);
    let mut inverse_ok = true;
    for t in &trees {
        let expected = if t.edge_count() == 0 {
            Rat::one()
        } else {
            Rat::zero()
        };
        inverse_ok &= left.eval_tree(t).map_err(CliError::from)? == expected
            && right.eval_tree(t).map_err(CliError::from)? == expected;
    }
    record(
        &mut lines,
        &mut all,
        &format!("character inverse (edges <= {max_edges})"),
        inverse_ok,
    );

    let letters = synth::letters(d.min(26) as usize);
    let mut corolla_ok = true;
    for a in Multiset::enumerate(&letters, max_edges) {
        let corolla = corolla_embed(&a, &letters).map_err(CliError::from)?;
        let expected = coproduct(&a)
            .map_err(CliError::from)?
            .map_basis(|(b1, b2)| {
                (
                    TreeForest::from_tree(&corolla_embed(b1, &letters).expect("alphabet letter")),
                    corolla_embed(b2, &letters).expect("alphabet letter"),
                )
            });
        corolla_ok &= extraction_contraction(&corolla).map_err(CliError::from)? == expected;
    }
    record(
        &mut lines,
        &mut all,
        &format!("corolla embedding intertwines coproducts (degree <= {max_edges})"),
        corolla_ok,
    );

    Ok(CheckOutcome {
        lines,
        all_passed: all,
    })
}
