//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime (run with `--nocapture` to see them). Every comparison
//! is exact; the asserted time bounds are generous for debug builds.
//!
//! Run with: `cargo test -p hopfwick-cli --test acceptance -- --nocapture`

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hopfwick::algebra::{tensor_apply_left, tensor_apply_right, tensor_swap};
use hopfwick::cumulant::wick_map;
use hopfwick::forest::{forest_antipode, forest_coproduct, forest_counit, Forest, ForestElem};
use hopfwick::synth;
use hopfwick::tree::coproduct::forest_extraction_contraction;
use hopfwick::tree::{TreeForest, TreeTensor};
use hopfwick::{
    bell_recursion_moment, centering_character, coproduct, corolla_embed, counit, cumulants,
    extraction_contraction, ls_partition_cumulants, ls_partition_moments, moment_functional,
    moments_from_cumulants, tree_char_convolve, trees_up_to, wick_expansion, wick_via_antipode,
    DecTree, Functional, HElem, HEndo, Letter, Multiset, Rat, TreeElem,
};

fn report(number: u32, name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!(
        "criterion {number:02} ({name}): PASS in {:.1} ms",
        elapsed.as_secs_f64() * 1e3
    );
    assert!(
        elapsed < budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// Standard Gaussian moment table on the letter `a` up to `max_degree`,
/// double factorials on even degrees.
fn gaussian_moments(max_degree: u32) -> Functional {
    let a = Letter::new("a").unwrap();
    let mut table = BTreeMap::new();
    for k in 0..=max_degree {
        let v = if k % 2 == 1 {
            Rat::zero()
        } else {
            (1..i64::from(k))
                .step_by(2)
                .map(Rat::from_int)
                .fold(Rat::one(), |x, y| x * y)
        };
        table.insert(Multiset::single(a.clone(), k), v);
    }
    Functional::from_table(table, max_degree)
}

/// Probabilists' Hermite coefficients from the three-term recurrence.
fn hermite(n: usize) -> Vec<Rat> {
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::one()], vec![Rat::zero(), Rat::one()]];
    for k in 1..n {
        let mut next = vec![Rat::zero(); k + 2];
        for (i, c) in rows[k].iter().enumerate() {
            next[i + 1] += c.clone();
        }
        for (i, c) in rows[k - 1].iter().enumerate() {
            next[i] -= Rat::from_int(k as i64) * c.clone();
        }
        rows.push(next);
    }
    rows.swap_remove(n)
}

#[test]
fn criterion_01_hermite_recovery() {
    let started = Instant::now();
    let a = Letter::new("a").unwrap();
    let w = wick_map(&gaussian_moments(10)).unwrap();
    for n in 0..=10usize {
        let image = w.on_basis(&Multiset::single(a.clone(), n as u32)).unwrap();
        let expected = HElem::from_terms(
            hermite(n)
                .into_iter()
                .enumerate()
                .map(|(k, c)| (Multiset::single(a.clone(), k as u32), c)),
        );
        assert_eq!(
            image, expected,
            "Wick polynomial of degree {n} is not Hermite"
        );
    }
    report(1, "Hermite recovery", started, Duration::from_secs(1));
}

#[test]
fn criterion_02_gaussian_cumulants() {
    let started = Instant::now();
    let a = Letter::new("a").unwrap();
    let kappa = cumulants(&gaussian_moments(10)).unwrap();
    for n in 1..=10u32 {
        let expected = if n == 2 { Rat::one() } else { Rat::zero() };
        assert_eq!(
            kappa.eval(&Multiset::single(a.clone(), n)).unwrap(),
            expected,
            "Gaussian cumulant of order {n}"
        );
    }
    report(2, "Gaussian cumulants", started, Duration::from_secs(1));
}

#[test]
fn criterion_03_bell_numbers() {
    let started = Instant::now();
    let a = Letter::new("a").unwrap();
    let mut table = BTreeMap::new();
    for k in 0..=8u32 {
        let v = if k == 0 { Rat::zero() } else { Rat::one() };
        table.insert(Multiset::single(a.clone(), k), v);
    }
    let mu = moments_from_cumulants(&Functional::from_table(table, 8)).unwrap();
    let bell = [1i64, 2, 5, 15, 52, 203, 877, 4140];
    let ones = vec![Rat::one(); 8];
    for (idx, expected) in bell.iter().enumerate() {
        let n = idx as u32 + 1;
        let value = mu.eval(&Multiset::single(a.clone(), n)).unwrap();
        assert_eq!(value, Rat::from_int(*expected), "Bell number at degree {n}");
        assert_eq!(
            value,
            bell_recursion_moment(&ones, n as usize),
            "recursion oracle at degree {n}"
        );
    }
    report(3, "Bell numbers", started, Duration::from_secs(1));
}

#[test]
fn criterion_04_leonov_shiryaev_equivalence() {
    let started = Instant::now();
    let letters = synth::letters(6);
    let full = Multiset::from_pairs(letters.iter().map(|l| (l.clone(), 1)));
    let subsets = full.submultisets();
    for seed in 0..20u64 {
        let mu = synth::subset_moment_functional(&letters, 1000 + seed);
        let kappa = cumulants(&mu).unwrap();
        let synth_kappa = synth::subset_cumulant_functional(&letters, 2000 + seed);
        let synth_mu = moments_from_cumulants(&synth_kappa).unwrap();
        for b in &subsets {
            if b.is_empty() {
                continue;
            }
            assert_eq!(
                kappa.eval(b).unwrap(),
                ls_partition_cumulants(&mu, b).unwrap(),
                "seed {seed}: log-star vs partitions on {b}"
            );
            assert_eq!(
                synth_mu.eval(b).unwrap(),
                ls_partition_moments(&synth_kappa, b).unwrap(),
                "seed {seed}: exp-star vs partitions on {b}"
            );
        }
    }
    report(
        4,
        "Leonov-Shiryaev oracle equivalence",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_05_hopf_axiom_suites() {
    let started = Instant::now();

    // multiset algebra: degree <= 6 over three letters
    for a in Multiset::enumerate(&synth::letters(3), 6) {
        let split = coproduct(&a).unwrap();
        let left = hopfwick::algebra::tensor_map_left(&split, coproduct)
            .unwrap()
            .map_basis(|((x, y), z)| (x.clone(), y.clone(), z.clone()));
        let right = hopfwick::algebra::tensor_map_right(&split, coproduct)
            .unwrap()
            .map_basis(|(x, (y, z))| (x.clone(), y.clone(), z.clone()));
        assert_eq!(left, right, "coassociativity on {a}");
        assert_eq!(tensor_swap(&split), split, "cocommutativity on {a}");
        assert_eq!(
            tensor_apply_left(&split, |b| Ok(counit(b))).unwrap(),
            HElem::basis(a.clone()),
            "counit law on {a}"
        );
        let s = HEndo::from_basis_rule(|m| Ok(hopfwick::hopf::coalgebra::antipode_basis(m)));
        let id = HEndo::identity();
        let expected = HElem::one().scale(&counit(&a));
        assert_eq!(s.convolve(&id).on_basis(&a).unwrap(), expected);
        assert_eq!(id.convolve(&s).on_basis(&a).unwrap(), expected);
    }

    // forest algebra: total degree <= 6 over two letters
    let letters = synth::letters(2);
    let parts: Vec<Multiset> = Multiset::enumerate(&letters, 6)
        .into_iter()
        .filter(|m| !m.is_empty())
        .collect();
    let mut forests = Vec::new();
    let mut chosen: Vec<Multiset> = Vec::new();
    fn collect(
        parts: &[Multiset],
        from: usize,
        remaining: u32,
        chosen: &mut Vec<Multiset>,
        out: &mut Vec<Forest>,
    ) {
        out.push(Forest::from_parts(chosen.iter().cloned()));
        for idx in from..parts.len() {
            if parts[idx].degree() <= remaining {
                chosen.push(parts[idx].clone());
                collect(parts, idx, remaining - parts[idx].degree(), chosen, out);
                chosen.pop();
            }
        }
    }
    collect(&parts, 0, 6, &mut chosen, &mut forests);
    for u in &forests {
        let split = forest_coproduct(u).unwrap();
        let left = hopfwick::algebra::tensor_map_left(&split, forest_coproduct)
            .unwrap()
            .map_basis(|((x, y), z)| (x.clone(), y.clone(), z.clone()));
        let right = hopfwick::algebra::tensor_map_right(&split, forest_coproduct)
            .unwrap()
            .map_basis(|(x, (y, z))| (x.clone(), y.clone(), z.clone()));
        assert_eq!(left, right, "forest coassociativity on {u}");
        assert_eq!(tensor_swap(&split), split, "forest cocommutativity on {u}");
        assert_eq!(
            tensor_apply_left(&split, |f| Ok(forest_counit(f))).unwrap(),
            ForestElem::basis(u.clone()),
            "forest counit on {u}"
        );
        let mut s_conv = ForestElem::zero();
        let mut conv_s = ForestElem::zero();
        for ((l, r), coeff) in split.iter() {
            s_conv = s_conv.add(
                &forest_antipode(l)
                    .unwrap()
                    .mul(&ForestElem::basis(r.clone()))
                    .scale(coeff),
            );
            conv_s = conv_s.add(
                &ForestElem::basis(l.clone())
                    .mul(&forest_antipode(r).unwrap())
                    .scale(coeff),
            );
        }
        let expected = ForestElem::one().scale(&forest_counit(u));
        assert_eq!(s_conv, expected, "antipode identity on {u}");
        assert_eq!(conv_s, expected, "antipode identity (other side) on {u}");
    }

    // decorated trees: <= 4 edges, two decorations
    for t in trees_up_to(4, 2) {
        let split = extraction_contraction(&t).unwrap();
        let left = hopfwick::algebra::tensor_map_left(&split, forest_extraction_contraction)
            .unwrap()
            .map_basis(|((x, y), z)| (x.clone(), y.clone(), TreeForest::from_tree(z)));
        let right = hopfwick::algebra::tensor_map_right(&split, extraction_contraction)
            .unwrap()
            .map_basis(|(x, (y, z))| (x.clone(), y.clone(), TreeForest::from_tree(z)));
        assert_eq!(left, right, "tree coassociativity on {t}");
        assert_eq!(
            tensor_apply_left(&split, |f| Ok(if f.is_empty() {
                Rat::one()
            } else {
                Rat::zero()
            }))
            .unwrap(),
            TreeElem::basis(t.clone()),
            "tree counit on {t}"
        );
        assert_eq!(
            tensor_apply_right(&split, |c| Ok(if c.edge_count() == 0 {
                Rat::one()
            } else {
                Rat::zero()
            }))
            .unwrap(),
            hopfwick::algebra::Combination::basis(TreeForest::from_tree(&t)),
            "tree counit (right) on {t}"
        );
    }

    report(5, "Hopf axiom suites", started, Duration::from_secs(30));
}

#[test]
fn criterion_06_wick_route_equality() {
    let started = Instant::now();
    let letters = synth::letters(2);
    for seed in 0..5u64 {
        let mu = moment_functional(&synth::moment_spec(&letters, 6, 3000 + seed));
        let w = wick_map(&mu).unwrap();
        for a in Multiset::enumerate(&letters, 6) {
            let neumann_route = w.on_basis(&a).unwrap();
            let expansion_route = wick_expansion(&mu, &a).unwrap();
            let antipode_route = wick_via_antipode(&mu, &a).unwrap();
            assert_eq!(
                neumann_route, expansion_route,
                "seed {seed}: expansion on {a}"
            );
            assert_eq!(
                neumann_route, antipode_route,
                "seed {seed}: antipode on {a}"
            );
        }
    }
    report(6, "Wick route equality", started, Duration::from_secs(20));
}

#[test]
fn criterion_07_deformation_isomorphism() {
    let started = Instant::now();
    let letters = synth::letters(2);
    let basis = Multiset::enumerate(&letters, 4);
    for seed in [0u64, 1] {
        let mu = moment_functional(&synth::moment_spec(&letters, 12, 4000 + seed));
        let deformation = hopfwick::Deformation::new(&mu).unwrap();
        let w = wick_map(&mu).unwrap();
        let mut rng = synth::Rng::new(5000 + seed);
        let pick =
            |rng: &mut synth::Rng| basis[(rng.next_u64() % basis.len() as u64) as usize].clone();
        for _ in 0..25 {
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let wa = w.on_basis(&a).unwrap();
            let wb = w.on_basis(&b).unwrap();
            let wc = w.on_basis(&c).unwrap();
            let pair = deformation.product(&wa, &wb).unwrap();
            assert_eq!(
                pair,
                w.on_basis(&a.product(&b)).unwrap(),
                "seed {seed}: pair {a}, {b}"
            );
            let triple = deformation.product(&pair, &wc).unwrap();
            assert_eq!(
                triple,
                w.on_basis(&a.product(&b).product(&c)).unwrap(),
                "seed {seed}: triple {a}, {b}, {c}"
            );
        }
    }
    report(
        7,
        "deformation isomorphism",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_08_characterization() {
    let started = Instant::now();
    let letters = synth::letters(2);
    for seed in [0u64, 1] {
        let mu = moment_functional(&synth::moment_spec(&letters, 6, 6000 + seed));
        let report_ok = hopfwick::verify_characterization(&mu, &letters, 6).unwrap();
        assert!(
            report_ok.passed(),
            "seed {seed}: witness {:?}",
            report_ok.witness
        );
        // negative control: corrupt one coefficient and demand a witness
        let w = wick_map(&mu).unwrap();
        let target: Multiset = "a^2".parse().unwrap();
        let corrupted = HEndo::from_basis_rule(move |m| {
            let mut image = w.on_basis(m)?;
            if *m == "a^2".parse().unwrap() {
                image.add_term(Multiset::empty(), Rat::one());
            }
            Ok(image)
        });
        let negative =
            hopfwick::cumulant::verify_characterization_of_map(&mu, &corrupted, &letters, 4)
                .unwrap();
        match negative.witness {
            Some(hopfwick::cumulant::CharacterizationFailure::NotCentered { multiset, .. }) => {
                assert_eq!(
                    multiset, target,
                    "seed {seed}: witness names the corrupted basis"
                );
            }
            other => panic!("seed {seed}: expected a centering witness, got {other:?}"),
        }
    }
    report(8, "characterization", started, Duration::from_secs(10));
}

#[test]
fn criterion_09_three_edge_tree_coproduct() {
    let started = Instant::now();
    let tree: DecTree = "(1:(2:()),3:())".parse().unwrap();
    let expected_pairs = [
        ("1", "(1:(2:()),3:())"),
        ("(1:())", "(2:(),3:())"),
        ("(2:())", "(1:(),3:())"),
        ("(3:())", "(1:(2:()))"),
        ("(1:(),3:())", "(2:())"),
        ("(1:(2:()))", "(3:())"),
        ("(2:()) * (3:())", "(1:())"),
        ("(1:(2:()),3:())", "()"),
    ];
    let mut expected = TreeTensor::zero();
    for (forest, rest) in expected_pairs {
        expected.add_term((forest.parse().unwrap(), rest.parse().unwrap()), Rat::one());
    }
    assert_eq!(extraction_contraction(&tree).unwrap(), expected);

    // and through the binary, term for term
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_hopfwick"))
        .args(["tree", "coprod", "--tree", "(1:(2:()),3:())"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 8, "expected eight printed terms");
    for (forest, rest) in expected_pairs {
        let line = format!("{forest} (x) {rest}");
        assert!(
            lines.contains(&line.as_str()),
            "missing printed term `{line}`"
        );
    }
    report(
        9,
        "three-edge tree coproduct",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_10_centering() {
    let started = Instant::now();
    let mu = synth::tree_character(2, 3, 7000);
    let lambda = centering_character(&mu);
    let centered = tree_char_convolve(&lambda, &mu);
    let trees = trees_up_to(3, 2);
    for t in &trees {
        let expected = if t.edge_count() == 0 {
            Rat::one()
        } else {
            Rat::zero()
        };
        assert_eq!(centered.eval_tree(t).unwrap(), expected, "centering on {t}");
    }
    // uniqueness: solve the centering condition by an independent bottom-up
    // recursion and compare value by value
    let mut solved: std::collections::HashMap<DecTree, Rat> = std::collections::HashMap::new();
    for t in &trees {
        if t.edge_count() == 0 {
            continue;
        }
        let mut acc = Rat::zero();
        for ((sigma, rest), coeff) in extraction_contraction(t).unwrap().iter() {
            if sigma.components() == vec![t.clone()] {
                continue;
            }
            let mut value = Rat::one();
            for component in sigma.components() {
                value *= solved[&component].clone();
            }
            acc += coeff * &(value * mu.eval_tree(rest).unwrap());
        }
        solved.insert(t.clone(), -acc);
    }
    for (t, value) in &solved {
        assert_eq!(
            lambda.eval_tree(t).unwrap(),
            value.clone(),
            "uniqueness: independent recursion differs on {t}"
        );
    }
    report(10, "centering character", started, Duration::from_secs(5));
}

#[test]
fn criterion_11_corolla_embedding() {
    let started = Instant::now();
    let letters = synth::letters(2);
    for a in Multiset::enumerate(&letters, 5) {
        let corolla = corolla_embed(&a, &letters).unwrap();
        let expected: TreeTensor = coproduct(&a).unwrap().map_basis(|(b1, b2)| {
            (
                TreeForest::from_tree(&corolla_embed(b1, &letters).unwrap()),
                corolla_embed(b2, &letters).unwrap(),
            )
        });
        assert_eq!(
            extraction_contraction(&corolla).unwrap(),
            expected,
            "coproduct intertwining on {a}"
        );
        for b in Multiset::enumerate(&letters, 2) {
            assert_eq!(
                corolla_embed(&a.product(&b), &letters).unwrap(),
                corolla.product(&corolla_embed(&b, &letters).unwrap()),
                "product intertwining on {a}, {b}"
            );
        }
    }
    report(11, "corolla embedding", started, Duration::from_secs(5));
}
