//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its pinned tolerances. Run with `cargo test --test acceptance --
//! --nocapture` to see the per-criterion lines.

mod support;

use std::ops::ControlFlow;

use rainbow_turan::census::{count_copies, enumerate_copies, find_rainbow_copy};
use rainbow_turan::constructions::{self, Construction};
use rainbow_turan::fit::fit_exponent;
use rainbow_turan::graph::ColoredGraph;
use rainbow_turan::lemma::LemmaInstance;
use rainbow_turan::oracle::{
    enumerate_small_graphs, exact_extremal, p4_characterize, rainbow_free_colorable,
    ColorSearchOutcome, ExtremalStatus, P4Characterization, SearchBudget,
};
use rainbow_turan::pattern::Pattern;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use support::{naive_count_copies, random_host, random_lemma_instance, random_pattern};

fn p4() -> Pattern {
    Pattern::path(4).unwrap()
}

fn spider7() -> Pattern {
    Pattern::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
}

fn broom8() -> Pattern {
    Pattern::new(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)]).unwrap()
}

fn assert_sound(built: &Construction, label: &str) {
    assert!(
        built.graph.validate_proper().is_empty(),
        "{label}: output is not properly colored"
    );
    let witness = find_rainbow_copy(&built.graph, &built.target).unwrap();
    assert!(
        witness.is_none(),
        "{label}: rainbow copy found at {:?}",
        witness
    );
}

#[test]
fn criterion_01_p4_exact_extremal_values() {
    let h = p4();
    for n in [4usize, 5, 6] {
        let result = exact_extremal(n, &h, &h, &SearchBudget::default()).unwrap();
        assert_eq!(result.status, ExtremalStatus::Exact, "n = {n}");
        assert_eq!(result.value, 12 * (n as u64 / 4), "n = {n}");
    }
    println!("acceptance criterion 1 (exact ex(n,P4,rainbow-P4) = 12*floor(n/4) for n=4,5,6): PASS");
}

#[test]
fn criterion_02_recognizer_matches_exhaustive_search() {
    let f = p4();
    let budget = SearchBudget::default();
    let mut disagreements = 0usize;
    let mut graphs = 0usize;
    for n in 1..=6 {
        for host in enumerate_small_graphs(n, true).unwrap() {
            graphs += 1;
            let g = host.to_colored_graph();
            let characterized = p4_characterize(&g);
            let searched = rainbow_free_colorable(&g, &f, &budget).unwrap();
            let search_says = match searched {
                ColorSearchOutcome::Colorable(_) => true,
                ColorSearchOutcome::NotColorable => false,
                ColorSearchOutcome::Incomplete { .. } => {
                    panic!("default budget must decide graphs on {n} vertices")
                }
            };
            if characterized.is_colorable() != search_says {
                disagreements += 1;
            }
            // The recognizer's witness must itself verify.
            if let P4Characterization::Colorable { coloring } = &characterized {
                assert!(coloring.is_properly_colored());
                assert!(find_rainbow_copy(coloring, &f).unwrap().is_none());
            }
        }
    }
    assert_eq!(disagreements, 0);
    println!(
        "acceptance criterion 2 (recognizer vs exhaustive colorer on all {graphs} graphs up to 6 vertices, zero disagreements): PASS"
    );
}

fn construction_matrix() -> Vec<(String, Construction)> {
    let mut cases: Vec<(String, Construction)> = Vec::new();
    for k in [5usize, 6, 7] {
        for b in [1usize, 2, 3] {
            let built = constructions::path_lower_with(k, 1000, Some(b)).unwrap();
            cases.push((format!("path k={k} b={b}"), built));
        }
    }
    for b in [1usize, 2] {
        let built = constructions::odd_cycle_lower_with(2, 1000, Some(b)).unwrap();
        cases.push((format!("odd cycle k=2 b={b}"), built));
        let built = constructions::even_cycle_lower_with(3, 1000, Some(b)).unwrap();
        cases.push((format!("even cycle k=3 b={b}"), built));
    }
    for n_target in [10usize, 20, 30] {
        let built = constructions::c4_lower(n_target).unwrap();
        cases.push((format!("c4 lower layer m={}", n_target / 2), built));
    }
    for b in [1usize, 2, 3] {
        let built = constructions::clique_lower_with(4, 1000, Some(b)).unwrap();
        cases.push((format!("clique r=4 parts {b}"), built));
    }
    for (name, pattern) in [
        ("M2", Pattern::matching(2).unwrap()),
        ("M3", Pattern::matching(3).unwrap()),
        ("P4", Pattern::path(4).unwrap()),
    ] {
        let built = constructions::disjoint_components_with(&pattern, 1000, Some(3)).unwrap();
        cases.push((format!("disjoint components {name}"), built));
    }
    for (name, tree) in [
        ("P6", Pattern::path(6).unwrap()),
        ("P7", Pattern::path(7).unwrap()),
        ("spider7", spider7()),
        ("broom8", broom8()),
    ] {
        let built = constructions::tree_lower_with(&tree, 1000, Some(2)).unwrap();
        cases.push((format!("tree {name} via {}", built.provenance.family), built));
    }
    cases
}

#[test]
fn criterion_03_construction_soundness_suite() {
    let cases = construction_matrix();
    // The tree matrix triggers each strategy once.
    let families: Vec<&str> = cases
        .iter()
        .map(|(_, built)| built.provenance.family)
        .collect();
    for needed in ["tree-bare-path", "tree-star-case", "tree-leaf-blowup"] {
        assert!(families.contains(&needed), "matrix misses {needed}");
    }
    for (label, built) in &cases {
        assert_sound(built, label);
    }
    println!(
        "acceptance criterion 3 (soundness of {} desk-scale constructions: proper coloring, no rainbow copy, exhaustive search): PASS",
        cases.len()
    );
}

#[test]
fn criterion_04_construction_copy_count_bounds() {
    for k in [5usize, 6, 7] {
        for b in [1usize, 2, 3] {
            let built = constructions::path_lower_with(k, 1000, Some(b)).unwrap();
            let count = count_copies(&built.graph, &built.target).unwrap();
            let bound = (b as u64).pow((k / 2) as u32);
            assert!(count >= bound, "path k={k} b={b}: {count} < {bound}");
        }
    }
    let built = constructions::odd_cycle_lower_with(2, 1000, Some(2)).unwrap();
    let count = count_copies(&built.graph, &built.target).unwrap();
    assert!(count >= 8, "odd cycle k=2 b=2: {count} < 2^3");

    let built = constructions::even_cycle_lower_with(3, 1000, Some(2)).unwrap();
    let count = count_copies(&built.graph, &built.target).unwrap();
    assert!(count >= 4, "even cycle k=3 b=2: {count} < 2^2");

    let built = constructions::clique_lower_with(4, 12, None).unwrap();
    assert_eq!(built.provenance.b, Some(3));
    let count = count_copies(&built.graph, &built.target).unwrap();
    assert_eq!(count, 9, "clique r=4 parts 3 must give exactly 3*3 copies");

    println!("acceptance criterion 4 (copy-count lower bounds, exact integer comparisons; clique r=4 parts 3 exactly 9): PASS");
}

#[test]
fn criterion_05_census_matches_subset_enumeration_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0005);
    let mut mismatches = 0usize;
    for _ in 0..300 {
        let n = rng.random_range(1..=7);
        let p = rng.random_range(0.15..0.85);
        let g = random_host(&mut rng, n, p);
        let h = random_pattern(&mut rng, 5);
        let fast = count_copies(&g, &h).unwrap();
        let slow = naive_count_copies(&g, &h);
        if fast != slow {
            mismatches += 1;
            eprintln!("mismatch: host {g:?} pattern {h:?}: census {fast}, oracle {slow}");
        }
    }
    assert_eq!(mismatches, 0);
    println!("acceptance criterion 5 (census vs subset-enumeration oracle on 300 random hosts, n <= 7, t <= 5, zero mismatches): PASS");
}

#[test]
fn criterion_06_paper_count_regressions() {
    let h = p4();
    let k4 = support::complete_host(4);
    assert_eq!(count_copies(&k4, &h).unwrap(), 12);
    for k in 4..=8 {
        let ck = support::cycle_host(k);
        assert_eq!(count_copies(&ck, &h).unwrap(), k as u64, "C{k}");
    }
    // Host paths indexed by edge count: a path with k edges (k+1 vertices)
    // holds k-2 copies of P4.
    for k in 4..=8 {
        let pk = support::path_host(k + 1);
        assert_eq!(count_copies(&pk, &h).unwrap(), (k - 2) as u64, "path with {k} edges");
    }
    println!("acceptance criterion 6 (count regressions: K4 -> 12, C_k -> k, k-edge path -> k-2 for k=4..8): PASS");
}

#[test]
fn criterion_07_lemma_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0007);
    let mut max_seen = 0usize;
    for round in 0..200 {
        let k = [2usize, 3, 4][round % 3];
        let built = random_lemma_instance(&mut rng, k);
        let inst = LemmaInstance::new(
            &built.graph,
            &built.anchors,
            &built.forbidden_vertices,
            &built.forbidden_colors,
        )
        .unwrap();
        assert!(inst.precondition_holds(), "round {round}: builder violated the bound");
        let path = inst
            .find_rainbow_alternating_path(false)
            .unwrap_or_else(|e| panic!("round {round}: guaranteed search failed: {e}"));

        // Validity: rainbow, disjoint from A, connectors outside U and anchors.
        let mut colors = path.colors.clone();
        colors.sort_unstable();
        colors.dedup();
        assert_eq!(colors.len(), 2 * (k - 1), "round {round}: repeated color");
        for c in &path.colors {
            assert!(!built.forbidden_colors.contains(c), "round {round}: color in A");
        }
        for (i, &v) in path.vertices.iter().enumerate() {
            if i % 2 == 1 {
                assert!(!built.forbidden_vertices.contains(&v), "round {round}: connector in U");
                assert!(!built.anchors.contains(&v), "round {round}: connector on an anchor");
            }
        }
        for w in 0..path.vertices.len() - 1 {
            let (a, b) = (path.vertices[w], path.vertices[w + 1]);
            assert_eq!(built.graph.color_of(a, b), Some(path.colors[w]), "round {round}");
        }

        // Instrumented forbidden-candidate count never exceeds |U|+2|A|+5k-10.
        let cap = (built.forbidden_vertices.len() + 2 * built.forbidden_colors.len() + 5 * k)
            .saturating_sub(10);
        assert!(
            path.max_forbidden_observed <= cap,
            "round {round}: observed {} > cap {cap}",
            path.max_forbidden_observed
        );
        max_seen = max_seen.max(path.max_forbidden_observed);
    }
    println!("acceptance criterion 7 (200 randomized lemma instances, k in {{2,3,4}}: all paths found and valid; max forbidden-set size {max_seen} stayed within |U|+2|A|+5k-10): PASS");
}

#[test]
fn criterion_08_scaling_fits() {
    // Class sizes scale proportionally across a series (b = c*n, one
    // constant fixed at the smallest budget); the fit runs against the
    // budget n.
    let scale = |family: &dyn Fn(usize, Option<usize>) -> Construction, sizes: &[usize]| {
        let smallest = family(sizes[0], None);
        let b_min = smallest.provenance.b.unwrap() as usize;
        let mut series = Vec::new();
        for &n in sizes {
            let b = b_min * n / sizes[0];
            let built = family(n, Some(b));
            let count = count_copies(&built.graph, &built.target).unwrap();
            series.push((n as u64, count));
        }
        fit_exponent(&series).unwrap()
    };

    let path_fit = scale(
        &|n, b| constructions::path_lower_with(6, n, b).unwrap(),
        &[24, 48, 96],
    );
    assert!(
        (path_fit.slope - 3.0).abs() <= 0.2,
        "path k=6 slope {} outside 3.0 +/- 0.2",
        path_fit.slope
    );

    let odd_fit = scale(
        &|n, b| constructions::odd_cycle_lower_with(2, n, b).unwrap(),
        &[20, 40, 80],
    );
    assert!(
        (odd_fit.slope - 3.0).abs() <= 0.2,
        "odd cycle k=2 slope {} outside 3.0 +/- 0.2",
        odd_fit.slope
    );
    println!(
        "acceptance criterion 8 (scaling slopes: path k=6 -> {:.4}, odd cycle k=2 -> {:.4}, both within 3.0 +/- 0.2): PASS",
        path_fit.slope, odd_fit.slope
    );
}

#[test]
fn criterion_09_zero_cases() {
    let budget = SearchBudget::default();
    for (name, h) in [
        ("P2", Pattern::path(2).unwrap()),
        ("P3", Pattern::path(3).unwrap()),
        ("S4", Pattern::star(4).unwrap()),
        ("K3", Pattern::clique(3).unwrap()),
    ] {
        let result = exact_extremal(5, &h, &h, &budget).unwrap();
        assert_eq!(result.status, ExtremalStatus::Exact, "{name}");
        assert_eq!(result.value, 0, "{name}: stars and triangles admit no rainbow-free copies");
    }
    println!("acceptance criterion 9 (ex(5,H,rainbow-H) = 0 for H in {{P2, P3, S4, K3}}): PASS");
}

#[test]
fn criterion_10_matching_case_with_witness() {
    let m2 = Pattern::matching(2).unwrap();
    let result = exact_extremal(4, &m2, &m2, &SearchBudget::default()).unwrap();
    assert_eq!(result.value, 3);
    assert_eq!(result.status, ExtremalStatus::Exact);
    let witness: ColoredGraph = result.witness.expect("a witness must be attached");
    assert!(witness.validate_proper().is_empty());
    assert!(find_rainbow_copy(&witness, &m2).unwrap().is_none());
    assert_eq!(count_copies(&witness, &m2).unwrap(), 3);
    // Every M2 copy in the witness repeats its single pair of colors.
    enumerate_copies(&witness, &m2, |copy| {
        let a = witness.color_of(copy.edges[0].u(), copy.edges[0].v());
        let b = witness.color_of(copy.edges[1].u(), copy.edges[1].v());
        assert_eq!(a, b);
        ControlFlow::Continue(())
    })
    .unwrap();
    println!("acceptance criterion 10 (ex(4,M2,rainbow-M2) = 3 with re-verified witness): PASS");
}
