mod common;

use common::{arb_weighted_graph, lhf_corpus, random_corpus, subset_mwc, subset_mwis, weighted};
use holefree_core::engine::{brute_force_mwis, solve_mwis, SolveConfig};
use holefree_core::generate::{chordal, rng};
use holefree_core::graph::{fixtures, Graph, Weight};
use holefree_core::recognition::{clique_tree, FillIn};
use holefree_core::solvers::{
    balanced_separator, build_tree_decomposition, solve, solve_mwc_complement, solve_treewidth_dp,
    BalancedSeparatorResult, SolverConfig, Strategy, TreeDecomposition,
};
use proptest::prelude::*;

fn small_floor() -> SolverConfig {
    SolverConfig { subexp1_floor: 0, ..SolverConfig::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn engine_matches_oracles(g in arb_weighted_graph(13, 6)) {
        let r = solve_mwis(&g, SolveConfig::default()).unwrap();
        prop_assert!(g.is_independent(&r.set));
        prop_assert_eq!(g.set_weight(&r.set), r.weight);
        prop_assert_eq!(r.weight, subset_mwis(&g));
        let b = brute_force_mwis(&g, 20).unwrap();
        prop_assert_eq!(&r.set, &b.set);
        prop_assert!(r.set.iter().all(|v| !g.weight(v).is_zero()));
    }

    #[test]
    fn strategies_return_the_same_witness(g in arb_weighted_graph(12, 5)) {
        let cfg = small_floor();
        let (reference, _) = solve(&g, Strategy::Brute, &cfg).unwrap();
        for s in [Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Auto] {
            let (r, _) = solve(&g, s, &cfg).unwrap();
            prop_assert_eq!(&r.set, &reference.set, "strategy {}", s);
            prop_assert_eq!(r.weight, reference.weight);
        }
    }

    #[test]
    fn isolated_vertex_adds_its_weight(g in arb_weighted_graph(12, 6), w in 0u64..10) {
        let extra = Graph::from_edges(1, &[]).with_int_weights(&[w]);
        let h = g.disjoint_union(&extra);
        let a = solve_mwis(&g, SolveConfig::default()).unwrap().weight;
        let b = solve_mwis(&h, SolveConfig::default()).unwrap().weight;
        prop_assert_eq!(b, a + Weight::from_int(w));
    }

    #[test]
    fn scaling_weights_scales_the_optimum(g in arb_weighted_graph(12, 6), c in 1u64..50) {
        let scaled = g.reweighted(g.weights().iter().map(|w| w.scaled(c)).collect());
        let a = solve_mwis(&g, SolveConfig::default()).unwrap();
        let b = solve_mwis(&scaled, SolveConfig::default()).unwrap();
        prop_assert_eq!(b.weight, a.weight.scaled(c));
        prop_assert_eq!(b.set, a.set);
    }

    #[test]
    fn clique_via_complement(g in arb_weighted_graph(12, 6)) {
        let (r, _) = solve_mwc_complement(&g, Strategy::Bt, &SolverConfig::default()).unwrap();
        prop_assert!(g.is_clique(&r.set));
        prop_assert_eq!(r.weight, subset_mwc(&g));
    }

    #[test]
    fn decompositions_are_valid(g in arb_weighted_graph(14, 3)) {
        let td = build_tree_decomposition(&g);
        prop_assert!(td.is_valid_for(&g));
        let r = solve_treewidth_dp(&g, &td, 25).unwrap();
        prop_assert_eq!(r.weight, subset_mwis(&g));
    }
}

#[test]
fn certified_instances_agree_with_brute_force() {
    for (i, g) in lhf_corpus(100, 4, 16, 41).into_iter().enumerate() {
        let g = weighted(&g, 12, i as u64);
        let want = brute_force_mwis(&g, 20).unwrap();
        for s in [Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2] {
            let (r, _) = solve(&g, s, &small_floor()).unwrap();
            assert_eq!(r.set, want.set, "instance {i}, strategy {s}");
        }
    }
}

#[test]
fn chordal_engine_matches_clique_tree_dp() {
    for seed in 0..40 {
        let n = 4 + seed as usize % 16;
        let g = weighted(&chordal(n, 2 * n, &mut rng(seed)), 20, seed);
        let t = clique_tree(&g, &FillIn::default()).unwrap();
        let td = TreeDecomposition { bags: t.bags, edges: t.edges };
        let a = solve_treewidth_dp(&g, &td, 25).unwrap();
        let b = solve_mwis(&g, SolveConfig::default()).unwrap();
        assert_eq!(a.weight, b.weight);
        assert_eq!(a.set, b.set);
    }
}

#[test]
fn balanced_separators_on_certified_instances() {
    for (i, g) in lhf_corpus(60, 5, 20, 51).into_iter().enumerate() {
        let big = g.components(&g.vertex_set()).into_iter().max_by_key(|c| c.len()).unwrap();
        let (h, _) = g.induced_subgraph(&big);
        let h = weighted(&h, 7, i as u64);
        let r = balanced_separator(&h).unwrap();
        assert!(!r.degraded);
        assert!(r.z.len() <= 3);
        assert!(r.separator.len() <= BalancedSeparatorResult::size_bound(&h));
        for c in h.components_without(&r.separator) {
            assert!(h.set_weight(&c).at_most_half_of(h.total_weight()));
        }
    }
}

#[test]
fn decomposition_width_regression_bound() {
    for g in lhf_corpus(60, 5, 24, 61) {
        let td = build_tree_decomposition(&g);
        assert!(td.is_valid_for(&g));
        assert!(td.width() < 9 * (g.max_degree() + 1), "width {} for max degree {}", td.width(), g.max_degree());
    }
}

#[test]
fn random_graphs_across_strategies() {
    for g in random_corpus(60, 5, 14, 71) {
        let want = subset_mwis(&g);
        for s in [Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute] {
            assert_eq!(solve(&g, s, &SolverConfig::default()).unwrap().0.weight, want);
        }
    }
    assert_eq!(solve(&fixtures::cycle(6), Strategy::Subexp2, &SolverConfig::default()).unwrap().0.weight, Weight::from_int(3));
}
