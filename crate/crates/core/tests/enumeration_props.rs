mod common;

use common::{arb_graph, lhf_corpus};
use holefree_core::graph::{fixtures, VertexSet};
use holefree_core::pmc::{block_family, enumerate_pmcs, is_pmc, PmcConfig, PmcMode};
use holefree_core::recognition::largest_prism;
use holefree_core::separators::{
    analyze_separator, brute_force_minimal_separators, enumerate_minimal_separators, special_separator_witness,
};
use holefree_core::Error;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn separators_match_brute_force(g in arb_graph(11)) {
        let got = enumerate_minimal_separators(&g, 0).unwrap();
        for s in &got {
            prop_assert!(s.full.len() >= 2);
            prop_assert!(analyze_separator(&g, &s.set).is_minimal());
        }
        let want = brute_force_minimal_separators(&g, 14).unwrap();
        let a: Vec<VertexSet> = got.into_iter().map(|s| s.set).collect();
        let b: Vec<VertexSet> = want.into_iter().map(|s| s.set).collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn pmcs_match_brute_force(g in arb_graph(10)) {
        let seps = enumerate_minimal_separators(&g, 0).unwrap();
        let inc = enumerate_pmcs(&g, &seps, PmcConfig::default()).unwrap();
        let brute = enumerate_pmcs(&g, &[], PmcConfig { mode: PmcMode::BruteForce, ..PmcConfig::default() }).unwrap();
        prop_assert_eq!(&inc, &brute);
        let family = block_family(&seps);
        for p in &inc {
            prop_assert!(is_pmc(&g, &p.set).is_ok());
            for d in &p.components {
                let nd = g.open_neighborhood(d);
                let sep = analyze_separator(&g, &nd);
                prop_assert!(sep.is_minimal());
                prop_assert!(sep.full_components().any(|c| c == d));
                prop_assert!(family.binary_search(d).is_ok());
            }
        }
    }

    #[test]
    fn separator_caps_are_honoured(g in arb_graph(12), cap in 1usize..6) {
        let all = enumerate_minimal_separators(&g, 0).unwrap().len();
        match enumerate_minimal_separators(&g, cap) {
            Ok(list) => prop_assert!(list.len() <= cap && list.len() == all),
            Err(Error::CapacityExceeded { partial, .. }) => prop_assert!(all > cap && partial > cap),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn prism_separator_law() {
    for k in 2..=8 {
        assert_eq!(enumerate_minimal_separators(&fixtures::prism(k), 0).unwrap().len(), (1 << k) - 2);
    }
}

#[test]
fn special_witness_contract_on_certified_graphs() {
    let mut checked = 0;
    for g in lhf_corpus(80, 4, 10, 31) {
        let k = (largest_prism(&g, g.n() / 2) + 1).max(2);
        for sep in enumerate_minimal_separators(&g, 0).unwrap() {
            for &a in &sep.full {
                let comp = &sep.components[a];
                for v in comp.iter() {
                    match special_separator_witness(&g, &sep, comp, v, k) {
                        Ok(z) => {
                            checked += 1;
                            assert!(z.contains(v));
                            assert!(z.len() <= k);
                            assert!(z.is_subset(&comp.intersection(&g.closed_neighbors(v))));
                            assert!(sep.set.is_subset(&g.open_neighborhood(&z)));
                        }
                        Err(Error::Precondition(_)) => {}
                        Err(e) => panic!("unexpected {e}"),
                    }
                }
            }
        }
    }
    assert!(checked > 100);
}
