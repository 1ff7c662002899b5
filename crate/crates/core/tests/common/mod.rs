#![allow(dead_code)]

use holefree_core::generate::{certified_lhf, gnp, rng};
use holefree_core::graph::{Graph, Weight};

/// Seeded `G(n, p)` samples with `n` in `lo..=hi` and densities spread over
/// `0.1..=0.9`.
pub fn random_corpus(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = lo + i % (hi - lo + 1);
            let p = 0.1 + 0.8 * ((i * 7) % 9) as f64 / 8.0;
            gnp(n, p, &mut rng(seed.wrapping_mul(1_000_003) + i as u64))
        })
        .collect()
}

/// Certified long-hole-free instances with `n` in `lo..=hi`.
pub fn lhf_corpus(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| certified_lhf(lo + i % (hi - lo + 1), seed.wrapping_mul(7919) + i as u64))
        .collect()
}

/// Plain subset enumeration: best total weight over independent sets.
pub fn subset_mwis(g: &Graph) -> Weight {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, u| m | 1 << u)).collect();
    let mut best = Weight::ZERO;
    for mask in 0u32..1 << n {
        if (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0) {
            let w: Weight = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| g.weight(v)).sum();
            best = best.max(w);
        }
    }
    best
}

/// Plain subset enumeration: best total weight over cliques.
pub fn subset_mwc(g: &Graph) -> Weight {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, u| m | 1 << u)).collect();
    let mut best = Weight::ZERO;
    for mask in 0u32..1 << n {
        if (0..n).all(|v| mask >> v & 1 == 0 || (mask & !(1 << v)) & !adj[v] == 0) {
            let w: Weight = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| g.weight(v)).sum();
            best = best.max(w);
        }
    }
    best
}

/// Integer weights in `1..=max` from a seed.
pub fn weighted(g: &Graph, max: u64, seed: u64) -> Graph {
    holefree_core::generate::random_weights(g, max, &mut rng(seed))
}

/// Graphs with up to `max_n` vertices and edge density drawn from `0.1..0.9`.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n, 0.1f64..0.9)
        .prop_flat_map(|(n, p)| (Just(n), proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
}

/// [`arb_graph`] with integer weights in `0..=max_w`.
pub fn arb_weighted_graph(max_n: usize, max_w: u64) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        proptest::collection::vec(0..=max_w, n).prop_map(move |w| g.clone().with_int_weights(&w))
    })
}
