//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{fixtures, Graph, Vertex, Weight};
use crate::recognition::find_long_hole;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn prism(k: usize) -> Graph {
    fixtures::prism(k)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut GenRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random chordal graph with about `m` edges.
///
/// Vertices arrive one at a time and attach to a random subset of a random
/// maximal clique of the graph so far, so the reversed arrival order is a
/// perfect elimination order. Labels are shuffled at the end.
pub fn chordal(n: usize, m: usize, rng: &mut GenRng) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        if v == 0 {
            cliques.push(vec![0]);
            continue;
        }
        let left = (n - v) as f64;
        let want = ((m.saturating_sub(edges.len())) as f64 / left).round() as usize;
        let ci = rng.gen_range(0..cliques.len());
        let mut base = cliques[ci].clone();
        base.shuffle(rng);
        let take = want.clamp(usize::from(m >= n.saturating_sub(1)), base.len());
        let mut nbrs: Vec<Vertex> = base[..take].to_vec();
        nbrs.sort_unstable();
        edges.extend(nbrs.iter().map(|&u| (u, v)));
        let mut clique = nbrs.clone();
        clique.push(v);
        if take == cliques[ci].len() {
            cliques[ci] = clique;
        } else {
            cliques.push(clique);
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let relabeled: Vec<(Vertex, Vertex)> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &relabeled)
}

pub const LHF_FILTER_RETRIES: usize = 10_000;

/// First `G(n, p)` sample without a long hole.
pub fn lhf_filter(n: usize, p: f64, retries: usize, rng: &mut GenRng) -> Result<Graph> {
    for _ in 0..retries {
        let g = gnp(n, p, rng);
        if find_long_hole(&g).is_none() {
            return Ok(g);
        }
    }
    Err(Error::CapacityExceeded { what: "lhf-filter retries", cap: retries, partial: retries })
}

/// `G(n, p)` with every long hole `c_0 c_1 ...` chorded by `c_0 c_2` until
/// none remain.
pub fn lhf_chord(n: usize, p: f64, rng: &mut GenRng) -> Graph {
    let mut g = gnp(n, p, rng);
    while let Some(hole) = find_long_hole(&g) {
        g = g.with_added_edges(&[(hole[0], hole[2])]);
    }
    g
}

/// Integer weights uniform in `1..=max`.
pub fn random_weights(g: &Graph, max: u64, rng: &mut GenRng) -> Graph {
    let w = (0..g.n()).map(|_| Weight::from_int(rng.gen_range(1..=max.max(1)))).collect();
    g.reweighted(w)
}

/// Long-hole-free instance mixing the `chordal`, `lhf-filter` and
/// `lhf-chord` families, chosen by `seed`, with `n` vertices. Re-checked by
/// the recognizer before return.
pub fn certified_lhf(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let g = match seed % 3 {
        0 => {
            let m = r.gen_range(n.saturating_sub(1)..=(2 * n).max(1));
            chordal(n, m, &mut r)
        }
        1 => {
            let p = r.gen_range(0.15..0.6);
            lhf_filter(n, p, LHF_FILTER_RETRIES, &mut r).unwrap_or_else(|_| lhf_chord(n, p, &mut r))
        }
        _ => {
            let p = r.gen_range(0.1..0.5);
            lhf_chord(n, p, &mut r)
        }
    };
    assert!(find_long_hole(&g).is_none(), "generator produced a long hole");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_chordal;

    #[test]
    fn deterministic_by_seed() {
        assert_eq!(gnp(12, 0.4, &mut rng(3)), gnp(12, 0.4, &mut rng(3)));
        assert_eq!(chordal(12, 20, &mut rng(7)), chordal(12, 20, &mut rng(7)));
        assert_ne!(gnp(12, 0.4, &mut rng(3)), gnp(12, 0.4, &mut rng(4)));
    }

    #[test]
    fn chordal_family() {
        for seed in 0..30 {
            let g = chordal(12, 20, &mut rng(seed));
            assert!(is_chordal(&g).is_chordal());
            assert!(g.is_connected());
            assert!(g.m() >= 11);
        }
    }

    #[test]
    fn prism_four() {
        let g = prism(4);
        assert_eq!((g.n(), g.m()), (8, 16));
    }

    #[test]
    fn filtered_and_chorded_are_long_hole_free() {
        let g = lhf_filter(10, 0.4, LHF_FILTER_RETRIES, &mut rng(1)).unwrap();
        assert!(find_long_hole(&g).is_none());
        let g = lhf_chord(20, 0.2, &mut rng(2));
        assert!(find_long_hole(&g).is_none());
        assert!(matches!(lhf_filter(30, 0.1, 1, &mut rng(0)), Err(Error::CapacityExceeded { .. })));
    }
}
