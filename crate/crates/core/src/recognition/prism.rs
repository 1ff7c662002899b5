use serde::Serialize;

use crate::graph::{Graph, Vertex};

/// An induced k-prism: `a` and `b` are k-cliques, `a[i] b[i]` are the only
/// edges between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrismWitness {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
}

impl PrismWitness {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<_> = self.a.iter().chain(&self.b).copied().collect();
        v.sort_unstable();
        v
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let k = self.a.len();
        if self.b.len() != k || k == 0 {
            return false;
        }
        let all = g.set_of(self.a.iter().chain(&self.b).copied());
        if all.len() != 2 * k {
            return false;
        }
        (0..k).all(|i| {
            (0..k).all(|j| {
                let cross = g.has_edge(self.a[i], self.b[j]);
                if i == j {
                    cross
                } else {
                    !cross && g.has_edge(self.a[i], self.a[j]) && g.has_edge(self.b[i], self.b[j])
                }
            })
        })
    }
}

fn compatible(g: &Graph, (a, b): (Vertex, Vertex), (c, d): (Vertex, Vertex)) -> bool {
    a != c && a != d && b != c && b != d && g.has_edge(a, c) && g.has_edge(b, d) && !g.has_edge(a, d) && !g.has_edge(b, c)
}

fn extend(
    g: &Graph,
    cands: &[(Vertex, Vertex)],
    pool: &[usize],
    chosen: &mut Vec<usize>,
    k: usize,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    let need = k - chosen.len();
    for (pos, &c) in pool.iter().enumerate() {
        if pool.len() - pos < need {
            return false;
        }
        let next: Vec<usize> = pool[pos + 1..]
            .iter()
            .copied()
            .filter(|&d| compatible(g, cands[c], cands[d]))
            .collect();
        if next.len() + 1 < need {
            continue;
        }
        chosen.push(c);
        if extend(g, cands, &next, chosen, k) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Exact search for an induced k-prism by backtracking over matched pairs.
pub fn find_k_prism(g: &Graph, k: usize) -> Option<PrismWitness> {
    assert!(k >= 1, "k must be positive");
    if 2 * k > g.n() {
        return None;
    }
    let mut cands: Vec<(Vertex, Vertex)> = Vec::new();
    for (u, v) in g.edges() {
        cands.push((u, v));
        cands.push((v, u));
    }
    cands.sort_by_key(|&(a, b)| (std::cmp::Reverse(g.degree(a) + g.degree(b)), a, b));
    let pool: Vec<usize> = (0..cands.len()).collect();
    let mut chosen = Vec::with_capacity(k);
    if !extend(g, &cands, &pool, &mut chosen, k) {
        return None;
    }
    let w = PrismWitness {
        a: chosen.iter().map(|&c| cands[c].0).collect(),
        b: chosen.iter().map(|&c| cands[c].1).collect(),
    };
    debug_assert!(w.is_valid(g));
    Some(w)
}

/// Largest k (up to `max_k`) such that `g` contains an induced k-prism; 0 for edgeless graphs.
pub fn largest_prism(g: &Graph, max_k: usize) -> usize {
    let mut best = 0;
    for k in 1..=max_k {
        if find_k_prism(g, k).is_none() {
            break;
        }
        best = k;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn finds_the_prism_itself() {
        let p = prism(3);
        let w = find_k_prism(&p, 3).unwrap();
        assert!(w.is_valid(&p));
        assert_eq!(w.vertices(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(find_k_prism(&p, 4), None);
    }

    #[test]
    fn no_c4_in_c6_or_k4() {
        assert_eq!(find_k_prism(&cycle(6), 2), None);
        assert_eq!(find_k_prism(&complete(4), 2), None);
        assert!(find_k_prism(&cycle(4), 2).is_some());
    }

    #[test]
    fn largest_prism_sizes() {
        assert_eq!(largest_prism(&edgeless(3), 5), 0);
        assert_eq!(largest_prism(&path(3), 5), 1);
        assert_eq!(largest_prism(&prism(4), 6), 4);
    }
}
