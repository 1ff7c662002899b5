use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Outcome of a chordality test, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Perfect elimination order: each vertex's later neighbours form a clique.
    Chordal { peo: Vec<Vertex> },
    /// An induced cycle of length ≥ 4.
    NotChordal { hole: Vec<Vertex> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Fill edges `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FillIn(pub Vec<(Vertex, Vertex)>);

impl FillIn {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, g: &Graph) -> Graph {
        g.with_added_edges(&self.0)
    }
}

/// Maximum cardinality search; returns the reverse visiting order, which is a
/// perfect elimination order exactly when the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut count = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (count[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for u in g.neighbors(v).iter() {
            count[u] += 1;
        }
    }
    visit.reverse();
    visit
}

fn is_perfect_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    let mut later = g.vertex_set();
    for &v in order {
        later.remove(v);
        let nb = g.neighbors(v).intersection(&later);
        if !g.is_clique(&nb) {
            return false;
        }
    }
    true
}

/// Some hole (induced cycle of length ≥ 4), if any exists.
fn find_hole(g: &Graph) -> Option<Vec<Vertex>> {
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut dom = g.closed_neighbors(v).complement();
                dom.insert(x);
                dom.insert(y);
                if let Some(path) = g.shortest_path(x, y, &dom) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let peo = mcs_order(g);
    if is_perfect_elimination_order(g, &peo) {
        Chordality::Chordal { peo }
    } else {
        let hole = find_hole(g).expect("non-chordal graph has a hole");
        debug_assert!(super::is_induced_cycle(g, &hole) && hole.len() >= 4);
        Chordality::NotChordal { hole }
    }
}

fn is_chordal_fast(g: &Graph) -> bool {
    is_perfect_elimination_order(g, &mcs_order(g))
}

/// MCS-M labelling search: repeatedly numbers an unnumbered vertex of maximum
/// label (smallest index on ties) and raises the label of every unnumbered `u`
/// reachable through unnumbered vertices of label strictly below `u`'s,
/// filling the edge to `u`.
fn mcs_m_fill(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut unnumbered = g.vertex_set();
    let mut fill = Vec::new();
    for _ in 0..n {
        let v = unnumbered
            .iter()
            .max_by_key(|&v| (label[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        unnumbered.remove(v);
        let mut thresholds: Vec<usize> = unnumbered.iter().map(|u| label[u]).collect();
        thresholds.sort_unstable();
        thresholds.dedup();
        let mut raise = Vec::new();
        for t in thresholds {
            // intermediates: unnumbered with label < t
            let inner = VertexSet::from_iter_with(n, unnumbered.iter().filter(|&u| label[u] < t));
            let mut within = inner.clone();
            within.insert(v);
            let reach = g.component_of(v, &within);
            let touched = g.neighborhood(&reach, false);
            for u in unnumbered.iter().filter(|&u| label[u] == t) {
                if touched.contains(u) {
                    raise.push(u);
                }
            }
        }
        for u in raise {
            label[u] += 1;
            if !g.has_edge(u, v) {
                fill.push((u.min(v), u.max(v)));
            }
        }
    }
    fill.sort_unstable();
    fill
}

/// Inclusion-minimal fill-in: MCS-M followed by a repair pass that drops any
/// single fill edge whose removal keeps the completion chordal, to a fixpoint.
pub fn minimal_triangulation(g: &Graph) -> FillIn {
    let mut fill = mcs_m_fill(g);
    loop {
        let mut removed = false;
        let mut i = 0;
        while i < fill.len() {
            let mut trial = fill.clone();
            trial.remove(i);
            if is_chordal_fast(&g.with_added_edges(&trial)) {
                fill = trial;
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            break;
        }
    }
    FillIn(fill)
}

/// Maximal cliques of a chordal graph, canonically sorted.
pub fn maximal_cliques_of_chordal(h: &Graph) -> Result<Vec<VertexSet>> {
    let peo = match is_chordal(h) {
        Chordality::Chordal { peo } => peo,
        Chordality::NotChordal { hole } => return Err(Error::NotChordal(hole)),
    };
    let mut later = h.vertex_set();
    let mut cands = Vec::with_capacity(h.n());
    for &v in &peo {
        let mut c = h.neighbors(v).intersection(&later);
        c.insert(v);
        later.remove(v);
        cands.push(c);
    }
    cands.sort();
    cands.dedup();
    let maximal: Vec<VertexSet> = cands
        .iter()
        .filter(|c| !cands.iter().any(|d| d != *c && c.is_subset(d)))
        .cloned()
        .collect();
    Ok(maximal)
}

/// Tree decomposition of a chordal graph whose bags are its maximal cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    /// For every vertex the bags containing it induce a connected subtree.
    pub fn has_running_intersection(&self, n: usize) -> bool {
        crate::solvers::running_intersection_holds(n, &self.bags, &self.edges)
    }
}

/// Clique tree of `g + f`: maximum-weight spanning forest of the clique
/// intersection graph (Kruskal, ties by node indices).
pub fn clique_tree(g: &Graph, f: &FillIn) -> Result<CliqueTree> {
    let h = f.apply(g);
    let bags = maximal_cliques_of_chordal(&h)?;
    let k = bags.len();
    let mut cand = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = bags[i].intersection_len(&bags[j]);
            if w > 0 {
                cand.push((std::cmp::Reverse(w), i, j));
            }
        }
    }
    cand.sort_unstable();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let nx = p[c];
            p[c] = r;
            c = nx;
        }
        r
    }
    let mut edges = Vec::new();
    for (_, i, j) in cand {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    Ok(CliqueTree { bags, edges })
}
