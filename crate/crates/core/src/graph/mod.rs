//! Immutable weighted simple graphs over vertices `0..n` with bitset adjacency.

mod io;
mod vertex_set;
mod weight;

use std::collections::VecDeque;

use thiserror::Error;

pub use io::{emit_graph, emit_graph_with_comments, parse_graph, ParseError, ParseErrorKind};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};
pub use weight::{Weight, WeightParseError, WEIGHT_DECIMALS};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    weights: Vec<Weight>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .field("weights", &self.weights)
            .finish()
    }
}

impl Graph {
    /// Builds a graph with unit weights. Rejects self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_weights(n, edges, vec![Weight::ONE; n])
    }

    pub fn with_weights(
        n: usize,
        edges: &[(usize, usize)],
        weights: Vec<Weight>,
    ) -> Result<Self, GraphError> {
        if weights.len() != n {
            return Err(GraphError::WeightCount { expected: n, got: weights.len() });
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
        }
        Ok(Graph { adj, weights })
    }

    /// Same as [`Graph::new`] but tolerates duplicates; panics on invalid input.
    /// Intended for fixtures and generators.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge {u}-{v}");
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph { adj, weights: vec![Weight::ONE; n] }
    }

    pub fn with_int_weights(mut self, weights: &[u64]) -> Self {
        assert_eq!(weights.len(), self.n());
        self.weights = weights.iter().map(|&w| Weight::from_int(w)).collect();
        self
    }

    pub fn reweighted(&self, weights: Vec<Weight>) -> Self {
        assert_eq!(weights.len(), self.n());
        Graph { adj: self.adj.clone(), weights }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn weight(&self, v: Vertex) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn set_weight(&self, x: &VertexSet) -> Weight {
        x.iter().map(|v| self.weights[v]).sum()
    }

    pub fn total_weight(&self) -> Weight {
        self.weights.iter().copied().sum()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = Vertex>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter_with(self.n(), it)
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// `N(X)` when `closed` is false, `N[X]` otherwise.
    pub fn neighborhood(&self, x: &VertexSet, closed: bool) -> VertexSet {
        let mut out = self.empty_set();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        if closed {
            out.union_with(x);
        } else {
            out.difference_with(x);
        }
        out
    }

    pub fn open_neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.neighborhood(x, false)
    }

    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.neighborhood(x, true)
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// The vertex set of the component of `g[within]` containing `start`.
    pub fn component_of(&self, start: Vertex, within: &VertexSet) -> VertexSet {
        let mut seen = self.empty_set();
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut frontier = seen.clone();
        loop {
            let mut next = self.empty_set();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    /// Connected components of `g[x]`, ordered by minimum element.
    pub fn components(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut rest = x.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, &rest);
            rest.difference_with(&c);
            out.push(c);
        }
        out
    }

    /// Components of `g - x`.
    pub fn components_without(&self, x: &VertexSet) -> Vec<VertexSet> {
        self.components(&x.complement())
    }

    pub fn is_connected(&self) -> bool {
        self.components(&self.vertex_set()).len() <= 1
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| !self.adj[v].intersects(x))
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| {
            let mut rest = x.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Shortest path from `s` to `t` in `g[within]`, inclusive of both ends.
    pub fn shortest_path(&self, s: Vertex, t: Vertex, within: &VertexSet) -> Option<Vec<Vertex>> {
        if !within.contains(s) || !within.contains(t) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for u in self.adj[v].intersection(within).iter() {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        None
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { adj, weights: self.weights.clone() }
    }

    /// `g[x]` relabelled to `0..|x|` in ascending order, with the map back to
    /// the original labels.
    pub fn induced_subgraph(&self, x: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map = x.to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let k = map.len();
        let adj = map
            .iter()
            .map(|&v| VertexSet::from_iter_with(k, self.adj[v].intersection(x).iter().map(|u| local[u])))
            .collect();
        let weights = map.iter().map(|&v| self.weights[v]).collect();
        (Graph { adj, weights }, map)
    }

    /// Returns a copy with the edges `extra` added (ignored if present).
    pub fn with_added_edges(&self, extra: &[(Vertex, Vertex)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in extra {
            assert!(u != v);
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        Graph::with_weights(off + other.n(), &edges, weights).expect("disjoint union is simple")
    }
}

/// Maps a set of local vertices of an induced subgraph back to the host graph.
pub fn lift_set(host_n: usize, map: &[Vertex], local: &VertexSet) -> VertexSet {
    VertexSet::from_iter_with(host_n, local.iter().map(|v| map[v]))
}

/// Standard small fixtures used throughout tests and examples.
pub mod fixtures {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e)
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e)
    }

    pub fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &e)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..a {
            for v in 0..b {
                e.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &e)
    }

    /// The k-prism: `a_i = i`, `b_i = k + i`; both sides cliques, `a_i b_i` matched.
    pub fn prism(k: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                e.push((i, j));
                e.push((k + i, k + j));
            }
            e.push((i, k + i));
        }
        Graph::from_edges(2 * k, &e)
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::from_edges(n, &[])
    }
}
