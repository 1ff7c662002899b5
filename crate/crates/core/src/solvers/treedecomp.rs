use std::collections::HashMap;
use std::time::Instant;

use super::balanced::balanced_separator;
use crate::engine::{verify_solution, SolveResult, SolveStats};
use crate::error::{Error, Result};
use crate::graph::{lift_set, Graph, Vertex, VertexSet, Weight};
use crate::recognition::{clique_tree, minimal_triangulation};

/// Bags over a forest; `width = max |bag| - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Vertex coverage, edge coverage, running intersection, and acyclicity.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        let k = self.bags.len();
        if self.bags.iter().any(|b| b.capacity() != n) {
            return false;
        }
        if self.edges.iter().any(|&(a, b)| a >= k || b >= k || a == b) {
            return false;
        }
        if !is_forest(k, &self.edges) {
            return false;
        }
        let mut covered = g.empty_set();
        for b in &self.bags {
            covered.union_with(b);
        }
        if covered.len() != n {
            return false;
        }
        let edges_ok = g
            .edges()
            .iter()
            .all(|&(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v)));
        edges_ok && running_intersection_holds(n, &self.bags, &self.edges)
    }
}

fn is_forest(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// For every vertex, the nodes whose bags contain it induce a connected
/// subgraph of the (forest) tree.
pub fn running_intersection_holds(n: usize, bags: &[VertexSet], edges: &[(usize, usize)]) -> bool {
    (0..n).all(|v| {
        let nodes: Vec<usize> = (0..bags.len()).filter(|&i| bags[i].contains(v)).collect();
        if nodes.len() <= 1 {
            return true;
        }
        let inside: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| bags[a].contains(v) && bags[b].contains(v))
            .collect();
        // a forest on `nodes` is connected iff it has |nodes| - 1 edges
        inside.len() + 1 == nodes.len()
    })
}

/// Recursive balanced-separator decomposition with unit weights on every part.
/// Each node's bag is the part's separator plus the interface inherited from
/// the ancestors that touches the part.
fn recursive_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    let mut td = TreeDecomposition { bags: Vec::new(), edges: Vec::new() };
    // (part, interface, parent node)
    let mut work: Vec<(VertexSet, VertexSet, Option<usize>)> = g
        .components(&g.vertex_set())
        .into_iter()
        .map(|c| (c, g.empty_set(), None))
        .collect();
    while let Some((part, iface, parent)) = work.pop() {
        let (h, map) = g.induced_subgraph(&part);
        let unit = h.reweighted(vec![Weight::ONE; h.n()]);
        let sep_local = if h.n() <= 2 {
            h.vertex_set()
        } else {
            match balanced_separator(&unit) {
                Ok(r) => r.separator,
                Err(_) => h.vertex_set(),
            }
        };
        let sep = lift_set(n, &map, &sep_local);
        let bag = sep.union(&iface);
        let id = td.bags.len();
        td.bags.push(bag.clone());
        if let Some(p) = parent {
            td.edges.push((p, id));
        }
        let rest = part.difference(&sep);
        for c in g.components(&rest) {
            let child_iface = bag.intersection(&g.open_neighborhood(&c));
            work.push((c, child_iface, Some(id)));
        }
    }
    td
}

fn clique_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let f = minimal_triangulation(g);
    let t = clique_tree(g, &f).expect("minimal triangulation is chordal");
    TreeDecomposition { bags: t.bags, edges: t.edges }
}

/// Builds the recursive balanced-separator decomposition and the clique tree
/// of a minimal triangulation, returning the narrower one (the recursive one
/// on ties). Both are checked against the decomposition axioms.
pub fn build_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let rec = recursive_decomposition(g);
    assert!(rec.is_valid_for(g), "recursive decomposition is invalid");
    let ct = clique_tree_decomposition(g);
    assert!(ct.is_valid_for(g), "clique tree decomposition is invalid");
    if ct.width() < rec.width() {
        ct
    } else {
        rec
    }
}

/// Only [`build_tree_decomposition`]'s recursive construction.
pub fn build_separator_decomposition(g: &Graph) -> TreeDecomposition {
    let td = recursive_decomposition(g);
    assert!(td.is_valid_for(g), "recursive decomposition is invalid");
    td
}

/// Default bag-size limit for the subset dynamic program.
pub const TREEWIDTH_BAG_LIMIT: usize = 25;

struct NodeTable {
    bag: Vec<Vertex>,
    /// Independent subsets of the bag (bitmask over `bag` positions) → best
    /// value and the lexicographically smallest subtree witness attaining it.
    best: HashMap<u32, (Weight, VertexSet)>,
}

fn better(cand: &(Weight, VertexSet), cur: &(Weight, VertexSet)) -> bool {
    cand.0 > cur.0 || (cand.0 == cur.0 && cand.1 < cur.1)
}

fn independent_subsets(g: &Graph, bag: &[Vertex]) -> Vec<u32> {
    let k = bag.len();
    let mut conflict = vec![0u32; k];
    for i in 0..k {
        for j in 0..k {
            if i != j && g.has_edge(bag[i], bag[j]) {
                conflict[i] |= 1 << j;
            }
        }
    }
    let usable: Vec<usize> = (0..k).filter(|&i| !g.weight(bag[i]).is_zero()).collect();
    let mut out = Vec::new();
    fn rec(pos: usize, usable: &[usize], conflict: &[u32], cur: u32, out: &mut Vec<u32>) {
        if pos == usable.len() {
            out.push(cur);
            return;
        }
        let i = usable[pos];
        rec(pos + 1, usable, conflict, cur, out);
        if conflict[i] & cur == 0 {
            rec(pos + 1, usable, conflict, cur | 1 << i, out);
        }
    }
    rec(0, &usable, &conflict, 0, &mut out);
    out.sort_unstable();
    out
}

fn mask_weight(g: &Graph, bag: &[Vertex], mask: u32) -> Weight {
    (0..bag.len()).filter(|&i| mask >> i & 1 == 1).map(|i| g.weight(bag[i])).sum()
}

/// Project `mask` over `from` onto the positions of `to` (common vertices only).
fn project(from: &[Vertex], to: &[Vertex], mask: u32) -> u32 {
    let mut out = 0;
    for (i, &v) in from.iter().enumerate() {
        if mask >> i & 1 == 1 {
            if let Ok(j) = to.binary_search(&v) {
                out |= 1 << j;
            }
        }
    }
    out
}

/// Shared-part mask to the best value and witness over it.
type Projection = HashMap<u32, (Weight, VertexSet)>;

/// Subset dynamic program over a rooted decomposition. Each node keeps, per
/// independent subset `X` of its bag, the best weight in its subtree meeting
/// the bag exactly in `X`; children are joined on their shared vertices. Ties
/// go to the lexicographically smaller witness.
pub fn solve_treewidth_dp(g: &Graph, td: &TreeDecomposition, bag_limit: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    if !td.is_valid_for(g) {
        return Err(Error::Precondition("tree decomposition is not valid for the graph".into()));
    }
    if let Some(b) = td.bags.iter().find(|b| b.len() > bag_limit.min(31)) {
        return Err(Error::WidthTooLarge { size: b.len(), limit: bag_limit.min(31) });
    }
    let k = td.bags.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // roots: smallest node of each tree; post-order by explicit stack
    let mut parent = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    let mut roots = Vec::new();
    let mut seen = vec![false; k];
    for r in 0..k {
        if seen[r] {
            continue;
        }
        roots.push(r);
        seen[r] = true;
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &c in &adj[v] {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = v;
                    stack.push(c);
                }
            }
        }
    }
    let mut tables: Vec<Option<NodeTable>> = (0..k).map(|_| None).collect();
    let mut entries = 0usize;
    for &v in order.iter().rev() {
        let bag = td.bags[v].to_vec();
        let children: Vec<usize> = adj[v].iter().copied().filter(|&c| parent[c] == v).collect();
        // per child and shared projection: best value net of the shared part
        let mut child_best: Vec<(u32, Projection)> = Vec::new();
        for &c in &children {
            let ct = tables[c].take().expect("children done first");
            let mut m: Projection = HashMap::new();
            for (state, (val, wit)) in ct.best {
                let shared = project(&ct.bag, &bag, state);
                let shared_in_child = project(&bag, &ct.bag, shared);
                let cand = (val - mask_weight(g, &ct.bag, shared_in_child), wit);
                match m.get(&shared) {
                    Some(cur) if !better(&cand, cur) => {}
                    _ => {
                        m.insert(shared, cand);
                    }
                }
            }
            // child states must agree with the parent state on shared vertices
            let shared_mask = project(&ct.bag, &bag, (1u32 << ct.bag.len()) - 1);
            child_best.push((shared_mask, m));
        }
        let mut best = HashMap::new();
        'states: for x in independent_subsets(g, &bag) {
            let mut total = mask_weight(g, &bag, x);
            let mut wit = g.set_of((0..bag.len()).filter(|&i| x >> i & 1 == 1).map(|i| bag[i]));
            for (shared_mask, m) in &child_best {
                match m.get(&(x & shared_mask)) {
                    Some((contrib, cw)) => {
                        total += *contrib;
                        wit.union_with(cw);
                    }
                    None => continue 'states,
                }
            }
            best.insert(x, (total, wit));
        }
        entries += best.len();
        tables[v] = Some(NodeTable { bag, best });
    }

    let mut set = VertexSet::new(n);
    let mut weight = Weight::ZERO;
    for &r in &roots {
        let t = tables[r].take().expect("root table");
        let top = t
            .best
            .into_values()
            .reduce(|a, b| if better(&b, &a) { b } else { a })
            .ok_or_else(|| Error::Internal("empty root table".into()))?;
        weight += top.0;
        set.union_with(&top.1);
    }
    let res = SolveResult {
        weight,
        set,
        stats: SolveStats { table_entries: entries, elapsed: start.elapsed(), ..SolveStats::default() },
    };
    verify_solution(g, &res)?;
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn path_decomposition_width() {
        let td = build_tree_decomposition(&path(8));
        assert!(td.is_valid_for(&path(8)));
        assert!(td.width() <= 2);
    }

    #[test]
    fn cycle_decomposition_width() {
        let g = cycle(6);
        let td = build_tree_decomposition(&g);
        assert!(td.is_valid_for(&g));
        assert!(td.width() <= 8);
        let rec = build_separator_decomposition(&g);
        assert!(rec.is_valid_for(&g));
        assert!(rec.width() <= 8);
    }

    #[test]
    fn clique_single_bag() {
        let g = complete(5);
        let td = build_tree_decomposition(&g);
        assert_eq!(td.bags, vec![g.vertex_set()]);
        assert_eq!(td.width(), 4);
    }

    #[test]
    fn validity_checker_rejects_bad_decompositions() {
        let g = path(3);
        let bad = TreeDecomposition { bags: vec![g.set_of([0, 1]), g.set_of([2])], edges: vec![(0, 1)] };
        assert!(!bad.is_valid_for(&g));
        let split = TreeDecomposition {
            bags: vec![g.set_of([0, 1]), g.set_of([2]), g.set_of([1, 2])],
            edges: vec![(0, 1), (1, 2)],
        };
        assert!(!split.is_valid_for(&g));
        let good = TreeDecomposition { bags: vec![g.set_of([0, 1]), g.set_of([1, 2])], edges: vec![(0, 1)] };
        assert!(good.is_valid_for(&g));
    }

    #[test]
    fn dp_examples() {
        let g = path(4).with_int_weights(&[1, 5, 5, 1]);
        let td = TreeDecomposition {
            bags: vec![g.set_of([0, 1]), g.set_of([1, 2]), g.set_of([2, 3])],
            edges: vec![(0, 1), (1, 2)],
        };
        assert_eq!(solve_treewidth_dp(&g, &td, 25).unwrap().weight, Weight::from_int(6));

        let c4 = cycle(4);
        let td = TreeDecomposition {
            bags: vec![c4.set_of([0, 1, 2]), c4.set_of([0, 2, 3])],
            edges: vec![(0, 1)],
        };
        assert_eq!(solve_treewidth_dp(&c4, &td, 25).unwrap().weight, Weight::from_int(2));

        let k4 = complete(4).with_int_weights(&[1, 2, 3, 4]);
        let td = TreeDecomposition { bags: vec![k4.vertex_set()], edges: vec![] };
        let r = solve_treewidth_dp(&k4, &td, 25).unwrap();
        assert_eq!(r.weight, Weight::from_int(4));
        assert_eq!(r.vertices(), vec![3]);
        assert!(matches!(solve_treewidth_dp(&k4, &td, 3), Err(Error::WidthTooLarge { size: 4, limit: 3 })));
    }
}
