use std::time::Instant;

use super::treedecomp::{build_tree_decomposition, solve_treewidth_dp};
use super::{solve_kprism_alg, SolverConfig};
use crate::engine::{brute_force_mwis, verify_solution, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{lift_set, Graph, Vertex, VertexSet};
use crate::recognition::find_k_prism;

/// Solves `g[keep]` with `f` and adds `extra` (a set of host vertices that is
/// independent of `keep`).
fn on_residual(
    g: &Graph,
    keep: &VertexSet,
    extra: &VertexSet,
    f: &mut dyn FnMut(&Graph) -> Result<SolveResult>,
) -> Result<SolveResult> {
    let (h, map) = g.induced_subgraph(keep);
    let sub = f(&h)?;
    let mut set = lift_set(g.n(), &map, &sub.set);
    set.union_with(extra);
    Ok(SolveResult { weight: sub.weight + g.set_weight(extra), set, stats: sub.stats })
}

/// Keeps the heavier candidate, on ties the lexicographically smaller set;
/// statistics accumulate over all.
fn take_better(best: &mut Option<SolveResult>, cand: SolveResult) {
    match best {
        Some(b) => {
            let mut stats = b.stats.clone();
            stats.absorb(&cand.stats);
            if cand.weight > b.weight || (cand.weight == b.weight && cand.set < b.set) {
                *b = cand;
            }
            b.stats = stats;
        }
        None => *best = Some(cand),
    }
}

/// Subsets of `V(P)` an independent set can meet: `∅`, one vertex, or a
/// nonadjacent pair `{a_i, b_j}` with `i ≠ j`.
fn prism_branches(p: &crate::recognition::PrismWitness) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    let mut singles = p.vertices();
    singles.sort_unstable();
    out.extend(singles.into_iter().map(|v| vec![v]));
    for (i, &a) in p.a.iter().enumerate() {
        for (j, &b) in p.b.iter().enumerate() {
            if i != j {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

fn subexp1_rec(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    let n = g.n();
    if n == 0 {
        return Ok(SolveResult::empty(0));
    }
    if n < config.subexp1_floor {
        return brute_force_mwis(g, config.subexp1_floor.max(n));
    }
    let k = ((n as f64).sqrt().floor() as usize).max(2);
    let Some(p) = find_k_prism(g, k) else {
        return solve_kprism_alg(g, config.caps);
    };
    let vp = g.set_of(p.vertices());
    let mut best: Option<SolveResult> = None;
    for branch in prism_branches(&p) {
        // a zero-weight vertex in the branch only shrinks the residual
        if branch.iter().any(|&v| g.weight(v).is_zero()) {
            continue;
        }
        let x = g.set_of(branch);
        let mut keep = g.vertex_set();
        keep.difference_with(&vp);
        keep.difference_with(&g.open_neighborhood(&x));
        let mut cand = on_residual(g, &keep, &x, &mut |h| subexp1_rec(h, config))?;
        cand.stats.branches += 1;
        take_better(&mut best, cand);
    }
    Ok(best.expect("the empty branch always exists"))
}

/// Branches on the vertices of an induced `⌊√n⌋`-prism whenever one exists,
/// otherwise runs the separator pipeline. Residuals smaller than
/// `config.subexp1_floor` are solved by brute force.
pub fn solve_subexp1(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let mut res = subexp1_rec(g, config)?;
    res.stats.elapsed = start.elapsed();
    verify_solution(g, &res)?;
    Ok(res)
}

/// `⌈√(n ln n)⌉`, at least 1.
pub fn subexp2_threshold(n: usize) -> usize {
    if n < 2 {
        return 1;
    }
    let x = n as f64;
    ((x * x.ln()).sqrt().ceil() as usize).max(1)
}

fn subexp2_leaf(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    let td = build_tree_decomposition(g);
    match solve_treewidth_dp(g, &td, config.bag_limit) {
        Err(Error::WidthTooLarge { size, limit }) => {
            if g.n() <= config.oracle_limit {
                brute_force_mwis(g, config.oracle_limit)
            } else {
                Err(Error::CapacityExceeded { what: "tree decomposition bag", cap: limit, partial: size })
            }
        }
        other => other,
    }
}

fn subexp2_rec(g: &Graph, tau: usize, config: &SolverConfig) -> Result<SolveResult> {
    let n = g.n();
    if n == 0 {
        return Ok(SolveResult::empty(0));
    }
    let v = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("n > 0");
    if g.degree(v) < tau {
        return subexp2_leaf(g, config);
    }
    let mut best = None;
    let mut without = g.vertex_set();
    without.remove(v);
    let mut out = on_residual(g, &without, &g.empty_set(), &mut |h| subexp2_rec(h, tau, config))?;
    out.stats.branches += 1;
    take_better(&mut best, out);
    if g.weight(v).is_zero() {
        return Ok(best.expect("one branch"));
    }
    let keep = g.vertex_set().difference(&g.closed_neighbors(v));
    let mut inc = on_residual(g, &keep, &g.set_of([v]), &mut |h| subexp2_rec(h, tau, config))?;
    inc.stats.branches += 1;
    take_better(&mut best, inc);
    Ok(best.expect("two branches"))
}

/// Branches on a maximum-degree vertex while its degree is at least
/// `τ = ⌈√(n ln n)⌉` (with `n` of the input), then solves each leaf by the
/// subset dynamic program on a tree decomposition.
pub fn solve_subexp2(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let tau = subexp2_threshold(g.n());
    let mut res = subexp2_rec(g, tau, config)?;
    res.stats.elapsed = start.elapsed();
    verify_solution(g, &res)?;
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Weight;

    fn no_floor() -> SolverConfig {
        SolverConfig { subexp1_floor: 0, ..SolverConfig::default() }
    }

    #[test]
    fn subexp1_examples() {
        assert_eq!(solve_subexp1(&prism(3), &no_floor()).unwrap().weight, Weight::from_int(2));
        let r = solve_subexp1(&cycle(4), &no_floor()).unwrap();
        assert_eq!(r.weight, Weight::from_int(2));
        assert!(r.stats.branches > 0);
        let g = prism(3).with_int_weights(&[3, 1, 1, 1, 1, 3]);
        assert_eq!(solve_subexp1(&g, &no_floor()).unwrap().weight, Weight::from_int(6));
    }

    #[test]
    fn prism_branch_count() {
        let p = find_k_prism(&prism(3), 3).unwrap();
        // ∅, 6 singles, 6 off-diagonal pairs
        assert_eq!(prism_branches(&p).len(), 13);
    }

    #[test]
    fn subexp2_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(subexp2_threshold(9), 5);
        let r = solve_subexp2(&star(8), &cfg).unwrap();
        assert_eq!(r.weight, Weight::from_int(8));
        assert_eq!(r.set.len(), 8);
        assert!(r.stats.branches >= 2);
        assert_eq!(solve_subexp2(&cycle(6), &cfg).unwrap().weight, Weight::from_int(3));
    }

    #[test]
    fn zero_weight_vertices_stay_out() {
        let g = star(3).with_int_weights(&[0, 1, 1, 1]);
        let r = solve_subexp2(&g, &SolverConfig::default()).unwrap();
        assert_eq!(r.vertices(), vec![1, 2, 3]);
        let g = edgeless(2).with_int_weights(&[0, 4]);
        assert_eq!(solve_subexp1(&g, &no_floor()).unwrap().vertices(), vec![1]);
    }
}
