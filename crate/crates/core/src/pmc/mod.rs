//! Potential maximal cliques: the two-condition test, complete enumeration,
//! the component family that feeds the dynamic program, and the witnesses
//! showing that on long-hole-free graphs every PMC is dominated by three vertices.

mod domination;

use std::collections::HashSet;

use serde::Serialize;

pub use domination::{
    dominate_pmc, find_covering_component, find_xab_cover, DominationMethod, DominationResult, LemmaTrace,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::{enumerate_minimal_separators, Separator};

/// A certified potential maximal clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pmc {
    pub set: VertexSet,
    /// `cc(G - set)`, ordered by minimum element.
    pub components: Vec<VertexSet>,
    /// For every nonedge `x < y` inside `set`, a component index covering it.
    pub covers: Vec<((Vertex, Vertex), usize)>,
}

/// Which condition of the PMC characterization fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PmcViolation {
    Empty,
    /// Some component `D` of `G - Ω` has `N(D) = Ω`.
    FullComponent { component: Vec<Vertex> },
    /// The nonedge `xy` inside `Ω` is not covered by any component.
    UncoveredNonEdge { x: Vertex, y: Vertex },
}

/// Checks both conditions of the characterization and returns the cover
/// certificate, or the first violated condition.
pub fn is_pmc(g: &Graph, set: &VertexSet) -> Result<Pmc, PmcViolation> {
    if set.is_empty() {
        return Err(PmcViolation::Empty);
    }
    let components = g.components_without(set);
    let nbhds: Vec<VertexSet> = components.iter().map(|c| g.open_neighborhood(c)).collect();
    for (c, nb) in components.iter().zip(&nbhds) {
        if nb == set {
            return Err(PmcViolation::FullComponent { component: c.to_vec() });
        }
    }
    let mut covers = Vec::new();
    let members = set.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            match nbhds.iter().position(|nb| nb.contains(x) && nb.contains(y)) {
                Some(idx) => covers.push(((x, y), idx)),
                None => return Err(PmcViolation::UncoveredNonEdge { x, y }),
            }
        }
    }
    Ok(Pmc { set: set.clone(), components, covers })
}

/// Boolean form of [`is_pmc`] without building the certificate.
pub fn is_pmc_set(g: &Graph, set: &VertexSet) -> bool {
    if set.is_empty() {
        return false;
    }
    let nbhds: Vec<VertexSet> = g
        .components_without(set)
        .iter()
        .map(|c| g.open_neighborhood(c))
        .collect();
    if nbhds.iter().any(|nb| nb == set) {
        return false;
    }
    set.iter().all(|x| {
        let mut seen = g.closed_neighbors(x);
        for nb in nbhds.iter().filter(|nb| nb.contains(x)) {
            seen.union_with(nb);
        }
        set.is_subset(&seen)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmcMode {
    /// Vertex-by-vertex extension through prefix graphs.
    Incremental,
    /// The PMC test applied to every nonempty subset (test oracle).
    BruteForce,
}

/// Default vertex limit for the brute-force PMC oracle.
pub const PMC_ORACLE_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PmcConfig {
    pub mode: PmcMode,
    /// Maximum number of PMCs kept per prefix graph; 0 = unlimited.
    pub cap: usize,
    /// Cap passed to separator enumeration of prefix graphs; 0 = unlimited.
    pub separator_cap: usize,
    pub oracle_limit: usize,
}

impl Default for PmcConfig {
    fn default() -> Self {
        PmcConfig { mode: PmcMode::Incremental, cap: 0, separator_cap: 0, oracle_limit: PMC_ORACLE_LIMIT }
    }
}

/// All potential maximal cliques of `g`, canonically sorted.
///
/// `minseps` must be the complete minimal separator family of `g`
/// (checked for closure in incremental mode).
pub fn enumerate_pmcs(g: &Graph, minseps: &[Separator], config: PmcConfig) -> Result<Vec<Pmc>> {
    let sets = match config.mode {
        PmcMode::BruteForce => brute_force_pmc_sets(g, config.oracle_limit)?,
        PmcMode::Incremental => {
            check_separator_family(g, minseps)?;
            incremental_pmc_sets(g, minseps, &config)?
        }
    };
    Ok(sets
        .into_iter()
        .map(|s| is_pmc(g, &s).expect("enumerated set passes the PMC test"))
        .collect())
}

fn brute_force_pmc_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limit || n >= 64 {
        return Err(Error::OracleLimit { n, limit });
    }
    let mut out: Vec<VertexSet> = (1u64..(1u64 << n))
        .map(|mask| VertexSet::from_iter_with(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
        .filter(|s| is_pmc_set(g, s))
        .collect();
    out.sort();
    Ok(out)
}

/// Rejects separator lists that are not the complete minimal separator family:
/// each member must be minimal and the family must be closed under the
/// neighbourhood-expansion step that generates all minimal separators.
fn check_separator_family(g: &Graph, minseps: &[Separator]) -> Result<()> {
    let family: HashSet<&VertexSet> = minseps.iter().map(|s| &s.set).collect();
    let incomplete = |why: String| Err(Error::Precondition(format!("incomplete separator input: {why}")));
    for s in minseps {
        if !s.is_minimal() {
            return incomplete(format!("{:?} is not a minimal separator", s.set));
        }
    }
    let closed = |x: &VertexSet| -> Option<VertexSet> {
        g.components_without(x)
            .iter()
            .map(|c| g.open_neighborhood(c))
            .find(|nb| !family.contains(nb))
    };
    for v in 0..g.n() {
        if let Some(missing) = closed(&g.closed_neighbors(v)) {
            return incomplete(format!("{missing:?} missing"));
        }
    }
    for s in minseps {
        for x in s.set.iter() {
            if let Some(missing) = closed(&g.closed_neighbors(x).union(&s.set)) {
                return incomplete(format!("{missing:?} missing"));
            }
        }
    }
    Ok(())
}

/// Breadth-first order from the smallest vertex of a connected graph: every
/// prefix induces a connected subgraph.
fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = g.empty_set();
    if g.n() == 0 {
        return order;
    }
    seen.insert(0);
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for u in g.neighbors(v).iter() {
            if seen.insert(u) {
                order.push(u);
            }
        }
    }
    order
}

fn relabel(g: &Graph, order: &[Vertex]) -> Graph {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (pos[u], pos[v])).collect();
    let weights = order.iter().map(|&v| g.weight(v)).collect();
    Graph::with_weights(g.n(), &edges, weights).expect("relabelling preserves simplicity")
}

fn incremental_pmc_sets(g: &Graph, minseps: &[Separator], config: &PmcConfig) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let mut out = Vec::new();
    let comps = g.components(&g.vertex_set());
    let single = comps.len() == 1;
    for comp in comps {
        let (h, map) = g.induced_subgraph(&comp);
        let order = bfs_order(&h);
        let hr = relabel(&h, &order);
        // final separators of this component: reuse the caller's family when
        // the graph is connected
        let last = if single {
            let back: Vec<usize> = {
                let mut inv = vec![0; n];
                for (i, &v) in order.iter().enumerate() {
                    inv[map[v]] = i;
                }
                inv
            };
            Some(
                minseps
                    .iter()
                    .map(|s| VertexSet::from_iter_with(n, s.set.iter().map(|v| back[v])))
                    .collect::<Vec<_>>(),
            )
        } else {
            None
        };
        for p in connected_pmcs(&hr, last, config)? {
            out.push(VertexSet::from_iter_with(n, p.iter().map(|v| map[order[v]])));
        }
    }
    out.sort();
    Ok(out)
}

/// PMCs of a connected graph whose every prefix `0..i` is connected.
fn connected_pmcs(h: &Graph, last_seps: Option<Vec<VertexSet>>, config: &PmcConfig) -> Result<Vec<VertexSet>> {
    let k = h.n();
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut pmcs: Vec<VertexSet> = vec![VertexSet::singleton(1, 0)];
    let mut prev_seps: Vec<VertexSet> = Vec::new();
    for i in 2..=k {
        let prefix = VertexSet::full(i).resized(k);
        let (gi, _) = h.induced_subgraph(&prefix);
        let a = i - 1;
        let seps: Vec<VertexSet> = match (&last_seps, i == k) {
            (Some(s), true) => s.clone(),
            _ => enumerate_minimal_separators(&gi, config.separator_cap)?
                .into_iter()
                .map(|s| s.set)
                .collect(),
        };
        let lifted_prev: Vec<VertexSet> = prev_seps.iter().map(|s| s.resized(i)).collect();

        let mut seen: HashSet<VertexSet> = HashSet::new();
        let mut next: Vec<VertexSet> = Vec::new();
        let consider = |cand: VertexSet, seen: &mut HashSet<VertexSet>, next: &mut Vec<VertexSet>| -> Result<()> {
            if seen.insert(cand.clone()) && is_pmc_set(&gi, &cand) {
                next.push(cand);
                if config.cap > 0 && next.len() > config.cap {
                    return Err(Error::CapacityExceeded { what: "PMC", cap: config.cap, partial: next.len() });
                }
            }
            Ok(())
        };
        for p in &pmcs {
            let p = p.resized(i);
            consider(p.clone(), &mut seen, &mut next)?;
            let mut with = p;
            with.insert(a);
            consider(with, &mut seen, &mut next)?;
        }
        for s in &seps {
            if !s.contains(a) {
                let mut with = s.clone();
                with.insert(a);
                consider(with, &mut seen, &mut next)?;
            }
            let comps = gi.components_without(s);
            for t in lifted_prev.iter().chain(seps.iter()) {
                for c in &comps {
                    let tc = t.intersection(c);
                    if tc.is_empty() {
                        continue;
                    }
                    consider(s.union(&tc), &mut seen, &mut next)?;
                }
            }
        }
        next.sort();
        pmcs = next;
        prev_seps = seps;
    }
    Ok(pmcs)
}

/// Union over all minimal separators `S` of `cc(G - S)`, deduplicated and
/// canonically sorted. Contains `cc(G - Ω)` for every PMC `Ω`.
pub fn block_family(minseps: &[Separator]) -> Vec<VertexSet> {
    let mut fam: Vec<VertexSet> = minseps
        .iter()
        .flat_map(|s| s.components.iter().cloned())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    fam.sort();
    fam
}
