//! Minimal separators: full components, the minimality test, exhaustive
//! enumeration, and the bounded witness `Z` that covers a special separator.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A vertex set together with the components of `G - set` and which of them
/// are full (`N(C) = set`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub set: VertexSet,
    pub components: Vec<VertexSet>,
    /// Indices into `components`.
    pub full: Vec<usize>,
}

impl Separator {
    /// At least two full components.
    pub fn is_minimal(&self) -> bool {
        self.full.len() >= 2
    }

    /// `max(0, #full - 1)`; positive exactly for minimal separators.
    pub fn zeta(&self) -> usize {
        self.full.len().saturating_sub(1)
    }

    pub fn full_components(&self) -> impl Iterator<Item = &VertexSet> {
        self.full.iter().map(|&i| &self.components[i])
    }

    pub fn is_full(&self, idx: usize) -> bool {
        self.full.contains(&idx)
    }

    /// Index of the component containing `v`.
    pub fn component_index_of(&self, v: Vertex) -> Option<usize> {
        self.components.iter().position(|c| c.contains(v))
    }
}

pub fn analyze_separator(g: &Graph, s: &VertexSet) -> Separator {
    let components = g.components_without(s);
    let full = components
        .iter()
        .enumerate()
        .filter(|(_, c)| &g.open_neighborhood(c) == s)
        .map(|(i, _)| i)
        .collect();
    Separator { set: s.clone(), components, full }
}

/// `N(C)` for every component `C` of `g - x`.
fn close_neighborhoods<'a>(g: &'a Graph, x: &VertexSet) -> impl Iterator<Item = VertexSet> + 'a {
    g.components_without(x)
        .into_iter()
        .map(move |c| g.open_neighborhood(&c))
}

/// All minimal separators, canonically sorted.
///
/// Seeds with `N(C)` for `C ∈ cc(g - N[v])`, then closes the family under
/// `S ↦ N(C)` for `C ∈ cc(g - (S ∪ N[x]))`, `x ∈ S`. A `cap` of 0 means
/// unlimited; otherwise exceeding it yields [`Error::CapacityExceeded`].
pub fn enumerate_minimal_separators(g: &Graph, cap: usize) -> Result<Vec<Separator>> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut work: Vec<VertexSet> = Vec::new();
    let push = |s: VertexSet, seen: &mut HashSet<VertexSet>, work: &mut Vec<VertexSet>| -> Result<()> {
        if seen.contains(&s) {
            return Ok(());
        }
        seen.insert(s.clone());
        if cap > 0 && seen.len() > cap {
            return Err(Error::CapacityExceeded { what: "minimal separator", cap, partial: seen.len() });
        }
        work.push(s);
        Ok(())
    };
    for v in 0..g.n() {
        for s in close_neighborhoods(g, &g.closed_neighbors(v)) {
            push(s, &mut seen, &mut work)?;
        }
    }
    while let Some(s) = work.pop() {
        for x in s.iter() {
            let mut removed = g.closed_neighbors(x);
            removed.union_with(&s);
            for t in close_neighborhoods(g, &removed) {
                push(t, &mut seen, &mut work)?;
            }
        }
    }
    let mut out: Vec<Separator> = seen
        .into_iter()
        .map(|s| analyze_separator(g, &s))
        .filter(Separator::is_minimal)
        .collect();
    out.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(out)
}

/// Default vertex limit for subset-enumeration oracles.
pub const SEPARATOR_ORACLE_LIMIT: usize = 14;

/// Every `S ⊆ V` with at least two full components, by subset enumeration.
pub fn brute_force_minimal_separators(g: &Graph, limit: usize) -> Result<Vec<Separator>> {
    let n = g.n();
    if n > limit || n >= 64 {
        return Err(Error::OracleLimit { n, limit });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s = VertexSet::from_iter_with(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        let sep = analyze_separator(g, &s);
        if sep.is_minimal() {
            out.push(sep);
        }
    }
    out.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(out)
}

/// Builds `Z ⊆ A ∩ N[v]` with `v ∈ Z` and `S ⊆ N(Z)` for a separator `S`
/// with full component `A ∋ v`, another full component, and every component
/// `A'` of `G[A] - v` missing some vertex of `S`.
///
/// Components of `G[A] - v` are ranked by their trace on `S' = S \ N(v)`; the
/// largest trace `A_1` must see all of `S'` through `N(v) ∩ A_1`, and `Z'` is
/// pruned from there to an inclusion-minimal cover. `|Z| > k_bound` is
/// reported as [`Error::BoundExceeded`] (on long-hole-free graphs this means
/// an induced `k_bound`-prism is present).
pub fn special_separator_witness(
    g: &Graph,
    sep: &Separator,
    a: &VertexSet,
    v: Vertex,
    k_bound: usize,
) -> Result<VertexSet> {
    let s = &sep.set;
    let a_idx = sep
        .components
        .iter()
        .position(|c| c == a)
        .ok_or_else(|| Error::Precondition("A is not a component of G - S".into()))?;
    if !sep.is_full(a_idx) {
        return Err(Error::Precondition("A is not a full component".into()));
    }
    if sep.full.len() < 2 {
        return Err(Error::Precondition("S has no second full component".into()));
    }
    if !a.contains(v) {
        return Err(Error::Precondition(format!("v = {v} is not in A")));
    }
    let mut a_minus_v = a.clone();
    a_minus_v.remove(v);
    let parts = g.components(&a_minus_v);
    for p in &parts {
        if s.is_subset(&g.open_neighborhood(p)) {
            return Err(Error::Precondition(format!(
                "component {:?} of G[A] - v sees all of S",
                p.to_vec()
            )));
        }
    }

    let s_rest = s.difference(g.neighbors(v));
    let traces: Vec<VertexSet> = parts
        .iter()
        .map(|p| g.open_neighborhood(p).intersection(&s_rest))
        .collect();
    let mut z = g.set_of([v]);
    if !s_rest.is_empty() {
        let best = (0..parts.len())
            .max_by(|&i, &j| traces[i].len().cmp(&traces[j].len()).then(j.cmp(&i)))
            .ok_or_else(|| Error::WitnessNotFound("S \\ N(v) is nonempty but G[A] - v is empty".into()))?;
        if traces.iter().any(|t| !t.is_subset(&traces[best])) {
            return Err(Error::WitnessNotFound(
                "traces of G[A] - v on S \\ N(v) are not a chain".into(),
            ));
        }
        let mut cover = parts[best].intersection(g.neighbors(v));
        if !s_rest.is_subset(&g.open_neighborhood(&cover)) {
            return Err(Error::WitnessNotFound(
                "N(v) ∩ A_1 does not dominate S \\ N(v)".into(),
            ));
        }
        for u in cover.clone().iter() {
            cover.remove(u);
            if !s_rest.is_subset(&g.neighborhood(&cover, false)) {
                cover.insert(u);
            }
        }
        z.union_with(&cover);
    }
    debug_assert!(s.is_subset(&g.open_neighborhood(&z).union(&z)));
    if !s.is_subset(&g.open_neighborhood(&z)) {
        return Err(Error::Internal("constructed Z does not cover S".into()));
    }
    if z.len() > k_bound {
        return Err(Error::BoundExceeded { size: z.len(), bound: k_bound });
    }
    Ok(z)
}
