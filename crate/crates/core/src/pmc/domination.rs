use serde::Serialize;

use super::Pmc;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::{analyze_separator, Separator};

/// A component `D` of `G - Ω` whose neighbourhood contains `M`.
///
/// Returns `Ok(None)` when `M = {m}` and `Ω ⊆ N[m]`. Otherwise the component
/// with the smallest minimum element among those seeing all of `M`; on
/// long-hole-free graphs such a component exists for every independent `M`
/// and for `M = Ω \ N(v)`.
pub fn find_covering_component(g: &Graph, pmc: &Pmc, m: &VertexSet) -> Result<Option<VertexSet>> {
    if !m.is_subset(&pmc.set) {
        return Err(Error::Precondition("M is not contained in the PMC".into()));
    }
    if m.len() == 1 && pmc.set.is_subset(&g.closed_neighborhood(m)) {
        return Ok(None);
    }
    pmc.components
        .iter()
        .find(|d| m.is_subset(&g.open_neighborhood(d)))
        .cloned()
        .map(Some)
        .ok_or_else(|| Error::WitnessNotFound(format!("no component of G - Ω sees all of {:?}", m)))
}

/// For a separator with full components `A`, `B` and `x ∈ S`, vertices
/// `a ∈ N(x) ∩ A`, `b ∈ N(x) ∩ B` with `S ⊆ N[x] ∪ N(a) ∪ N(b)`, found by
/// scanning all pairs in ascending order.
pub fn find_xab_cover(
    g: &Graph,
    sep: &Separator,
    a_idx: usize,
    b_idx: usize,
    x: Vertex,
) -> Result<(Vertex, Vertex)> {
    if !sep.set.contains(x) {
        return Err(Error::Precondition(format!("x = {x} is not in S")));
    }
    if a_idx == b_idx || !sep.is_full(a_idx) || !sep.is_full(b_idx) {
        return Err(Error::Precondition("A and B must be distinct full components".into()));
    }
    let nx = g.neighbors(x);
    let side_a = sep.components[a_idx].intersection(nx);
    let side_b = sep.components[b_idx].intersection(nx);
    let rest = sep.set.difference(&g.closed_neighbors(x));
    for a in side_a.iter() {
        let after_a = rest.difference(g.neighbors(a));
        for b in side_b.iter() {
            if after_a.is_subset(g.neighbors(b)) {
                return Ok((a, b));
            }
        }
    }
    Err(Error::WitnessNotFound(format!("no pair a, b covers S for x = {x}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DominationMethod {
    SingleVertex,
    LemmaChain,
    BruteFallback,
}

impl DominationMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DominationMethod::SingleVertex => "single-vertex",
            DominationMethod::LemmaChain => "lemma-chain",
            DominationMethod::BruteFallback => "brute-fallback",
        }
    }
}

/// Where each vertex of a lemma-chain witness came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTrace {
    pub v: Vertex,
    /// Component of `G - Ω` seeing `Ω \ N(v)`.
    pub d: VertexSet,
    /// Second full component of `N(D)`.
    pub b: VertexSet,
    pub x: Vertex,
    pub y: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub z: VertexSet,
    pub method: DominationMethod,
    pub trace: Option<LemmaTrace>,
}

fn lemma_chain(g: &Graph, pmc: &Pmc, v: Vertex) -> Result<DominationResult> {
    let m = pmc.set.difference(g.neighbors(v));
    let d = find_covering_component(g, pmc, &m)?
        .ok_or_else(|| Error::Internal("single-vertex case reached the lemma chain".into()))?;
    let sep = analyze_separator(g, &g.open_neighborhood(&d));
    let d_idx = sep
        .components
        .iter()
        .position(|c| *c == d)
        .ok_or_else(|| Error::Internal("D is not a component of G - N(D)".into()))?;
    let b_idx = sep
        .full
        .iter()
        .copied()
        .find(|&i| i != d_idx)
        .ok_or_else(|| Error::WitnessNotFound("N(D) has no second full component".into()))?;
    let (x, y) = find_xab_cover(g, &sep, d_idx, b_idx, v)?;
    let z = g.set_of([v, x, y]);
    if !pmc.set.is_subset(&g.closed_neighborhood(&z)) {
        return Err(Error::WitnessNotFound(format!("{{v, x, y}} = {:?} does not dominate Ω", z)));
    }
    Ok(DominationResult {
        z,
        method: DominationMethod::LemmaChain,
        trace: Some(LemmaTrace { v, d, b: sep.components[b_idx].clone(), x, y }),
    })
}

fn brute_domination(g: &Graph, target: &VertexSet) -> Option<VertexSet> {
    let n = g.n();
    let dominated = |z: &[Vertex]| target.is_subset(&g.closed_neighborhood(&g.set_of(z.iter().copied())));
    for a in 0..n {
        if dominated(&[a]) {
            return Some(g.set_of([a]));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if dominated(&[a, b]) {
                return Some(g.set_of([a, b]));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if dominated(&[a, b, c]) {
                    return Some(g.set_of([a, b, c]));
                }
            }
        }
    }
    None
}

/// A set `Z` with `|Z| ≤ 3` and `Ω ⊆ N[Z]`.
///
/// First any single member dominating `Ω`; then, for each `v ∈ Ω`, the chain
/// covering component `D` of `Ω \ N(v)` → second full component `B` of `N(D)`
/// → pair `(x, y)` from `D` and `B`. Only if every `v` fails does it fall back
/// to exhaustive search over all sets of at most three vertices.
pub fn dominate_pmc(g: &Graph, pmc: &Pmc) -> Result<DominationResult> {
    let omega = &pmc.set;
    if let Some(v) = omega.iter().find(|&v| omega.is_subset(&g.closed_neighbors(v))) {
        return Ok(DominationResult { z: g.set_of([v]), method: DominationMethod::SingleVertex, trace: None });
    }
    for v in omega.iter() {
        if let Ok(res) = lemma_chain(g, pmc, v) {
            return Ok(res);
        }
    }
    brute_domination(g, omega)
        .map(|z| DominationResult { z, method: DominationMethod::BruteFallback, trace: None })
        .ok_or(Error::NoDomination)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::pmc::{enumerate_pmcs, is_pmc, PmcConfig, PmcMode};

    #[test]
    fn covering_component_examples() {
        let c4 = cycle(4);
        let p = is_pmc(&c4, &c4.set_of([0, 1, 2])).unwrap();
        assert_eq!(find_covering_component(&c4, &p, &c4.set_of([0, 2])).unwrap(), Some(c4.set_of([3])));

        let k3 = complete(3);
        let p = is_pmc(&k3, &k3.vertex_set()).unwrap();
        assert_eq!(find_covering_component(&k3, &p, &k3.set_of([0])).unwrap(), None);
        assert!(matches!(
            find_covering_component(&k3, &p, &k3.set_of([0, 1])),
            Err(Error::WitnessNotFound(_))
        ));
    }

    #[test]
    fn xab_cover_examples() {
        // C4, S = {a, c}, A = {b}, B = {d}, x = a
        let c4 = cycle(4);
        let sep = analyze_separator(&c4, &c4.set_of([0, 2]));
        assert_eq!(find_xab_cover(&c4, &sep, 0, 1, 0).unwrap(), (1, 3));

        // K2,3 with parts {u1, u2} = {0, 1}, {w1, w2, w3} = {2, 3, 4}
        let k23 = complete_bipartite(2, 3);
        assert!(crate::recognition::find_long_hole(&k23).is_none());
        let sep = analyze_separator(&k23, &k23.set_of([0, 1]));
        assert_eq!(sep.full, vec![0, 1, 2]);
        assert_eq!(find_xab_cover(&k23, &sep, 0, 1, 0).unwrap(), (2, 3));

        assert!(matches!(find_xab_cover(&c4, &sep, 0, 0, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn domination_examples() {
        let c4 = cycle(4);
        let p = is_pmc(&c4, &c4.set_of([0, 1, 2])).unwrap();
        let d = dominate_pmc(&c4, &p).unwrap();
        assert_eq!(d.z, c4.set_of([1]));
        assert_eq!(d.method, DominationMethod::SingleVertex);

        let p4 = path(4);
        let p = is_pmc(&p4, &p4.set_of([1, 2])).unwrap();
        assert_eq!(dominate_pmc(&p4, &p).unwrap().z, p4.set_of([1]));
    }

    #[test]
    fn prism_pmcs_use_lemma_chain_without_fallback() {
        let g = prism(3);
        let cfg = PmcConfig { mode: PmcMode::BruteForce, ..PmcConfig::default() };
        let pmcs = enumerate_pmcs(&g, &[], cfg).unwrap();
        assert!(!pmcs.is_empty());
        let mut chains = 0;
        for p in &pmcs {
            let d = dominate_pmc(&g, p).unwrap();
            assert!(d.z.len() <= 3);
            assert_ne!(d.method, DominationMethod::BruteFallback);
            assert!(p.set.is_subset(&g.closed_neighborhood(&d.z)));
            chains += (d.method == DominationMethod::LemmaChain) as usize;
        }
        assert!(chains > 0);
    }

    #[test]
    fn long_hole_falls_back() {
        // C7: the PMC {0, 1, 3, ...} style sets need the fallback or fail
        let g = cycle(7);
        let cfg = PmcConfig { mode: PmcMode::BruteForce, ..PmcConfig::default() };
        for p in enumerate_pmcs(&g, &[], cfg).unwrap() {
            match dominate_pmc(&g, &p) {
                Ok(d) => assert!(p.set.is_subset(&g.closed_neighborhood(&d.z))),
                Err(e) => assert_eq!(e, Error::NoDomination),
            }
        }
    }
}
