use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Weight};
use crate::pmc::{dominate_pmc, is_pmc, DominationMethod};
use crate::recognition::{clique_tree, minimal_triangulation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedSeparatorResult {
    /// Bag of the zero-outdegree clique-tree node; a PMC of `g`.
    pub bag: VertexSet,
    /// Dominating set of `bag`, empty when degraded.
    pub z: VertexSet,
    /// `N[Z]`, or `bag` itself when degraded.
    pub separator: VertexSet,
    pub max_component_weight: Weight,
    /// Domination failed (the input has a long hole); the bag is returned as
    /// the separator.
    pub degraded: bool,
    pub method: Option<DominationMethod>,
}

impl BalancedSeparatorResult {
    /// `3(Δ + 1)`.
    pub fn size_bound(g: &Graph) -> usize {
        3 * (g.max_degree() + 1)
    }
}

/// Bag index whose every neighbour lies on a lighter (or tie-losing) side.
///
/// Each tree edge is oriented toward the side whose bag union is heavier;
/// on equal weight, toward the side holding the smaller node index.
fn sink_node(g: &Graph, bags: &[VertexSet], edges: &[(usize, usize)]) -> usize {
    let k = bags.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // nodes reachable from `from` without crossing the edge to `blocked`
    let side = |from: usize, blocked: usize| -> (VertexSet, usize) {
        let mut seen = vec![false; k];
        seen[from] = true;
        seen[blocked] = true;
        let mut stack = vec![from];
        let mut union = g.empty_set();
        let mut min_node = from;
        while let Some(x) = stack.pop() {
            union.union_with(&bags[x]);
            min_node = min_node.min(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (union, min_node)
    };
    let mut outdeg = vec![0usize; k];
    for &(a, b) in edges {
        let (ua, ma) = side(a, b);
        let (ub, mb) = side(b, a);
        let (wa, wb) = (g.set_weight(&ua), g.set_weight(&ub));
        let toward_a = wa > wb || (wa == wb && ma < mb);
        if toward_a {
            outdeg[b] += 1;
        } else {
            outdeg[a] += 1;
        }
    }
    (0..k).find(|&i| outdeg[i] == 0).expect("a finite oriented tree has a sink")
}

/// A separator `N[Z]`, `|Z| ≤ 3`, leaving components of at most half the
/// total weight. The bag comes from the clique tree of a minimal
/// triangulation; `Z` from [`dominate_pmc`].
pub fn balanced_separator(g: &Graph) -> Result<BalancedSeparatorResult> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let total = g.total_weight();
    if total.is_zero() {
        return Err(Error::ZeroTotalWeight);
    }
    let fill = minimal_triangulation(g);
    let tree = clique_tree(g, &fill)?;
    let t = sink_node(g, &tree.bags, &tree.edges);
    let bag = tree.bags[t].clone();
    let pmc = is_pmc(g, &bag).map_err(|v| Error::Internal(format!("clique-tree bag is not a PMC: {v:?}")))?;

    let (z, separator, degraded, method) = match dominate_pmc(g, &pmc) {
        Ok(d) => {
            let sep = g.closed_neighborhood(&d.z);
            (d.z, sep, false, Some(d.method))
        }
        Err(Error::NoDomination) => (g.empty_set(), bag.clone(), true, None),
        Err(e) => return Err(e),
    };
    let max_component_weight = g
        .components_without(&separator)
        .iter()
        .map(|c| g.set_weight(c))
        .max()
        .unwrap_or(Weight::ZERO);
    if !max_component_weight.at_most_half_of(total) {
        return Err(Error::Internal(format!(
            "component of weight {max_component_weight} exceeds half of {total}"
        )));
    }
    Ok(BalancedSeparatorResult { bag, z, separator, max_component_weight, degraded, method })
}
