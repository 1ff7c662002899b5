use crate::graph::{Graph, Vertex};

/// True when `cycle` lists distinct vertices forming an induced cycle of `g`.
pub fn is_induced_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let len = cycle.len();
    if len < 3 {
        return false;
    }
    let set = g.set_of(cycle.iter().copied());
    if set.len() != len {
        return false;
    }
    cycle.iter().enumerate().all(|(i, &v)| {
        let prev = cycle[(i + len - 1) % len];
        let next = cycle[(i + 1) % len];
        let inside = g.neighbors(v).intersection(&set);
        inside.len() == 2 && inside.contains(prev) && inside.contains(next)
    })
}

/// Finds an induced cycle of length at least five.
///
/// Every long hole contains an induced path `x1 x2 x3 x4`; the rest of the hole
/// is an `x1`-`x4` path avoiding `N[x2] ∪ N[x3]`. A shortest such path closes
/// an induced cycle of length ≥ 5, so the search is exact.
pub fn find_long_hole(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    for x2 in 0..n {
        for x3 in g.neighbors(x2).iter() {
            let forbidden = g.closed_neighbors(x2).union(&g.closed_neighbors(x3));
            let ends1 = g.neighbors(x2).difference(&g.closed_neighbors(x3));
            let ends4 = g.neighbors(x3).difference(&g.closed_neighbors(x2));
            if ends4.is_empty() {
                continue;
            }
            let free = forbidden.complement();
            for x1 in ends1.iter() {
                let targets = ends4.difference(g.neighbors(x1));
                if targets.is_empty() {
                    continue;
                }
                // x1 may only be left through free vertices
                let mut within = free.clone();
                within.insert(x1);
                let reach = g.component_of(x1, &within);
                for x4 in targets.iter() {
                    if !g.neighbors(x4).intersects(&reach) {
                        continue;
                    }
                    let mut dom = free.clone();
                    dom.insert(x1);
                    dom.insert(x4);
                    let path = g
                        .shortest_path(x1, x4, &dom)
                        .expect("x4 touches the component of x1");
                    let mut cycle = vec![x2, x3];
                    cycle.extend(path.iter().rev());
                    debug_assert!(cycle.len() >= 5);
                    debug_assert!(is_induced_cycle(g, &cycle));
                    if is_induced_cycle(g, &cycle) {
                        return Some(cycle);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn c5_has_long_hole() {
        let c5 = cycle(5);
        let h = find_long_hole(&c5).unwrap();
        assert_eq!(h.len(), 5);
        assert!(is_induced_cycle(&c5, &h));
    }

    #[test]
    fn c4_and_prism_have_none() {
        assert_eq!(find_long_hole(&cycle(4)), None);
        assert_eq!(find_long_hole(&prism(3)), None);
        assert_eq!(find_long_hole(&complete(6)), None);
    }

    #[test]
    fn finds_hole_in_larger_graph() {
        // C7 with a pendant triangle hanging off vertex 0
        let mut e: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        e.extend([(0, 7), (0, 8), (7, 8)]);
        let g = Graph::from_edges(9, &e);
        let h = find_long_hole(&g).unwrap();
        assert_eq!(h.len(), 7);
        assert!(is_induced_cycle(&g, &h));
    }

    #[test]
    fn induced_cycle_check() {
        let g = cycle(5).with_added_edges(&[(0, 2)]);
        assert!(!is_induced_cycle(&g, &[0, 1, 2, 3, 4]));
        assert!(is_induced_cycle(&g, &[0, 2, 3, 4]));
    }
}
