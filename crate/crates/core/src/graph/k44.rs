use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::NonSolvableGraph;
use crate::error::{Error, Result};

/// How a K4,4 witness was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum K44Route {
    /// `U = {x^a}`, `V = {x^a y}` for an element `x` of prime-power order
    /// `p^t` with `p >= 5` and a neighbour `y`.
    Constructive,
    /// Backtracking search; only used when no suitable `x` exists.
    Exhaustive,
}

impl K44Route {
    pub fn name(self) -> &'static str {
        match self {
            K44Route::Constructive => "constructive",
            K44Route::Exhaustive => "exhaustive",
        }
    }
}

/// Two sides of a complete bipartite subgraph, as element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K44Witness {
    pub u: [usize; 4],
    pub v: [usize; 4],
    pub route: K44Route,
}

impl K44Witness {
    /// Checks the 16 edges and that all eight vertices are distinct.
    pub fn verifies(&self, graph: &NonSolvableGraph<'_>) -> bool {
        let mut all: Vec<usize> = self.u.iter().chain(&self.v).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len() == 8
            && self
                .u
                .iter()
                .all(|&a| self.v.iter().all(|&b| graph.adjacent(a, b)))
    }
}

const SEARCH_BUDGET: usize = 2_000_000;

fn prime_power_base(mut n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    while n.is_multiple_of(p) {
        n /= p;
    }
    (n == 1).then_some(p)
}

fn constructive(graph: &NonSolvableGraph<'_>) -> Option<K44Witness> {
    let group = graph.group();
    let mut reps: Vec<usize> = group
        .classes()
        .representatives()
        .iter()
        .copied()
        .filter(|&r| graph.contains(r))
        .collect();
    reps.sort_by_key(|&r| (std::cmp::Reverse(group.element_order(r)), r));
    for x in reps {
        let o = group.element_order(x) as u64;
        if !prime_power_base(o).is_some_and(|p| p >= 5) {
            continue;
        }
        // every a in 1..=4 is prime to p^t when p >= 5
        let powers = [1u64, 2, 3, 4].map(|a| group.pow(x, a));
        for y in graph.neighbors(x) {
            let w = K44Witness {
                u: powers,
                v: powers.map(|xa| group.mul(xa, y)),
                route: K44Route::Constructive,
            };
            if w.verifies(graph) {
                return Some(w);
            }
        }
    }
    None
}

struct Search<'a, 'g> {
    graph: &'a NonSolvableGraph<'g>,
    budget: usize,
}

impl Search<'_, '_> {
    fn extend(
        &mut self,
        chosen: &mut Vec<usize>,
        common: &FixedBitSet,
        start: usize,
    ) -> Option<Vec<usize>> {
        if chosen.len() == 4 {
            return Some(common.ones().take(4).collect());
        }
        for p in start..self.graph.vertex_count() {
            if self.budget == 0 {
                return None;
            }
            self.budget -= 1;
            let mut next = common.clone();
            next.intersect_with(self.graph.row(p));
            if next.count_ones(..) < 4 {
                continue;
            }
            chosen.push(p);
            if let Some(v) = self.extend(chosen, &next, p + 1) {
                return Some(v);
            }
            chosen.pop();
        }
        None
    }
}

fn exhaustive(graph: &NonSolvableGraph<'_>) -> Option<K44Witness> {
    let group = graph.group();
    let mut search = Search {
        graph,
        budget: SEARCH_BUDGET,
    };
    for &r in group.classes().representatives() {
        let Some(p) = graph.position(r) else { continue };
        let mut chosen = vec![p];
        let Some(v) = search.extend(&mut chosen, graph.row(p), 0) else {
            continue;
        };
        let to_elements = |ps: &[usize]| -> [usize; 4] {
            let mut out = [0; 4];
            for (slot, &q) in out.iter_mut().zip(ps) {
                *slot = graph.vertices()[q];
            }
            out
        };
        let w = K44Witness {
            u: to_elements(&chosen),
            v: to_elements(&v),
            route: K44Route::Exhaustive,
        };
        if w.verifies(graph) {
            return Some(w);
        }
    }
    None
}

/// Constructive route first, then a budgeted exhaustive search.
pub fn find_k44(graph: &NonSolvableGraph<'_>) -> Result<K44Witness> {
    constructive(graph)
        .or_else(|| exhaustive(graph))
        .ok_or(Error::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::build_graph;
    use crate::solv::RelationMode;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_base(25), Some(5));
        assert_eq!(prime_power_base(7), Some(7));
        assert_eq!(prime_power_base(6), None);
        assert_eq!(prime_power_base(1), None);
    }

    #[test]
    fn a5_uses_five_cycles() {
        let g = catalog::alternating(5).unwrap();
        let graph = build_graph(&g, RelationMode::Solvable, true);
        let w = find_k44(&graph).unwrap();
        assert_eq!(w.route, K44Route::Constructive);
        assert!(w.u.iter().all(|&x| g.element_order(x) == 5));
        assert!(w.verifies(&graph));
    }

    #[test]
    fn exhaustive_route_agrees() {
        let g = catalog::alternating(5).unwrap();
        let graph = build_graph(&g, RelationMode::Solvable, true);
        let w = exhaustive(&graph).unwrap();
        assert!(w.verifies(&graph));
    }

    #[test]
    fn solvable_group_has_none() {
        let g = catalog::symmetric(4).unwrap();
        let graph = build_graph(&g, RelationMode::Solvable, false);
        assert_eq!(find_k44(&graph), Err(Error::NotFound));
    }
}
