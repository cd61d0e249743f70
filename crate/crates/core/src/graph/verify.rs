//! Laws of the non-solvable graph, checked vertex by vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{find_k44, Diameter, K44Witness, NonSolvableGraph};
use crate::element::is_prime;
use crate::report::CheckEntry;
use crate::solv::{PairOracle, RelationMode, SolvabilizerMap};
use crate::subgroup::{group_is_nilpotent, group_is_solvable};

#[derive(Clone, Copy, Debug)]
pub struct GraphOptions {
    pub seed: u64,
    /// Largest order on which class-reduced BFS is cross-checked by full BFS.
    pub bfs_cross_check_max: usize,
}

impl Default for GraphOptions {
    fn default() -> Self {
        Self {
            seed: 0x5eed,
            bfs_cross_check_max: 360,
        }
    }
}

/// Summary statistics of the induced graph plus the checked laws.
#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub mode: RelationMode,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub distinct_degrees: usize,
    pub full_distinct_degrees: usize,
    pub diameter: Option<Diameter>,
    pub k44: Option<K44Witness>,
    pub checks: Vec<CheckEntry>,
}

fn first_vertex<F>(graph: &NonSolvableGraph<'_>, mut bad: F) -> Option<(String, Vec<usize>)>
where
    F: FnMut(usize, usize) -> Option<String>,
{
    graph
        .vertices()
        .iter()
        .zip(graph.degrees())
        .find_map(|(&x, &d)| bad(x, d).map(|msg| (msg, vec![x])))
}

/// Runs the graph laws for `sol` and, if given, the nilpotent analogues.
pub fn verify_graph(
    sol: &SolvabilizerMap<'_>,
    nil: Option<&SolvabilizerMap<'_>>,
    opts: &GraphOptions,
) -> GraphReport {
    let group = sol.group();
    let n = group.order();
    let classes = group.classes();
    let full = NonSolvableGraph::from_solvabilizers(sol, false);
    let induced = NonSolvableGraph::from_solvabilizers(sol, true);
    let solvable = group_is_solvable(group);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = Vec::new();

    checks.push(CheckEntry::from_search(
        "degree-duality",
        "deg(x) + |Sol_G(x)| = |G| for every x",
        first_vertex(&full, |x, d| {
            (d + sol.size_of(x) != n).then(|| format!("deg = {d}, |Sol_G(x)| = {}", sol.size_of(x)))
        }),
    ));

    // rows of a random member per class against a direct pair sweep
    {
        let oracle = PairOracle::new(group, sol.mode());
        let cx = (0..classes.class_count()).find_map(|c| {
            let members = classes.members(c);
            let x = members[rng.gen_range(0..members.len())];
            let direct = oracle.sweep(x).complement();
            let row = full.neighbors(x);
            (row != direct.to_vec()).then(|| {
                (
                    "adjacency row differs from direct sweep".to_string(),
                    vec![x],
                )
            })
        });
        checks.push(CheckEntry::from_search(
            "adjacency-matches-pair-test",
            "one random member per class",
            cx,
        ));
    }

    checks.push(CheckEntry::from_search(
        "adjacency-symmetric-irreflexive",
        "no loops, x ~ y iff y ~ x",
        first_vertex(&full, |x, _| {
            if full.adjacent(x, x) {
                return Some("loop".to_string());
            }
            full.neighbors(x)
                .into_iter()
                .find(|&y| !full.adjacent(y, x))
                .map(|y| format!("asymmetric with {y}"))
        }),
    ));

    let radical = sol.radical();
    checks.push(CheckEntry::from_search(
        "radical-is-isolated",
        format!("{} isolated vertices", radical.len()),
        first_vertex(&full, |x, d| {
            ((d == 0) != radical.contains(x))
                .then(|| format!("deg = {d}, in radical = {}", radical.contains(x)))
        }),
    ));

    checks.push(if (full.edge_count() == 0) == solvable {
        CheckEntry::pass(
            "empty-iff-solvable",
            format!("{} edges, solvable = {solvable}", full.edge_count()),
        )
    } else {
        CheckEntry::fail(
            "empty-iff-solvable",
            format!("{} edges, solvable = {solvable}", full.edge_count()),
            vec![],
        )
    });

    let degree_sum: usize = full.degrees().iter().sum();
    checks.push(if degree_sum.is_multiple_of(2) {
        CheckEntry::pass("degree-sum-even", format!("sum = {degree_sum}"))
    } else {
        CheckEntry::fail("degree-sum-even", format!("sum = {degree_sum}"), vec![])
    });
    checks.push(if degree_sum.is_multiple_of(n) {
        CheckEntry::pass(
            "order-divides-degree-sum",
            format!("sum = {degree_sum} = {} * {n}", degree_sum / n),
        )
    } else {
        CheckEntry::fail(
            "order-divides-degree-sum",
            format!("sum = {degree_sum}"),
            vec![],
        )
    });

    checks.push(CheckEntry::from_search(
        "conjugation-is-automorphism",
        format!("{} generators", group.generators().len()),
        group.generators().iter().find_map(|&g| {
            first_vertex(&full, |x, _| {
                let image: Vec<usize> = {
                    let mut v: Vec<usize> = full
                        .neighbors(x)
                        .into_iter()
                        .map(|y| group.conj(g, y))
                        .collect();
                    v.sort_unstable();
                    v
                };
                (image != full.neighbors(group.conj(g, x)))
                    .then(|| format!("fails for generator {g}"))
            })
        }),
    ));

    let stats = induced.degree_stats();
    let full_stats = full.degree_stats();
    let mut diameter = None;
    let mut k44 = None;
    let non_solvable_rows = [
        "diameter-two",
        "diameter-cross-check",
        "centralizer-divides-degree",
        "order-below-degree",
        "twice-order-within-degree",
        "degree-not-prime",
        "max-degree-below-n-minus-1",
        "min-degree-above-five",
        "k44-subgraph",
        "non-planar",
        "full-degree-count-not-two",
        "induced-irregular",
    ];
    if solvable {
        for name in non_solvable_rows {
            checks.push(CheckEntry::skip(name, "group is solvable"));
        }
    } else {
        let v = induced.vertex_count();
        let d = induced.diameter();
        diameter = d.as_ref().ok().copied();
        checks.push(match d {
            Ok(Diameter::Finite(2)) => CheckEntry::pass("diameter-two", "diameter = 2"),
            Ok(other) => CheckEntry::fail("diameter-two", format!("diameter = {other}"), vec![]),
            Err(e) => CheckEntry::fail("diameter-two", e.to_string(), vec![]),
        });
        checks.push(if n > opts.bfs_cross_check_max {
            CheckEntry::skip(
                "diameter-cross-check",
                format!("order {n} above {}", opts.bfs_cross_check_max),
            )
        } else {
            let all = induced.diameter_full().ok();
            if all == diameter {
                CheckEntry::pass("diameter-cross-check", "BFS from every vertex agrees")
            } else {
                CheckEntry::fail(
                    "diameter-cross-check",
                    format!("full BFS gives {all:?}, class BFS {diameter:?}"),
                    vec![],
                )
            }
        });
        checks.push(CheckEntry::from_search(
            "centralizer-divides-degree",
            "|C_G(x)| divides deg(x)",
            first_vertex(&induced, |x, d| {
                let z = classes.centralizer_order(classes.class_of(x));
                (d % z != 0).then(|| format!("|C_G(x)| = {z}, deg = {d}"))
            }),
        ));
        checks.push(CheckEntry::from_search(
            "order-below-degree",
            "O(x) < deg(x)",
            first_vertex(&induced, |x, d| {
                let o = group.element_order(x) as usize;
                (o >= d).then(|| format!("O(x) = {o}, deg = {d}"))
            }),
        ));
        checks.push(CheckEntry::from_search(
            "twice-order-within-degree",
            "2 O(x) <= deg(x)",
            first_vertex(&induced, |x, d| {
                let o = group.element_order(x) as usize;
                (2 * o > d).then(|| format!("O(x) = {o}, deg = {d}"))
            }),
        ));
        checks.push(CheckEntry::from_search(
            "degree-not-prime",
            format!("degrees {:?}", stats.multiset.keys().collect::<Vec<_>>()),
            first_vertex(&induced, |_, d| {
                is_prime(d as u64).then(|| format!("deg = {d} is prime"))
            }),
        ));
        checks.push(if stats.max + 1 < v {
            CheckEntry::pass(
                "max-degree-below-n-minus-1",
                format!("max = {}, n = {v}", stats.max),
            )
        } else {
            CheckEntry::fail(
                "max-degree-below-n-minus-1",
                format!("max = {}, n = {v}", stats.max),
                vec![],
            )
        });
        checks.push(if stats.min > 5 {
            CheckEntry::pass("min-degree-above-five", format!("min = {}", stats.min))
        } else {
            CheckEntry::fail(
                "min-degree-above-five",
                format!("min = {}", stats.min),
                vec![],
            )
        });
        let witness = find_k44(&induced);
        checks.push(match &witness {
            Ok(w) if w.verifies(&induced) => CheckEntry::pass(
                "k44-subgraph",
                format!("{} route, U = {:?}, V = {:?}", w.route.name(), w.u, w.v),
            ),
            Ok(w) => CheckEntry::fail(
                "k44-subgraph",
                "witness does not verify",
                w.u.iter().chain(&w.v).copied().collect(),
            ),
            Err(e) => CheckEntry::fail("k44-subgraph", e.to_string(), vec![]),
        });
        let dense = v >= 3 && induced.edge_count() > 3 * v - 6;
        checks.push(match (&witness, dense) {
            (Ok(_), _) | (_, true) => CheckEntry::pass(
                "non-planar",
                format!(
                    "K4,4 witness: {}, {} edges against 3n - 6 = {}",
                    if witness.is_ok() { "yes" } else { "no" },
                    induced.edge_count(),
                    (3 * v).saturating_sub(6)
                ),
            ),
            _ => CheckEntry::fail("non-planar", "no certificate", vec![]),
        });
        checks.push(if full_stats.distinct_count != 2 {
            CheckEntry::pass(
                "full-degree-count-not-two",
                format!("{} distinct degrees", full_stats.distinct_count),
            )
        } else {
            CheckEntry::fail(
                "full-degree-count-not-two",
                "exactly two distinct degrees",
                vec![],
            )
        });
        checks.push(match induced.is_irregular() {
            Ok(true) => CheckEntry::pass(
                "induced-irregular",
                format!("{} distinct degrees", stats.distinct_count),
            ),
            Ok(false) => CheckEntry::fail("induced-irregular", "regular", vec![]),
            Err(e) => CheckEntry::fail("induced-irregular", e.to_string(), vec![]),
        });
        k44 = witness.ok();
    }

    if let Some(nil) = nil {
        checks.extend(verify_nilpotent_graph(&full, nil));
    }

    GraphReport {
        mode: sol.mode(),
        vertex_count: induced.vertex_count(),
        edge_count: induced.edge_count(),
        min_degree: stats.min,
        max_degree: stats.max,
        distinct_degrees: stats.distinct_count,
        full_distinct_degrees: full_stats.distinct_count,
        diameter,
        k44,
        checks,
    }
}

fn verify_nilpotent_graph(
    sol_full: &NonSolvableGraph<'_>,
    nil: &SolvabilizerMap<'_>,
) -> Vec<CheckEntry> {
    let group = nil.group();
    let n = group.order();
    let classes = group.classes();
    let full = NonSolvableGraph::from_solvabilizers(nil, false);
    let mut out = vec![CheckEntry::from_search(
        "solvable-graph-inside-nilpotent-graph",
        format!("{} of {} edges", sol_full.edge_count(), full.edge_count()),
        sol_full
            .edges()
            .into_iter()
            .find(|&(a, b)| !full.adjacent(a, b))
            .map(|(a, b)| {
                (
                    "edge missing from the nilpotent graph".to_string(),
                    vec![a, b],
                )
            }),
    )];
    out.push(CheckEntry::from_search(
        "centralizer-divides-nil-degree",
        "|C_G(x)| divides |G| - |nil_G(x)|",
        first_vertex(&full, |x, d| {
            let z = classes.centralizer_order(classes.class_of(x));
            (d % z != 0 || d + nil.size_of(x) != n).then(|| format!("|C_G(x)| = {z}, deg = {d}"))
        }),
    ));
    if group_is_nilpotent(group) {
        out.push(CheckEntry::skip(
            "nil-full-degree-count-not-two",
            "group is nilpotent",
        ));
        out.push(CheckEntry::skip(
            "nil-induced-irregular",
            "group is nilpotent",
        ));
        return out;
    }
    let full_stats = full.degree_stats();
    out.push(if full_stats.distinct_count != 2 {
        CheckEntry::pass(
            "nil-full-degree-count-not-two",
            format!("{} distinct degrees", full_stats.distinct_count),
        )
    } else {
        CheckEntry::fail(
            "nil-full-degree-count-not-two",
            "exactly two distinct degrees",
            vec![],
        )
    });
    let induced = NonSolvableGraph::from_solvabilizers(nil, true);
    out.push(match induced.is_irregular() {
        Ok(true) => CheckEntry::pass(
            "nil-induced-irregular",
            format!("{} distinct degrees", induced.degree_stats().distinct_count),
        ),
        Ok(false) => CheckEntry::fail("nil-induced-irregular", "regular", vec![]),
        Err(e) => CheckEntry::fail("nil-induced-irregular", e.to_string(), vec![]),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::report::{all_passed, CheckStatus};

    fn run(g: &crate::group::FiniteGroup) -> GraphReport {
        let sol = SolvabilizerMap::compute(g, RelationMode::Solvable);
        let nil = SolvabilizerMap::compute(g, RelationMode::Nilpotent);
        verify_graph(&sol, Some(&nil), &GraphOptions::default())
    }

    #[test]
    fn a5_report() {
        let r = run(&catalog::alternating(5).unwrap());
        assert!(all_passed(&r.checks), "{:#?}", r.checks);
        assert_eq!(r.vertex_count, 59);
        assert_eq!(r.edge_count, 1140);
        assert_eq!(r.diameter, Some(Diameter::Finite(2)));
        assert_eq!(r.full_distinct_degrees, 4);
        assert!(r.k44.is_some());
        assert!(r.checks.iter().all(|c| c.status != CheckStatus::Skip));
    }

    #[test]
    fn solvable_group_skips() {
        let r = run(&catalog::symmetric(3).unwrap());
        assert!(all_passed(&r.checks), "{:#?}", r.checks);
        let skip = r.checks.iter().find(|c| c.name == "diameter-two").unwrap();
        assert_eq!(skip.status, CheckStatus::Skip);
        let nil = r
            .checks
            .iter()
            .find(|c| c.name == "nil-induced-irregular")
            .unwrap();
        assert_eq!(nil.status, CheckStatus::Pass);
    }
}
