use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use solvagraph::graph::{verify_graph, GraphOptions, GraphReport};
use solvagraph::report::all_passed;
use solvagraph::solv::{verify_solvabilizers, VerifyOptions};
use solvagraph::subgroup::{group_is_nilpotent, group_is_solvable};
use solvagraph::{CheckEntry, FiniteGroup, RelationMode, SGroupReport, SolvabilizerMap};

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub label: String,
    pub order: usize,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub radical_size: usize,
    pub nil_radical_size: usize,
    pub class_count: usize,
}

/// Solvabilizer data for one conjugacy class, taken at its representative.
#[derive(Clone, Debug, Serialize)]
pub struct ClassSolvabilizer {
    pub rep_index: usize,
    pub rep_label: String,
    pub rep_order: u32,
    pub class_size: usize,
    pub sol_size: usize,
    pub is_subgroup: bool,
    pub centralizer_order: usize,
    pub degree: usize,
    pub nil_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhaseTiming {
    pub phase: &'static str,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: GroupSummary,
    pub solvabilizers: Vec<ClassSolvabilizer>,
    pub s_group: SGroupReport,
    pub graph: GraphReport,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<PhaseTiming>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub verify: VerifyOptions,
    /// Wall-clock timings make the output non-reproducible, so they are opt-in.
    pub timings: bool,
}

struct Clock {
    last: Instant,
    phases: Vec<PhaseTiming>,
}

impl Clock {
    fn new() -> Self {
        Self {
            last: Instant::now(),
            phases: Vec::new(),
        }
    }

    fn lap(&mut self, phase: &'static str) {
        let now = Instant::now();
        self.phases.push(PhaseTiming {
            phase,
            millis: now.duration_since(self.last).as_millis(),
        });
        self.last = now;
    }
}

/// Full pipeline: solvabilizers, radical, S-group test, graph and checks.
pub fn analyze(group: &FiniteGroup, opts: &AnalyzeOptions) -> AnalysisReport {
    let mut clock = Clock::new();
    let classes = group.classes();
    clock.lap("classes");
    let sol = SolvabilizerMap::compute(group, RelationMode::Solvable);
    clock.lap("solvabilizers");
    let nil = SolvabilizerMap::compute(group, RelationMode::Nilpotent);
    clock.lap("nilpotentizers");
    let radical = sol.radical();
    let n = group.order();
    let solvabilizers = classes
        .representatives()
        .iter()
        .enumerate()
        .map(|(c, &r)| {
            let result = sol.result_for(r);
            ClassSolvabilizer {
                rep_index: r,
                rep_label: group.render(r),
                rep_order: group.element_order(r),
                class_size: classes.class_size(c),
                sol_size: result.size,
                is_subgroup: result.is_subgroup,
                centralizer_order: classes.centralizer_order(c),
                degree: n - result.size,
                nil_size: nil.of_class(c).len(),
            }
        })
        .collect();
    let s_group = sol.s_group_report();
    clock.lap("s-group");

    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.verify.seed);
    checks.push(CheckEntry::from_search(
        "group-axioms",
        format!("{} random associativity triples", opts.verify.axiom_triples),
        group
            .spot_check_axioms(&mut rng, opts.verify.axiom_triples)
            .map(|(a, b, c)| ("(ab)c != a(bc)".to_string(), vec![a, b, c])),
    ));
    checks.extend(verify_solvabilizers(&sol, Some(&nil), &opts.verify));
    clock.lap("solvabilizer-checks");
    let graph = verify_graph(
        &sol,
        Some(&nil),
        &GraphOptions {
            seed: opts.verify.seed,
            bfs_cross_check_max: opts.verify.bfs_cross_check_max,
        },
    );
    clock.lap("graph");

    AnalysisReport {
        group: GroupSummary {
            label: group.label().to_string(),
            order: n,
            is_solvable: group_is_solvable(group),
            is_nilpotent: group_is_nilpotent(group),
            radical_size: radical.len(),
            nil_radical_size: nil.radical().len(),
            class_count: classes.class_count(),
        },
        solvabilizers,
        s_group,
        graph,
        checks,
        timings: opts.timings.then_some(clock.phases),
    }
}

impl AnalysisReport {
    pub fn rows(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().chain(&self.graph.checks)
    }

    pub fn passed(&self) -> bool {
        all_passed(&self.checks) && all_passed(&self.graph.checks)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self, group: &FiniteGroup) -> String {
        let g = &self.group;
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "group {}  order {}  solvable {}  nilpotent {}  |Sol(G)| {}  |nil(G)| {}  classes {}",
            g.label,
            g.order,
            yn(g.is_solvable),
            yn(g.is_nilpotent),
            g.radical_size,
            g.nil_radical_size,
            g.class_count
        );
        let _ = writeln!(
            out,
            "\n{:<24} {:>5} {:>6} {:>6} {:>8} {:>6} {:>6} {:>6}",
            "representative", "order", "class", "|Sol|", "subgroup", "|C|", "deg", "|nil|"
        );
        for s in &self.solvabilizers {
            let _ = writeln!(
                out,
                "{:<24} {:>5} {:>6} {:>6} {:>8} {:>6} {:>6} {:>6}",
                s.rep_label,
                s.rep_order,
                s.class_size,
                s.sol_size,
                yn(s.is_subgroup),
                s.centralizer_order,
                s.degree,
                s.nil_size
            );
        }
        let _ = write!(out, "\nS-group: {}", yn(self.s_group.is_s_group));
        if let Some(w) = self.s_group.witness {
            let _ = write!(
                out,
                "  (a = {}, b = {}, x = {})",
                group.render(w.a),
                group.render(w.b),
                group.render(w.x)
            );
        }
        let gr = &self.graph;
        let _ = writeln!(
            out,
            "\ninduced graph: {} vertices, {} edges, degree {}..{} ({} distinct), diameter {}",
            gr.vertex_count,
            gr.edge_count,
            gr.min_degree,
            gr.max_degree,
            gr.distinct_degrees,
            gr.diameter
                .map(|d| d.to_string())
                .unwrap_or_else(|| "-".into())
        );
        out.push('\n');
        for row in self.rows() {
            let _ = writeln!(out, "{:<4}  {:<40} {}", row.status, row.name, row.detail);
        }
        if let Some(t) = &self.timings {
            out.push('\n');
            for p in t {
                let _ = writeln!(out, "{:<20} {:>8} ms", p.phase, p.millis);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvagraph::catalog;

    #[test]
    fn a5_report_is_consistent() {
        let g = catalog::alternating(5).unwrap();
        let r = analyze(&g, &AnalyzeOptions::default());
        assert!(r.passed());
        assert_eq!(r.group.radical_size, 1);
        let mut sizes: Vec<usize> = r.solvabilizers.iter().map(|s| s.sol_size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![10, 10, 24, 36, 60]);
        for s in &r.solvabilizers {
            assert_eq!(s.degree + s.sol_size, 60);
            assert_eq!(s.sol_size % r.group.radical_size, 0);
        }
        assert!(r.timings.is_none());
    }

    #[test]
    fn a_failing_row_fails_the_report() {
        let g = catalog::cyclic(3).unwrap();
        let mut r = analyze(&g, &AnalyzeOptions::default());
        assert!(r.passed());
        r.graph
            .checks
            .push(CheckEntry::fail("injected", "forced", vec![1]));
        assert!(!r.passed());
        assert!(r.to_json().contains("\"FAIL\""));
    }

    #[test]
    fn timings_only_on_request() {
        let g = catalog::cyclic(4).unwrap();
        let opts = AnalyzeOptions {
            timings: true,
            ..Default::default()
        };
        let r = analyze(&g, &opts);
        assert!(r.timings.as_ref().is_some_and(|t| !t.is_empty()));
        assert!(r.to_text(&g).contains(" ms"));
    }
}
