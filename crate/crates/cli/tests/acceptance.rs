//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use solvagraph::catalog::{self, build, direct_product};
use solvagraph::graph::{verify_graph, GraphOptions};
use solvagraph::solv::VerifyOptions;
use solvagraph::subgroup::{center, group_is_solvable, is_solvable, subgroup_generated};
use solvagraph::{
    parse_element, quotient_group, verify_group, CheckStatus, Diameter, ElementSet, FiniteGroup,
    GroupConfig, NonSolvableGraph, PairOracle, RelationMode, SolvabilizerMap, VerifyReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn catalog_groups(max_order: usize) -> Vec<FiniteGroup> {
    catalog::entries_up_to(max_order)
        .map(|e| build(e.spec, &GroupConfig::default()).expect("catalog entry builds"))
        .collect()
}

fn group(spec: &str) -> FiniteGroup {
    build(spec, &GroupConfig::default()).expect("spec builds")
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(t)
    } else {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    }
}

fn a5_golden_values() -> Outcome {
    let start = Instant::now();
    let g = catalog::alternating(5).map_err(|e| e.to_string())?;
    let map = SolvabilizerMap::compute(&g, RelationMode::Solvable);
    let c3 = map.result_for(parse_element(&g, "(1,2,3)").unwrap());
    let inv = map.result_for(parse_element(&g, "(2,3)(4,5)").unwrap());
    let radical = map.radical().len();
    let t = within(Duration::from_secs(1), start)?;
    ensure!(
        c3.size == 24 && !c3.is_subgroup,
        "|sol((1,2,3))| = {}, subgroup = {}",
        c3.size,
        c3.is_subgroup
    );
    ensure!(inv.size == 36, "|sol((2,3)(4,5))| = {}", inv.size);
    ensure!(radical == 1, "radical size {radical}");
    Ok(format!("24 (not a subgroup), 36, radical 1 in {t:.2?}"))
}

fn degree_duality() -> Outcome {
    let mut checked = 0;
    for spec in ["A5", "S5", "A6", "SL2(5)", "PSL2(7)", "A5 x C2"] {
        let g = group(spec);
        let n = g.order();
        let graph = NonSolvableGraph::from_solvabilizers(
            &SolvabilizerMap::compute(&g, RelationMode::Solvable),
            false,
        );
        // direct sweep per element, no class reduction, fresh cache
        let oracle = PairOracle::new(&g, RelationMode::Solvable);
        for x in 0..n {
            let sol = oracle.sweep(x).len();
            let deg = graph.degree(x).unwrap();
            ensure!(deg + sol == n, "{spec}: x = {x}, deg {deg}, |sol| {sol}");
            checked += 1;
        }
    }
    let a5 = catalog::alternating(5).unwrap();
    let table = common::pair_table(&a5, false);
    let mut multiset = BTreeMap::new();
    for row in &table {
        let deg = row.iter().filter(|&&r| !r).count();
        if deg > 0 {
            *multiset.entry(deg).or_insert(0) += 1;
        }
    }
    let expected = BTreeMap::from([(24, 15), (36, 20), (50, 24)]);
    ensure!(multiset == expected, "brute-force A5 degrees {multiset:?}");
    let ours = NonSolvableGraph::from_solvabilizers(
        &SolvabilizerMap::compute(&a5, RelationMode::Solvable),
        true,
    )
    .degree_stats()
    .multiset;
    ensure!(ours == expected, "A5 graph degrees {ours:?}");
    Ok(format!(
        "{checked} elements over 6 groups; A5 degrees 24^15 36^20 50^24"
    ))
}

const DIVISIBILITY_ROWS: [&str; 9] = [
    "radical-order-divides-solvabilizer",
    "element-order-divides-solvabilizer",
    "centralizer-divides-solvabilizer",
    "order-divides-solvabilizer-sum",
    "centralizer-divides-nilpotentizer",
    "order-divides-nilpotentizer-sum",
    "centralizer-divides-degree",
    "order-divides-degree-sum",
    "centralizer-divides-nil-degree",
];

fn divisibility_suite() -> Outcome {
    let start = Instant::now();
    let reports: Vec<VerifyReport> = catalog_groups(720)
        .iter()
        .map(|g| verify_group(g, &VerifyOptions::default()))
        .collect();
    let t = within(Duration::from_secs(60), start)?;
    let mut rows = 0;
    for r in &reports {
        for name in DIVISIBILITY_ROWS {
            let row = r
                .rows()
                .find(|c| c.name == name)
                .ok_or_else(|| format!("{}: missing row {name}", r.label))?;
            ensure!(
                row.status != CheckStatus::Fail,
                "{}: {name}: {}",
                r.label,
                row.detail
            );
            if row.status == CheckStatus::Pass {
                rows += 1;
            }
        }
    }
    Ok(format!(
        "{} groups, {rows} passing rows, 0 failures in {t:.2?}",
        reports.len()
    ))
}

fn s_group_theorem() -> Outcome {
    let mut negatives = 0;
    let groups = catalog_groups(720);
    for g in &groups {
        let report = SolvabilizerMap::compute(g, RelationMode::Solvable).s_group_report();
        let solvable = group_is_solvable(g);
        ensure!(
            report.is_s_group == solvable,
            "{}: S-group {}, solvable {solvable}",
            g.label(),
            report.is_s_group
        );
        if let Some(w) = report.witness {
            let sol = |a: usize, b: usize| common::solvable(g, &common::closure(g, &[a, b]));
            ensure!(
                sol(w.a, w.x) && sol(w.b, w.x) && !sol(g.mul(w.a, w.b), w.x),
                "{}: witness {w:?} does not re-verify",
                g.label()
            );
            negatives += 1;
        } else {
            ensure!(solvable, "{}: non-S-group without witness", g.label());
        }
    }
    Ok(format!(
        "{} groups, {negatives} witnesses re-verified by brute force",
        groups.len()
    ))
}

const GRAPH_ROWS: [&str; 8] = [
    "diameter-two",
    "min-degree-above-five",
    "max-degree-below-n-minus-1",
    "degree-not-prime",
    "twice-order-within-degree",
    "full-degree-count-not-two",
    "induced-irregular",
    "k44-subgraph",
];

fn graph_suite() -> Outcome {
    let start = Instant::now();
    let mut labels = Vec::new();
    for g in catalog_groups(720).iter().filter(|g| !group_is_solvable(g)) {
        let map = SolvabilizerMap::compute(g, RelationMode::Solvable);
        let report = verify_graph(&map, None, &GraphOptions::default());
        for name in GRAPH_ROWS {
            let row = report
                .checks
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| format!("{}: missing row {name}", g.label()))?;
            ensure!(
                row.status == CheckStatus::Pass,
                "{}: {name} {}: {}",
                g.label(),
                row.status,
                row.detail
            );
        }
        ensure!(
            report.diameter == Some(Diameter::Finite(2)),
            "{}: diameter {:?}",
            g.label(),
            report.diameter
        );
        labels.push(g.label().to_string());
    }
    let t = within(Duration::from_secs(300), start)?;
    for needed in ["A5", "S5", "SL2(5)", "A5 x C2", "A6", "S6", "PSL2(7)"] {
        ensure!(labels.iter().any(|l| l == needed), "{needed} not covered");
    }
    Ok(format!("{} in {t:.2?}", labels.join(", ")))
}

fn quotient_law() -> Outcome {
    let sl = catalog::sl2(5).unwrap();
    let a5 = catalog::alternating(5).unwrap();
    let c2 = catalog::cyclic(2).unwrap();
    let product = direct_product(&a5, &c2).map_err(|e| e.to_string())?;
    let right = ElementSet::from_indices(
        product.group.order(),
        (0..2).map(|h| product.right_injection(h)),
    );
    let cases = [(&sl, center(&sl)), (&product.group, right)];
    let mut reps = 0;
    for (g, normal) in cases {
        ensure!(normal.len() == 2, "{}: |N| = {}", g.label(), normal.len());
        let q = quotient_group(g, &normal).map_err(|e| e.to_string())?;
        let sol = SolvabilizerMap::compute(g, RelationMode::Solvable);
        let qsol = SolvabilizerMap::compute(&q.group, RelationMode::Solvable);
        for &x in g.classes().representatives() {
            let lhs = q.project_set(&sol.of_element(x));
            let rhs = qsol.of_element(q.project(x));
            ensure!(
                lhs == rhs,
                "{}: class of {} differs",
                g.label(),
                g.render(x)
            );
            reps += 1;
        }
    }
    Ok(format!(
        "SL2(5)/Z and (A5 x C2)/C2, {reps} class representatives"
    ))
}

fn oracle_cross_checks() -> Outcome {
    let mut sweeps = 0;
    for g in catalog_groups(168) {
        let n = g.order();
        let map = SolvabilizerMap::compute(&g, RelationMode::Solvable);
        for x in 0..n {
            let naive = ElementSet::from_indices(
                n,
                (0..n).filter(|&y| is_solvable(&g, &subgroup_generated(&g, &[x, y])).unwrap()),
            );
            ensure!(
                map.of_element(x) == naive,
                "{}: x = {}",
                g.label(),
                g.render(x)
            );
        }
        sweeps += 1;
    }
    let mut bfs = 0;
    for g in catalog_groups(360) {
        let map = SolvabilizerMap::compute(&g, RelationMode::Solvable);
        for induced in [true, false] {
            let graph = NonSolvableGraph::from_solvabilizers(&map, induced);
            if graph.vertex_count() == 0 {
                continue;
            }
            let (class, full) = (graph.diameter(), graph.diameter_full());
            ensure!(
                class == full,
                "{} induced={induced}: {class:?} vs {full:?}",
                g.label()
            );
            bfs += 1;
        }
    }
    Ok(format!(
        "{sweeps} groups swept pairwise, {bfs} graphs BFS-checked"
    ))
}

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_solvagraph"));
    cmd.env_remove("SOLVAGRAPH_MAX_ORDER");
    cmd
}

fn determinism() -> Outcome {
    let run = || {
        binary()
            .args(["analyze", "A5", "--json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    ensure!(
        a.status.success() && b.status.success(),
        "exit {:?} / {:?}",
        a.status,
        b.status
    );
    ensure!(!a.stdout.is_empty(), "empty output");
    ensure!(a.stdout == b.stdout, "outputs differ");
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn scale_ceiling() -> Outcome {
    let start = Instant::now();
    let out = binary()
        .args(["verify", "A7"])
        .output()
        .expect("binary runs");
    let t = within(Duration::from_secs(600), start)?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(
        out.status.success(),
        "exit {:?}: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    ensure!(
        !text.lines().any(|l| l.contains(" FAIL ")),
        "FAIL rows present"
    );
    let passes = text.lines().filter(|l| l.contains(" PASS ")).count();
    Ok(format!("order 2520, {passes} PASS rows in {t:.2?}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("a5-golden-values", a5_golden_values),
        ("degree-duality", degree_duality),
        ("divisibility-suite", divisibility_suite),
        ("s-group-iff-solvable", s_group_theorem),
        ("graph-suite", graph_suite),
        ("quotient-law", quotient_law),
        ("oracle-cross-checks", oracle_cross_checks),
        ("determinism", determinism),
        ("scale-ceiling", scale_ceiling),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS  {:>2} {name:<22} {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2} {name:<22} {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
