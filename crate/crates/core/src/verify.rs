//! Runs every check for one group.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{verify_graph, GraphOptions, GraphReport};
use crate::group::FiniteGroup;
use crate::report::{all_passed, CheckEntry};
use crate::solv::{verify_solvabilizers, RelationMode, SolvabilizerMap, VerifyOptions};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub label: String,
    pub order: usize,
    pub checks: Vec<CheckEntry>,
    pub graph: GraphReport,
}

impl VerifyReport {
    /// Solvabilizer rows followed by graph rows.
    pub fn rows(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().chain(&self.graph.checks)
    }

    pub fn passed(&self) -> bool {
        all_passed(&self.checks) && all_passed(&self.graph.checks)
    }
}

pub fn verify_group(group: &FiniteGroup, opts: &VerifyOptions) -> VerifyReport {
    let sol = SolvabilizerMap::compute(group, RelationMode::Solvable);
    let nil = SolvabilizerMap::compute(group, RelationMode::Nilpotent);
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    checks.push(CheckEntry::from_search(
        "group-axioms",
        format!("{} random associativity triples", opts.axiom_triples),
        group
            .spot_check_axioms(&mut rng, opts.axiom_triples)
            .map(|(a, b, c)| ("(ab)c != a(bc)".to_string(), vec![a, b, c])),
    ));
    checks.extend(verify_solvabilizers(&sol, Some(&nil), opts));
    let graph = verify_graph(
        &sol,
        Some(&nil),
        &GraphOptions {
            seed: opts.seed,
            bfs_cross_check_max: opts.bfs_cross_check_max,
        },
    );
    VerifyReport {
        label: group.label().to_string(),
        order: group.order(),
        checks,
        graph,
    }
}
