//! Solvabilizers, solvable radicals and non-solvable graphs of finite groups.
//!
//! Groups are enumerated into a Cayley table once ([`FiniteGroup`]); every
//! later computation works on element indices and bitset-backed
//! [`ElementSet`]s.

pub mod catalog;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod graph;
pub mod group;
pub mod quotient;
pub mod report;
pub mod set;
pub mod solv;
pub mod subgroup;
pub mod verify;

pub use catalog::{parse_element, parse_spec, CatalogKind, GroupSpec};
pub use conjugacy::ConjugacyTable;
pub use element::{GroupElement, MatrixModP, Permutation};
pub use error::{Error, Result};
pub use graph::{build_graph, export_graph, Diameter, ExportFormat, NonSolvableGraph};
pub use group::{FiniteGroup, GroupConfig, DEFAULT_MAX_ORDER, HARD_MAX_ORDER, MAX_ORDER_ENV};
pub use quotient::{quotient_group, Quotient};
pub use report::{CheckEntry, CheckStatus};
pub use set::ElementSet;
pub use solv::{
    is_s_group, pair_related, sol_of_element, sol_of_set, solvable_radical, PairOracle,
    RelationMode, SGroupReport, SolvabilizerMap, SolvabilizerResult, Witness,
};
pub use verify::{verify_group, VerifyReport};
