//! Solvabilizers `Sol_A(B)`, their nilpotent analogues, the radical as an
//! intersection of solvabilizers, and the S-group test.

mod verify;

pub use verify::{verify_solvabilizers, VerifyOptions};

use std::fmt;
use std::hash::Hasher;
use std::str::FromStr;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;
use siphasher::sip128::{Hasher128, SipHasher13};

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::set::ElementSet;
use crate::subgroup::{conjugate_set, nilpotent_from_gens, solvable_from_gens, Subgroup};

/// Which property of `<a, b>` the pair relation tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationMode {
    Solvable,
    Nilpotent,
}

impl RelationMode {
    pub fn name(self) -> &'static str {
        match self {
            RelationMode::Solvable => "solvable",
            RelationMode::Nilpotent => "nilpotent",
        }
    }

    fn holds(self, group: &FiniteGroup, sub: Subgroup) -> bool {
        match self {
            RelationMode::Solvable => solvable_from_gens(group, sub),
            RelationMode::Nilpotent => nilpotent_from_gens(group, sub),
        }
    }
}

impl fmt::Display for RelationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "solvable" | "sol" => Ok(RelationMode::Solvable),
            "nilpotent" | "nil" => Ok(RelationMode::Nilpotent),
            other => Err(Error::BadParams(format!("unknown relation mode `{other}`"))),
        }
    }
}

fn fingerprint(set: &ElementSet) -> u128 {
    let mut h = SipHasher13::new();
    for &block in set.as_slice() {
        h.write_usize(block);
    }
    h.finish128().as_u128()
}

/// Memoized pair test `<i, j>` solvable (or nilpotent).
///
/// Results are cached by a 128-bit fingerprint of the generated subgroup's
/// element set, so pairs generating the same subgroup share one series
/// computation. A hit is trusted only if the cached subgroup order matches.
/// Safe to share between rayon workers.
pub struct PairOracle<'g> {
    group: &'g FiniteGroup,
    mode: RelationMode,
    cache: DashMap<u128, (u32, bool)>,
}

impl<'g> PairOracle<'g> {
    pub fn new(group: &'g FiniteGroup, mode: RelationMode) -> Self {
        Self {
            group,
            mode,
            cache: DashMap::new(),
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn mode(&self) -> RelationMode {
        self.mode
    }

    pub fn cached_subgroups(&self) -> usize {
        self.cache.len()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        let g = self.group;
        // <i, j> abelian
        if g.mul(i, j) == g.mul(j, i) {
            return true;
        }
        self.related_many(&[i, j])
    }

    /// Tests `<gens>` for an arbitrary generator list.
    pub fn related_many(&self, gens: &[usize]) -> bool {
        let sub = Subgroup::generated(self.group, gens);
        let size = sub.order() as u32;
        let key = fingerprint(&sub.set);
        if let Some(hit) = self.cache.get(&key) {
            if hit.0 == size {
                return hit.1;
            }
        }
        let verdict = self.mode.holds(self.group, sub);
        self.cache.insert(key, (size, verdict));
        verdict
    }

    /// `{g in G : <g, x> related}` by a full sweep, no class reduction.
    pub fn sweep(&self, x: usize) -> ElementSet {
        let n = self.group.order();
        let hits: Vec<usize> = (0..n)
            .into_par_iter()
            .filter(|&g| self.related(g, x))
            .collect();
        ElementSet::from_indices(n, hits)
    }
}

/// One-off pair test without a cache.
pub fn pair_related(group: &FiniteGroup, i: usize, j: usize, mode: RelationMode) -> bool {
    PairOracle::new(group, mode).related(i, j)
}

/// `Sol_A(B)` (or `Nil_A(B)`) with derived facts.
#[derive(Clone, Debug)]
pub struct SolvabilizerResult {
    pub set: ElementSet,
    pub ambient: ElementSet,
    pub target: ElementSet,
    pub size: usize,
    pub is_subgroup: bool,
    pub mode: RelationMode,
}

impl SolvabilizerResult {
    fn new(
        group: &FiniteGroup,
        set: ElementSet,
        ambient: ElementSet,
        target: ElementSet,
        mode: RelationMode,
    ) -> Self {
        Self {
            size: set.len(),
            is_subgroup: closure_failure(group, &set).is_none() && !set.is_empty(),
            set,
            ambient,
            target,
            mode,
        }
    }
}

/// First `(a, b)` in index order with `a, b in set` and `ab` not in `set`.
pub fn closure_failure(group: &FiniteGroup, set: &ElementSet) -> Option<(usize, usize)> {
    let members = set.to_vec();
    for &a in &members {
        for &b in &members {
            if !set.contains(group.mul(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A triple with `<a,x>` and `<b,x>` related but `<ab,x>` not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: usize,
    pub b: usize,
    pub x: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SGroupReport {
    pub is_s_group: bool,
    pub witness: Option<Witness>,
}

impl SGroupReport {
    /// Recomputes the witness from scratch.
    pub fn witness_verifies(&self, group: &FiniteGroup, mode: RelationMode) -> bool {
        match self.witness {
            None => self.is_s_group,
            Some(Witness { a, b, x }) => {
                let oracle = PairOracle::new(group, mode);
                !self.is_s_group
                    && oracle.related(a, x)
                    && oracle.related(b, x)
                    && !oracle.related(group.mul(a, b), x)
            }
        }
    }
}

/// Per-class solvabilizers of one group, computed once per conjugacy class
/// on the representative and transported by conjugation to other members.
pub struct SolvabilizerMap<'g> {
    group: &'g FiniteGroup,
    mode: RelationMode,
    per_class: Vec<ElementSet>,
}

impl<'g> SolvabilizerMap<'g> {
    pub fn compute(group: &'g FiniteGroup, mode: RelationMode) -> Self {
        Self::compute_with(&PairOracle::new(group, mode))
    }

    pub fn compute_with(oracle: &PairOracle<'g>) -> Self {
        let group = oracle.group();
        let per_class = group
            .classes()
            .representatives()
            .par_iter()
            .map(|&r| oracle.sweep(r))
            .collect();
        Self {
            group,
            mode: oracle.mode(),
            per_class,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn mode(&self) -> RelationMode {
        self.mode
    }

    /// Solvabilizer of the representative of class `c`.
    pub fn of_class(&self, c: usize) -> &ElementSet {
        &self.per_class[c]
    }

    pub fn of_element(&self, x: usize) -> ElementSet {
        let classes = self.group.classes();
        let c = classes.class_of(x);
        if classes.representatives()[c] == x {
            return self.per_class[c].clone();
        }
        conjugate_set(self.group, classes.conjugator(x), &self.per_class[c])
    }

    /// `|Sol_G(x)|`, constant on conjugacy classes.
    pub fn size_of(&self, x: usize) -> usize {
        self.per_class[self.group.classes().class_of(x)].len()
    }

    pub fn all(&self) -> Vec<ElementSet> {
        (0..self.group.order())
            .into_par_iter()
            .map(|x| self.of_element(x))
            .collect()
    }

    pub fn result_for(&self, x: usize) -> SolvabilizerResult {
        let n = self.group.order();
        SolvabilizerResult::new(
            self.group,
            self.of_element(x),
            ElementSet::full(n),
            ElementSet::from_indices(n, [x]),
            self.mode,
        )
    }

    /// `Sol_A(B) = A ∩ ⋂_{b in B} Sol_G(b)`, with `Sol_∅(B) = ∅` and
    /// `Sol_A(∅) = A`.
    pub fn of_set(&self, ambient: &ElementSet, target: &ElementSet) -> SolvabilizerResult {
        let mut set = ambient.clone();
        for b in target.iter() {
            if set.is_empty() {
                break;
            }
            set.intersect_with(&self.of_element(b));
        }
        SolvabilizerResult::new(self.group, set, ambient.clone(), target.clone(), self.mode)
    }

    /// `⋂_{x in G} Sol_G(x)`.
    pub fn radical(&self) -> ElementSet {
        let classes = self.group.classes();
        let mut acc = ElementSet::full(self.group.order());
        for c in 0..classes.class_count() {
            for &x in classes.members(c) {
                acc.intersect_with(&self.of_element(x));
            }
        }
        acc
    }

    pub fn s_group_report(&self) -> SGroupReport {
        let classes = self.group.classes();
        // Classes are ordered by representative, which is the least member,
        // so the first failing class holds the least failing x.
        for c in 0..classes.class_count() {
            if let Some((a, b)) = closure_failure(self.group, &self.per_class[c]) {
                return SGroupReport {
                    is_s_group: false,
                    witness: Some(Witness {
                        a,
                        b,
                        x: classes.representatives()[c],
                    }),
                };
            }
        }
        SGroupReport {
            is_s_group: true,
            witness: None,
        }
    }
}

/// `Sol_G(x)` via the class representative of `x`.
pub fn sol_of_element(group: &FiniteGroup, x: usize, mode: RelationMode) -> SolvabilizerResult {
    let oracle = PairOracle::new(group, mode);
    let classes = group.classes();
    let rep = classes.representative_of(x);
    let base = oracle.sweep(rep);
    let set = if rep == x {
        base
    } else {
        conjugate_set(group, classes.conjugator(x), &base)
    };
    let n = group.order();
    SolvabilizerResult::new(
        group,
        set,
        ElementSet::full(n),
        ElementSet::from_indices(n, [x]),
        mode,
    )
}

pub fn sol_of_set(
    group: &FiniteGroup,
    ambient: &ElementSet,
    target: &ElementSet,
    mode: RelationMode,
) -> SolvabilizerResult {
    SolvabilizerMap::compute(group, mode).of_set(ambient, target)
}

/// `Sol(G)`, which is the solvable radical (or `nil(G)` in nilpotent mode).
pub fn solvable_radical(group: &FiniteGroup, mode: RelationMode) -> ElementSet {
    SolvabilizerMap::compute(group, mode).radical()
}

pub fn is_s_group(group: &FiniteGroup, mode: RelationMode) -> SGroupReport {
    SolvabilizerMap::compute(group, mode).s_group_report()
}
