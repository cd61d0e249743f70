//! Subgroup closure, normal closure, derived and lower central series.
//!
//! Commutator subgroups are never formed from all pairs of elements. For
//! `H = <X>`, `H'` is the normal closure in `H` of `{[x, y] : x, y in X}`
//! and `[N, H]` is the normal closure in `H` of `{[n, x] : n in gens(N),
//! x in X}`; both identities hold in any group.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::set::ElementSet;

/// A subgroup together with a generating set for it.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub set: ElementSet,
    pub gens: Vec<usize>,
}

impl Subgroup {
    /// `<gens>` by breadth-first closure under right multiplication.
    pub fn generated(group: &FiniteGroup, gens: &[usize]) -> Self {
        let mut g: Vec<usize> = Vec::with_capacity(gens.len());
        for &x in gens {
            if x != group.identity() && !g.contains(&x) {
                g.push(x);
            }
        }
        let set = closure(group, &g);
        Self { set, gens: g }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self {
            set: ElementSet::from_indices(group.order(), [group.identity()]),
            gens: Vec::new(),
        }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::generated(group, group.generators())
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.set.len() == 1
    }

    /// Adds `x` as a generator and recloses.
    fn extend(&mut self, group: &FiniteGroup, x: usize) {
        self.gens.push(x);
        self.set = closure(group, &self.gens);
    }

    /// Recovers a small generating set for `set`, or `None` if it is not a
    /// subgroup.
    pub fn from_set(group: &FiniteGroup, set: &ElementSet) -> Option<Self> {
        if !set.contains(group.identity()) {
            return None;
        }
        let mut sub = Self::trivial(group);
        for x in set.iter() {
            if !sub.set.contains(x) {
                sub.extend(group, x);
                if !sub.set.is_subset(set) {
                    return None;
                }
            }
        }
        Some(sub)
    }
}

fn closure(group: &FiniteGroup, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::empty(group.order());
    set.insert(group.identity());
    let mut queue = vec![group.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in gens {
            let y = group.mul(x, g);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

/// `<indices>` as a subset of `group`; the empty list yields `{e}`.
pub fn subgroup_generated(group: &FiniteGroup, indices: &[usize]) -> ElementSet {
    Subgroup::generated(group, indices).set
}

pub fn is_subgroup(group: &FiniteGroup, set: &ElementSet) -> bool {
    Subgroup::from_set(group, set).is_some()
}

fn require_subgroup(group: &FiniteGroup, set: &ElementSet) -> Result<Subgroup> {
    Subgroup::from_set(group, set).ok_or(Error::NotASubgroup)
}

/// Smallest subgroup containing `seeds` that is closed under conjugation by
/// every element of `<conjugators>`.
pub(crate) fn normal_closure_of(
    group: &FiniteGroup,
    seeds: &[usize],
    conjugators: &[usize],
) -> Subgroup {
    let mut sub = Subgroup::generated(group, seeds);
    let mut i = 0;
    while i < sub.gens.len() {
        let n = sub.gens[i];
        for &h in conjugators {
            let c = group.conj(group.inv(h), n);
            if !sub.set.contains(c) {
                sub.extend(group, c);
            }
        }
        i += 1;
    }
    sub
}

/// Normal closure of `seeds` in `ambient` (the whole group when `None`).
pub fn normal_closure(
    group: &FiniteGroup,
    seeds: &ElementSet,
    ambient: Option<&ElementSet>,
) -> Result<ElementSet> {
    let conjugators = match ambient {
        Some(a) => require_subgroup(group, a)?.gens,
        None => group.generators().to_vec(),
    };
    let seeds: Vec<usize> = seeds.iter().collect();
    Ok(normal_closure_of(group, &seeds, &conjugators).set)
}

fn derived_subgroup(group: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    for (i, &a) in h.gens.iter().enumerate() {
        for &b in &h.gens[i + 1..] {
            let c = group.commutator(a, b);
            if c != group.identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure_of(group, &comms, &h.gens)
}

fn commutator_with(group: &FiniteGroup, n: &Subgroup, h: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    for &a in &n.gens {
        for &b in &h.gens {
            let c = group.commutator(a, b);
            if c != group.identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure_of(group, &comms, &h.gens)
}

/// Runs a series until two consecutive terms agree. A repeated term is
/// pushed once so the caller can see the series stalled; a trivial term
/// ends the series without repetition.
fn run_series(
    group: &FiniteGroup,
    start: Subgroup,
    mut step: impl FnMut(&FiniteGroup, &Subgroup) -> Subgroup,
) -> Vec<Subgroup> {
    let mut out = vec![start];
    loop {
        let last = out.last().unwrap();
        if last.is_trivial() {
            return out;
        }
        let next = step(group, last);
        let stalled = next.set == last.set;
        out.push(next);
        if stalled {
            return out;
        }
    }
}

pub(crate) fn derived_series_of(group: &FiniteGroup, h: Subgroup) -> Vec<Subgroup> {
    run_series(group, h, derived_subgroup)
}

pub(crate) fn lower_central_series_of(group: &FiniteGroup, h: Subgroup) -> Vec<Subgroup> {
    let top = h.clone();
    run_series(group, h, move |g, n| commutator_with(g, n, &top))
}

/// `H ⊇ H' ⊇ H'' ⊇ ...` until it reaches `{e}` or repeats.
pub fn derived_series(group: &FiniteGroup, h: &ElementSet) -> Result<Vec<ElementSet>> {
    let sub = require_subgroup(group, h)?;
    Ok(derived_series_of(group, sub)
        .into_iter()
        .map(|s| s.set)
        .collect())
}

/// `γ1 = H, γ(i+1) = [γi, H]` until it reaches `{e}` or repeats.
pub fn lower_central_series(group: &FiniteGroup, h: &ElementSet) -> Result<Vec<ElementSet>> {
    let sub = require_subgroup(group, h)?;
    Ok(lower_central_series_of(group, sub)
        .into_iter()
        .map(|s| s.set)
        .collect())
}

pub(crate) fn solvable_from_gens(group: &FiniteGroup, sub: Subgroup) -> bool {
    derived_series_of(group, sub).last().unwrap().is_trivial()
}

pub(crate) fn nilpotent_from_gens(group: &FiniteGroup, sub: Subgroup) -> bool {
    lower_central_series_of(group, sub)
        .last()
        .unwrap()
        .is_trivial()
}

pub fn is_solvable(group: &FiniteGroup, h: &ElementSet) -> Result<bool> {
    Ok(solvable_from_gens(group, require_subgroup(group, h)?))
}

pub fn is_nilpotent(group: &FiniteGroup, h: &ElementSet) -> Result<bool> {
    Ok(nilpotent_from_gens(group, require_subgroup(group, h)?))
}

pub fn group_is_solvable(group: &FiniteGroup) -> bool {
    solvable_from_gens(group, Subgroup::whole(group))
}

pub fn group_is_nilpotent(group: &FiniteGroup) -> bool {
    nilpotent_from_gens(group, Subgroup::whole(group))
}

/// `C_G(x)`.
pub fn centralizer(group: &FiniteGroup, x: usize) -> ElementSet {
    let n = group.order();
    ElementSet::from_indices(n, (0..n).filter(|&g| group.mul(g, x) == group.mul(x, g)))
}

/// `Z(G)`: elements commuting with every generator.
pub fn center(group: &FiniteGroup) -> ElementSet {
    let n = group.order();
    let gens = group.generators();
    ElementSet::from_indices(
        n,
        (0..n).filter(|&x| gens.iter().all(|&g| group.mul(g, x) == group.mul(x, g))),
    )
}

pub fn is_normal(group: &FiniteGroup, h: &ElementSet) -> Result<bool> {
    let sub = require_subgroup(group, h)?;
    Ok(is_normal_sub(group, &sub))
}

pub(crate) fn is_normal_sub(group: &FiniteGroup, sub: &Subgroup) -> bool {
    group
        .generators()
        .iter()
        .all(|&g| sub.gens.iter().all(|&x| sub.set.contains(group.conj(g, x))))
}

/// `{g s g^-1 : s in set}`.
pub fn conjugate_set(group: &FiniteGroup, g: usize, set: &ElementSet) -> ElementSet {
    let gi = group.inv(g);
    ElementSet::from_indices(
        group.order(),
        set.iter().map(|s| group.mul(group.mul(g, s), gi)),
    )
}

/// `{a b : a in left, b in right}`.
pub fn product_set(group: &FiniteGroup, left: &ElementSet, right: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(group.order());
    for a in left.iter() {
        for b in right.iter() {
            out.insert(group.mul(a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::element::{GroupElement, Permutation};

    fn idx(g: &FiniteGroup, d: usize, cycles: &[&[usize]]) -> usize {
        let cycles: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|x| x - 1).collect())
            .collect();
        let e = GroupElement::Permutation(Permutation::from_cycles(d, &cycles).unwrap());
        g.index_of(&e).unwrap()
    }

    fn sizes(series: &[ElementSet]) -> Vec<usize> {
        series.iter().map(ElementSet::len).collect()
    }

    #[test]
    fn generated_subgroups_in_a5() {
        let g = catalog::alternating(5).unwrap();
        let c3 = idx(&g, 5, &[&[1, 2, 3]]);
        let c5 = idx(&g, 5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(subgroup_generated(&g, &[c3]).len(), 3);
        assert_eq!(subgroup_generated(&g, &[c5, c3]).len(), 60);
        assert_eq!(subgroup_generated(&g, &[]).to_vec(), vec![0]);
    }

    #[test]
    fn normal_closures() {
        let a5 = catalog::alternating(5).unwrap();
        let c3 = idx(&a5, 5, &[&[1, 2, 3]]);
        let e = ElementSet::from_indices(60, [0]);
        assert_eq!(normal_closure(&a5, &e, None).unwrap().len(), 1);
        let s = ElementSet::from_indices(60, [c3]);
        assert_eq!(normal_closure(&a5, &s, None).unwrap().len(), 60);

        let d4 = catalog::dihedral(4).unwrap();
        let r = idx(&d4, 4, &[&[1, 2, 3, 4]]);
        let s = ElementSet::from_indices(8, [r]);
        assert_eq!(normal_closure(&d4, &s, None).unwrap().len(), 4);
    }

    #[test]
    fn derived_series_examples() {
        let c6 = catalog::cyclic(6).unwrap();
        assert_eq!(
            sizes(&derived_series(&c6, &ElementSet::full(6)).unwrap()),
            vec![6, 1]
        );
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(
            sizes(&derived_series(&s3, &ElementSet::full(6)).unwrap()),
            vec![6, 3, 1]
        );
        let a5 = catalog::alternating(5).unwrap();
        assert_eq!(
            sizes(&derived_series(&a5, &ElementSet::full(60)).unwrap()),
            vec![60, 60]
        );
        assert!(!is_solvable(&a5, &ElementSet::full(60)).unwrap());
        assert!(is_solvable(&a5, &ElementSet::from_indices(60, [0])).unwrap());
        let s4 = catalog::symmetric(4).unwrap();
        assert_eq!(
            sizes(&derived_series(&s4, &ElementSet::full(24)).unwrap()),
            vec![24, 12, 4, 1]
        );
    }

    #[test]
    fn lower_central_examples() {
        let c6 = catalog::cyclic(6).unwrap();
        assert_eq!(
            sizes(&lower_central_series(&c6, &ElementSet::full(6)).unwrap()),
            vec![6, 1]
        );
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(
            sizes(&lower_central_series(&s3, &ElementSet::full(6)).unwrap()),
            vec![6, 3, 3]
        );
        assert!(!is_nilpotent(&s3, &ElementSet::full(6)).unwrap());
        let d4 = catalog::dihedral(4).unwrap();
        assert_eq!(
            sizes(&lower_central_series(&d4, &ElementSet::full(8)).unwrap()),
            vec![8, 2, 1]
        );
        assert!(is_nilpotent(&d4, &ElementSet::full(8)).unwrap());
        assert!(is_nilpotent(&d4, &ElementSet::from_indices(8, [0])).unwrap());
    }

    #[test]
    fn series_reject_non_subgroups() {
        let s3 = catalog::symmetric(3).unwrap();
        let bad = ElementSet::from_indices(6, [0, 1]);
        let bad = if is_subgroup(&s3, &bad) {
            ElementSet::from_indices(6, [0, 1, 2])
        } else {
            bad
        };
        assert!(!is_subgroup(&s3, &bad));
        assert_eq!(derived_series(&s3, &bad), Err(Error::NotASubgroup));
        assert_eq!(is_nilpotent(&s3, &bad), Err(Error::NotASubgroup));
        assert_eq!(
            is_normal(&s3, &ElementSet::from_indices(6, [1])),
            Err(Error::NotASubgroup)
        );
    }

    #[test]
    fn centralizers_and_centers() {
        let a5 = catalog::alternating(5).unwrap();
        assert_eq!(centralizer(&a5, 0).len(), 60);
        let c5 = idx(&a5, 5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(centralizer(&a5, c5).len(), 5);
        let inv = idx(&a5, 5, &[&[2, 3], &[4, 5]]);
        assert_eq!(centralizer(&a5, inv).len(), 4);
        assert_eq!(center(&a5).len(), 1);
        let c6 = catalog::cyclic(6).unwrap();
        for x in 0..6 {
            assert_eq!(centralizer(&c6, x).len(), 6);
        }
        assert_eq!(center(&c6).len(), 6);
    }

    #[test]
    fn a5_normal_in_s5() {
        let s5 = catalog::symmetric(5).unwrap();
        let even: Vec<usize> = (0..120)
            .filter(|&i| match s5.element(i) {
                GroupElement::Permutation(p) => {
                    p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
                }
                _ => unreachable!(),
            })
            .collect();
        let a5 = ElementSet::from_indices(120, even);
        assert_eq!(a5.len(), 60);
        assert!(is_normal(&s5, &a5).unwrap());
        let c2 = subgroup_generated(&s5, &[idx(&s5, 5, &[&[1, 2]])]);
        assert!(!is_normal(&s5, &c2).unwrap());
    }
}
