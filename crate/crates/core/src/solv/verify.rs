//! Executable checks of the structural laws satisfied by solvabilizers.

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PairOracle, RelationMode, SolvabilizerMap};
use crate::group::FiniteGroup;
use crate::quotient::quotient_group;
use crate::report::CheckEntry;
use crate::set::ElementSet;
use crate::subgroup::{
    conjugate_set, group_is_solvable, is_normal_sub, normal_closure_of, product_set,
    solvable_from_gens, Subgroup,
};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random solvable subgroups tried when joining the radical.
    pub join_samples: usize,
    /// Random subset triples for the set identities.
    pub subset_trials: usize,
    /// Largest order on which class-reduced BFS is cross-checked by full BFS.
    pub bfs_cross_check_max: usize,
    /// Random triples for the associativity spot check.
    pub axiom_triples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0x5eed,
            join_samples: 200,
            subset_trials: 24,
            bfs_cross_check_max: 360,
            axiom_triples: 1000,
        }
    }
}

/// Normal closures of single conjugacy classes that are proper, nontrivial
/// and solvable, deduplicated.
pub fn normal_solvable_candidates(group: &FiniteGroup) -> Vec<Subgroup> {
    let classes = group.classes();
    let mut out: Vec<Subgroup> = Vec::new();
    for &r in classes.representatives().iter().skip(1) {
        let n = normal_closure_of(group, &[r], group.generators());
        if n.order() == group.order() || out.iter().any(|m| m.set == n.set) {
            continue;
        }
        if solvable_from_gens(group, n.clone()) {
            out.push(n);
        }
    }
    out
}

/// The solvable radical computed without solvabilizers: the union of the
/// classes whose normal closure is solvable.
pub fn radical_by_normal_closures(group: &FiniteGroup) -> ElementSet {
    let classes = group.classes();
    let mut out = ElementSet::empty(group.order());
    for c in 0..classes.class_count() {
        let r = classes.representatives()[c];
        let n = normal_closure_of(group, &[r], group.generators());
        if solvable_from_gens(group, n) {
            out.union_with(&classes.class_set(c));
        }
    }
    out
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, max: usize) -> ElementSet {
    let k = rng.gen_range(0..=max.min(n));
    ElementSet::from_indices(n, (0..n).choose_multiple(rng, k))
}

fn show(set: &ElementSet) -> String {
    format!("{set:?}")
}

/// Runs every solvabilizer law on `sol` (solvable mode) and, when given,
/// the laws that carry over to nilpotentizers on `nil`.
pub fn verify_solvabilizers(
    sol: &SolvabilizerMap<'_>,
    nil: Option<&SolvabilizerMap<'_>>,
    opts: &VerifyOptions,
) -> Vec<CheckEntry> {
    assert_eq!(sol.mode(), RelationMode::Solvable);
    let group = sol.group();
    let n = group.order();
    let classes = group.classes();
    let reps = classes.representatives();
    let oracle = PairOracle::new(group, RelationMode::Solvable);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    let radical = sol.radical();

    // radical equals the largest solvable normal subgroup
    {
        let oracle_radical = radical_by_normal_closures(group);
        let sub = Subgroup::from_set(group, &radical);
        let cx = if radical != oracle_radical {
            Some((
                format!(
                    "intersection has {} elements, normal-closure radical has {}",
                    radical.len(),
                    oracle_radical.len()
                ),
                radical
                    .difference(&oracle_radical)
                    .union(&oracle_radical.difference(&radical))
                    .to_vec(),
            ))
        } else {
            match sub {
                None => Some(("intersection is not a subgroup".into(), vec![])),
                Some(s) if !is_normal_sub(group, &s) => {
                    Some(("intersection is not normal".into(), vec![]))
                }
                Some(s) if !solvable_from_gens(group, s.clone()) => {
                    Some(("intersection is not solvable".into(), vec![]))
                }
                Some(_) => None,
            }
        };
        out.push(CheckEntry::from_search(
            "radical-is-intersection-of-solvabilizers",
            format!("|Sol(G)| = {}", radical.len()),
            cx,
        ));
    }

    // <H, s> solvable for solvable H and s in the radical
    {
        let rad: Vec<usize> = radical.to_vec();
        let mut cx = None;
        for _ in 0..opts.join_samples {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let s = rad[rng.gen_range(0..rad.len())];
            let h = if oracle.related(a, b) {
                vec![a, b]
            } else {
                vec![a]
            };
            let mut joined = h.clone();
            joined.push(s);
            if !oracle.related_many(&joined) {
                cx = Some((format!("<{h:?}> solvable but not after adding {s}"), joined));
                break;
            }
        }
        out.push(CheckEntry::from_search(
            "solvable-subgroup-joins-radical",
            format!("{} sampled subgroups", opts.join_samples),
            cx,
        ));
    }

    out.push(CheckEntry::from_search(
        "radical-absorbs-solvabilizer",
        "Sol(G) Sol_G(x) = Sol_G(x) on every class",
        reps.iter().enumerate().find_map(|(c, &r)| {
            let s = sol.of_class(c);
            (product_set(group, &radical, s) != *s)
                .then(|| ("product differs".to_string(), vec![r]))
        }),
    ));

    out.push(CheckEntry::from_search(
        "radical-order-divides-solvabilizer",
        "|Sol(G)| divides every |Sol_G(x)|",
        reps.iter().enumerate().find_map(|(c, &r)| {
            let s = sol.of_class(c).len();
            (!s.is_multiple_of(radical.len())).then(|| {
                (
                    format!("|Sol(G)| = {} does not divide {s}", radical.len()),
                    vec![r],
                )
            })
        }),
    ));

    verify_set_identities(sol, &oracle, &mut rng, opts, &mut out);

    out.push(CheckEntry::from_search(
        "same-cyclic-subgroup-same-solvabilizer",
        "Sol_G(x^k) = Sol_G(x) for k prime to O(x)",
        reps.iter().enumerate().find_map(|(c, &r)| {
            let o = group.element_order(r) as u64;
            (2..o).filter(|&k| gcd(k, o) == 1).find_map(|k| {
                let y = group.pow(r, k);
                (sol.of_element(y) != *sol.of_class(c))
                    .then(|| (format!("x^{k} differs"), vec![r, y]))
            })
        }),
    ));

    // conjugation equivariance, checked against direct sweeps
    {
        let mut conjugators: Vec<usize> = group.generators().iter().copied().take(3).collect();
        conjugators.extend((0..2).map(|_| rng.gen_range(0..n)));
        let cx = reps.iter().enumerate().find_map(|(c, &r)| {
            conjugators.iter().find_map(|&g| {
                let direct = oracle.sweep(group.conj(g, r));
                (direct != conjugate_set(group, g, sol.of_class(c)))
                    .then(|| ("conjugated solvabilizer differs".to_string(), vec![g, r]))
            })
        });
        out.push(CheckEntry::from_search(
            "solvabilizer-conjugation",
            format!("{} conjugators per class", conjugators.len()),
            cx,
        ));
    }

    verify_quotients(sol, &mut out);

    out.push(CheckEntry::from_search(
        "element-order-divides-solvabilizer",
        "O(x) divides |Sol_G(x)|",
        reps.iter().enumerate().find_map(|(c, &r)| {
            let (o, s) = (group.element_order(r) as usize, sol.of_class(c).len());
            (s % o != 0).then(|| (format!("O(x) = {o} does not divide {s}"), vec![r]))
        }),
    ));

    out.push(centralizer_law("centralizer-divides-solvabilizer", sol));
    out.push(sum_law("order-divides-solvabilizer-sum", sol));

    // pairs of involutions generate dihedral, hence solvable, groups
    {
        let involutions: Vec<usize> = (0..n).filter(|&x| group.element_order(x) == 2).collect();
        let cx = reps
            .iter()
            .filter(|&&r| group.element_order(r) == 2)
            .find_map(|&r| {
                involutions
                    .iter()
                    .find(|&&y| !oracle.related(r, y))
                    .map(|&y| {
                        (
                            "two involutions generate a non-solvable group".to_string(),
                            vec![r, y],
                        )
                    })
            });
        out.push(CheckEntry::from_search(
            "involution-pairs-solvable",
            format!("{} involutions", involutions.len()),
            cx,
        ));
    }

    let report = sol.s_group_report();
    let solvable = group_is_solvable(group);
    out.push(if report.is_s_group == solvable {
        CheckEntry::pass(
            "s-group-iff-solvable",
            format!("S-group = {}, solvable = {solvable}", report.is_s_group),
        )
    } else {
        CheckEntry::fail(
            "s-group-iff-solvable",
            format!("S-group = {}, solvable = {solvable}", report.is_s_group),
            report
                .witness
                .map(|w| vec![w.a, w.b, w.x])
                .unwrap_or_default(),
        )
    });
    out.push(match report.witness {
        None => CheckEntry::skip(
            "s-group-witness",
            "no witness: every solvabilizer is a subgroup",
        ),
        Some(w) if report.witness_verifies(group, RelationMode::Solvable) => CheckEntry::pass(
            "s-group-witness",
            format!(
                "a = {}, b = {}, x = {}",
                group.render(w.a),
                group.render(w.b),
                group.render(w.x)
            ),
        ),
        Some(w) => CheckEntry::fail(
            "s-group-witness",
            "witness does not re-verify",
            vec![w.a, w.b, w.x],
        ),
    });

    if let Some(nil) = nil {
        assert_eq!(nil.mode(), RelationMode::Nilpotent);
        out.push(centralizer_law("centralizer-divides-nilpotentizer", nil));
        out.push(sum_law("order-divides-nilpotentizer-sum", nil));
        let nil_radical = nil.radical();
        out.push(CheckEntry::from_search(
            "nil-radical-inside-solvable-radical",
            format!("|nil(G)| = {}", nil_radical.len()),
            (!nil_radical.is_subset(&radical)).then(|| {
                (
                    "nil(G) not contained in Sol(G)".to_string(),
                    nil_radical.difference(&radical).to_vec(),
                )
            }),
        ));
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn centralizer_law(name: &str, map: &SolvabilizerMap<'_>) -> CheckEntry {
    let classes = map.group().classes();
    CheckEntry::from_search(
        name,
        format!(
            "|C_G(x)| divides |{}_G(x)| on every class",
            if map.mode() == RelationMode::Solvable {
                "Sol"
            } else {
                "nil"
            }
        ),
        (0..classes.class_count()).find_map(|c| {
            let (z, s) = (classes.centralizer_order(c), map.of_class(c).len());
            (s % z != 0).then(|| {
                (
                    format!("|C_G(x)| = {z} does not divide {s}"),
                    vec![classes.representatives()[c]],
                )
            })
        }),
    )
}

fn sum_law(name: &str, map: &SolvabilizerMap<'_>) -> CheckEntry {
    let classes = map.group().classes();
    let n = map.group().order();
    let total: usize = (0..classes.class_count())
        .map(|c| classes.class_size(c) * map.of_class(c).len())
        .sum();
    if total.is_multiple_of(n) {
        CheckEntry::pass(name, format!("sum = {total} = {} * {n}", total / n))
    } else {
        CheckEntry::fail(name, format!("sum = {total} not divisible by {n}"), vec![])
    }
}

fn verify_set_identities(
    sol: &SolvabilizerMap<'_>,
    oracle: &PairOracle<'_>,
    rng: &mut ChaCha8Rng,
    opts: &VerifyOptions,
    out: &mut Vec<CheckEntry>,
) {
    let group = sol.group();
    let n = group.order();
    let full = ElementSet::full(n);
    let s = |a: &ElementSet, b: &ElementSet| sol.of_set(a, b).set;
    let by_definition = |a: &ElementSet, b: &ElementSet| {
        ElementSet::from_indices(
            n,
            a.iter().filter(|&x| b.iter().all(|y| oracle.related(x, y))),
        )
    };
    let (mut monotone, mut double, mut restrict, mut union, mut inter) =
        (None, None, None, None, None);
    for trial in 0..opts.subset_trials {
        let a = random_subset(rng, n, 12);
        let b = random_subset(rng, n, 12);
        let c = random_subset(rng, n, 12);
        let sup = a.union(&b);
        let ctx = || vec![trial];
        if monotone.is_none()
            && !(s(&a, &c).is_subset(&s(&sup, &c)) && s(&c, &sup).is_subset(&s(&c, &a)))
        {
            monotone = Some((
                format!("A = {}, B = {}, C = {}", show(&a), show(&sup), show(&c)),
                ctx(),
            ));
        }
        if double.is_none() && (s(&a, &s(&sup, &a)) != a || s(&a, &s(&full, &a)) != a) {
            double = Some((format!("A = {}, B = {}", show(&a), show(&sup)), ctx()));
        }
        if restrict.is_none() && s(&a, &c) != a.intersection(&s(&sup, &c)) {
            restrict = Some((
                format!("A = {}, B = {}, C = {}", show(&a), show(&sup), show(&c)),
                ctx(),
            ));
        }
        let union_ok = s(&c, &a.union(&b)) == s(&c, &a).intersection(&s(&c, &b))
            && s(&c, &a)
                .union(&s(&c, &b))
                .is_subset(&s(&c, &a.intersection(&b)));
        if union.is_none() && !union_ok {
            union = Some((
                format!("A = {}, B = {}, C = {}", show(&a), show(&b), show(&c)),
                ctx(),
            ));
        }
        if inter.is_none() && by_definition(&a, &b) != s(&a, &b) {
            inter = Some((format!("A = {}, B = {}", show(&a), show(&b)), ctx()));
        }
    }
    // once against the whole group, by definition
    let x = rng.gen_range(0..n);
    let single = ElementSet::from_indices(n, [x]);
    if inter.is_none() && by_definition(&full, &single) != s(&full, &single) {
        inter = Some(("Sol_G(x) by definition differs".to_string(), vec![x]));
    }
    let everything = ElementSet::from_indices(n, (0..n).filter(|&y| sol.size_of(y) == n));
    if inter.is_none() && sol.radical() != everything {
        inter = Some((
            "radical differs from {x : Sol_G(x) = G}".to_string(),
            vec![],
        ));
    }
    let trials = format!("{} random subset triples", opts.subset_trials);
    out.push(CheckEntry::from_search(
        "solvabilizer-monotone",
        trials.clone(),
        monotone,
    ));
    out.push(CheckEntry::from_search(
        "solvabilizer-of-solvabilizer",
        trials.clone(),
        double,
    ));
    out.push(CheckEntry::from_search(
        "solvabilizer-restriction",
        trials.clone(),
        restrict,
    ));
    out.push(CheckEntry::from_search(
        "solvabilizer-union-intersection",
        trials.clone(),
        union,
    ));
    out.push(CheckEntry::from_search(
        "solvabilizer-is-intersection",
        trials,
        inter,
    ));
}

fn verify_quotients(sol: &SolvabilizerMap<'_>, out: &mut Vec<CheckEntry>) {
    let group = sol.group();
    let candidates = normal_solvable_candidates(group);
    if candidates.is_empty() {
        let why = "no proper nontrivial solvable normal closure of a class";
        out.push(CheckEntry::skip("solvabilizer-quotient", why));
        out.push(CheckEntry::skip("s-group-quotient", why));
        return;
    }
    let classes = group.classes();
    let own = sol.s_group_report().is_s_group;
    let mut quotient_cx = None;
    let mut s_group_cx = None;
    let mut tested = Vec::new();
    for normal in &candidates {
        let q = match quotient_group(group, &normal.set) {
            Ok(q) => q,
            Err(e) => {
                quotient_cx.get_or_insert((format!("quotient failed: {e}"), normal.set.to_vec()));
                continue;
            }
        };
        tested.push(normal.order());
        let qmap = SolvabilizerMap::compute(&q.group, RelationMode::Solvable);
        for (c, &r) in classes.representatives().iter().enumerate() {
            let lhs = qmap.of_element(q.project(r));
            let rhs = q.project_set(sol.of_class(c));
            if lhs != rhs && quotient_cx.is_none() {
                quotient_cx = Some((
                    format!("|N| = {}: projected sets differ", normal.order()),
                    vec![r],
                ));
            }
        }
        if qmap.s_group_report().is_s_group != own && s_group_cx.is_none() {
            s_group_cx = Some((
                format!("|N| = {}: S-group status changes", normal.order()),
                vec![],
            ));
        }
    }
    let detail = format!("normal subgroups of orders {tested:?}");
    out.push(CheckEntry::from_search(
        "solvabilizer-quotient",
        detail.clone(),
        quotient_cx,
    ));
    out.push(CheckEntry::from_search(
        "s-group-quotient",
        detail,
        s_group_cx,
    ));
}
