//! Built-in groups and the textual group-spec language.

mod spec;

pub use spec::{parse_element, parse_spec, GroupSpec};

use std::fmt;
use std::str::FromStr;

use crate::element::{GroupElement, MatrixModP, Permutation};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupConfig};
use crate::quotient::quotient_group;
use crate::subgroup::center;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    SpecialLinear2,
    ProjectiveSpecialLinear2,
}

impl CatalogKind {
    pub fn name(self) -> &'static str {
        match self {
            CatalogKind::Cyclic => "C",
            CatalogKind::Dihedral => "D",
            CatalogKind::Symmetric => "S",
            CatalogKind::Alternating => "A",
            CatalogKind::SpecialLinear2 => "SL2",
            CatalogKind::ProjectiveSpecialLinear2 => "PSL2",
        }
    }

    /// Group order predicted by the standard formulas, if the parameter is valid.
    pub fn expected_order(self, param: u32) -> Option<u64> {
        let n = param as u64;
        match self {
            CatalogKind::Cyclic if n >= 1 => Some(n),
            CatalogKind::Dihedral if n >= 1 => Some(2 * n),
            CatalogKind::Symmetric if (1..=7).contains(&n) => Some((1..=n).product()),
            CatalogKind::Alternating if (1..=7).contains(&n) => {
                Some(((1..=n).product::<u64>() / 2).max(1))
            }
            CatalogKind::SpecialLinear2 if SL2_PRIMES.contains(&param) => Some(n * (n * n - 1)),
            CatalogKind::ProjectiveSpecialLinear2 if SL2_PRIMES.contains(&param) => {
                Some(n * (n * n - 1) / if n == 2 { 1 } else { 2 })
            }
            _ => None,
        }
    }

    pub fn label(self, param: u32) -> String {
        match self {
            CatalogKind::SpecialLinear2 | CatalogKind::ProjectiveSpecialLinear2 => {
                format!("{}({param})", self.name())
            }
            _ => format!("{}{param}", self.name()),
        }
    }
}

impl fmt::Display for CatalogKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "C" => CatalogKind::Cyclic,
            "D" => CatalogKind::Dihedral,
            "S" => CatalogKind::Symmetric,
            "A" => CatalogKind::Alternating,
            "SL2" => CatalogKind::SpecialLinear2,
            "PSL2" => CatalogKind::ProjectiveSpecialLinear2,
            other => return Err(Error::BadParams(format!("unknown catalog group `{other}`"))),
        })
    }
}

const SL2_PRIMES: [u32; 4] = [2, 3, 5, 7];

fn perm(degree: usize, cycles: &[Vec<usize>]) -> Result<GroupElement> {
    Ok(GroupElement::Permutation(Permutation::from_cycles(
        degree, cycles,
    )?))
}

fn mat(p: u32, entries: [u32; 4]) -> Result<GroupElement> {
    Ok(GroupElement::MatrixModP(MatrixModP::new(
        p,
        2,
        entries.to_vec(),
    )?))
}

/// Builds a catalog group, checking the predicted order against the cap
/// before enumerating anything.
pub fn make_with(kind: CatalogKind, param: u32, config: &GroupConfig) -> Result<FiniteGroup> {
    let order = kind.expected_order(param).ok_or_else(|| {
        Error::BadParams(format!("{} does not accept parameter {param}", kind.name()))
    })?;
    config.check(order.min(usize::MAX as u64) as usize)?;
    let n = param as usize;
    let gens = match kind {
        CatalogKind::Cyclic => {
            vec![perm(n, &[(0..n).collect()])?]
        }
        CatalogKind::Dihedral => match n {
            1 => vec![perm(2, &[vec![0, 1]])?],
            2 => vec![perm(4, &[vec![0, 1]])?, perm(4, &[vec![2, 3]])?],
            _ => {
                let reflection: Vec<Vec<usize>> = (0..n / 2).map(|i| vec![i, n - 1 - i]).collect();
                vec![perm(n, &[(0..n).collect()])?, perm(n, &reflection)?]
            }
        },
        CatalogKind::Symmetric => match n {
            1 => vec![perm(1, &[])?],
            _ => vec![perm(n, &[vec![0, 1]])?, perm(n, &[(0..n).collect()])?],
        },
        CatalogKind::Alternating => match n {
            1 | 2 => vec![perm(n, &[])?],
            _ => (2..n)
                .map(|i| perm(n, &[vec![0, 1, i]]))
                .collect::<Result<Vec<_>>>()?,
        },
        CatalogKind::SpecialLinear2 => {
            vec![mat(param, [1, 1, 0, 1])?, mat(param, [0, param - 1, 1, 0])?]
        }
        CatalogKind::ProjectiveSpecialLinear2 => {
            let sl = make_with(CatalogKind::SpecialLinear2, param, config)?;
            let z = center(&sl);
            let q = quotient_group(&sl, &z)?;
            return Ok(q.group.with_label(kind.label(param)));
        }
    };
    Ok(FiniteGroup::close_generators(&gens, config)?.with_label(kind.label(param)))
}

pub fn make(kind: CatalogKind, param: u32) -> Result<FiniteGroup> {
    make_with(kind, param, &GroupConfig::default())
}

pub fn cyclic(n: u32) -> Result<FiniteGroup> {
    make(CatalogKind::Cyclic, n)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: u32) -> Result<FiniteGroup> {
    make(CatalogKind::Dihedral, n)
}

pub fn symmetric(n: u32) -> Result<FiniteGroup> {
    make(CatalogKind::Symmetric, n)
}

pub fn alternating(n: u32) -> Result<FiniteGroup> {
    make(CatalogKind::Alternating, n)
}

pub fn sl2(p: u32) -> Result<FiniteGroup> {
    make(CatalogKind::SpecialLinear2, p)
}

pub fn psl2(p: u32) -> Result<FiniteGroup> {
    make(CatalogKind::ProjectiveSpecialLinear2, p)
}

/// `G x H` with its coordinate maps. Element `(g, h)` has index
/// `g * |H| + h`.
#[derive(Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    left_order: usize,
    right_order: usize,
}

impl DirectProduct {
    pub fn left_projection(&self, x: usize) -> usize {
        x / self.right_order
    }

    pub fn right_projection(&self, x: usize) -> usize {
        x % self.right_order
    }

    pub fn left_injection(&self, g: usize) -> usize {
        g * self.right_order
    }

    pub fn right_injection(&self, h: usize) -> usize {
        h
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }
}

/// Component-wise product. Two permutation groups give a permutation group
/// on the disjoint union of their points; anything else gives table elements.
pub fn direct_product_with(
    left: &FiniteGroup,
    right: &FiniteGroup,
    config: &GroupConfig,
) -> Result<DirectProduct> {
    let (a, b) = (left.order(), right.order());
    let n = a.checked_mul(b).ok_or(Error::CapExceeded {
        cap: config.max_order,
    })?;
    config.check(n)?;
    let both_perms = matches!(
        (left.element(0), right.element(0)),
        (GroupElement::Permutation(_), GroupElement::Permutation(_))
    );
    let elements = if both_perms {
        let mut out = Vec::with_capacity(n);
        for g in left.elements() {
            for h in right.elements() {
                match (g, h) {
                    (GroupElement::Permutation(p), GroupElement::Permutation(q)) => {
                        out.push(GroupElement::Permutation(p.juxtapose(q)))
                    }
                    _ => unreachable!("kinds are uniform within a group"),
                }
            }
        }
        Some(out)
    } else {
        None
    };
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        let (g1, h1) = (x / b, x % b);
        let row = &mut table[x * n..(x + 1) * n];
        for (y, slot) in row.iter_mut().enumerate() {
            let (g2, h2) = (y / b, y % b);
            *slot = (left.mul(g1, g2) * b + right.mul(h1, h2)) as u16;
        }
    }
    let mut gens: Vec<usize> = left.generators().iter().map(|&g| g * b).collect();
    gens.extend(right.generators().iter().copied());
    let label = format!("{} x {}", left.label(), right.label());
    let group = FiniteGroup::from_table(label, n, table, gens, elements)?;
    Ok(DirectProduct {
        group,
        left_order: a,
        right_order: b,
    })
}

pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Result<DirectProduct> {
    direct_product_with(left, right, &GroupConfig::default())
}

/// One row of the built-in self-test manifest.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub spec: &'static str,
    pub order: usize,
    pub solvable: bool,
    pub nilpotent: bool,
}

const fn entry(spec: &'static str, order: usize, solvable: bool, nilpotent: bool) -> CatalogEntry {
    CatalogEntry {
        spec,
        order,
        solvable,
        nilpotent,
    }
}

static MANIFEST: &[CatalogEntry] = &[
    entry("C1", 1, true, true),
    entry("C2", 2, true, true),
    entry("C3", 3, true, true),
    entry("C4", 4, true, true),
    entry("C5", 5, true, true),
    entry("C6", 6, true, true),
    entry("C7", 7, true, true),
    entry("C8", 8, true, true),
    entry("C12", 12, true, true),
    entry("D3", 6, true, false),
    entry("D4", 8, true, true),
    entry("D5", 10, true, false),
    entry("D6", 12, true, false),
    entry("D8", 16, true, true),
    entry("D12", 24, true, false),
    entry("S1", 1, true, true),
    entry("S2", 2, true, true),
    entry("S3", 6, true, false),
    entry("S4", 24, true, false),
    entry("S5", 120, false, false),
    entry("S6", 720, false, false),
    entry("S7", 5040, false, false),
    entry("A1", 1, true, true),
    entry("A2", 1, true, true),
    entry("A3", 3, true, true),
    entry("A4", 12, true, false),
    entry("A5", 60, false, false),
    entry("A6", 360, false, false),
    entry("A7", 2520, false, false),
    entry("SL2(2)", 6, true, false),
    entry("SL2(3)", 24, true, false),
    entry("SL2(5)", 120, false, false),
    entry("SL2(7)", 336, false, false),
    entry("PSL2(2)", 6, true, false),
    entry("PSL2(3)", 12, true, false),
    entry("PSL2(5)", 60, false, false),
    entry("PSL2(7)", 168, false, false),
    entry("C2 x C2", 4, true, true),
    entry("C2 x C3", 6, true, true),
    entry("S3 x C2", 12, true, false),
    entry("D4 x C3", 24, true, true),
    entry("A4 x C2", 24, true, false),
    entry("S3 x S3", 36, true, false),
    entry("SL2(3) x C2", 48, true, false),
    entry("A5 x C1", 60, false, false),
    entry("A5 x C2", 120, false, false),
    entry("A5 x S3", 360, false, false),
];

/// Every built-in group with its expected order and solvability flags.
pub fn manifest() -> &'static [CatalogEntry] {
    MANIFEST
}

/// Manifest entries with order at most `max_order`.
pub fn entries_up_to(max_order: usize) -> impl Iterator<Item = &'static CatalogEntry> {
    MANIFEST.iter().filter(move |e| e.order <= max_order)
}

/// Parses and builds a group from spec text.
pub fn build(text: &str, config: &GroupConfig) -> Result<FiniteGroup> {
    parse_spec(text)?.build(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::{group_is_nilpotent, group_is_solvable};

    #[test]
    fn orders_follow_formulas() {
        for n in 1..=6u32 {
            let f: usize = (1..=n as usize).product();
            assert_eq!(symmetric(n).unwrap().order(), f);
            assert_eq!(alternating(n).unwrap().order(), (f / 2).max(1));
        }
        for n in 1..=9 {
            assert_eq!(dihedral(n).unwrap().order(), 2 * n as usize);
            assert_eq!(cyclic(n).unwrap().order(), n as usize);
        }
        for p in [2u32, 3, 5, 7] {
            let q = (p * (p * p - 1)) as usize;
            assert_eq!(sl2(p).unwrap().order(), q);
            assert_eq!(psl2(p).unwrap().order(), q / if p == 2 { 1 } else { 2 });
        }
    }

    #[test]
    fn bad_params_and_cap() {
        assert!(matches!(
            make(CatalogKind::Cyclic, 0),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            make(CatalogKind::SpecialLinear2, 11),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            make(CatalogKind::Symmetric, 8),
            Err(Error::BadParams(_))
        ));
        let small = GroupConfig::with_max_order(100);
        assert_eq!(
            make_with(CatalogKind::Alternating, 6, &small).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
    }

    #[test]
    fn a5_times_c2() {
        let a5 = alternating(5).unwrap();
        let c2 = cyclic(2).unwrap();
        let p = direct_product(&a5, &c2).unwrap();
        assert_eq!(p.group.order(), 120);
        for x in 0..120 {
            for y in 0..120 {
                let xy = p.group.mul(x, y);
                assert_eq!(
                    p.left_projection(xy),
                    a5.mul(p.left_projection(x), p.left_projection(y))
                );
                assert_eq!(
                    p.right_projection(xy),
                    c2.mul(p.right_projection(x), p.right_projection(y))
                );
            }
        }
        let trivial = cyclic(1).unwrap();
        assert_eq!(direct_product(&a5, &trivial).unwrap().group.order(), 60);
        let c3 = cyclic(3).unwrap();
        let c6 = direct_product(&c2, &c3).unwrap().group;
        assert!(c6.is_abelian());
        assert!((0..6).any(|x| c6.element_order(x) == 6));
    }

    #[test]
    fn mixed_kind_product_uses_table() {
        let sl = sl2(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let p = direct_product(&sl, &c2).unwrap();
        assert_eq!(p.group.order(), 48);
        assert_eq!(p.group.render(5), "#5");
    }

    #[test]
    fn manifest_self_test_small() {
        for e in entries_up_to(360) {
            let g = build(e.spec, &GroupConfig::default()).unwrap();
            assert_eq!(g.order(), e.order, "{}", e.spec);
            assert_eq!(group_is_solvable(&g), e.solvable, "{}", e.spec);
            assert_eq!(group_is_nilpotent(&g), e.nilpotent, "{}", e.spec);
            assert_eq!(g.label(), e.spec);
        }
    }
}
