//! Group-spec grammar:
//!
//! ```text
//! spec    := term ( "x" term )*
//! term    := catalog | perm | mat
//! catalog := ("C" | "D" | "S" | "A") int | ("SL2" | "PSL2") "(" int ")"
//!          | ("SL" | "PSL") "(" "2" "," int ")"
//! perm    := "perm:" gen ( ";" gen )*
//! gen     := "()" | cycle+
//! cycle   := "(" int ( "," int )* ")"
//! mat     := "mat" "p=" int "n=" int ":" matrix ( ";" matrix )*
//! matrix  := "[" row ( "," row )* "]"
//! row     := "[" int ( "," int )* "]"
//! ```
//!
//! Points are 1-based in text and 0-based in memory.

use std::fmt;

use super::{direct_product_with, make_with, CatalogKind};
use crate::element::{is_prime, GroupElement, MatrixModP, Permutation, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupConfig};

/// Largest prime modulus accepted for matrix groups.
const MAX_MODULUS: u64 = 65_521;
const MAX_DIM: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Catalog {
        kind: CatalogKind,
        param: u32,
    },
    /// One entry per generator, each a list of 0-based cycles.
    PermGenerators(Vec<Vec<Vec<usize>>>),
    MatrixGenerators {
        p: u32,
        n: usize,
        gens: Vec<Vec<u32>>,
    },
    DirectProduct(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Number of points permutation generators act on.
    fn perm_degree(gens: &[Vec<Vec<usize>>]) -> usize {
        gens.iter()
            .flatten()
            .flatten()
            .map(|&x| x + 1)
            .max()
            .unwrap_or(1)
    }

    pub fn build(&self, config: &GroupConfig) -> Result<FiniteGroup> {
        let label = self.to_string();
        let group = match self {
            GroupSpec::Catalog { kind, param } => make_with(*kind, *param, config)?,
            GroupSpec::PermGenerators(gens) => {
                let d = Self::perm_degree(gens);
                let elems = gens
                    .iter()
                    .map(|cycles| {
                        Permutation::from_cycles(d, cycles).map(GroupElement::Permutation)
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::close_generators(&elems, config)?
            }
            GroupSpec::MatrixGenerators { p, n, gens } => {
                let elems = gens
                    .iter()
                    .map(|m| MatrixModP::new(*p, *n, m.clone()).map(GroupElement::MatrixModP))
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::close_generators(&elems, config)?
            }
            GroupSpec::DirectProduct(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::BadParams("empty product".into()))?;
                let mut acc = first.build(config)?;
                for part in iter {
                    let rhs = part.build(config)?;
                    acc = direct_product_with(&acc, &rhs, config)?.group;
                }
                acc
            }
        };
        Ok(group.with_label(label))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Catalog { kind, param } => f.write_str(&kind.label(*param)),
            GroupSpec::PermGenerators(gens) => {
                f.write_str("perm: ")?;
                for (i, cycles) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    if cycles.is_empty() {
                        f.write_str("()")?;
                    }
                    for cycle in cycles {
                        let pts: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
                        write!(f, "({})", pts.join(","))?;
                    }
                }
                Ok(())
            }
            GroupSpec::MatrixGenerators { p, n, gens } => {
                write!(f, "mat p={p} n={n}: ")?;
                for (i, m) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    let rows: Vec<String> = m
                        .chunks(*n)
                        .map(|r| {
                            let r: Vec<String> = r.iter().map(u32::to_string).collect();
                            format!("[{}]", r.join(","))
                        })
                        .collect();
                    write!(f, "[{}]", rows.join(","))?;
                }
                Ok(())
            }
            GroupSpec::DirectProduct(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join(" x "))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let end = self.pos + kw.len();
        if end <= self.src.len() && self.src[self.pos..end].eq_ignore_ascii_case(kw.as_bytes()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u64>() {
            Ok(v) => Ok((v, start)),
            Err(_) => Err(Error::OutOfRange {
                pos: start,
                msg: format!("integer {text} too large"),
            }),
        }
    }

    /// Product separator: `x`/`X` standing alone, or `×`.
    fn eat_times(&mut self) -> bool {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        if rest.starts_with("×".as_bytes()) {
            self.pos += "×".len();
            return true;
        }
        if matches!(rest.first(), Some(b'x' | b'X'))
            && rest.get(1).is_none_or(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
            return true;
        }
        false
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut parts = vec![self.term()?];
        while self.eat_times() {
            parts.push(self.term()?);
        }
        if !self.at_end() {
            return self.err("unexpected trailing input");
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GroupSpec::DirectProduct(parts)
        })
    }

    fn term(&mut self) -> Result<GroupSpec> {
        if self.eat_keyword("perm") {
            self.expect(b':')?;
            let mut gens = vec![self.generator()?];
            while self.eat(b';') {
                gens.push(self.generator()?);
            }
            return Ok(GroupSpec::PermGenerators(gens));
        }
        if self.eat_keyword("mat") {
            return self.matrices();
        }
        self.catalog()
    }

    fn catalog(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let mut name = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_ascii_uppercase();
        if name.is_empty() {
            return self.err("expected a group name, `perm:` or `mat`");
        }
        // SL2 / PSL2 carry a digit in the name
        if (name == "SL" || name == "PSL") && self.src.get(self.pos) == Some(&b'2') {
            self.pos += 1;
            name.push('2');
        }
        let parsed = match name.as_str() {
            "SL" => Ok(CatalogKind::SpecialLinear2),
            "PSL" => Ok(CatalogKind::ProjectiveSpecialLinear2),
            other => other.parse(),
        };
        let kind: CatalogKind = match parsed {
            Ok(k) => k,
            Err(_) => {
                self.pos = start;
                return self.err(format!("unknown group name `{name}`"));
            }
        };
        let param = match (name.as_str(), kind) {
            ("SL" | "PSL", _) => {
                self.expect(b'(')?;
                let (two, at) = self.int()?;
                if two != 2 {
                    return Err(Error::OutOfRange {
                        pos: at,
                        msg: "only dimension 2 is built in".into(),
                    });
                }
                self.expect(b',')?;
                let (p, _) = self.int()?;
                self.expect(b')')?;
                p
            }
            (_, CatalogKind::SpecialLinear2 | CatalogKind::ProjectiveSpecialLinear2) => {
                self.expect(b'(')?;
                let (p, _) = self.int()?;
                self.expect(b')')?;
                p
            }
            _ => {
                if self.eat(b'(') {
                    let (v, _) = self.int()?;
                    self.expect(b')')?;
                    v
                } else {
                    self.int()?.0
                }
            }
        };
        let param = u32::try_from(param).map_err(|_| Error::OutOfRange {
            pos: start,
            msg: format!("parameter {param} too large"),
        })?;
        Ok(GroupSpec::Catalog { kind, param })
    }

    fn generator(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        if self.peek() != Some(b'(') {
            return self.err("expected a cycle");
        }
        while self.peek() == Some(b'(') {
            let save = self.pos;
            self.pos += 1;
            if self.eat(b')') {
                if !cycles.is_empty() {
                    self.pos = save;
                    return self.err("empty cycle inside a product");
                }
                return Ok(cycles);
            }
            cycles.push(self.cycle_body()?);
        }
        Ok(cycles)
    }

    fn cycle_body(&mut self) -> Result<Vec<usize>> {
        let mut cycle = Vec::new();
        loop {
            let (v, at) = self.int()?;
            if v == 0 || v as usize > MAX_DEGREE {
                return Err(Error::OutOfRange {
                    pos: at,
                    msg: format!("point {v} outside 1..={MAX_DEGREE}"),
                });
            }
            let x = v as usize - 1;
            if cycle.contains(&x) {
                self.pos = at;
                return self.err(format!("point {v} repeated in a cycle"));
            }
            cycle.push(x);
            if self.eat(b')') {
                return Ok(cycle);
            }
            self.expect(b',')?;
        }
    }

    fn matrices(&mut self) -> Result<GroupSpec> {
        if !self.eat_keyword("p=") {
            return self.err("expected `p=`");
        }
        let (p, at) = self.int()?;
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::OutOfRange {
                pos: at,
                msg: format!("modulus {p} is not a prime up to {MAX_MODULUS}"),
            });
        }
        if !self.eat_keyword("n=") {
            return self.err("expected `n=`");
        }
        let (n, at) = self.int()?;
        if n == 0 || n > MAX_DIM {
            return Err(Error::OutOfRange {
                pos: at,
                msg: format!("dimension {n} outside 1..={MAX_DIM}"),
            });
        }
        self.expect(b':')?;
        let (p, n) = (p as u32, n as usize);
        let mut gens = vec![self.matrix(p, n)?];
        while self.eat(b';') {
            gens.push(self.matrix(p, n)?);
        }
        Ok(GroupSpec::MatrixGenerators { p, n, gens })
    }

    fn matrix(&mut self, p: u32, n: usize) -> Result<Vec<u32>> {
        self.expect(b'[')?;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            if r > 0 {
                self.expect(b',')?;
            }
            self.expect(b'[')?;
            for c in 0..n {
                if c > 0 {
                    self.expect(b',')?;
                }
                let (v, at) = self.int()?;
                if v >= p as u64 {
                    return Err(Error::OutOfRange {
                        pos: at,
                        msg: format!("entry {v} not reduced modulo {p}"),
                    });
                }
                entries.push(v as u32);
            }
            self.expect(b']')?;
        }
        self.expect(b']')?;
        Ok(entries)
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    Parser::new(text).spec()
}

/// Resolves element text (`(1,2,3)`, `[[1,1],[0,1]]`, `#k`) to an index of
/// `group`.
pub fn parse_element(group: &FiniteGroup, text: &str) -> Result<usize> {
    let not_in = || Error::ElementNotInGroup(text.trim().to_string());
    let mut parser = Parser::new(text);
    let element = match group.element(0) {
        GroupElement::Permutation(id) => {
            let cycles = parser.generator()?;
            let max = cycles.iter().flatten().max().map_or(0, |&x| x + 1);
            if max > id.degree() {
                return Err(not_in());
            }
            GroupElement::Permutation(Permutation::from_cycles(id.degree(), &cycles)?)
        }
        GroupElement::MatrixModP(id) => {
            let entries = parser.matrix(id.modulus(), id.dim())?;
            match MatrixModP::new(id.modulus(), id.dim(), entries) {
                Ok(m) => GroupElement::MatrixModP(m),
                Err(Error::SingularMatrix { .. }) => return Err(not_in()),
                Err(e) => return Err(e),
            }
        }
        GroupElement::TableIndex(_) => {
            parser.expect(b'#')?;
            let (k, _) = parser.int()?;
            GroupElement::TableIndex(k as usize)
        }
    };
    if !parser.at_end() {
        return parser.err("unexpected trailing input");
    }
    group.index_of(&element).ok_or_else(not_in)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn catalog_names() {
        assert_eq!(
            parse_spec("A5").unwrap(),
            GroupSpec::Catalog {
                kind: CatalogKind::Alternating,
                param: 5
            }
        );
        assert_eq!(
            parse_spec("SL(2,5)").unwrap(),
            parse_spec("SL2(5)").unwrap()
        );
        assert_eq!(parse_spec(" psl2(7) ").unwrap().to_string(), "PSL2(7)");
    }

    #[test]
    fn permutation_generators() {
        let spec = parse_spec("perm: (1,2,3,4,5); (1,2,3)").unwrap();
        assert_eq!(
            spec,
            GroupSpec::PermGenerators(vec![vec![vec![0, 1, 2, 3, 4]], vec![vec![0, 1, 2]]])
        );
        assert_eq!(spec.build(&GroupConfig::default()).unwrap().order(), 60);
        let spec = parse_spec("perm: (1,2)(3,4); ()").unwrap();
        assert_eq!(spec.to_string(), "perm: (1,2)(3,4); ()");
    }

    #[test]
    fn matrix_generators() {
        let spec = parse_spec("mat p=5 n=2: [[1,1],[0,1]]; [[0,4],[1,0]]").unwrap();
        assert_eq!(spec.build(&GroupConfig::default()).unwrap().order(), 120);
        let singular = parse_spec("mat p=5 n=2: [[1,2],[2,4]]").unwrap();
        assert_eq!(
            singular.build(&GroupConfig::default()).unwrap_err(),
            Error::SingularMatrix { p: 5 }
        );
    }

    #[test]
    fn products() {
        let spec = parse_spec("A5 x C2").unwrap();
        assert_eq!(spec.to_string(), "A5 x C2");
        let g = spec.build(&GroupConfig::default()).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.label(), "A5 x C2");
        assert_eq!(parse_spec("A5 × C2").unwrap(), spec);
        let g = parse_spec("perm: (1,2) x C3")
            .unwrap()
            .build(&GroupConfig::default())
            .unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_spec("Q8"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(
            parse_spec("perm: (1,0)"),
            Err(Error::OutOfRange { pos: 9, .. })
        ));
        assert!(matches!(
            parse_spec("perm: (1,2"),
            Err(Error::Parse { pos: 10, .. })
        ));
        assert!(matches!(
            parse_spec("mat p=6 n=2: [[1,0],[0,1]]"),
            Err(Error::OutOfRange { pos: 6, .. })
        ));
        assert!(matches!(
            parse_spec("mat p=5 n=2: [[1,7],[0,1]]"),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(parse_spec("A5 C2"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_spec("perm: (1,2,1)"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_spec(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn elements_resolve() {
        let a5 = parse_spec("A5")
            .unwrap()
            .build(&GroupConfig::default())
            .unwrap();
        let i = parse_element(&a5, "(1,2,3)").unwrap();
        assert_eq!(a5.render(i), "(1,2,3)");
        assert_eq!(parse_element(&a5, "()").unwrap(), 0);
        assert!(matches!(
            parse_element(&a5, "(1,2)"),
            Err(Error::ElementNotInGroup(_))
        ));
        assert!(matches!(
            parse_element(&a5, "(1,6,2)"),
            Err(Error::ElementNotInGroup(_))
        ));
        let sl = parse_spec("SL2(5)")
            .unwrap()
            .build(&GroupConfig::default())
            .unwrap();
        let j = parse_element(&sl, "[[1,1],[0,1]]").unwrap();
        assert_eq!(sl.render(j), "[[1,1],[0,1]]");
        let psl = parse_spec("PSL2(5)")
            .unwrap()
            .build(&GroupConfig::default())
            .unwrap();
        assert_eq!(parse_element(&psl, "#7").unwrap(), 7);
        assert!(parse_element(&psl, "#70").is_err());
    }

    fn arb_term() -> impl Strategy<Value = GroupSpec> {
        let catalog = (0usize..6, 1u32..20).prop_map(|(k, param)| {
            let kind = [
                CatalogKind::Cyclic,
                CatalogKind::Dihedral,
                CatalogKind::Symmetric,
                CatalogKind::Alternating,
                CatalogKind::SpecialLinear2,
                CatalogKind::ProjectiveSpecialLinear2,
            ][k];
            GroupSpec::Catalog { kind, param }
        });
        let cycle =
            proptest::sample::subsequence((0usize..12).collect::<Vec<_>>(), 2..5).prop_shuffle();
        let perm = proptest::collection::vec(proptest::collection::vec(cycle, 0..3), 1..4)
            .prop_map(GroupSpec::PermGenerators);
        let mat = (
            prop_oneof![Just(2u32), Just(3), Just(5), Just(7)],
            1usize..4,
        )
            .prop_flat_map(|(p, n)| {
                proptest::collection::vec(proptest::collection::vec(0..p, n * n), 1..3)
                    .prop_map(move |gens| GroupSpec::MatrixGenerators { p, n, gens })
            });
        prop_oneof![catalog, perm, mat]
    }

    fn arb_spec() -> impl Strategy<Value = GroupSpec> {
        proptest::collection::vec(arb_term(), 1..4).prop_map(|mut parts| {
            if parts.len() == 1 {
                parts.pop().unwrap()
            } else {
                GroupSpec::DirectProduct(parts)
            }
        })
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(spec in arb_spec()) {
            let text = spec.to_string();
            prop_assert_eq!(parse_spec(&text).unwrap(), spec);
        }
    }
}
