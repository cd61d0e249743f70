//! Concrete group elements: permutations, invertible matrices over a prime
//! field, and bare indices into an abstract Cayley table.

use std::fmt;

use crate::error::{Error, Result};

/// Largest number of points a permutation may act on.
pub const MAX_DEGREE: usize = 256;

/// A permutation of `{0, .., d-1}` stored as its image array.
///
/// Products follow the left-to-right convention: `p.then(q)` applies `p`
/// first and `q` second, so `(1,2)(1,3)` in cycle notation is read the same
/// way GAP reads it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d > MAX_DEGREE {
            return Err(Error::InvalidElement(format!(
                "degree {d} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::InvalidElement(format!(
                    "{images:?} is not a bijection on {d} points"
                )));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation of `degree` points from disjoint or overlapping
    /// cycles of 0-based points, multiplied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidElement(format!(
                        "point {} outside degree {degree}",
                        a + 1
                    )));
                }
                if cycle[..k].contains(&a) {
                    return Err(Error::InvalidElement(format!(
                        "point {} repeated in a cycle",
                        a + 1
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
            acc = acc.then(&Self::from_images(images)?);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Extends the permutation with fixed points up to `degree`.
    pub fn padded(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Self { images }
    }

    /// Places `other` on the points after `self`'s.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let shift = self.degree() as u16;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Self { images }
    }

    /// Non-trivial cycles in 0-based points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An invertible `n x n` matrix with entries in `Z/pZ`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixModP {
    p: u32,
    n: usize,
    entries: Vec<u32>,
}

impl MatrixModP {
    pub fn new(p: u32, n: usize, entries: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidElement(format!("modulus {p} is not prime")));
        }
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidElement(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= p) {
            return Err(Error::InvalidElement(format!(
                "entry {bad} not reduced modulo {p}"
            )));
        }
        let m = Self { p, n, entries };
        if m.determinant() == 0 {
            return Err(Error::SingularMatrix { p });
        }
        Ok(m)
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { p, n, entries }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n, p) = (self.n, self.p as u64);
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                entries[i * n + j] = (acc % p) as u32;
            }
        }
        Self {
            p: self.p,
            n,
            entries,
        }
    }

    /// Determinant modulo `p` by Gaussian elimination.
    pub fn determinant(&self) -> u32 {
        let (n, p) = (self.n, self.p as u64);
        let mut a: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let pinv = mod_pow(pv, p - 2, p);
            for r in col + 1..n {
                let factor = a[r * n + col] * pinv % p;
                if factor == 0 {
                    continue;
                }
                for k in col..n {
                    let sub = factor * a[col * n + k] % p;
                    a[r * n + k] = (a[r * n + k] + p - sub) % p;
                }
            }
        }
        det as u32
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for MatrixModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// The carrier of every group element handled by the crate.
///
/// Equality and hashing go through the canonical encoding (image array,
/// row-major residues, or the bare index), which is injective per kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Permutation(Permutation),
    MatrixModP(MatrixModP),
    TableIndex(usize),
}

impl GroupElement {
    pub fn kind_name(&self) -> &'static str {
        match self {
            GroupElement::Permutation(_) => "permutation",
            GroupElement::MatrixModP(_) => "matrix",
            GroupElement::TableIndex(_) => "table index",
        }
    }

    /// Whether two elements live in a common ambient group of the same shape.
    pub fn compatible_with(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupElement::Permutation(a), GroupElement::Permutation(b)) => {
                a.degree() == b.degree()
            }
            (GroupElement::MatrixModP(a), GroupElement::MatrixModP(b)) => a.p == b.p && a.n == b.n,
            _ => false,
        }
    }

    /// The identity of the same shape as `self`; `None` for table indices.
    pub fn identity_like(&self) -> Option<Self> {
        match self {
            GroupElement::Permutation(a) => {
                Some(GroupElement::Permutation(Permutation::identity(a.degree())))
            }
            GroupElement::MatrixModP(m) => {
                Some(GroupElement::MatrixModP(MatrixModP::identity(m.p, m.n)))
            }
            GroupElement::TableIndex(_) => None,
        }
    }

    /// `self * other` for concrete kinds; table indices have no intrinsic
    /// arithmetic and must go through their parent group.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::Permutation(a), GroupElement::Permutation(b))
                if a.degree() == b.degree() =>
            {
                Ok(GroupElement::Permutation(a.then(b)))
            }
            (GroupElement::MatrixModP(a), GroupElement::MatrixModP(b))
                if a.p == b.p && a.n == b.n =>
            {
                Ok(GroupElement::MatrixModP(a.mul(b)))
            }
            _ => Err(Error::IncompatibleElements(format!(
                "cannot multiply {} by {}",
                self.kind_name(),
                other.kind_name()
            ))),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Permutation(p) => p.fmt(f),
            GroupElement::MatrixModP(m) => m.fmt(f),
            GroupElement::TableIndex(k) => write!(f, "#{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(2,3)(4,5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let c = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(c.to_string(), "(1,2,3,4,5)");
    }

    #[test]
    fn composition_is_left_to_right() {
        // (1,2) then (1,3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![0, 2]]).unwrap();
        assert_eq!(a.then(&b).to_string(), "(1,2,3)");
        let ab = Permutation::from_cycles(3, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(ab, a.then(&b));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn singular_matrix_rejected() {
        assert_eq!(
            MatrixModP::new(5, 2, vec![1, 2, 2, 4]),
            Err(Error::SingularMatrix { p: 5 })
        );
        assert!(MatrixModP::new(5, 2, vec![1, 1, 0, 1]).is_ok());
        assert!(MatrixModP::new(6, 2, vec![1, 0, 0, 1]).is_err());
        assert!(MatrixModP::new(5, 2, vec![5, 0, 0, 1]).is_err());
    }

    #[test]
    fn determinant_mod_p() {
        let m = MatrixModP::new(7, 3, vec![2, 0, 1, 1, 3, 0, 0, 1, 4]).unwrap();
        // 2*(12-0) - 0 + 1*(1-0) = 25 = 4 mod 7
        assert_eq!(m.determinant(), 4);
        let s = MatrixModP::new(5, 2, vec![0, 4, 1, 0]).unwrap();
        assert_eq!(s.determinant(), 1);
        assert_eq!(s.to_string(), "[[0,4],[1,0]]");
    }
}
