//! Fully enumerated finite groups with a precomputed Cayley table.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use rayon::prelude::*;

use crate::conjugacy::ConjugacyTable;
use crate::element::GroupElement;
use crate::error::{Error, Result};

/// Default closure cap; A7 (2520) fits comfortably.
pub const DEFAULT_MAX_ORDER: usize = 10080;

/// Element indices are stored as `u16` in the Cayley table.
pub const HARD_MAX_ORDER: usize = 1 << 16;

/// Environment variable overriding the closure cap.
pub const MAX_ORDER_ENV: &str = "SOLVAGRAPH_MAX_ORDER";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    pub max_order: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl GroupConfig {
    pub fn with_max_order(max_order: usize) -> Self {
        Self {
            max_order: max_order.min(HARD_MAX_ORDER),
        }
    }

    /// Default config, with the cap taken from `SOLVAGRAPH_MAX_ORDER` when set.
    pub fn from_env() -> Self {
        match std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(cap) => Self::with_max_order(cap),
            None => Self::default(),
        }
    }

    pub(crate) fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order.min(HARD_MAX_ORDER) {
            Err(Error::CapExceeded {
                cap: self.max_order.min(HARD_MAX_ORDER),
            })
        } else {
            Ok(())
        }
    }
}

/// A finite group with every element enumerated.
///
/// Index 0 is always the identity. Multiplication, inversion and element
/// orders are table lookups; conjugacy data is computed on first use and
/// cached. The value is immutable once built and can be shared freely
/// across threads.
pub struct FiniteGroup {
    label: String,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    table: Vec<u16>,
    inverses: Vec<u16>,
    orders: Vec<u32>,
    generators: Vec<usize>,
    classes: OnceLock<ConjugacyTable>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates `<gens>` by breadth-first closure.
    pub fn close_generators(gens: &[GroupElement], config: &GroupConfig) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::IncompatibleElements("no generators given".into()))?;
        for g in gens {
            if let GroupElement::MatrixModP(m) = g {
                if m.determinant() == 0 {
                    return Err(Error::SingularMatrix { p: m.modulus() });
                }
            }
            if !first.compatible_with(g) {
                return Err(Error::IncompatibleElements(format!(
                    "generator {g} ({}) does not match {first} ({})",
                    g.kind_name(),
                    first.kind_name()
                )));
            }
        }
        let identity = first.identity_like().ok_or_else(|| {
            Error::IncompatibleElements("table indices cannot be closed without a table".into())
        })?;

        let k = gens.len();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        // Each non-identity element j is parent[j] * gens[via[j]].
        let mut parent = vec![0usize];
        let mut via = vec![0usize];
        let mut rmul: Vec<u16> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let prod = elements[head].multiply(g)?;
                let idx = match index.get(&prod) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elements.len();
                        config.check(idx + 1)?;
                        index.insert(prod.clone(), idx);
                        elements.push(prod);
                        parent.push(head);
                        via.push(gi);
                        idx
                    }
                };
                rmul.push(idx as u16);
            }
            head += 1;
        }

        let n = elements.len();
        let mut table = vec![0u16; n * n];
        table.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            row[0] = i as u16;
            for j in 1..n {
                row[j] = rmul[row[parent[j]] as usize * k + via[j]];
            }
        });

        let generators: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let label = format!(
            "<{}>",
            gens.iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
        Ok(Self::assemble(label, elements, index, table, generators))
    }

    /// Builds a group from a full multiplication table whose row and column 0
    /// are the identity. Elements default to [`GroupElement::TableIndex`].
    pub fn from_table(
        label: impl Into<String>,
        order: usize,
        table: Vec<u16>,
        generators: Vec<usize>,
        elements: Option<Vec<GroupElement>>,
    ) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::BadParams("table size does not match order".into()));
        }
        if (0..order).any(|i| table[i] as usize != i || table[i * order] as usize != i) {
            return Err(Error::BadParams("index 0 is not the identity".into()));
        }
        let elements =
            elements.unwrap_or_else(|| (0..order).map(GroupElement::TableIndex).collect());
        if elements.len() != order {
            return Err(Error::BadParams("element list does not match order".into()));
        }
        let index: HashMap<GroupElement, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        if index.len() != order {
            return Err(Error::BadParams("duplicate elements".into()));
        }
        Ok(Self::assemble(
            label.into(),
            elements,
            index,
            table,
            generators,
        ))
    }

    fn assemble(
        label: String,
        elements: Vec<GroupElement>,
        index: HashMap<GroupElement, usize>,
        table: Vec<u16>,
        mut generators: Vec<usize>,
    ) -> Self {
        let n = elements.len();
        let inverses: Vec<u16> = (0..n)
            .into_par_iter()
            .map(|i| {
                let row = &table[i * n..(i + 1) * n];
                row.iter()
                    .position(|&x| x == 0)
                    .expect("every row has the identity") as u16
            })
            .collect();
        let orders: Vec<u32> = (0..n)
            .map(|i| {
                let mut k = 1;
                let mut x = i;
                while x != 0 {
                    x = table[x * n + i] as usize;
                    k += 1;
                }
                k
            })
            .collect();
        let mut seen = Vec::new();
        generators.retain(|g| {
            let fresh = !seen.contains(g);
            seen.push(*g);
            fresh
        });
        if generators.is_empty() {
            generators.push(0);
        }
        Self {
            label,
            elements,
            index,
            table,
            inverses,
            orders,
            generators,
            classes: OnceLock::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Human-readable rendering of element `i`.
    pub fn render(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.element_order(a) as u64;
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Least `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn classes(&self) -> &ConjugacyTable {
        self.classes.get_or_init(|| ConjugacyTable::compute(self))
    }

    /// Randomized check of associativity, identity and inverses on `triples`
    /// sampled triples. Returns the first failing triple.
    pub fn spot_check_axioms<R: Rng>(
        &self,
        rng: &mut R,
        triples: usize,
    ) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for a in 0..n {
            if self.mul(a, 0) != a || self.mul(0, a) != a || self.mul(a, self.inv(a)) != 0 {
                return Some((a, a, a));
            }
        }
        for _ in 0..triples {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Some((a, b, c));
            }
        }
        None
    }
}
