use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::set::ElementSet;
use crate::subgroup::{is_normal_sub, Subgroup};

/// `G/N` together with the projection `G -> G/N` on element indices.
#[derive(Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    /// Least element index of each coset, indexed by quotient element.
    pub representatives: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// `π(S)`.
    pub fn project_set(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.group.order(), set.iter().map(|x| self.projection[x]))
    }

    /// `π⁻¹(S)`.
    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.projection.len(),
            (0..self.projection.len()).filter(|&x| set.contains(self.projection[x])),
        )
    }
}

/// Cosets `gN` become table elements, numbered by their least member.
pub fn quotient_group(group: &FiniteGroup, normal: &ElementSet) -> Result<Quotient> {
    let sub = Subgroup::from_set(group, normal).ok_or(Error::NotASubgroup)?;
    if !is_normal_sub(group, &sub) {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for g in 0..n {
        if projection[g] != usize::MAX {
            continue;
        }
        let k = representatives.len();
        representatives.push(g);
        for m in normal.iter() {
            projection[group.mul(g, m)] = k;
        }
    }
    let q = representatives.len();
    let mut table = vec![0u16; q * q];
    for (i, &a) in representatives.iter().enumerate() {
        for (j, &b) in representatives.iter().enumerate() {
            table[i * q + j] = projection[group.mul(a, b)] as u16;
        }
    }
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .map(|&g| projection[g])
        .filter(|&x| x != 0)
        .collect();
    let label = format!("{}/N{}", group.label(), normal.len());
    let qgroup = FiniteGroup::from_table(label, q, table, gens, None)?;
    Ok(Quotient {
        group: qgroup,
        projection,
        representatives,
    })
}
