use crate::group::FiniteGroup;
use crate::set::ElementSet;

/// Partition of a group into conjugacy classes.
///
/// Classes are numbered in order of their least element, which is also the
/// class representative. For every element `x` the table records a
/// conjugator `t` with `t * rep * t^-1 = x`, so per-class data computed on
/// the representative can be transported to any member.
#[derive(Clone, Debug)]
pub struct ConjugacyTable {
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    members: Vec<Vec<usize>>,
    conjugator: Vec<usize>,
    order: usize,
}

impl ConjugacyTable {
    pub fn compute(group: &FiniteGroup) -> Self {
        let n = group.order();
        let gens = group.generators();
        let mut class_of = vec![usize::MAX; n];
        let mut conjugator = vec![0; n];
        let mut representatives = Vec::new();
        let mut members = Vec::new();
        for rep in 0..n {
            if class_of[rep] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(rep);
            class_of[rep] = c;
            conjugator[rep] = 0;
            let mut orbit = vec![rep];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &g in gens {
                    let y = group.conj(g, x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        conjugator[y] = group.mul(g, conjugator[x]);
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        Self {
            class_of,
            representatives,
            members,
            conjugator,
            order: n,
        }
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn representative_of(&self, x: usize) -> usize {
        self.representatives[self.class_of[x]]
    }

    /// Members of class `c` in increasing index order.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// `|C_G(rep)|` for class `c`, by the orbit-stabilizer theorem.
    pub fn centralizer_order(&self, c: usize) -> usize {
        self.order / self.members[c].len()
    }

    pub fn centralizer_orders(&self) -> Vec<usize> {
        (0..self.class_count())
            .map(|c| self.centralizer_order(c))
            .collect()
    }

    /// A `t` with `t * representative_of(x) * t^-1 = x`.
    pub fn conjugator(&self, x: usize) -> usize {
        self.conjugator[x]
    }

    pub fn class_set(&self, c: usize) -> ElementSet {
        ElementSet::from_indices(self.order, self.members[c].iter().copied())
    }
}
