//! Slow reference implementations that share no code with the library
//! beyond the multiplication table.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use solvagraph::FiniteGroup;

pub type Set = BTreeSet<usize>;

/// Closure of `seeds` under multiplication, by repeated products.
pub fn closure(g: &FiniteGroup, seeds: &[usize]) -> Set {
    let mut set: Set = seeds.iter().copied().collect();
    set.insert(g.identity());
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &items {
            for &b in &items {
                grew |= set.insert(g.mul(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

fn commutator(g: &FiniteGroup, a: usize, b: usize) -> usize {
    g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))
}

/// `[A, B]` as the closure of all commutators.
pub fn commutator_subgroup(g: &FiniteGroup, a: &Set, b: &Set) -> Set {
    let comms: Vec<usize> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .map(|(x, y)| commutator(g, x, y))
        .collect::<Set>()
        .into_iter()
        .collect();
    closure(g, &comms)
}

pub fn solvable(g: &FiniteGroup, h: &Set) -> bool {
    let mut cur = h.clone();
    loop {
        if cur.len() == 1 {
            return true;
        }
        let next = commutator_subgroup(g, &cur, &cur);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

pub fn nilpotent(g: &FiniteGroup, h: &Set) -> bool {
    let mut cur = h.clone();
    loop {
        if cur.len() == 1 {
            return true;
        }
        let next = commutator_subgroup(g, h, &cur);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

/// Symmetric table `rel[i][j]` of whether `<i, j>` is solvable (or nilpotent).
pub fn pair_table(g: &FiniteGroup, nilpotent_mode: bool) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i..n {
            let h = closure(g, &[i, j]);
            let r = if nilpotent_mode {
                nilpotent(g, &h)
            } else {
                solvable(g, &h)
            };
            rel[i][j] = r;
            rel[j][i] = r;
        }
    }
    rel
}

/// Conjugacy class sizes by direct conjugation.
pub fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: Set = (0..n).map(|t| g.mul(g.mul(t, x), g.inv(t))).collect();
        for &y in &class {
            seen[y] = true;
        }
        sizes.push(class.len());
    }
    sizes
}
