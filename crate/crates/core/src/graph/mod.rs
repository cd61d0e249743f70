//! The non-solvable graph: vertices are group elements, `x ~ y` when
//! `<x, y>` is not solvable (or not nilpotent, in nilpotent mode).

mod export;
mod k44;
mod verify;

pub use export::{export_graph, ExportFormat};
pub use k44::{find_k44, K44Route, K44Witness};
pub use verify::{verify_graph, GraphOptions, GraphReport};

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::solv::{RelationMode, SolvabilizerMap};

const NO_POSITION: u32 = u32::MAX;

/// Either the full graph on `G` or the induced graph on `G \ radical`.
///
/// Vertices keep their element index; adjacency rows are bitsets over
/// dense vertex positions.
#[derive(Clone, Debug)]
pub struct NonSolvableGraph<'g> {
    group: &'g FiniteGroup,
    mode: RelationMode,
    induced: bool,
    vertices: Vec<usize>,
    position: Vec<u32>,
    adjacency: Vec<FixedBitSet>,
    degrees: Vec<usize>,
    radical_size: usize,
}

/// Graph diameter; `Infinite` for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub distinct_count: usize,
    /// degree -> number of vertices with that degree
    pub multiset: BTreeMap<usize, usize>,
}

/// Builds the graph from scratch.
pub fn build_graph(group: &FiniteGroup, mode: RelationMode, induced: bool) -> NonSolvableGraph<'_> {
    NonSolvableGraph::from_solvabilizers(&SolvabilizerMap::compute(group, mode), induced)
}

impl<'g> NonSolvableGraph<'g> {
    /// Rows are complements of the (transported) per-class solvabilizers.
    pub fn from_solvabilizers(map: &SolvabilizerMap<'g>, induced: bool) -> Self {
        let group = map.group();
        let n = group.order();
        let radical = map.radical();
        let vertices: Vec<usize> = if induced {
            radical.complement().to_vec()
        } else {
            (0..n).collect()
        };
        let mut position = vec![NO_POSITION; n];
        for (p, &v) in vertices.iter().enumerate() {
            position[v] = p as u32;
        }
        let adjacency: Vec<FixedBitSet> = vertices
            .par_iter()
            .map(|&x| {
                let sol = map.of_element(x);
                let mut row = FixedBitSet::with_capacity(vertices.len());
                for (p, &y) in vertices.iter().enumerate() {
                    if !sol.contains(y) {
                        row.insert(p);
                    }
                }
                row
            })
            .collect();
        let degrees = adjacency.iter().map(|r| r.count_ones(..)).collect();
        Self {
            group,
            mode: map.mode(),
            induced,
            vertices,
            position,
            adjacency,
            degrees,
            radical_size: radical.len(),
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn mode(&self) -> RelationMode {
        self.mode
    }

    pub fn is_induced(&self) -> bool {
        self.induced
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn radical_size(&self) -> usize {
        self.radical_size
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        match self.position.get(x) {
            Some(&p) if p != NO_POSITION => Some(p as usize),
            _ => None,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position(x).is_some()
    }

    /// Degree of element `x`, or `None` if `x` is not a vertex.
    pub fn degree(&self, x: usize) -> Option<usize> {
        self.position(x).map(|p| self.degrees[p])
    }

    /// Degrees in vertex-position order.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        match (self.position(x), self.position(y)) {
            (Some(p), Some(q)) => self.adjacency[p].contains(q),
            _ => false,
        }
    }

    /// Neighbours of `x` as element indices, ascending.
    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        self.position(x)
            .map(|p| self.adjacency[p].ones().map(|q| self.vertices[q]).collect())
            .unwrap_or_default()
    }

    pub(crate) fn row(&self, p: usize) -> &FixedBitSet {
        &self.adjacency[p]
    }

    /// Edges `(i, j)` with `i < j`, as element indices, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (p, &x) in self.vertices.iter().enumerate() {
            for q in self.adjacency[p].ones().filter(|&q| q > p) {
                out.push((x, self.vertices[q]));
            }
        }
        out
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut multiset = BTreeMap::new();
        for &d in &self.degrees {
            *multiset.entry(d).or_insert(0) += 1;
        }
        DegreeStats {
            min: multiset.keys().next().copied().unwrap_or(0),
            max: multiset.keys().next_back().copied().unwrap_or(0),
            distinct_count: multiset.len(),
            multiset,
        }
    }

    pub fn is_irregular(&self) -> Result<bool> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.degree_stats().distinct_count > 1)
    }

    /// Eccentricity of the vertex at position `p`.
    pub fn eccentricity(&self, p: usize) -> Diameter {
        let v = self.vertices.len();
        let mut seen = FixedBitSet::with_capacity(v);
        seen.insert(p);
        let mut frontier = vec![p];
        let mut depth = 0;
        loop {
            let mut next = FixedBitSet::with_capacity(v);
            for &u in &frontier {
                next.union_with(&self.adjacency[u]);
            }
            next.difference_with(&seen);
            if next.is_clear() {
                break;
            }
            seen.union_with(&next);
            frontier = next.ones().collect();
            depth += 1;
        }
        if seen.count_ones(..) == v {
            Diameter::Finite(depth)
        } else {
            Diameter::Infinite
        }
    }

    fn max_eccentricity(&self, sources: &[usize]) -> Result<Diameter> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let ecc: Vec<Diameter> = sources.par_iter().map(|&p| self.eccentricity(p)).collect();
        Ok(ecc
            .into_iter()
            .fold(Diameter::Finite(0), |acc, e| match (acc, e) {
                (Diameter::Finite(a), Diameter::Finite(b)) => Diameter::Finite(a.max(b)),
                _ => Diameter::Infinite,
            }))
    }

    /// BFS from one vertex per conjugacy class. Conjugation is a graph
    /// automorphism, so eccentricity is constant on classes.
    pub fn diameter(&self) -> Result<Diameter> {
        let sources: Vec<usize> = self
            .group
            .classes()
            .representatives()
            .iter()
            .filter_map(|&r| self.position(r))
            .collect();
        self.max_eccentricity(&sources)
    }

    /// BFS from every vertex.
    pub fn diameter_full(&self) -> Result<Diameter> {
        let sources: Vec<usize> = (0..self.vertices.len()).collect();
        self.max_eccentricity(&sources)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn a5_induced_graph() {
        let g = catalog::alternating(5).unwrap();
        let graph = build_graph(&g, RelationMode::Solvable, true);
        assert_eq!(graph.vertex_count(), 59);
        assert_eq!(graph.edge_count(), 1140);
        let stats = graph.degree_stats();
        assert_eq!((stats.min, stats.max, stats.distinct_count), (24, 50, 3));
        assert_eq!(
            stats.multiset,
            BTreeMap::from([(24, 15), (36, 20), (50, 24)])
        );
        assert_eq!(graph.diameter().unwrap(), Diameter::Finite(2));
        assert!(graph.is_irregular().unwrap());
        assert!(!graph.contains(0));
    }

    #[test]
    fn a5_full_graph_degrees() {
        let g = catalog::alternating(5).unwrap();
        let graph = build_graph(&g, RelationMode::Solvable, false);
        let stats = graph.degree_stats();
        assert_eq!(
            stats.multiset.keys().copied().collect::<Vec<_>>(),
            vec![0, 24, 36, 50]
        );
        assert_eq!(graph.degree(0), Some(0));
        assert_eq!(graph.diameter().unwrap(), Diameter::Infinite);
    }

    #[test]
    fn solvable_groups_give_empty_graphs() {
        let g = catalog::dihedral(4).unwrap();
        let induced = build_graph(&g, RelationMode::Solvable, true);
        assert_eq!(induced.vertex_count(), 0);
        assert_eq!(induced.diameter(), Err(Error::EmptyGraph));
        assert_eq!(induced.is_irregular(), Err(Error::EmptyGraph));
        let full = build_graph(&g, RelationMode::Solvable, false);
        assert_eq!(full.edge_count(), 0);
        assert_eq!(full.degree_stats().distinct_count, 1);
    }

    #[test]
    fn edges_are_ordered() {
        let g = catalog::alternating(5).unwrap();
        let graph = build_graph(&g, RelationMode::Solvable, true);
        let edges = graph.edges();
        assert!(edges.iter().all(|&(a, b)| a < b));
        assert!(edges.windows(2).all(|w| w[0] < w[1]));
        assert!(edges
            .iter()
            .all(|&(a, b)| graph.adjacent(a, b) && graph.adjacent(b, a)));
    }

    #[test]
    fn nilpotent_graph_contains_solvable_graph() {
        let g = catalog::symmetric(4).unwrap();
        let sol = build_graph(&g, RelationMode::Solvable, false);
        let nil = build_graph(&g, RelationMode::Nilpotent, false);
        assert_eq!(sol.edge_count(), 0);
        assert!(nil.edge_count() > 0);
        for (a, b) in sol.edges() {
            assert!(nil.adjacent(a, b));
        }
    }
}
