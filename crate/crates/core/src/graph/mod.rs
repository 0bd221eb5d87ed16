//! Small simple undirected graphs stored as a bit-packed upper triangle.
//!
//! Vertices are `0..order`. Pair `(i, j)` with `i < j` lives at bit
//! `j * (j - 1) / 2 + i`, which is the column-major order graph6 uses.

mod canon;
mod graph6;
mod structure;
mod vertex_set;

pub use canon::CanonicalForm;
pub use structure::{CliqueCover, Diameter};
pub use vertex_set::VertexSet;

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 10;

/// An undirected edge, normalized so that `.0 < .1`.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub(crate) fn pair_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    edges: u64,
}

impl Graph {
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        Ok(Self {
            order: order as u8,
            edges: 0,
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let g = Self::empty(order)?;
        Ok(Self {
            edges: low_bits(pair_count(order)),
            ..g
        })
    }

    pub fn from_edges(order: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (i, j) = normalize(u, v);
            g.edges |= 1 << pair_index(i, j);
        }
        Ok(g)
    }

    /// Disjoint union of cliques of the given sizes, laid out in order.
    pub fn disjoint_cliques(sizes: &[usize]) -> Result<Self> {
        let mut parts = sizes.iter().map(|&s| Self::complete(s));
        let first = parts.next().ok_or(Error::EmptyVertexSet)??;
        parts.try_fold(first, |acc, g| acc.disjoint_union(&g?))
    }

    pub(crate) fn from_raw(order: usize, edges: u64) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&order));
        debug_assert_eq!(edges & !low_bits(pair_count(order)), 0);
        Self {
            order: order as u8,
            edges,
        }
    }

    pub(crate) fn raw_edges(&self) -> u64 {
        self.edges
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.order() || v >= self.order() {
            return false;
        }
        let (i, j) = normalize(u, v);
        self.edges >> pair_index(i, j) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        (0..self.order()).filter(|&w| self.has_edge(v, w)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        Self {
            order: self.order,
            edges: !self.edges & low_bits(pair_count(self.order())),
        }
    }

    /// Removes `v` and its edges; higher indices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if self.order() == 1 {
            return Err(Error::WouldBeEmpty);
        }
        let keep = self.vertices().without(v);
        self.induced(keep)
    }

    pub fn delete_edges(&self, pairs: &[Edge]) -> Result<Self> {
        let mut edges = self.edges;
        for &(u, v) in pairs {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            let (i, j) = normalize(u, v);
            edges &= !(1 << pair_index(i, j));
        }
        Ok(Self { edges, ..*self })
    }

    pub fn add_edges(&self, pairs: &[Edge]) -> Result<Self> {
        let mut g = *self;
        for &(u, v) in pairs {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (i, j) = normalize(u, v);
            g.edges |= 1 << pair_index(i, j);
        }
        Ok(g)
    }

    /// Subgraph induced on `vs`, relabeled in ascending vertex order.
    pub fn induced(&self, vs: VertexSet) -> Result<Self> {
        if vs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = vs.iter().find(|&v| v >= self.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let kept: Vec<usize> = vs.iter().collect();
        let mut edges = 0u64;
        for (b, &v) in kept.iter().enumerate() {
            for (a, &u) in kept[..b].iter().enumerate() {
                if self.has_edge(u, v) {
                    edges |= 1 << pair_index(a, b);
                }
            }
        }
        Ok(Self::from_raw(kept.len(), edges))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = VertexSet::EMPTY;
        if perm.len() != n {
            return Err(Error::WrongOrder {
                expected: n,
                actual: perm.len(),
            });
        }
        for &p in perm {
            self.check_vertex(p)?;
            seen.insert(p);
        }
        if seen.len() != n {
            return Err(Error::Arithmetic(format!("{perm:?} is not a permutation")));
        }
        let mapped: Vec<Edge> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(n, &mapped)
    }

    /// Disjoint union with every edge between the two parts added.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let g = self.disjoint_union(other)?;
        let n = self.order();
        let cross: Vec<Edge> = (0..n)
            .flat_map(|u| (n..g.order()).map(move |v| (u, v)))
            .collect();
        g.add_edges(&cross)
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(Error::OrderOutOfRange(total));
        }
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + n, v + n)));
        Self::from_edges(total, &edges)
    }

    /// Every graph obtained by deleting a nonempty subset of `removable`.
    ///
    /// Subsets are visited in increasing bitmask order over the
    /// deduplicated, sorted edge list.
    pub fn edge_subset_subgraphs(&self, removable: &[Edge]) -> Result<EdgeSubsets> {
        let mut edges: Vec<Edge> = removable.iter().map(|&(u, v)| normalize(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            return Err(Error::NotAnEdge(u, v));
        }
        if edges.len() > 20 {
            return Err(Error::Arithmetic(format!(
                "{} removable edges is too many to enumerate",
                edges.len()
            )));
        }
        Ok(EdgeSubsets {
            base: *self,
            edges,
            next: 1,
        })
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// One deletion produced by [`Graph::edge_subset_subgraphs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDeletion {
    pub removed: Vec<Edge>,
    pub graph: Graph,
}

pub struct EdgeSubsets {
    base: Graph,
    edges: Vec<Edge>,
    next: u32,
}

impl Iterator for EdgeSubsets {
    type Item = EdgeDeletion;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= 1 << self.edges.len() {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let removed: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let graph = self
            .base
            .delete_edges(&removed)
            .expect("removable edges validated on construction");
        Some(EdgeDeletion { removed, graph })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (1usize << self.edges.len()) - self.next as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for EdgeSubsets {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.order, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
