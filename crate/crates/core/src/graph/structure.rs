use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
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

/// A cover of the vertex set by two cliques; `large.len() >= small.len()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub large: VertexSet,
    pub small: VertexSet,
}

impl CliqueCover {
    pub fn sizes(&self) -> (usize, usize) {
        (self.large.len(), self.small.len())
    }
}

impl Graph {
    /// Breadth-first distances from `source`; `None` for unreachable.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let n = self.order();
        let mut dist = vec![None; n];
        dist[source] = Some(0);
        let mut frontier = VertexSet::singleton(source);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
                .difference(seen);
            for v in next.iter() {
                dist[v] = Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// Connected components ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.min() {
            let comp: VertexSet = self
                .distances_from(v)
                .iter()
                .enumerate()
                .filter_map(|(w, d)| d.map(|_| w))
                .collect();
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn eccentricity(&self, v: usize) -> Diameter {
        self.distances_from(v)
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .map_or(Diameter::Infinite, Diameter::Finite)
    }

    pub fn diameter(&self) -> Diameter {
        (0..self.order())
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(Diameter::Finite(0))
    }

    pub fn is_clique(&self, vs: VertexSet) -> bool {
        vs.iter()
            .all(|v| vs.without(v).is_subset(self.neighbors(v)))
    }

    /// A largest clique; ties go to the lexicographically least vertex list.
    pub fn max_clique(&self) -> VertexSet {
        let n = self.order();
        let mut best = VertexSet::EMPTY;
        for bits in 1u16..1 << n {
            let vs = VertexSet::from_bits(bits);
            if vs.len() < best.len() || !self.is_clique(vs) {
                continue;
            }
            if vs.len() > best.len() || vs.lex_cmp(best).is_lt() {
                best = vs;
            }
        }
        best
    }

    /// Two-coloring with the least vertex of each component on side A.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side_a = VertexSet::EMPTY;
        let mut side_b = VertexSet::EMPTY;
        for comp in self.components() {
            let root = comp.min().expect("components are nonempty");
            for (v, d) in self.distances_from(root).into_iter().enumerate() {
                match d {
                    Some(d) if d % 2 == 0 => side_a.insert(v),
                    Some(_) => side_b.insert(v),
                    None => {}
                }
            }
        }
        let proper = (0..self.order()).all(|v| {
            let nb = self.neighbors(v);
            if side_a.contains(v) {
                nb.is_subset(side_b)
            } else {
                nb.is_subset(side_a)
            }
        });
        proper.then_some((side_a, side_b))
    }

    /// The least three vertices spanning no edge, if any.
    pub fn palfy_triple_check(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 0..n {
            for b in a + 1..n {
                if self.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if !self.has_edge(a, c) && !self.has_edge(b, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Cover by two cliques maximizing the larger one, or `None` when the
    /// complement is not bipartite.
    ///
    /// Each complement component may be flipped independently; among the
    /// best covers the lexicographically least large side wins.
    pub fn two_clique_cover(&self) -> Option<CliqueCover> {
        let comp = self.complement();
        let (a, _) = comp.bipartition()?;
        let parts: Vec<(VertexSet, VertexSet)> = comp
            .components()
            .into_iter()
            .map(|c| (c.intersection(a), c.difference(a)))
            .collect();
        let all = self.vertices();
        let mut best: Option<CliqueCover> = None;
        for flips in 0u32..1 << parts.len() {
            let side = parts
                .iter()
                .enumerate()
                .fold(VertexSet::EMPTY, |acc, (i, &(x, y))| {
                    acc.union(if flips >> i & 1 == 0 { x } else { y })
                });
            let other = all.difference(side);
            let (large, small) = match side.len().cmp(&other.len()) {
                std::cmp::Ordering::Greater => (side, other),
                std::cmp::Ordering::Less => (other, side),
                std::cmp::Ordering::Equal if side.lex_cmp(other).is_le() => (side, other),
                std::cmp::Ordering::Equal => (other, side),
            };
            let better = match best {
                None => true,
                Some(b) => {
                    large.len() > b.large.len()
                        || (large.len() == b.large.len() && large.lex_cmp(b.large).is_lt())
                }
            };
            if better {
                best = Some(CliqueCover { large, small });
            }
        }
        best
    }

    /// Articulation vertices, found with a depth-first low-link pass.
    pub fn cut_vertices(&self) -> VertexSet {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = VertexSet::EMPTY;
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            self.low_link(root, None, &mut time, &mut disc, &mut low, &mut out);
        }
        out
    }

    fn low_link(
        &self,
        v: usize,
        parent: Option<usize>,
        time: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        out: &mut VertexSet,
    ) {
        disc[v] = *time;
        low[v] = *time;
        *time += 1;
        let mut children = 0;
        for w in self.neighbors(v).iter() {
            if disc[w] == usize::MAX {
                children += 1;
                self.low_link(w, Some(v), time, disc, low, out);
                low[v] = low[v].min(low[w]);
                if parent.is_some() && low[w] >= disc[v] {
                    out.insert(v);
                }
            } else if Some(w) != parent {
                low[v] = low[v].min(disc[w]);
            }
        }
        if parent.is_none() && children > 1 {
            out.insert(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    #[test]
    fn components_and_connectivity() {
        let k7 = Graph::complete(7).unwrap();
        assert!(k7.is_connected());
        let split = Graph::disjoint_cliques(&[3, 4]).unwrap();
        let sizes: Vec<_> = split.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert_eq!(Graph::empty(7).unwrap().components().len(), 7);
    }

    #[test]
    fn diameters() {
        for n in 2..=10 {
            assert_eq!(Graph::complete(n).unwrap().diameter(), Diameter::Finite(1));
        }
        assert_eq!(Graph::complete(1).unwrap().diameter(), Diameter::Finite(0));
        assert_eq!(
            Graph::disjoint_cliques(&[3, 4]).unwrap().diameter(),
            Diameter::Infinite
        );
        assert_eq!(cycle(7).diameter(), Diameter::Finite(3));
    }

    #[test]
    fn cliques() {
        let k7 = Graph::complete(7).unwrap();
        assert!(k7.is_clique(VertexSet::from_bits(0b1010110)));
        assert_eq!(k7.max_clique().len(), 7);
        let p = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(p.max_clique(), VertexSet::from_bits(0b0011));
        assert_eq!(
            Graph::empty(3).unwrap().max_clique(),
            VertexSet::singleton(0)
        );
    }

    #[test]
    fn bipartitions() {
        let (a, b) = Graph::empty(5).unwrap().bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (5, 0));
        assert!(cycle(5).bipartition().is_none());
        let (a, b) = cycle(6).bipartition().unwrap();
        assert_eq!(a, VertexSet::from_bits(0b010101));
        assert_eq!(b, VertexSet::from_bits(0b101010));
    }

    #[test]
    fn palfy_triples() {
        assert_eq!(Graph::complete(7).unwrap().palfy_triple_check(), None);
        assert_eq!(
            Graph::empty(3).unwrap().palfy_triple_check(),
            Some([0, 1, 2])
        );
        assert_eq!(cycle(7).palfy_triple_check(), Some([0, 2, 4]));
    }

    #[test]
    fn clique_covers() {
        // Pendant vertex on a 6-clique.
        let k6 = Graph::complete(6).unwrap();
        let a1 = Graph::complete(1)
            .unwrap()
            .disjoint_union(&k6)
            .unwrap()
            .add_edges(&[(0, 1)])
            .unwrap();
        assert_eq!(a1.two_clique_cover().unwrap().sizes(), (6, 1));
        assert_eq!(
            Graph::complete(7)
                .unwrap()
                .two_clique_cover()
                .unwrap()
                .sizes(),
            (7, 0)
        );
        assert!(cycle(5).two_clique_cover().is_none());
    }

    #[test]
    fn cut_vertices_small() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.cut_vertices(), VertexSet::singleton(1));
        assert!(Graph::complete(7).unwrap().cut_vertices().is_empty());
        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(bowtie.cut_vertices(), VertexSet::singleton(2));
    }
}
