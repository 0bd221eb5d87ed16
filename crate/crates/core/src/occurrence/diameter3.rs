use std::fmt;

use serde::{Deserialize, Serialize};

use super::Diameter3Failure;
use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph, VertexSet};

/// Distance layers around a basepoint of eccentricity three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterThreePartition {
    pub basepoint: usize,
    pub rho1: VertexSet,
    pub rho2: VertexSet,
    pub rho3: VertexSet,
    pub rho4: VertexSet,
}

/// The three inequalities a diameter-three degree graph satisfies for
/// some choice of basepoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// `|rho3| >= 3`
    I,
    /// `|rho1 + rho2| <= |rho3 + rho4|`
    II,
    /// `|rho3 + rho4| >= 2^|rho1 + rho2|`
    III,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::I, Condition::II, Condition::III];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "(i)",
            Condition::II => "(ii)",
            Condition::III => "(iii)",
        })
    }
}

impl DiameterThreePartition {
    /// `|rho1 + rho2|`
    pub fn near(&self) -> usize {
        self.rho1.len() + self.rho2.len()
    }

    /// `|rho3 + rho4|`
    pub fn far(&self) -> usize {
        self.rho3.len() + self.rho4.len()
    }

    pub fn holds(&self, c: Condition) -> bool {
        match c {
            Condition::I => self.rho3.len() >= 3,
            Condition::II => self.near() <= self.far(),
            Condition::III => self.near() < 64 && self.far() as u64 >= 1u64 << self.near(),
        }
    }

    pub fn violated(&self) -> Vec<Condition> {
        Condition::ALL
            .into_iter()
            .filter(|&c| !self.holds(c))
            .collect()
    }
}

impl fmt::Display for DiameterThreePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p = {}: ρ1 = {}, ρ2 = {}, ρ3 = {}, ρ4 = {}",
            self.basepoint, self.rho1, self.rho2, self.rho3, self.rho4
        )
    }
}

/// One partition for every vertex of eccentricity three, in vertex order.
pub fn diameter_three_partitions(g: &Graph) -> Result<Vec<DiameterThreePartition>> {
    if g.diameter() != Diameter::Finite(3) {
        return Err(Error::NotDiameterThree);
    }
    let mut out = Vec::new();
    for p in 0..g.order() {
        let dist = g.distances_from(p);
        let at = |d: usize| -> VertexSet {
            dist.iter()
                .enumerate()
                .filter(|(_, x)| **x == Some(d))
                .map(|(v, _)| v)
                .collect()
        };
        let rho4 = at(3);
        if rho4.is_empty() {
            continue;
        }
        let rho3 = at(2);
        let rho2: VertexSet = g
            .neighbors(p)
            .iter()
            .filter(|&v| !g.neighbors(v).intersection(rho3).is_empty())
            .collect();
        let rho1 = g
            .neighbors(p)
            .difference(rho2)
            .union(VertexSet::singleton(p));
        out.push(DiameterThreePartition {
            basepoint: p,
            rho1,
            rho2,
            rho3,
            rho4,
        });
    }
    Ok(out)
}

/// `Some` iff every partition breaks at least one condition. The headline
/// is a condition broken by all of them, preferring (iii), then (i), then
/// (ii), and its sizes come from the partition that comes closest to
/// satisfying it: even the most favourable arrangement fails.
pub(super) fn failure(g: &Graph) -> Option<Diameter3Failure> {
    let parts = diameter_three_partitions(g).ok()?;
    if parts.iter().any(|p| p.violated().is_empty()) {
        return None;
    }
    let all_break = |c: Condition| parts.iter().all(|p| !p.holds(c));
    if all_break(Condition::III) {
        let best = parts
            .iter()
            .max_by_key(|p| (p.far() as i64 - (1i64 << p.near().min(62)), p.far()))?;
        return Some(Diameter3Failure::FarSideTooSmall {
            far: best.far(),
            near: best.near(),
        });
    }
    if all_break(Condition::I) {
        let rho3 = parts.iter().map(|p| p.rho3.len()).max()?;
        return Some(Diameter3Failure::TooFewAtDistanceTwo { rho3 });
    }
    if all_break(Condition::II) {
        let best = parts
            .iter()
            .max_by_key(|p| (p.far() as i64 - p.near() as i64, p.far()))?;
        return Some(Diameter3Failure::NearSideTooLarge {
            near: best.near(),
            far: best.far(),
        });
    }
    Some(Diameter3Failure::EveryPartition {
        partitions: parts.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn partitions_of_a_path() {
        let p4 = path(4);
        let parts = diameter_three_partitions(&p4).unwrap();
        assert_eq!(parts.len(), 2);
        let first = parts[0];
        assert_eq!(first.basepoint, 0);
        assert_eq!(first.rho1, VertexSet::singleton(0));
        assert_eq!(first.rho2, VertexSet::singleton(1));
        assert_eq!(first.rho3, VertexSet::singleton(2));
        assert_eq!(first.rho4, VertexSet::singleton(3));
        assert_eq!(first.violated(), vec![Condition::I, Condition::III]);
    }

    #[test]
    fn layers_are_a_partition() {
        // Two triangles bridged by the edge 2-4, with 3 hanging on both ends.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        for part in diameter_three_partitions(&g).unwrap() {
            let sets = [part.rho1, part.rho2, part.rho3, part.rho4];
            let total: usize = sets.iter().map(|s| s.len()).sum();
            let union = sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
            assert_eq!(total, 7);
            assert_eq!(union, g.vertices());
            assert!(sets.iter().all(|s| !s.is_empty()));
        }
    }

    #[test]
    fn wrong_diameter_is_an_error() {
        assert_eq!(
            diameter_three_partitions(&Graph::complete(4).unwrap()),
            Err(Error::NotDiameterThree)
        );
        assert_eq!(failure(&path(3)), None);
    }

    #[test]
    fn path_fails_condition_three_first() {
        assert_eq!(
            failure(&path(4)),
            Some(Diameter3Failure::FarSideTooSmall { far: 2, near: 2 })
        );
    }
}
