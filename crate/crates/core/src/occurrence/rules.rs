use serde::{Deserialize, Serialize};

use super::{diameter3, Reason, Status};
use crate::constructions::gamma_kt_graph;
use crate::graph::Graph;

/// Disconnected graphs with complete components of these sizes occur.
pub const OCCURRING_DISCONNECTED: [(usize, usize); 7] =
    [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Palfy,
    OddCycle,
    Disconnected,
    CutVertices,
    Diameter3,
    GammaKt,
}

impl Rule {
    /// Chain order, cheapest first.
    pub const ALL: [Rule; 6] = [
        Rule::Palfy,
        Rule::OddCycle,
        Rule::Disconnected,
        Rule::CutVertices,
        Rule::Diameter3,
        Rule::GammaKt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Palfy => "palfy",
            Rule::OddCycle => "odd-cycle",
            Rule::Disconnected => "disconnected",
            Rule::CutVertices => "cut-vertices",
            Rule::Diameter3 => "diameter3",
            Rule::GammaKt => "gamma-kt",
        }
    }

    pub fn apply(self, g: &Graph) -> Option<Status> {
        match self {
            Rule::Palfy => rule_palfy(g),
            Rule::OddCycle => rule_odd_cycle(g),
            Rule::Disconnected => rule_disconnected(g),
            Rule::CutVertices => rule_cut_vertices(g),
            Rule::Diameter3 => rule_diameter3(g),
            Rule::GammaKt => rule_gamma_kt(g),
        }
    }
}

pub fn rule_palfy(g: &Graph) -> Option<Status> {
    g.palfy_triple_check()
        .map(|_| Status::NonOccurring(Reason::Palfy))
}

/// Length of the shortest odd cycle, if any.
///
/// From every root, an edge inside one breadth-first layer at depth `d`
/// closes an odd walk of length `2d + 1`; the minimum over roots is exact.
fn odd_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in 0..g.order() {
        let dist = g.distances_from(root);
        for (u, v) in g.edges() {
            if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                if du == dv {
                    let len = 2 * du + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn rule_odd_cycle(g: &Graph) -> Option<Status> {
    odd_girth(&g.complement()).map(|length| Status::NonOccurring(Reason::OddCycle { length }))
}

/// Decides disconnected graphs; `None` on connected input and
/// `Some(Unknown)` when the graph passes every test but is not a known pair.
pub fn rule_disconnected(g: &Graph) -> Option<Status> {
    let comps = g.components();
    if comps.len() == 1 {
        return None;
    }
    if comps.len() != 2 {
        return Some(Status::NonOccurring(Reason::ComponentCount {
            components: comps.len(),
        }));
    }
    if comps.iter().any(|&c| !g.is_clique(c)) {
        return Some(Status::NonOccurring(Reason::NonCliqueComponent));
    }
    let (a, b) = {
        let (x, y) = (comps[0].len(), comps[1].len());
        (x.min(y), x.max(y))
    };
    if (b as u64) < (1u64 << a) - 1 {
        return Some(Status::NonOccurring(Reason::DisconnectedInequality {
            a,
            b,
        }));
    }
    if OCCURRING_DISCONNECTED.contains(&(a, b)) {
        return Some(Status::Occurring(Reason::DisconnectedPair { a, b }));
    }
    Some(Status::Unknown)
}

pub fn rule_cut_vertices(g: &Graph) -> Option<Status> {
    let count = g.cut_vertices().len();
    (count >= 2).then_some(Status::NonOccurring(Reason::CutVertices { count }))
}

pub fn rule_diameter3(g: &Graph) -> Option<Status> {
    diameter3::failure(g).map(|f| Status::NonOccurring(Reason::Diameter3(f)))
}

/// `(k, t)` when `g` is two cliques of sizes `k >= t` joined by a matching
/// that covers the smaller one.
pub fn recognize_gamma_kt(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let m = g.edge_count();
    (1..=n / 2).map(|t| (n - t, t)).find(|&(k, t)| {
        k * (k - 1) / 2 + t * (t - 1) / 2 + t == m
            && g.is_isomorphic(&gamma_kt_graph(k, t).expect("k + t = order is in range"))
    })
}

pub fn rule_gamma_kt(g: &Graph) -> Option<Status> {
    let (k, t) = recognize_gamma_kt(g)?;
    let reason = Reason::GammaKt { k, t };
    Some(if t == 1 || (k == 2 && t == 2) {
        Status::Occurring(reason)
    } else {
        Status::NonOccurring(reason)
    })
}
