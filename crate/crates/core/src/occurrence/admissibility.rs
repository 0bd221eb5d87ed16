use serde::{Deserialize, Serialize};

use super::{rule_odd_cycle, rule_palfy, status, KnowledgeBase, Reason, Status, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    /// The vertex itself removed.
    VertexDeletion,
    /// Some of the vertex's own edges removed.
    IncidentEdges,
    /// The vertex removed, then some edges among its neighbours.
    NeighborEdges,
    /// A subset of a caller-chosen edge set removed.
    EdgeSubset,
}

/// One subgraph examined, with removed edges in the input graph's labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub removed: Vec<Edge>,
    pub graph6: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub vertex: usize,
    pub strong: bool,
    pub holds: bool,
    pub steps: Vec<TraceStep>,
}

impl AdmissibilityReport {
    /// Steps that are not decisively non-occurring.
    pub fn blockers(&self) -> impl Iterator<Item = &TraceStep> {
        self.steps.iter().filter(|s| !s.status.is_non_occurring())
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(())
}

fn admissibility_steps(g: &Graph, v: usize, kb: &KnowledgeBase) -> Result<Vec<TraceStep>> {
    check_vertex(g, v)?;
    let mut steps = Vec::new();
    let minus = g.delete_vertex(v)?;
    steps.push(TraceStep {
        kind: StepKind::VertexDeletion,
        removed: Vec::new(),
        graph6: minus.to_graph6(),
        status: status(&minus, kb)?,
    });
    let incident: Vec<Edge> = g
        .neighbors(v)
        .iter()
        .map(|w| (v.min(w), v.max(w)))
        .collect();
    for del in g.edge_subset_subgraphs(&incident)? {
        steps.push(TraceStep {
            kind: StepKind::IncidentEdges,
            removed: del.removed,
            graph6: del.graph.to_graph6(),
            status: status(&del.graph, kb)?,
        });
    }
    Ok(steps)
}

/// Removing `v`, or any nonempty set of its edges, leaves a non-occurring
/// graph. An unknown subgraph blocks the claim.
pub fn is_admissible(g: &Graph, v: usize, kb: &KnowledgeBase) -> Result<AdmissibilityReport> {
    let steps = admissibility_steps(g, v, kb)?;
    let holds = steps.iter().all(|s| s.status.is_non_occurring());
    Ok(AdmissibilityReport {
        vertex: v,
        strong: false,
        holds,
        steps,
    })
}

/// Admissible, and after removing `v` every deletion of a nonempty set of
/// edges among its neighbours is non-occurring too.
pub fn is_strongly_admissible(
    g: &Graph,
    v: usize,
    kb: &KnowledgeBase,
) -> Result<AdmissibilityReport> {
    let mut steps = admissibility_steps(g, v, kb)?;
    let minus = g.delete_vertex(v)?;
    let shift = |w: usize| if w > v { w - 1 } else { w };
    let unshift = |w: usize| if w >= v { w + 1 } else { w };
    let nbrs = g.neighbors(v);
    let among: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| nbrs.contains(a) && nbrs.contains(b))
        .map(|(a, b)| (shift(a), shift(b)))
        .collect();
    for del in minus.edge_subset_subgraphs(&among)? {
        steps.push(TraceStep {
            kind: StepKind::NeighborEdges,
            removed: del
                .removed
                .iter()
                .map(|&(a, b)| (unshift(a), unshift(b)))
                .collect(),
            graph6: del.graph.to_graph6(),
            status: status(&del.graph, kb)?,
        });
    }
    let holds = steps.iter().all(|s| s.status.is_non_occurring());
    Ok(AdmissibilityReport {
        vertex: v,
        strong: true,
        holds,
        steps,
    })
}

/// An edge kept out of the scan, with the rule proving it cannot be lost.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinnedEdge {
    pub edge: Edge,
    pub proof: Option<Reason>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphScan {
    pub removable: Vec<Edge>,
    pub pinned: Vec<PinnedEdge>,
    pub entries: Vec<TraceStep>,
    pub pinned_proven: bool,
    pub all_non_occurring: bool,
}

/// Statuses of every proper spanning subgraph of `g`.
///
/// Only subsets of `removable` are enumerated. Each other edge is pinned:
/// deleting it alone must break the triple or odd-cycle condition, and
/// both conditions survive further deletions, so every subgraph missing a
/// pinned edge is non-occurring as well.
pub fn proper_subgraph_scan(
    g: &Graph,
    removable: &[Edge],
    kb: &KnowledgeBase,
) -> Result<SubgraphScan> {
    let subsets = g.edge_subset_subgraphs(removable)?;
    let norm: Vec<Edge> = removable
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let mut pinned = Vec::new();
    for e in g.edges().into_iter().filter(|e| !norm.contains(e)) {
        let h = g.delete_edges(&[e])?;
        let proof = rule_palfy(&h)
            .or_else(|| rule_odd_cycle(&h))
            .and_then(|s| s.reason().cloned());
        pinned.push(PinnedEdge { edge: e, proof });
    }
    let mut entries = Vec::with_capacity(subsets.len());
    for del in subsets {
        entries.push(TraceStep {
            kind: StepKind::EdgeSubset,
            removed: del.removed,
            graph6: del.graph.to_graph6(),
            status: status(&del.graph, kb)?,
        });
    }
    let pinned_proven = pinned.iter().all(|p| p.proof.is_some());
    let all_non_occurring = pinned_proven && entries.iter().all(|e| e.status.is_non_occurring());
    Ok(SubgraphScan {
        removable: norm,
        pinned,
        entries,
        pinned_proven,
        all_non_occurring,
    })
}

/// A spanning subgraph of an induced subgraph, in the parent's labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetEntry {
    pub edges: Vec<Edge>,
    pub components: Vec<VertexSet>,
    pub status: Status,
}

impl SubsetEntry {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Disconnected with every component complete on exactly these parts.
    pub fn is_complete_split(&self, parts: &[VertexSet]) -> bool {
        let mut mine = self.components.clone();
        let mut want = parts.to_vec();
        mine.sort_by(|a, b| a.lex_cmp(*b));
        want.sort_by(|a, b| a.lex_cmp(*b));
        if mine != want {
            return false;
        }
        let expected: usize = parts.iter().map(|p| p.len() * (p.len() - 1) / 2).sum();
        self.edges.len() == expected
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub connected: usize,
    pub disconnected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetScan {
    pub vertices: VertexSet,
    pub total: usize,
    pub occurring: Tally,
    pub non_occurring: Tally,
    pub unknown: Tally,
    /// Every subgraph that is not decisively non-occurring.
    pub survivors: Vec<SubsetEntry>,
}

impl SubsetScan {
    pub fn connected_survivors(&self) -> impl Iterator<Item = &SubsetEntry> {
        self.survivors.iter().filter(|s| s.is_connected())
    }
}

/// Statuses of all spanning subgraphs of the subgraph induced on `vs`.
pub fn vertex_subset_occurrence_scan(
    g: &Graph,
    vs: VertexSet,
    kb: &KnowledgeBase,
) -> Result<SubsetScan> {
    if !vs.is_subset(g.vertices()) {
        let bad = vs.difference(g.vertices()).min().unwrap_or(0);
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            order: g.order(),
        });
    }
    let h = g.induced(vs)?;
    let back: Vec<usize> = vs.iter().collect();
    let edges = h.edges();
    let mut scan = SubsetScan {
        vertices: vs,
        total: 1 << edges.len(),
        occurring: Tally::default(),
        non_occurring: Tally::default(),
        unknown: Tally::default(),
        survivors: Vec::new(),
    };
    for mask in 0u32..1 << edges.len() {
        let kept: Vec<Edge> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let sub = Graph::from_edges(h.order(), &kept)?;
        let st = status(&sub, kb)?;
        let connected = sub.is_connected();
        let tally = match st.verdict() {
            Verdict::Occurring => &mut scan.occurring,
            Verdict::NonOccurring => &mut scan.non_occurring,
            Verdict::Unknown => &mut scan.unknown,
        };
        if connected {
            tally.connected += 1;
        } else {
            tally.disconnected += 1;
        }
        if !st.is_non_occurring() {
            scan.survivors.push(SubsetEntry {
                edges: kept.iter().map(|&(a, b)| (back[a], back[b])).collect(),
                components: sub
                    .components()
                    .into_iter()
                    .map(|c| c.iter().map(|i| back[i]).collect())
                    .collect(),
                status: st,
            });
        }
    }
    Ok(scan)
}
