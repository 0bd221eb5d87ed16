//! Deciding whether a graph occurs, and the admissible-vertex machinery
//! built on that decision.

mod admissibility;
mod diameter3;
mod knowledge;
mod rules;

pub use admissibility::{
    is_admissible, is_strongly_admissible, proper_subgraph_scan, vertex_subset_occurrence_scan,
    AdmissibilityReport, PinnedEdge, StepKind, SubgraphScan, SubsetEntry, SubsetScan, TraceStep,
};
pub use diameter3::{diameter_three_partitions, Condition, DiameterThreePartition};
pub use knowledge::{Fact, FactOrigin, KnowledgeBase};
pub use rules::{
    recognize_gamma_kt, rule_cut_vertices, rule_diameter3, rule_disconnected, rule_gamma_kt,
    rule_odd_cycle, rule_palfy, Rule, OCCURRING_DISCONNECTED,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the status oracle accepts.
pub const MAX_STATUS_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Occurring,
    NonOccurring,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Occurring => "occurring",
            Verdict::NonOccurring => "non-occurring",
            Verdict::Unknown => "unknown",
        })
    }
}

/// How a diameter-three graph fails the partition inequalities. The sizes
/// belong to the partition closest to satisfying the failed condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum Diameter3Failure {
    /// `|rho3| >= 3` fails.
    TooFewAtDistanceTwo { rho3: usize },
    /// `|rho1 + rho2| <= |rho3 + rho4|` fails.
    NearSideTooLarge { near: usize, far: usize },
    /// `|rho3 + rho4| >= 2^|rho1 + rho2|` fails.
    FarSideTooSmall { far: usize, near: usize },
    /// Every partition fails something, but no single condition fails for all.
    EveryPartition { partitions: usize },
}

impl fmt::Display for Diameter3Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Diameter3Failure::TooFewAtDistanceTwo { rho3 } => {
                write!(f, "no diameter-three partition works, the best has |ρ3| = {rho3} < 3")
            }
            Diameter3Failure::NearSideTooLarge { near, far } => write!(
                f,
                "no diameter-three partition works, the best has |ρ1 ∪ ρ2| = {near} > {far} = |ρ3 ∪ ρ4|"
            ),
            Diameter3Failure::FarSideTooSmall { far, near } => write!(
                f,
                "no diameter-three partition works, the best has |ρ3 ∪ ρ4| = {far} < 2^{near} = {}",
                1u64 << near
            ),
            Diameter3Failure::EveryPartition { partitions } => write!(
                f,
                "each of the {partitions} diameter-three partitions violates some inequality"
            ),
        }
    }
}

/// Why a verdict was reached. Reasons never mention vertex indices, so
/// isomorphic inputs always receive identical reasons.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Reason {
    /// Three vertices span no edge.
    Palfy,
    /// The complement has an odd cycle; `length` is the shortest one.
    OddCycle {
        length: usize,
    },
    ComponentCount {
        components: usize,
    },
    NonCliqueComponent,
    DisconnectedInequality {
        a: usize,
        b: usize,
    },
    DisconnectedPair {
        a: usize,
        b: usize,
    },
    CutVertices {
        count: usize,
    },
    Diameter3(Diameter3Failure),
    GammaKt {
        k: usize,
        t: usize,
    },
    KnowledgeBase {
        source: String,
    },
}

impl Reason {
    /// Short stable tag naming the rule or knowledge-base source.
    pub fn tag(&self) -> &str {
        match self {
            Reason::Palfy => "palfy",
            Reason::OddCycle { .. } => "odd-cycle",
            Reason::ComponentCount { .. } => "disconnected-components",
            Reason::NonCliqueComponent => "disconnected-non-clique",
            Reason::DisconnectedInequality { .. } => "disconnected-inequality",
            Reason::DisconnectedPair { .. } => "disconnected-pair",
            Reason::CutVertices { .. } => "cut-vertices",
            Reason::Diameter3(_) => "diameter3",
            Reason::GammaKt { .. } => "gamma-kt",
            Reason::KnowledgeBase { source } => source,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Palfy => f.write_str("three vertices span no edge"),
            Reason::OddCycle { length } => {
                write!(f, "the complement contains a {length}-cycle")
            }
            Reason::ComponentCount { components } => {
                write!(f, "{components} components, but at most two are possible")
            }
            Reason::NonCliqueComponent => f.write_str("a component is not complete"),
            Reason::DisconnectedInequality { a, b } => write!(
                f,
                "components of sizes a = {a}, b = {b} need b >= 2^a - 1, but {b} = b < 2^{a} - 1 = {}",
                (1u64 << a) - 1
            ),
            Reason::DisconnectedPair { a, b } => match (a, b) {
                (1, 6) => f.write_str(
                    "complete components of sizes 1 and 6, realized by the semilinear group on the field of order 2^81",
                ),
                (2, 5) => f.write_str(
                    "complete components of sizes 2 and 5, realized by the semilinear group on the field of order 2^51",
                ),
                _ => write!(f, "complete components of sizes {a} and {b}, a known occurring pair"),
            },
            Reason::CutVertices { count } => write!(f, "{count} cut vertices, at most one allowed"),
            Reason::Diameter3(failure) => failure.fmt(f),
            Reason::GammaKt { k, t } => {
                if *t == 1 || (*k == 2 && *t == 2) {
                    write!(f, "isomorphic to Γ({k},{t}), which occurs")
                } else {
                    write!(f, "isomorphic to Γ({k},{t}), which does not occur")
                }
            }
            Reason::KnowledgeBase { source } => write!(f, "by {source}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "kebab-case")]
pub enum Status {
    Occurring(Reason),
    NonOccurring(Reason),
    Unknown,
}

impl Status {
    pub fn verdict(&self) -> Verdict {
        match self {
            Status::Occurring(_) => Verdict::Occurring,
            Status::NonOccurring(_) => Verdict::NonOccurring,
            Status::Unknown => Verdict::Unknown,
        }
    }

    pub fn reason(&self) -> Option<&Reason> {
        match self {
            Status::Occurring(r) | Status::NonOccurring(r) => Some(r),
            Status::Unknown => None,
        }
    }

    pub fn is_decisive(&self) -> bool {
        !matches!(self, Status::Unknown)
    }

    pub fn is_non_occurring(&self) -> bool {
        matches!(self, Status::NonOccurring(_))
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Unknown => f.write_str("unknown"),
            Status::Occurring(r) => write!(f, "occurring: {r}"),
            Status::NonOccurring(r) => write!(f, "non-occurring: {r}"),
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_STATUS_ORDER {
        return Err(Error::StatusOrder(g.order()));
    }
    Ok(())
}

/// First decisive rule in the fixed chain, ignoring the knowledge base.
pub fn rule_status(g: &Graph) -> Option<Status> {
    Rule::ALL
        .iter()
        .filter_map(|rule| rule.apply(g))
        .find(Status::is_decisive)
}

/// The rule chain followed by a knowledge-base lookup.
///
/// A rule and a fact that both decide must agree; disagreement means the
/// curated data is wrong and is reported as an error.
pub fn status(g: &Graph, kb: &KnowledgeBase) -> Result<Status> {
    check_order(g)?;
    let ruled = rule_status(g);
    let fact = kb.lookup(g);
    match (ruled, fact) {
        (Some(s), Some(fact)) if s.verdict() != fact.verdict => Err(Error::Conflict(format!(
            "{} is {} by rule ({}) but {} by fact {}",
            g.to_graph6(),
            s.verdict(),
            s.reason().map(|r| r.to_string()).unwrap_or_default(),
            fact.verdict,
            fact.source
        ))),
        (Some(s), _) => Ok(s),
        (None, Some(fact)) => Ok(fact.status()),
        (None, None) => Ok(Status::Unknown),
    }
}

/// Every rule's result plus the knowledge-base entry, for debugging.
#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub rules: Vec<(Rule, Option<Status>)>,
    pub fact: Option<Status>,
    pub status: Status,
}

/// Runs every rule instead of stopping at the first, and checks that all
/// decisive answers agree.
pub fn evaluate_all(g: &Graph, kb: &KnowledgeBase) -> Result<Evaluation> {
    check_order(g)?;
    let rules: Vec<(Rule, Option<Status>)> = Rule::ALL.iter().map(|&r| (r, r.apply(g))).collect();
    let fact = kb.lookup(g).map(Fact::status);
    let decided: Vec<&Status> = rules
        .iter()
        .filter_map(|(_, s)| s.as_ref())
        .chain(fact.as_ref())
        .filter(|s| s.is_decisive())
        .collect();
    if let Some(first) = decided.first() {
        if let Some(other) = decided.iter().find(|s| s.verdict() != first.verdict()) {
            return Err(Error::Conflict(format!(
                "{}: {first} disagrees with {other}",
                g.to_graph6()
            )));
        }
    }
    let status = status(g, kb)?;
    Ok(Evaluation {
        rules,
        fact,
        status,
    })
}
