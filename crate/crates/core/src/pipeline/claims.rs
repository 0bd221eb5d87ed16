use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumeration::{AppendixIndex, Label};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::occurrence::{
    is_strongly_admissible, proper_subgraph_scan, status, vertex_subset_occurrence_scan,
    KnowledgeBase, Status, StepKind, SubgraphScan, SubsetScan, TraceStep, Verdict,
};

/// Vertex sets and edges use one-based names `p1..p7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    StronglyAdmissible(Vec<usize>),
    Subgraphs(Vec<Edge>),
    Subset {
        case: String,
        vertices: Vec<usize>,
        /// Empty means no survivors.
        expected: Vec<Vec<usize>>,
    },
    Conclude {
        verdict: Verdict,
        source: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub label: Label,
    pub kind: ClaimKind,
    pub line: usize,
}

fn join_ps(ps: &[usize], sep: &str) -> String {
    ps.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimKind::StronglyAdmissible(ps) => {
                write!(f, "strongly-admissible {}", join_ps(ps, " "))
            }
            ClaimKind::Subgraphs(es) => {
                let es: Vec<String> = es.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(f, "subgraphs {}", es.join(" "))
            }
            ClaimKind::Subset {
                case,
                vertices,
                expected,
            } => {
                write!(f, "subset {case} {} => ", join_ps(vertices, ","))?;
                if expected.is_empty() {
                    f.write_str("none")
                } else {
                    let parts: Vec<String> = expected.iter().map(|p| join_ps(p, ",")).collect();
                    f.write_str(&parts.join("|"))
                }
            }
            ClaimKind::Conclude { verdict, source } => write!(f, "conclude {verdict} {source}"),
        }
    }
}

fn p_number(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p) if p >= 1 => Ok(p),
        _ => Err(format!("bad vertex name {s:?}")),
    }
}

fn p_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',').map(p_number).collect()
}

fn parse_kind(words: &[&str]) -> std::result::Result<ClaimKind, String> {
    match words {
        ["strongly-admissible", ps @ ..] if !ps.is_empty() => Ok(ClaimKind::StronglyAdmissible(
            ps.iter()
                .map(|p| p_number(p))
                .collect::<std::result::Result<_, _>>()?,
        )),
        ["subgraphs", es @ ..] if !es.is_empty() => {
            let mut out = Vec::new();
            for e in es {
                let (a, b) = e.split_once('-').ok_or_else(|| format!("bad edge {e:?}"))?;
                out.push((p_number(a)?, p_number(b)?));
            }
            Ok(ClaimKind::Subgraphs(out))
        }
        ["subset", case, vs, "=>", expected] => Ok(ClaimKind::Subset {
            case: case.to_string(),
            vertices: p_list(vs)?,
            expected: if *expected == "none" {
                Vec::new()
            } else {
                expected
                    .split('|')
                    .map(p_list)
                    .collect::<std::result::Result<_, _>>()?
            },
        }),
        ["conclude", verdict, source] => Ok(ClaimKind::Conclude {
            verdict: match *verdict {
                "OCCURRING" => Verdict::Occurring,
                "NONOCCURRING" => Verdict::NonOccurring,
                other => return Err(format!("unknown verdict {other:?}")),
            },
            source: source.to_string(),
        }),
        _ => Err("unrecognized claim".into()),
    }
}

pub fn parse_claims(path: &str, text: &str) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |detail: String| Error::Parse {
            path: path.to_string(),
            line: i + 1,
            detail,
        };
        let words: Vec<&str> = content.split_whitespace().collect();
        let label: Label = words[0].parse().map_err(err)?;
        let kind = parse_kind(&words[1..]).map_err(err)?;
        out.push(Claim {
            label,
            kind,
            line: i + 1,
        });
    }
    Ok(out)
}

/// Outcome of one claim line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
    /// Graphs whose unknown status blocks the claim; a fact for each is missing.
    pub missing_facts: Vec<String>,
}

/// Strong admissibility at one vertex, without the full deletion trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityRow {
    pub vertex: usize,
    pub holds: bool,
    pub steps: usize,
    pub blockers: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetRow {
    pub case: String,
    pub vertices: Vec<usize>,
    pub scan: SubsetScan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub label: Label,
    pub graph6: String,
    pub checks: Vec<ClaimCheck>,
    pub admissibility: Vec<AdmissibilityRow>,
    pub subgraph_scans: Vec<SubgraphScan>,
    pub subset_scans: Vec<SubsetRow>,
    /// Verdict recorded once every check passed.
    pub concluded: Option<Verdict>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn to_index(label: Label, p: usize, order: usize) -> Result<usize> {
    if p == 0 || p > order {
        return Err(Error::Construction {
            label: label.to_string(),
            detail: format!("vertex p{p} out of range"),
        });
    }
    Ok(p - 1)
}

/// Facts are keyed by isomorphism class, so report the canonical code.
fn canonical_graph6(g: &Graph) -> String {
    g.canonical_form().graph().to_graph6()
}

fn unknown_graphs<'a>(steps: impl Iterator<Item = &'a TraceStep>) -> Vec<String> {
    let mut out: Vec<String> = steps
        .filter(|s| s.status == Status::Unknown)
        .filter_map(|s| Graph::from_graph6(&s.graph6).ok())
        .map(|g| canonical_graph6(&g))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn check_subset(
    label: Label,
    expected: &[Vec<usize>],
    scan: &SubsetScan,
    order: usize,
) -> Result<(bool, String, Vec<String>)> {
    let parts: Vec<VertexSet> = expected
        .iter()
        .map(|ps| {
            ps.iter()
                .map(|&p| to_index(label, p, order))
                .collect::<Result<VertexSet>>()
        })
        .collect::<Result<_>>()?;
    let mut missing = Vec::new();
    let mut problems = Vec::new();
    let mut matched = false;
    for s in &scan.survivors {
        let fits = !parts.is_empty() && s.is_complete_split(&parts);
        if fits && s.status.verdict() == Verdict::Occurring {
            matched = true;
            continue;
        }
        let sub = Graph::from_edges(order, &s.edges)?.induced(scan.vertices)?;
        if s.status == Status::Unknown {
            missing.push(canonical_graph6(&sub));
        }
        problems.push(format!(
            "unexpected survivor {} ({})",
            sub.to_graph6(),
            s.status
        ));
    }
    if !parts.is_empty() && !matched {
        problems.push("the expected split does not survive".into());
    }
    missing.sort();
    missing.dedup();
    let ok = problems.is_empty();
    let detail = if ok {
        format!(
            "{} subgraphs, {} survivor{}",
            scan.total,
            scan.survivors.len(),
            if scan.survivors.len() == 1 { "" } else { "s" }
        )
    } else {
        problems.join("; ")
    };
    Ok((ok, detail, missing))
}

/// Runs the claims label by label, in file order. A `conclude` line adds
/// its fact to `kb` only if every earlier line for that label passed.
pub fn check_claims(
    claims: &[Claim],
    index: &AppendixIndex,
    kb: &mut KnowledgeBase,
) -> Result<Vec<LemmaReport>> {
    let mut reports: Vec<LemmaReport> = Vec::new();
    for claim in claims {
        let label = claim.label;
        let g = *index.graph(label).ok_or_else(|| Error::Construction {
            label: label.to_string(),
            detail: "claims name a label with no appendix graph".into(),
        })?;
        let n = g.order();
        if reports.last().map(|r| r.label) != Some(label) {
            if reports.iter().any(|r| r.label == label) {
                return Err(Error::Parse {
                    path: "claims".into(),
                    line: claim.line,
                    detail: format!("claims for {label} must be contiguous"),
                });
            }
            reports.push(LemmaReport {
                label,
                graph6: g.to_graph6(),
                checks: Vec::new(),
                admissibility: Vec::new(),
                subgraph_scans: Vec::new(),
                subset_scans: Vec::new(),
                concluded: None,
            });
        }
        let report = reports.last_mut().expect("pushed above");
        let text = format!("{label} {}", claim.kind);
        let check = match &claim.kind {
            ClaimKind::StronglyAdmissible(ps) => {
                let mut failed = Vec::new();
                let mut missing = Vec::new();
                for &p in ps {
                    let r = is_strongly_admissible(&g, to_index(label, p, n)?, kb)?;
                    if !r.holds {
                        failed.push(format!("p{p}"));
                    }
                    missing.extend(unknown_graphs(r.blockers()));
                    report.admissibility.push(AdmissibilityRow {
                        vertex: p,
                        holds: r.holds,
                        steps: r.steps.len(),
                        blockers: r.blockers().cloned().collect(),
                    });
                }
                missing.sort();
                missing.dedup();
                ClaimCheck {
                    claim: text,
                    passed: failed.is_empty(),
                    detail: if failed.is_empty() {
                        format!("holds at {} vertices", ps.len())
                    } else {
                        format!("fails at {}", failed.join(", "))
                    },
                    missing_facts: missing,
                }
            }
            ClaimKind::Subgraphs(es) => {
                let removable: Vec<Edge> = es
                    .iter()
                    .map(|&(a, b)| Ok((to_index(label, a, n)?, to_index(label, b, n)?)))
                    .collect::<Result<_>>()?;
                let scan = proper_subgraph_scan(&g, &removable, kb)?;
                let missing = unknown_graphs(
                    scan.entries
                        .iter()
                        .filter(|e| e.kind == StepKind::EdgeSubset),
                );
                let bad = scan
                    .entries
                    .iter()
                    .filter(|e| !e.status.is_non_occurring())
                    .count();
                let unproven = scan.pinned.iter().filter(|p| p.proof.is_none()).count();
                let check = ClaimCheck {
                    claim: text,
                    passed: scan.all_non_occurring,
                    detail: format!(
                        "{} subgraphs, {bad} not non-occurring, {unproven} pinned edges unproven",
                        scan.entries.len()
                    ),
                    missing_facts: missing,
                };
                report.subgraph_scans.push(scan);
                check
            }
            ClaimKind::Subset {
                case,
                vertices,
                expected,
            } => {
                let vs: VertexSet = vertices
                    .iter()
                    .map(|&p| to_index(label, p, n))
                    .collect::<Result<_>>()?;
                let scan = vertex_subset_occurrence_scan(&g, vs, kb)?;
                let (passed, detail, missing_facts) = check_subset(label, expected, &scan, n)?;
                report.subset_scans.push(SubsetRow {
                    case: case.clone(),
                    vertices: vertices.clone(),
                    scan,
                });
                ClaimCheck {
                    claim: text,
                    passed,
                    detail,
                    missing_facts,
                }
            }
            ClaimKind::Conclude { verdict, source } => {
                let ready = report.checks.iter().all(|c| c.passed);
                let current = status(&g, kb)?;
                let (passed, detail) = if !ready {
                    (false, "not recorded, an earlier check failed".to_string())
                } else if current.verdict() == *verdict {
                    (true, format!("already {current}"))
                } else if current.is_decisive() {
                    return Err(Error::Conflict(format!(
                        "{label} is {current}, but its claims conclude {verdict}"
                    )));
                } else {
                    kb.derive(g, *verdict, source, &format!("checked claims for {label}"))?;
                    report.concluded = Some(*verdict);
                    (true, format!("recorded as {verdict}"))
                };
                ClaimCheck {
                    claim: text,
                    passed,
                    detail,
                    missing_facts: Vec::new(),
                }
            }
        };
        report.checks.push(check);
    }
    Ok(reports)
}
