use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Reason, Rule, Status, Verdict, MAX_STATUS_ORDER};
use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactOrigin {
    /// Read from the facts file at this line.
    Curated { line: usize },
    /// Added by the pipeline from a construction or a checked argument.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub graph: Graph,
    pub verdict: Verdict,
    pub source: String,
    pub note: String,
    pub origin: FactOrigin,
}

impl Fact {
    pub fn status(&self) -> Status {
        let reason = Reason::KnowledgeBase {
            source: self.source.clone(),
        };
        match self.verdict {
            Verdict::Occurring => Status::Occurring(reason),
            Verdict::NonOccurring => Status::NonOccurring(reason),
            Verdict::Unknown => Status::Unknown,
        }
    }
}

/// Facts keyed by canonical form. Every insertion is checked against the
/// rules, so a fact can never contradict a rule verdict.
#[derive(Clone, Debug, Default)]
pub struct KnowledgeBase {
    facts: BTreeMap<CanonicalForm, Fact>,
}

impl KnowledgeBase {
    pub fn new() -> Self {
        Self::default()
    }

    /// Lines are `<graph6> <OCCURRING|NONOCCURRING> <source> "<note>"`;
    /// `#` starts a comment.
    pub fn parse(path: &str, text: &str) -> Result<Self> {
        let mut kb = Self::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let err = |detail: String| Error::Parse {
                path: path.to_string(),
                line,
                detail,
            };
            let mut parts = content.splitn(4, char::is_whitespace);
            let (Some(g6), Some(verdict), Some(source), Some(note)) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(err(
                    "expected `<graph6> <verdict> <source> \"<note>\"`".into()
                ));
            };
            let graph = Graph::from_graph6(g6).map_err(|e| err(e.to_string()))?;
            let verdict = match verdict {
                "OCCURRING" => Verdict::Occurring,
                "NONOCCURRING" => Verdict::NonOccurring,
                other => return Err(err(format!("unknown verdict {other:?}"))),
            };
            let note = note.trim();
            let note = note
                .strip_prefix('"')
                .and_then(|n| n.strip_suffix('"'))
                .ok_or_else(|| err("note must be double-quoted".into()))?;
            kb.insert(Fact {
                graph,
                verdict,
                source: source.to_string(),
                note: note.to_string(),
                origin: FactOrigin::Curated { line },
            })
            .map_err(|e| err(e.to_string()))?;
        }
        Ok(kb)
    }

    pub fn insert(&mut self, fact: Fact) -> Result<()> {
        let g = fact.graph;
        if g.order() > MAX_STATUS_ORDER {
            return Err(Error::StatusOrder(g.order()));
        }
        if fact.verdict == Verdict::Unknown {
            return Err(Error::Conflict(format!(
                "fact {} for {} has no verdict",
                fact.source,
                g.to_graph6()
            )));
        }
        for rule in Rule::ALL {
            if let Some(s) = rule.apply(&g) {
                if s.is_decisive() && s.verdict() != fact.verdict {
                    return Err(Error::Conflict(format!(
                        "fact {} says {} is {}, but rule {} says {}",
                        fact.source,
                        g.to_graph6(),
                        fact.verdict,
                        rule.name(),
                        s
                    )));
                }
            }
        }
        let key = g.canonical_form();
        if let Some(old) = self.facts.get(&key) {
            return Err(Error::Conflict(format!(
                "{} is already recorded by {}, cannot add {}",
                g.to_graph6(),
                old.source,
                fact.source
            )));
        }
        self.facts.insert(key, fact);
        Ok(())
    }

    /// Records a pipeline-derived fact.
    pub fn derive(
        &mut self,
        graph: Graph,
        verdict: Verdict,
        source: &str,
        note: &str,
    ) -> Result<()> {
        self.insert(Fact {
            graph,
            verdict,
            source: source.to_string(),
            note: note.to_string(),
            origin: FactOrigin::Derived,
        })
    }

    pub fn lookup(&self, g: &Graph) -> Option<&Fact> {
        self.facts.get(&g.canonical_form())
    }

    pub fn facts(&self) -> impl Iterator<Item = &Fact> {
        self.facts.values()
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }
}
