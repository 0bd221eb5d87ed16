//! Enumeration, classification and reporting, end to end.

mod claims;
mod dot;
mod verify;

pub use claims::{
    check_claims, parse_claims, AdmissibilityRow, Claim, ClaimCheck, ClaimKind, LemmaReport,
    SubsetRow,
};
pub use dot::render_dot;
pub use verify::{verify_paper, CheckItem, Checklist};

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::constructions::{build_occurring_catalog, BuiltGraph, BuiltSummary};
use crate::data::DataSet;
use crate::enumeration::{
    enumerate_all, match_appendix_data, AppendixClass, AppendixIndex, GraphCatalog, Label,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::occurrence::{status, KnowledgeBase, Status, Verdict};

pub const RECIPE_SOURCE: &str = "construction";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEntry {
    pub label: Option<Label>,
    pub class: Option<AppendixClass>,
    pub graph6: String,
    pub edges: usize,
    pub status: Status,
    /// The recipe realizing an occurring graph, when one is on file.
    pub recipe: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub connected: usize,
    pub eligible: usize,
    pub occurring: usize,
    pub non_occurring: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub summary: Summary,
    /// Disconnected seven-vertex graphs that are not ruled out.
    pub disconnected: Vec<GraphEntry>,
    pub disconnected_eliminated: usize,
    /// One entry per eligible graph, in label order.
    pub entries: Vec<GraphEntry>,
    pub constructions: Vec<BuiltSummary>,
    pub lemma_checks: Vec<LemmaReport>,
}

impl ClassificationReport {
    pub fn roster(&self, verdict: Verdict) -> Vec<Label> {
        self.entries
            .iter()
            .filter(|e| e.status.verdict() == verdict)
            .filter_map(|e| e.label)
            .collect()
    }

    pub fn entry(&self, label: Label) -> Option<&GraphEntry> {
        self.entries.iter().find(|e| e.label == Some(label))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} graphs on seven vertices, {} connected, {} eligible",
            s.graphs, s.connected, s.eligible
        );
        let _ = writeln!(out, "\n== Disconnected ==");
        let _ = writeln!(out, "{} eliminated", self.disconnected_eliminated);
        for e in &self.disconnected {
            write_entry(&mut out, e);
        }
        for class in AppendixClass::ALL {
            let _ = writeln!(out, "\n== Appendix {} ==", class.letter());
            for e in self.entries.iter().filter(|e| e.class == Some(class)) {
                write_entry(&mut out, e);
            }
        }
        let _ = writeln!(out, "\n== Lemma checks ==");
        for lemma in &self.lemma_checks {
            let _ = writeln!(
                out,
                "{} {}: {}",
                lemma.label,
                lemma.graph6,
                if lemma.passed() { "pass" } else { "FAIL" }
            );
            for c in &lemma.checks {
                let _ = writeln!(
                    out,
                    "  [{}] {}: {}",
                    if c.passed { "ok" } else { "FAIL" },
                    c.claim,
                    c.detail
                );
                for m in &c.missing_facts {
                    let _ = writeln!(out, "      missing fact for {m}");
                }
            }
        }
        let _ = writeln!(out, "\n== Summary ==");
        for (name, verdict, count) in [
            ("occurring", Verdict::Occurring, s.occurring),
            ("non-occurring", Verdict::NonOccurring, s.non_occurring),
            ("unknown", Verdict::Unknown, s.unknown),
        ] {
            let labels: Vec<String> = self.roster(verdict).iter().map(Label::to_string).collect();
            let _ = writeln!(out, "{name} ({count}): {}", labels.join(" "));
        }
        out
    }
}

fn write_entry(out: &mut String, e: &GraphEntry) {
    let name = e.label.map(|l| l.to_string()).unwrap_or_else(|| "-".into());
    let _ = write!(out, "{name:<4} {:<10} {}", e.graph6, e.status);
    if let Some(r) = &e.recipe {
        let _ = write!(out, " [{r}]");
    }
    out.push('\n');
}

/// The enumeration and appendix index the pipeline works from.
pub fn load_index(data: &DataSet) -> Result<(GraphCatalog, AppendixIndex)> {
    let catalog = enumerate_all(7)?;
    let index = match_appendix_data(&catalog, &data.appendix)?;
    Ok((catalog, index))
}

/// Builds every recipe and records each result not already decided.
pub fn add_construction_facts(built: &[BuiltGraph], kb: &mut KnowledgeBase) -> Result<()> {
    for b in built {
        if !status(&b.target, kb)?.is_decisive() {
            kb.derive(
                b.target,
                Verdict::Occurring,
                RECIPE_SOURCE,
                &b.recipe.to_string(),
            )?;
        }
    }
    Ok(())
}

/// Knowledge base after constructions and checked claims have been added.
pub struct Derived {
    pub kb: KnowledgeBase,
    pub built: Vec<BuiltGraph>,
    pub lemmas: Vec<LemmaReport>,
}

pub fn derive_facts(data: &DataSet, index: &AppendixIndex) -> Result<Derived> {
    let mut kb = data.knowledge_base.clone();
    let built = build_occurring_catalog(&data.recipes, index, &kb)?;
    add_construction_facts(&built, &mut kb)?;
    let lemmas = check_claims(&data.claims, index, &mut kb)?;
    Ok(Derived { kb, built, lemmas })
}

fn entry(
    g: &Graph,
    label: Option<Label>,
    kb: &KnowledgeBase,
    built: &[BuiltGraph],
) -> Result<GraphEntry> {
    let status = status(g, kb)?;
    let recipe = if status.verdict() == Verdict::Occurring {
        built
            .iter()
            .find(|b| b.target.is_isomorphic(g))
            .map(|b| b.recipe.kind.to_string())
    } else {
        None
    };
    Ok(GraphEntry {
        label,
        class: label.map(|l| l.class),
        graph6: g.to_graph6(),
        edges: g.edge_count(),
        status,
        recipe,
    })
}

/// Classifies every eligible seven-vertex graph. Deterministic: the same
/// data always yields the same report.
pub fn classify_all(data: &DataSet) -> Result<ClassificationReport> {
    let (catalog, index) = load_index(data)?;
    let Derived { kb, built, lemmas } = derive_facts(data, &index)?;

    let mut disconnected = Vec::new();
    let mut disconnected_eliminated = 0;
    let mut connected = 0;
    for g in &catalog.graphs {
        if g.is_connected() {
            connected += 1;
            continue;
        }
        let e = entry(g, None, &kb, &built)?;
        if e.status.is_non_occurring() {
            disconnected_eliminated += 1;
        } else {
            disconnected.push(e);
        }
    }

    let mut entries = Vec::with_capacity(index.len());
    for (&label, g) in &index.by_label {
        entries.push(entry(g, Some(label), &kb, &built)?);
    }
    let count = |v: Verdict| entries.iter().filter(|e| e.status.verdict() == v).count();
    let summary = Summary {
        graphs: catalog.len(),
        connected,
        eligible: entries.len(),
        occurring: count(Verdict::Occurring),
        non_occurring: count(Verdict::NonOccurring),
        unknown: count(Verdict::Unknown),
    };
    Ok(ClassificationReport {
        summary,
        disconnected,
        disconnected_eliminated,
        entries,
        constructions: built.iter().map(BuiltSummary::from).collect(),
        lemma_checks: lemmas,
    })
}
