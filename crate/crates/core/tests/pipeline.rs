use std::path::PathBuf;

use cdgraph::constructions::{build_recipe, parse_recipes};
use cdgraph::data::{DataSet, CLAIMS_FILE, KNOWLEDGE_BASE_FILE, RECIPES_FILE};
use cdgraph::enumeration::{enumerate_all, match_appendix_data, AppendixClass, Label};
use cdgraph::occurrence::{status, KnowledgeBase, Verdict};
use cdgraph::pipeline::{classify_all, render_dot, verify_paper, ClassificationReport};
use cdgraph::{Error, Graph};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn read(name: &str) -> String {
    std::fs::read_to_string(data_dir().join(name)).unwrap()
}

/// A data set with one file's text replaced.
fn with_override(name: &str, text: String) -> cdgraph::Result<DataSet> {
    DataSet::from_source(|n| Ok(if n == name { text.clone() } else { read(n) }))
}

/// Bits of a graph6 string for orders below 63, decoded by hand.
fn graph6_edge_count(code: &str) -> usize {
    let bytes = code.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits = n * (n - 1) / 2;
    let mut count = 0;
    for k in 0..bits {
        let b = bytes[1 + k / 6] - 63;
        count += (b >> (5 - k % 6) & 1) as usize;
    }
    count
}

#[test]
fn embedded_data_matches_the_files() {
    let embedded = DataSet::embedded().unwrap();
    let on_disk = DataSet::from_dir(data_dir()).unwrap();
    assert_eq!(embedded.appendix, on_disk.appendix);
    assert_eq!(embedded.recipes, on_disk.recipes);
    assert_eq!(embedded.claims, on_disk.claims);
    assert_eq!(embedded.knowledge_base.len(), on_disk.knowledge_base.len());
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let data = DataSet::embedded().unwrap();
    let a = classify_all(&data).unwrap();
    let b = classify_all(&data).unwrap();
    let json = a.to_json();
    assert_eq!(json, b.to_json());
    assert_eq!(ClassificationReport::from_json(&json).unwrap(), a);
}

#[test]
fn summary_counts_equal_entry_tallies() {
    let report = classify_all(&DataSet::embedded().unwrap()).unwrap();
    let s = &report.summary;
    assert_eq!(s.graphs, 1044);
    assert_eq!(s.connected, 853);
    assert_eq!(report.entries.len(), s.eligible);
    assert_eq!(s.occurring + s.non_occurring + s.unknown, s.eligible);
    let mut labels: Vec<Label> = report.entries.iter().filter_map(|e| e.label).collect();
    labels.dedup();
    assert_eq!(labels.len(), 85);
    for class in AppendixClass::ALL {
        assert!(report.entries.iter().any(|e| e.class == Some(class)));
    }
    // Every occurring eligible graph carries its recipe.
    for e in &report.entries {
        assert_eq!(
            e.recipe.is_some(),
            e.status.verdict() == Verdict::Occurring,
            "{:?}",
            e.label
        );
    }
    assert_eq!(report.disconnected.len(), 2);
    assert_eq!(report.disconnected_eliminated + 2 + 853, 1044);
}

#[test]
fn text_report_has_each_section() {
    let text = classify_all(&DataSet::embedded().unwrap())
        .unwrap()
        .to_text();
    for heading in [
        "== Disconnected ==",
        "== Appendix A ==",
        "== Appendix B ==",
        "== Appendix C ==",
        "== Lemma checks ==",
        "== Summary ==",
    ] {
        assert!(text.contains(heading), "{heading}");
    }
    assert!(text.contains("occurring (22)"));
}

#[test]
fn checklist_passes_on_shipped_data() {
    let list = verify_paper(&DataSet::embedded().unwrap());
    assert_eq!(list.items.len(), 8);
    for item in &list.items {
        assert!(item.passed, "{} {}: {}", item.id, item.name, item.detail);
    }
}

#[test]
fn flipped_fact_is_a_named_conflict() {
    // The six-vertex diameter-three factor of B15, flipped.
    let text = read(KNOWLEDGE_BASE_FILE).replace("EJ]w OCCURRING", "EJ]w NONOCCURRING");
    assert!(text.contains("EJ]w NONOCCURRING"));
    let data = with_override(KNOWLEDGE_BASE_FILE, text).unwrap();
    let err = classify_all(&data).unwrap_err().to_string();
    assert!(err.contains("B15"), "{err}");
    let list = verify_paper(&data);
    assert!(!list.all_passed());
    assert!(
        list.items[3].detail.contains("B15"),
        "{}",
        list.items[3].detail
    );

    // A fact contradicting a rule is rejected at load, with its line.
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let bad = format!(
        "{}{} OCCURRING flipped \"x\"\n",
        read(KNOWLEDGE_BASE_FILE),
        p4.to_graph6()
    );
    let err = with_override(KNOWLEDGE_BASE_FILE, bad).unwrap_err();
    assert!(matches!(err, Error::Parse { .. }), "{err}");
    assert!(err.to_string().contains("cut"), "{err}");
}

#[test]
fn mutated_appendix_edge_is_named() {
    let text = read("appendix_c.g6");
    let first = text.lines().find(|l| l.starts_with("C18 ")).unwrap();
    let g = Graph::from_graph6(first.split_whitespace().nth(1).unwrap()).unwrap();
    let (a, b) = g.edges()[0];
    let mutated = g.delete_edges(&[(a, b)]).unwrap();
    let new_text = text.replace(first, &format!("C18 {}", mutated.to_graph6()));
    let data = with_override("appendix_c.g6", new_text).unwrap();
    let catalog = enumerate_all(7).unwrap();
    let err = match_appendix_data(&catalog, &data.appendix).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("C18"), "{msg}");
    let list = verify_paper(&data);
    assert!(!list.items[1].passed);
    assert!(list.items[1].detail.contains("C18"));
}

#[test]
fn failing_claim_blocks_its_conclusion() {
    // Claiming the opposite survivor pattern must fail and leave C18 unknown.
    let text = read(CLAIMS_FILE).replace(
        "C18 subset b(ii) 1,2,3,5,6,7 => none",
        "C18 subset b(ii) 1,2,3,5,6,7 => 1,2|3,5,6,7",
    );
    let data = with_override(CLAIMS_FILE, text).unwrap();
    let report = classify_all(&data).unwrap();
    let c18 = report.entry("C18".parse().unwrap()).unwrap();
    assert_eq!(c18.status.verdict(), Verdict::Unknown);
    let lemma = report
        .lemma_checks
        .iter()
        .find(|l| l.label.to_string() == "C18")
        .unwrap();
    assert!(!lemma.passed());
    assert_eq!(lemma.concluded, None);
    assert_eq!(report.summary.non_occurring, 18);
}

#[test]
fn missing_fact_is_flagged() {
    // Without the K2 + K3 fact the subset scans meet an unknown survivor.
    let text: String = read(KNOWLEDGE_BASE_FILE)
        .lines()
        .filter(|l| !l.starts_with("DJ_ "))
        .map(|l| format!("{l}\n"))
        .collect();
    let recipes: String = read(RECIPES_FILE)
        .lines()
        .filter(|l| !l.starts_with("C26 "))
        .map(|l| format!("{l}\n"))
        .collect();
    let data = DataSet::from_source(|n| {
        Ok(match n {
            KNOWLEDGE_BASE_FILE => text.clone(),
            RECIPES_FILE => recipes.clone(),
            other => read(other),
        })
    })
    .unwrap();
    let report = classify_all(&data).unwrap();
    let flagged: Vec<&str> = report
        .lemma_checks
        .iter()
        .flat_map(|l| l.checks.iter())
        .flat_map(|c| c.missing_facts.iter().map(String::as_str))
        .collect();
    assert!(flagged.contains(&"DJ_"), "{flagged:?}");
}

#[test]
fn dot_output() {
    let dot = render_dot(&Graph::complete(3).unwrap(), None);
    assert_eq!(dot.matches(" -- ").count(), 3);

    let recipes = parse_recipes(
        "r",
        "D2 semilinear 2 51 7*103*2143*11119*131071 => disjoint:2,5\n",
    )
    .unwrap();
    let built = build_recipe(&recipes[0], None, &KnowledgeBase::new()).unwrap();
    let dot = render_dot(&built.graph, built.labeling.as_ref());
    for p in ["3", "17", "103", "2143", "11119", "7", "131071"] {
        assert!(dot.contains(&format!("\"{p}\";")), "{p}");
    }
    assert!(dot.contains("\"3\" -- \"17\""));

    let line = read("appendix_b.g6");
    let code = line
        .lines()
        .find(|l| l.starts_with("B3 "))
        .unwrap()
        .split_whitespace()
        .nth(1)
        .unwrap();
    let b3 = Graph::from_graph6(code).unwrap();
    let dot = render_dot(&b3, None);
    assert_eq!(dot.matches(" -- ").count(), graph6_edge_count(code));
    assert_eq!(
        dot.lines()
            .filter(|l| l.starts_with("  \"v") && !l.contains("--"))
            .count(),
        7
    );
}

#[test]
fn derived_facts_agree_with_a_fresh_lookup() {
    let data = DataSet::embedded().unwrap();
    let report = classify_all(&data).unwrap();
    let kb = &data.knowledge_base;
    for e in &report.entries {
        let g = Graph::from_graph6(&e.graph6).unwrap();
        let fresh = status(&g, kb).unwrap();
        // Curated data alone never contradicts the final report.
        if fresh.is_decisive() {
            assert_eq!(fresh.verdict(), e.status.verdict(), "{:?}", e.label);
        }
    }
}
