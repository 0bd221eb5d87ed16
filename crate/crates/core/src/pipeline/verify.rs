use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{classify_all, derive_facts, load_index};
use crate::constructions::{
    build_recipe, cd_diameter3, cyclotomic_coprimality, verify_factored_value, DegreeSet,
    FactoredInt,
};
use crate::data::DataSet;
use crate::enumeration::{appendix_class, enumerate_connected, AppendixClass, Label};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::occurrence::{
    is_admissible, is_strongly_admissible, rule_diameter3, rule_status, Diameter3Failure,
    KnowledgeBase, Reason, Status, Verdict,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checklist {
    pub items: Vec<CheckItem>,
}

impl Checklist {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

const OCCURRING: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "B3", "B4", "B6", "B13", "B14", "B15", "B16", "B19", "B21",
    "B23", "B24", "B26", "C26", "C50", "C51", "C53",
];
const NON_OCCURRING: &[&str] = &[
    "B1", "B2", "B5", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C9", "C10", "C11", "C12", "C14",
    "C16", "C17", "C18", "C20",
];
const DIAMETER_THREE_C: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C9", "C11", "C12", "C14", "C16",
];

fn label(s: &str) -> Label {
    s.parse().expect("valid literal label")
}

fn fi(primes: &[u64]) -> FactoredInt {
    FactoredInt::from_primes(primes).expect("literal primes")
}

fn pw(p: u64, e: u32) -> FactoredInt {
    FactoredInt::prime(p).expect("literal prime").pow(e)
}

fn fail(detail: impl Into<String>) -> Result<(bool, String)> {
    Ok((false, detail.into()))
}

fn enumeration() -> Result<(bool, String)> {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_connected(n).map(|c| c.len()))
        .collect::<Result<_>>()?;
    let ok = counts == CONNECTED_COUNTS;
    Ok((ok, format!("connected counts for orders 1..7: {counts:?}")))
}

fn eligibility(data: &DataSet) -> Result<(bool, String)> {
    let connected = enumerate_connected(7)?;
    let mut split = [0usize; 3];
    for g in &connected.graphs {
        if let Ok(c) = appendix_class(g) {
            split[c as usize] += 1;
        }
    }
    let total: usize = split.iter().sum();
    load_index(data)?;
    let ok = total == 85 && split == [6, 26, 53];
    Ok((
        ok,
        format!("{total} eligible, split {split:?}, appendix data matches"),
    ))
}

fn disconnected(data: &DataSet) -> Result<(bool, String)> {
    let (_, index) = load_index(data)?;
    let kb = KnowledgeBase::new();
    let expect = [
        ("D1", vec![3, 7, 73, 2593, 71119, 262657, 97685839], [1, 6]),
        ("D2", vec![3, 7, 17, 103, 2143, 11119, 131071], [2, 5]),
    ];
    let mut notes = Vec::new();
    for (name, primes, sizes) in expect {
        let Some(recipe) = data.recipes.iter().find(|r| r.name == name) else {
            return fail(format!("recipe {name} missing"));
        };
        let built = build_recipe(recipe, Some(&index), &kb)?;
        let got = built.labeling.as_ref().map(|l| l.primes().to_vec());
        if got.as_deref() != Some(&primes[..]) {
            return fail(format!("{name} primes {got:?}"));
        }
        let mut comp: Vec<usize> = built.graph.components().iter().map(|c| c.len()).collect();
        comp.sort_unstable();
        if comp != sizes {
            return fail(format!("{name} components {comp:?}"));
        }
        notes.push(format!("{name} ok"));
    }
    let k34 = Graph::disjoint_cliques(&[3, 4])?;
    let s = rule_status(&k34);
    if s != Some(Status::NonOccurring(Reason::DisconnectedInequality {
        a: 3,
        b: 4,
    })) {
        return fail(format!("K3+K4 gave {s:?}"));
    }
    notes.push(format!("K3+K4 {}", s.expect("checked")));
    Ok((true, notes.join("; ")))
}

fn degree_set(items: Vec<FactoredInt>) -> Result<DegreeSet> {
    DegreeSet::new(items)
}

fn constructions(data: &DataSet) -> Result<(bool, String)> {
    let (_, index) = load_index(data)?;
    let built =
        crate::constructions::build_occurring_catalog(&data.recipes, &index, &data.knowledge_base)?;
    if built.len() != 24 {
        return fail(format!("{} recipes, expected 24", built.len()));
    }
    let one = FactoredInt::one();
    let three = fi(&[3]);

    let (s, t, u, v) = (7, 79, 292561, 74912328481);
    let stuv = fi(&[s, t, u, v]);
    let uv = fi(&[u, v]);
    let g3 = degree_set(vec![
        one.clone(),
        three.clone(),
        fi(&[5]),
        fi(&[3, 5]),
        stuv.clone(),
        pw(23, 7).mul(&stuv),
        three.mul(&pw(23, 15)).mul(&uv),
        pw(23, 12).mul(&uv),
        three.mul(&pw(23, 12)).mul(&uv),
        pw(23, 12).mul(&stuv),
        pw(23, 13).mul(&stuv),
    ])?;
    let (s, t, u, v) = (7, 23, 89, 599479);
    let stuv = fi(&[s, t, u, v]);
    let tuv = fi(&[t, u, v]);
    let g4 = degree_set(vec![
        one,
        three.clone(),
        fi(&[11]),
        fi(&[3, 11]),
        stuv.clone(),
        pw(2, 16).mul(&stuv),
        three.mul(&pw(2, 33)).mul(&tuv),
        pw(2, 30).mul(&tuv),
        three.mul(&pw(2, 30)).mul(&tuv),
        pw(2, 30).mul(&stuv),
        pw(2, 31).mul(&stuv),
    ])?;
    if cd_diameter3(23, 5, [7, 79, 292561, 74912328481])? != g3 {
        return fail("cd(G3) differs");
    }
    if cd_diameter3(2, 11, [7, 23, 89, 599479])? != g4 {
        return fail("cd(G4) differs");
    }
    let values = [
        (fi(&[7, 103, 2143, 11119, 131071]), 2, 51, 1),
        (fi(&[7, 73, 2593, 71119, 262657, 97685839]), 2, 81, 1),
        (fi(&[7, 79, 292561, 74912328481]), 23, 15, 22),
        (fi(&[7, 23, 89, 599479]), 2, 33, 1),
    ];
    for (f, base, exp, div) in &values {
        if !verify_factored_value(f, *base, *exp, *div)? {
            return fail(format!("{f} is not ({base}^{exp} - 1)/{div}"));
        }
    }
    if !cyclotomic_coprimality(23, 3, 5)? || !cyclotomic_coprimality(2, 3, 11)? {
        return fail("cyclotomic coprimality fails");
    }
    Ok((
        true,
        "24 recipes match, both eleven-element degree sets match, 4 factorizations exact".into(),
    ))
}

fn eliminations(data: &DataSet) -> Result<(bool, String)> {
    let (_, index) = load_index(data)?;
    let graph = |l: &str| -> Result<Graph> {
        index
            .graph(label(l))
            .copied()
            .ok_or_else(|| Error::Construction {
                label: l.into(),
                detail: "missing".into(),
            })
    };
    let non = |r: Reason| Some(Status::NonOccurring(r));
    let mut checks: Vec<(String, Option<Status>, Option<Status>)> = vec![
        (
            "B2".into(),
            rule_status(&graph("B2")?),
            non(Reason::Diameter3(Diameter3Failure::TooFewAtDistanceTwo {
                rho3: 2,
            })),
        ),
        (
            "B1".into(),
            rule_status(&graph("B1")?),
            non(Reason::CutVertices { count: 2 }),
        ),
        (
            "C1".into(),
            rule_status(&graph("C1")?),
            non(Reason::CutVertices { count: 2 }),
        ),
        (
            "B5".into(),
            rule_status(&graph("B5")?),
            non(Reason::GammaKt { k: 5, t: 2 }),
        ),
        (
            "C17".into(),
            rule_status(&graph("C17")?),
            non(Reason::GammaKt { k: 4, t: 3 }),
        ),
    ];
    for l in DIAMETER_THREE_C {
        checks.push((
            format!("{l} (diameter three)"),
            rule_diameter3(&graph(l)?),
            non(Reason::Diameter3(Diameter3Failure::FarSideTooSmall {
                far: 4,
                near: 3,
            })),
        ));
    }
    let bad: Vec<String> = checks
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(l, got, _)| format!("{l}: {got:?}"))
        .collect();
    if bad.is_empty() {
        Ok((
            true,
            format!("{} rule eliminations reproduced", checks.len()),
        ))
    } else {
        fail(bad.join("; "))
    }
}

fn lemmas(data: &DataSet) -> Result<(bool, String)> {
    let (_, index) = load_index(data)?;
    let derived = derive_facts(data, &index)?;
    let total: usize = derived.lemmas.iter().map(|l| l.checks.len()).sum();
    let failed: Vec<String> = derived
        .lemmas
        .iter()
        .flat_map(|l| l.checks.iter())
        .filter(|c| !c.passed)
        .map(|c| {
            if c.missing_facts.is_empty() {
                format!("{}: {}", c.claim, c.detail)
            } else {
                format!(
                    "{}: missing facts for {}",
                    c.claim,
                    c.missing_facts.join(", ")
                )
            }
        })
        .collect();
    if failed.is_empty() {
        Ok((true, format!("{total} claim lines checked")))
    } else {
        fail(failed.join("; "))
    }
}

fn partition(data: &DataSet) -> Result<(bool, String)> {
    let report = classify_all(data)?;
    let s = &report.summary;
    let want_occ: Vec<Label> = OCCURRING.iter().map(|l| label(l)).collect();
    let want_non: Vec<Label> = NON_OCCURRING.iter().map(|l| label(l)).collect();
    let mut got_occ = report.roster(Verdict::Occurring);
    let mut got_non = report.roster(Verdict::NonOccurring);
    got_occ.sort();
    got_non.sort();
    let mut want_occ_sorted = want_occ.clone();
    let mut want_non_sorted = want_non.clone();
    want_occ_sorted.sort();
    want_non_sorted.sort();
    let unknown = report.roster(Verdict::Unknown);
    let b_unknown = unknown
        .iter()
        .filter(|l| l.class == AppendixClass::B)
        .count();
    let c_unknown = unknown
        .iter()
        .filter(|l| l.class == AppendixClass::C)
        .count();
    let ok = s.eligible == 85
        && (s.occurring, s.non_occurring, s.unknown) == (22, 19, 44)
        && got_occ == want_occ_sorted
        && got_non == want_non_sorted
        && (b_unknown, c_unknown) == (11, 33);
    let names = |v: &[Label]| v.iter().map(Label::to_string).collect::<Vec<_>>().join(" ");
    let detail = if ok {
        format!("{} / {} / {}", s.occurring, s.non_occurring, s.unknown)
    } else {
        format!(
            "{} / {} / {}; occurring {}; non-occurring {}",
            s.occurring,
            s.non_occurring,
            s.unknown,
            names(&got_occ),
            names(&got_non)
        )
    };
    Ok((ok, detail))
}

/// Exhaustive properties over every graph of order seven, plus strong
/// admissibility implying plain admissibility on the eligible graphs.
fn properties(data: &DataSet) -> Result<(bool, String)> {
    let catalog = crate::enumeration::enumerate_all(7)?;
    let perms: Vec<Vec<usize>> = (0..7)
        .map(|k| (0..7).map(|i| (i + k) % 7).collect())
        .chain(std::iter::once((0..7).rev().collect()))
        .chain(std::iter::once(vec![1, 0, 3, 2, 5, 4, 6]))
        .collect();
    for g in &catalog.graphs {
        let code = g.to_graph6();
        if Graph::from_graph6(&code)? != *g {
            return fail(format!("graph6 round trip fails for {code}"));
        }
        if g.complement().complement() != *g {
            return fail(format!("complement is not an involution on {code}"));
        }
        let bip = g.complement().bipartition().is_some();
        let no_odd = crate::occurrence::rule_odd_cycle(g).is_none();
        let cover = g.two_clique_cover().is_some();
        if bip != no_odd || bip != cover {
            return fail(format!("bipartite/odd-cycle/cover disagree on {code}"));
        }
        for p in &perms {
            if g.permute(p)?.canonical_form() != g.canonical_form() {
                return fail(format!("canonical form moves under {p:?} on {code}"));
            }
        }
    }
    let (_, index) = load_index(data)?;
    let kb = &data.knowledge_base;
    let mut pairs = 0;
    for g in index.by_label.values() {
        for v in 0..g.order() {
            if is_strongly_admissible(g, v, kb)?.holds && !is_admissible(g, v, kb)?.holds {
                return fail(format!("strong without plain at {v} of {}", g.to_graph6()));
            }
            pairs += 1;
        }
    }
    Ok((
        true,
        format!(
            "{} graphs checked under {} permutations, {pairs} admissibility pairs",
            catalog.len(),
            perms.len()
        ),
    ))
}

/// Runs every check; errors are reported as failed items, never returned.
pub fn verify_paper(data: &DataSet) -> Checklist {
    type Check<'a> = Box<dyn Fn() -> Result<(bool, String)> + 'a>;
    let checks: Vec<(&str, Check)> = vec![
        ("enumeration", Box::new(enumeration)),
        ("eligibility", Box::new(|| eligibility(data))),
        ("disconnected", Box::new(|| disconnected(data))),
        ("constructions", Box::new(|| constructions(data))),
        ("eliminations", Box::new(|| eliminations(data))),
        ("lemma checks", Box::new(|| lemmas(data))),
        ("final partition", Box::new(|| partition(data))),
        ("properties", Box::new(|| properties(data))),
    ];
    let items = checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let start = Instant::now();
            let (passed, detail) = match check() {
                Ok(r) => r,
                Err(e) => (false, e.to_string()),
            };
            CheckItem {
                id: i as u8 + 1,
                name: name.to_string(),
                passed,
                detail,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect();
    Checklist { items }
}
