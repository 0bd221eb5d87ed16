//! Exhaustive catalogs of small graphs and the appendix bookkeeping.
//!
//! Labeled graphs of order `n` are visited in increasing order of their
//! graph6 bit string. The first unvisited code is the least member of its
//! isomorphism class, so it is recorded as the class representative and
//! its whole orbit under the symmetric group is marked visited.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_index, CanonicalForm, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCatalog {
    pub order: usize,
    /// Canonical representatives sorted by (edge count, canonical form).
    pub graphs: Vec<Graph>,
}

impl GraphCatalog {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn filter(&self, keep: impl Fn(&Graph) -> bool) -> Self {
        Self {
            order: self.order,
            graphs: self.graphs.iter().copied().filter(|g| keep(g)).collect(),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: u16, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 {
                prefix.push(v);
                go(prefix, used | 1 << v, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// For each permutation, where every most-significant-first bit position
/// of the lex code moves to.
fn position_maps(n: usize) -> Vec<Vec<u8>> {
    let bits = pair_count(n);
    let lex_pos = |i: usize, j: usize| bits - 1 - pair_index(i.min(j), i.max(j));
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    permutations(n)
        .into_iter()
        .map(|perm| {
            let mut map = vec![0u8; bits];
            for &(i, j) in &pairs {
                map[lex_pos(i, j)] = lex_pos(perm[i], perm[j]) as u8;
            }
            map
        })
        .collect()
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn enumerate_all(n: usize) -> Result<GraphCatalog> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationOrder(n));
    }
    let bits = pair_count(n);
    let maps = position_maps(n);
    let space = 1usize << bits;
    let mut visited = vec![0u64; space.div_ceil(64)];
    let mut graphs = Vec::new();
    for code in 0..space {
        if visited[code / 64] >> (code % 64) & 1 == 1 {
            continue;
        }
        graphs.push(Graph::from_lex_code(n, code as u64));
        for map in &maps {
            let mut image = 0usize;
            let mut rest = code;
            while rest != 0 {
                let pos = rest.trailing_zeros() as usize;
                image |= 1 << map[pos];
                rest &= rest - 1;
            }
            visited[image / 64] |= 1 << (image % 64);
        }
    }
    graphs.sort_by_key(|g| (g.edge_count(), g.lex_code()));
    Ok(GraphCatalog { order: n, graphs })
}

pub fn enumerate_connected(n: usize) -> Result<GraphCatalog> {
    Ok(enumerate_all(n)?.filter(Graph::is_connected))
}

pub fn eligible_seven(g: &Graph) -> Result<bool> {
    if g.order() != 7 {
        return Err(Error::WrongOrder {
            expected: 7,
            actual: g.order(),
        });
    }
    Ok(g.two_clique_cover().is_some())
}

/// Which appendix an eligible seven-vertex graph is filed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AppendixClass {
    /// Largest cover clique has six (or seven) vertices.
    A,
    /// Cover by cliques of five and two.
    B,
    /// Cover by cliques of four and three.
    C,
}

impl AppendixClass {
    pub const ALL: [AppendixClass; 3] = [AppendixClass::A, AppendixClass::B, AppendixClass::C];

    pub fn letter(self) -> char {
        match self {
            AppendixClass::A => 'A',
            AppendixClass::B => 'B',
            AppendixClass::C => 'C',
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            AppendixClass::A => "appendix_a.g6",
            AppendixClass::B => "appendix_b.g6",
            AppendixClass::C => "appendix_c.g6",
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c {
            'A' => Some(AppendixClass::A),
            'B' => Some(AppendixClass::B),
            'C' => Some(AppendixClass::C),
            _ => None,
        }
    }
}

pub fn appendix_class(g: &Graph) -> Result<AppendixClass> {
    if !eligible_seven(g)? {
        return Err(Error::Ineligible);
    }
    let cover = g.two_clique_cover().ok_or(Error::Ineligible)?;
    Ok(match cover.large.len() {
        6 | 7 => AppendixClass::A,
        5 => AppendixClass::B,
        _ => AppendixClass::C,
    })
}

/// An appendix label such as `B15`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub class: AppendixClass,
    pub index: u8,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class.letter(), self.index)
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut chars = s.chars();
        let class = chars
            .next()
            .and_then(AppendixClass::from_letter)
            .ok_or_else(|| format!("label {s:?} must start with A, B or C"))?;
        let digits = chars.as_str();
        if digits.is_empty()
            || digits.starts_with('0')
            || !digits.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(format!("label {s:?} needs a positive index"));
        }
        let index = digits
            .parse()
            .map_err(|_| format!("label {s:?} index too large"))?;
        Ok(Label { class, index })
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Expected number of labels per appendix.
pub fn appendix_size(class: AppendixClass) -> usize {
    match class {
        AppendixClass::A => 6,
        AppendixClass::B => 26,
        AppendixClass::C => 53,
    }
}

/// Parsed `<label> <graph6>` lines of one appendix file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixEntry {
    pub label: Label,
    pub graph: Graph,
    pub line: usize,
}

pub fn parse_appendix(path: &str, text: &str) -> Result<Vec<AppendixEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |detail: String| Error::Parse {
            path: path.to_string(),
            line: i + 1,
            detail,
        };
        let mut parts = line.split_whitespace();
        let (Some(label), Some(g6), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err("expected `<label> <graph6>`".into()));
        };
        let label: Label = label.parse().map_err(err)?;
        let graph = Graph::from_graph6(g6).map_err(|e| err(e.to_string()))?;
        out.push(AppendixEntry {
            label,
            graph,
            line: i + 1,
        });
    }
    Ok(out)
}

/// Bijection between appendix labels and eligible canonical forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixIndex {
    pub by_label: BTreeMap<Label, Graph>,
    pub by_form: HashMap<CanonicalForm, Label>,
}

impl AppendixIndex {
    pub fn graph(&self, label: Label) -> Option<&Graph> {
        self.by_label.get(&label)
    }

    pub fn label_of(&self, g: &Graph) -> Option<Label> {
        self.by_form.get(&g.canonical_form()).copied()
    }

    pub fn len(&self) -> usize {
        self.by_label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_label.is_empty()
    }
}

/// Validates the transcribed appendix files against the enumeration.
///
/// `files` holds the entries of each appendix. Every label must be present
/// exactly once with the expected numbering, every graph must be eligible
/// and filed under its own class, no two labels may share a graph, and
/// every eligible graph of `catalog` must be covered.
pub fn match_appendix_data(
    catalog: &GraphCatalog,
    files: &[(AppendixClass, Vec<AppendixEntry>)],
) -> Result<AppendixIndex> {
    let mut problems = Vec::new();
    let mut by_label = BTreeMap::new();
    let mut by_form: HashMap<CanonicalForm, Label> = HashMap::new();
    for (class, entries) in files {
        for e in entries {
            if e.label.class != *class {
                problems.push(format!("{} listed in the {} file", e.label, class.letter()));
                continue;
            }
            if by_label.insert(e.label, e.graph).is_some() {
                problems.push(format!("{} appears more than once", e.label));
                continue;
            }
            if e.graph.order() != 7 || !e.graph.is_connected() {
                problems.push(format!("{} is not a connected seven-vertex graph", e.label));
                continue;
            }
            match appendix_class(&e.graph) {
                Err(_) => problems.push(format!("{} is not eligible", e.label)),
                Ok(c) if c != *class => problems.push(format!(
                    "{} has its largest cover clique in appendix {}",
                    e.label,
                    c.letter()
                )),
                Ok(_) => {}
            }
            let form = e.graph.canonical_form();
            if let Some(prev) = by_form.insert(form, e.label) {
                problems.push(format!("{prev} and {} are the same graph", e.label));
            }
        }
    }
    for class in AppendixClass::ALL {
        for index in 1..=appendix_size(class) {
            let label = Label {
                class,
                index: index as u8,
            };
            if !by_label.contains_key(&label) {
                problems.push(format!("{label} is missing"));
            }
        }
        let extra: Vec<String> = by_label
            .keys()
            .filter(|l| l.class == class && l.index as usize > appendix_size(class))
            .map(|l| l.to_string())
            .collect();
        if !extra.is_empty() {
            problems.push(format!("unexpected labels {}", extra.join(", ")));
        }
    }
    for g in &catalog.graphs {
        if g.order() == 7 && g.is_connected() && g.two_clique_cover().is_some() {
            let form = g.canonical_form();
            if !by_form.contains_key(&form) {
                problems.push(format!("eligible graph {} has no label", g.to_graph6()));
            }
        }
    }
    if problems.is_empty() {
        Ok(AppendixIndex { by_label, by_form })
    } else {
        Err(Error::AppendixMismatch(problems.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (1..=5).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(5).unwrap().len(), 21);
    }

    #[test]
    fn rejects_out_of_range_orders() {
        assert_eq!(enumerate_all(0), Err(Error::EnumerationOrder(0)));
        assert_eq!(enumerate_all(8), Err(Error::EnumerationOrder(8)));
    }

    #[test]
    fn catalog_sorted_by_edges_then_form() {
        let cat = enumerate_all(5).unwrap();
        let keys: Vec<_> = cat
            .graphs
            .iter()
            .map(|g| (g.edge_count(), g.canonical_form()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn eligibility_of_extremes() {
        assert!(eligible_seven(&Graph::complete(7).unwrap()).unwrap());
        let c7 =
            Graph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>()).unwrap();
        assert!(!eligible_seven(&c7).unwrap());
        assert!(c7.palfy_triple_check().is_some());
        assert!(matches!(
            eligible_seven(&Graph::complete(6).unwrap()),
            Err(Error::WrongOrder { .. })
        ));
        assert_eq!(
            appendix_class(&Graph::complete(7).unwrap()),
            Ok(AppendixClass::A)
        );
        assert_eq!(appendix_class(&c7), Err(Error::Ineligible));
    }

    #[test]
    fn label_parsing() {
        let l: Label = "C53".parse().unwrap();
        assert_eq!(l.class, AppendixClass::C);
        assert_eq!(l.index, 53);
        assert_eq!(l.to_string(), "C53");
        for bad in ["", "D1", "A", "A0", "A01", "Ax"] {
            assert!(bad.parse::<Label>().is_err(), "{bad}");
        }
        let a2: Label = "A2".parse().unwrap();
        let a10: Label = "A10".parse().unwrap();
        assert!(a2 < a10);
    }
}
