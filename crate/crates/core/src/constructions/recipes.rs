use std::fmt;

use serde::{Deserialize, Serialize};

use super::cd::{cd_diameter3, cd_semilinear, gamma_kt_graph, graph_from_cd, PrimeLabeling};
use super::factored::{DegreeSet, FactoredInt};
use crate::enumeration::{AppendixIndex, Label};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::occurrence::{status, KnowledgeBase, Verdict};

/// A named small graph used as a join factor or as a recipe target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operand {
    Complete(usize),
    /// Disjoint union of two cliques.
    Disjoint(usize, usize),
    Gamma(usize, usize),
    Graph6(Graph),
    Label(Label),
}

impl Operand {
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("operand {s:?} needs the form kind:args"))?;
        let nums = || -> std::result::Result<Vec<usize>, String> {
            arg.split(',')
                .map(|x| x.parse().map_err(|_| format!("bad number {x:?} in {s:?}")))
                .collect()
        };
        let pair = || -> std::result::Result<(usize, usize), String> {
            match nums()?[..] {
                [a, b] => Ok((a, b)),
                _ => Err(format!("{s:?} needs two numbers")),
            }
        };
        match kind {
            "complete" => match nums()?[..] {
                [n] => Ok(Operand::Complete(n)),
                _ => Err(format!("{s:?} needs one number")),
            },
            "disjoint" => pair().map(|(a, b)| Operand::Disjoint(a, b)),
            "gamma" => pair().map(|(k, t)| Operand::Gamma(k, t)),
            "g6" => Graph::from_graph6(arg)
                .map(Operand::Graph6)
                .map_err(|e| e.to_string()),
            "label" => arg.parse().map(Operand::Label),
            other => Err(format!("unknown operand kind {other:?}")),
        }
    }

    pub fn graph(&self, index: Option<&AppendixIndex>) -> Result<Graph> {
        match *self {
            Operand::Complete(n) => Graph::complete(n),
            Operand::Disjoint(a, b) => Graph::disjoint_cliques(&[a, b]),
            Operand::Gamma(k, t) => gamma_kt_graph(k, t),
            Operand::Graph6(g) => Ok(g),
            Operand::Label(l) => {
                index
                    .and_then(|ix| ix.graph(l).copied())
                    .ok_or_else(|| Error::Construction {
                        label: l.to_string(),
                        detail: "no appendix data for this label".into(),
                    })
            }
        }
    }
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Complete(n) => write!(f, "complete:{n}"),
            Operand::Disjoint(a, b) => write!(f, "disjoint:{a},{b}"),
            Operand::Gamma(k, t) => write!(f, "gamma:{k},{t}"),
            Operand::Graph6(g) => write!(f, "g6:{}", g.to_graph6()),
            Operand::Label(l) => write!(f, "label:{l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecipeKind {
    Gamma { k: usize, t: usize },
    Complete(usize),
    Join(Operand, Operand),
    Semilinear { q: u64, n: u32, factors: Vec<u64> },
    Diameter3 { p: u64, r: u64, stuv: [u64; 4] },
}

impl fmt::Display for RecipeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join("*");
        match self {
            RecipeKind::Gamma { k, t } => write!(f, "gamma {k} {t}"),
            RecipeKind::Complete(n) => write!(f, "complete {n}"),
            RecipeKind::Join(a, b) => write!(f, "join {a} {b}"),
            RecipeKind::Semilinear { q, n, factors } => {
                write!(f, "semilinear {q} {n} {}", star(factors))
            }
            RecipeKind::Diameter3 { p, r, stuv } => write!(f, "diameter3 {p} {r} {}", star(stuv)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub name: String,
    pub kind: RecipeKind,
    /// Explicit target; otherwise `name` is an appendix label.
    pub target: Option<Operand>,
    pub line: usize,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name, self.kind)?;
        if let Some(t) = &self.target {
            write!(f, " => {t}")?;
        }
        Ok(())
    }
}

fn parse_kind(words: &[&str]) -> std::result::Result<RecipeKind, String> {
    let num = |s: &str| -> std::result::Result<u64, String> {
        s.parse().map_err(|_| format!("bad number {s:?}"))
    };
    let small = |s: &str| num(s).map(|x| x as usize);
    let product =
        |s: &str| -> std::result::Result<Vec<u64>, String> { s.split('*').map(num).collect() };
    match words {
        ["gamma", k, t] => Ok(RecipeKind::Gamma {
            k: small(k)?,
            t: small(t)?,
        }),
        ["complete", n] => Ok(RecipeKind::Complete(small(n)?)),
        ["join", a, b] => Ok(RecipeKind::Join(Operand::parse(a)?, Operand::parse(b)?)),
        ["semilinear", q, n, fs] => Ok(RecipeKind::Semilinear {
            q: num(q)?,
            n: u32::try_from(num(n)?).map_err(|_| "exponent too large".to_string())?,
            factors: product(fs)?,
        }),
        ["diameter3", p, r, fs] => {
            let stuv: [u64; 4] = product(fs)?
                .try_into()
                .map_err(|_| "diameter3 needs exactly four primes s*t*u*v".to_string())?;
            Ok(RecipeKind::Diameter3 {
                p: num(p)?,
                r: num(r)?,
                stuv,
            })
        }
        [kind, ..] => Err(format!("unknown recipe {kind:?} or wrong argument count")),
        [] => Err("empty recipe".into()),
    }
}

/// Lines are `<name> <kind> <args...> [=> <target>]`; `#` starts a comment.
pub fn parse_recipes(path: &str, text: &str) -> Result<Vec<Recipe>> {
    let mut out: Vec<Recipe> = Vec::new();
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
        let (body, target) = match content.split_once("=>") {
            Some((b, t)) => (b, Some(Operand::parse(t.trim()).map_err(err)?)),
            None => (content, None),
        };
        let words: Vec<&str> = body.split_whitespace().collect();
        let Some((name, rest)) = words.split_first() else {
            return Err(err("missing recipe name".into()));
        };
        if target.is_none() {
            name.parse::<Label>().map_err(err)?;
        }
        if out.iter().any(|r| r.name == *name) {
            return Err(err(format!("recipe {name} defined twice")));
        }
        out.push(Recipe {
            name: name.to_string(),
            kind: parse_kind(rest).map_err(err)?,
            target,
            line: i + 1,
        });
    }
    Ok(out)
}

/// The output of one recipe, already matched against its target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltGraph {
    pub recipe: Recipe,
    pub graph: Graph,
    pub target: Graph,
    /// Present for recipes that go through a character degree set.
    pub degrees: Option<DegreeSet>,
    pub labeling: Option<PrimeLabeling>,
}

impl BuiltGraph {
    pub fn label(&self) -> Option<Label> {
        self.recipe.name.parse().ok()
    }
}

fn require_occurring(recipe: &Recipe, g: &Graph, what: &str, kb: &KnowledgeBase) -> Result<()> {
    let s = status(g, kb)?;
    if s.verdict() == Verdict::Occurring {
        Ok(())
    } else {
        Err(Error::Construction {
            label: recipe.name.clone(),
            detail: format!("{what} {} is {s}", g.to_graph6()),
        })
    }
}

/// Runs one recipe and checks that the result is isomorphic to its target.
pub fn build_recipe(
    recipe: &Recipe,
    index: Option<&AppendixIndex>,
    kb: &KnowledgeBase,
) -> Result<BuiltGraph> {
    let fail = |detail: String| Error::Construction {
        label: recipe.name.clone(),
        detail,
    };
    let mut degrees = None;
    let graph = match &recipe.kind {
        RecipeKind::Gamma { k, t } => {
            let g = gamma_kt_graph(*k, *t)?;
            require_occurring(recipe, &g, "the graph", kb)?;
            g
        }
        RecipeKind::Complete(n) => Graph::complete(*n)?,
        RecipeKind::Join(a, b) => {
            let (ga, gb) = (a.graph(index)?, b.graph(index)?);
            require_occurring(recipe, &ga, "join factor", kb)?;
            require_occurring(recipe, &gb, "join factor", kb)?;
            ga.join(&gb)?
        }
        RecipeKind::Semilinear { q, n, factors } => {
            let mult = FactoredInt::from_primes(factors)?;
            let ds = cd_semilinear(*q, *n, &mult)?;
            let (g, _) = graph_from_cd(&ds)?;
            degrees = Some(ds);
            g
        }
        RecipeKind::Diameter3 { p, r, stuv } => {
            let ds = cd_diameter3(*p, *r, *stuv)?;
            let (g, _) = graph_from_cd(&ds)?;
            degrees = Some(ds);
            g
        }
    };
    let labeling = match &degrees {
        Some(ds) => Some(graph_from_cd(ds)?.1),
        None => None,
    };
    let target = match &recipe.target {
        Some(op) => op.graph(index)?,
        None => {
            let label: Label = recipe.name.parse().map_err(fail)?;
            Operand::Label(label).graph(index)?
        }
    };
    if !graph.is_isomorphic(&target) {
        return Err(fail(format!(
            "built {} but the target is {}",
            graph.to_graph6(),
            target.to_graph6()
        )));
    }
    Ok(BuiltGraph {
        recipe: recipe.clone(),
        graph,
        target,
        degrees,
        labeling,
    })
}

/// Builds every recipe; the first failure aborts.
pub fn build_occurring_catalog(
    recipes: &[Recipe],
    index: &AppendixIndex,
    kb: &KnowledgeBase,
) -> Result<Vec<BuiltGraph>> {
    recipes
        .iter()
        .map(|r| build_recipe(r, Some(index), kb))
        .collect()
}

/// Serializable summary of a built recipe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuiltSummary {
    pub name: String,
    pub recipe: String,
    pub graph6: String,
    pub degrees: Option<String>,
    pub primes: Option<Vec<u64>>,
}

impl From<&BuiltGraph> for BuiltSummary {
    fn from(b: &BuiltGraph) -> Self {
        BuiltSummary {
            name: b.recipe.name.clone(),
            recipe: b.recipe.kind.to_string(),
            graph6: b.graph.to_graph6(),
            degrees: b.degrees.as_ref().map(|d| d.to_string()),
            primes: b.labeling.as_ref().map(|l| l.primes().to_vec()),
        }
    }
}
