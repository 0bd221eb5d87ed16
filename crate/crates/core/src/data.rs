//! The curated data files, either compiled in or read from a directory.

use std::path::Path;

use crate::constructions::{parse_recipes, Recipe};
use crate::enumeration::{parse_appendix, AppendixClass, AppendixEntry};
use crate::error::{Error, Result};
use crate::occurrence::KnowledgeBase;
use crate::pipeline::{parse_claims, Claim};

pub const KNOWLEDGE_BASE_FILE: &str = "knowledge_base.facts";
pub const RECIPES_FILE: &str = "constructions.recipes";
pub const CLAIMS_FILE: &str = "lemma_checks.claims";

const EMBEDDED: [(&str, &str); 6] = [
    ("appendix_a.g6", include_str!("../../../data/appendix_a.g6")),
    ("appendix_b.g6", include_str!("../../../data/appendix_b.g6")),
    ("appendix_c.g6", include_str!("../../../data/appendix_c.g6")),
    (
        KNOWLEDGE_BASE_FILE,
        include_str!("../../../data/knowledge_base.facts"),
    ),
    (
        RECIPES_FILE,
        include_str!("../../../data/constructions.recipes"),
    ),
    (
        CLAIMS_FILE,
        include_str!("../../../data/lemma_checks.claims"),
    ),
];

/// Everything the pipeline reads, parsed and validated line by line.
#[derive(Clone, Debug)]
pub struct DataSet {
    pub appendix: Vec<(AppendixClass, Vec<AppendixEntry>)>,
    pub knowledge_base: KnowledgeBase,
    pub recipes: Vec<Recipe>,
    pub claims: Vec<Claim>,
}

impl DataSet {
    /// The copies compiled into the library.
    pub fn embedded() -> Result<Self> {
        Self::from_source(|name| {
            EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| Error::Io {
                    path: name.to_string(),
                    detail: "not embedded".into(),
                })
        })
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        Self::from_source(|name| {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                detail: e.to_string(),
            })
        })
    }

    /// Builds a data set from a function returning the text of each file.
    pub fn from_source(mut read: impl FnMut(&str) -> Result<String>) -> Result<Self> {
        let mut appendix = Vec::new();
        for class in AppendixClass::ALL {
            let name = class.file_name();
            appendix.push((class, parse_appendix(name, &read(name)?)?));
        }
        let knowledge_base =
            KnowledgeBase::parse(KNOWLEDGE_BASE_FILE, &read(KNOWLEDGE_BASE_FILE)?)?;
        let recipes = parse_recipes(RECIPES_FILE, &read(RECIPES_FILE)?)?;
        let claims = parse_claims(CLAIMS_FILE, &read(CLAIMS_FILE)?)?;
        Ok(DataSet {
            appendix,
            knowledge_base,
            recipes,
            claims,
        })
    }
}
