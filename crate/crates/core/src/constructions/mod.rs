//! Factored arithmetic, degree sets and the recipes realizing occurring graphs.

mod cd;
mod factored;
mod recipes;

pub use cd::{
    cd_diameter3, cd_semilinear, cyclotomic_coprimality, gamma_kt_graph, graph_from_cd,
    verify_factored_value, PrimeLabeling,
};
pub use factored::{is_prime, DegreeSet, FactoredInt};
pub use recipes::{
    build_occurring_catalog, build_recipe, parse_recipes, BuiltGraph, BuiltSummary, Operand,
    Recipe, RecipeKind,
};
