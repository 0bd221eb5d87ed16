//! Classification of small graphs as prime character degree graphs of
//! finite solvable groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: the bit-packed [`Graph`] value type, canonical forms,
//!   graph6 I/O and the structural predicates the rules need.
//! * [`enumeration`]: brute-force catalogs of all graphs of order at most
//!   seven and the appendix bookkeeping built on them.
//! * [`occurrence`]: the rule chain, the curated knowledge base and the
//!   admissible-vertex machinery.
//! * [`constructions`]: exact factored-integer arithmetic, character degree
//!   sets and the recipes that realize occurring graphs.
//! * [`pipeline`]: classification reports, claim checks and DOT output.

pub mod constructions;
pub mod data;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod occurrence;
pub mod pipeline;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Edge, Graph, VertexSet};
