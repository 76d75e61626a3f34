//! Verification toolkit for Folkman-type arrowing relations on small graphs.
//!
//! - [`graph`]: immutable graphs on at most 64 vertices and standard constructions.
//! - [`graph6`]: the graph6 interchange format.
//! - [`clique`]: exact clique and independence numbers.
//! - [`arrowing`]: vertex/edge arrowing deciders, checkers, brute-force oracle, CNF export.
//! - [`expr`]: construction expressions such as `join(K12,Q)`.
//! - [`registry`]: known Ramsey numbers and Folkman bounds with provenance.
//! - [`certifier`]: hypothesis checks and bound reports for the two constructions.

pub mod arrowing;
pub mod certifier;
pub mod clique;
pub mod error;
pub mod expr;
pub mod graph;
pub mod graph6;
pub mod registry;
pub mod report;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
