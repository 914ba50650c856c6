//! Exact algebra of mixed graphs.
//!
//! A mixed graph carries digons (undirected edges) and arcs. Encoding arc
//! directions with the primitive cube root of unity turns the classical
//! incidence-matrix factorizations of line-graph theory into exact identities
//! over the Eisenstein integers, and makes the line graph of a mixed graph,
//! its roots and the cycle-weight switching theory all algorithmically
//! checkable. This crate implements that toolkit with no floating point
//! anywhere: scalars are exact integer pairs, matrices are dense and exact,
//! and every theorem-shaped statement is exposed as a checkable identity or
//! a constructive procedure.
//!
//! Highlights:
//!
//! - [`scalar`]: arithmetic in `Z[w]`, `w^2 = -1 - w`.
//! - [`graph`]: the mixed-graph model, walks, validation, serialization order.
//! - [`matrix`]: Hermitian adjacency and incidence matrices, exact products,
//!   characteristic polynomials, factorization checks.
//! - [`linegraph`]: mixed line graphs (both variants) and the classical line
//!   graph.
//! - [`cliques`] and [`roots`]: complete clique systems, undirected root
//!   reconstruction, mixed-root recovery with algebraic verification.
//! - [`monograph`]: walk values, stores, switching, orientation matrices and
//!   root recovery through them.
//! - [`generate`] and [`oracle`]: seeded instance generators and brute-force
//!   references used by the test suites.

pub mod cliques;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod linegraph;
pub mod matrix;
pub mod monograph;
pub mod oracle;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{arc, digon, matches_up_to_vertex_names, MixedGraph, Walk};
pub use linegraph::{mixed_line_graph, undirected_line_graph};
pub use matrix::{
    char_poly, check_factorizations, check_line_charpoly, degree_diagonal, hermitian_adjacency,
    incidence_matrix, CharPoly, ExactMatrix,
};
pub use scalar::{Eisenstein, UnitRoot, Variant};
