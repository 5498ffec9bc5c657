//! Exact polydendriform shuffle products on the faces of hypergraph polytopes.
//!
//! Faces are labelled by constructs of atomic hypergraphs. A team of
//! hypergraphs partitioning a larger one, with one construct per member,
//! multiplies to a formal sum of constructs of the larger hypergraph whose
//! coefficients are polynomials in `q`.

pub mod clans;
pub mod cli;
pub mod constructs;
pub mod encodings;
pub mod error;
pub mod hypergraph;
pub mod json;
pub mod qalgebra;
pub mod sampling;
pub mod shuffle;
pub mod suites;

pub use clans::{Delegation, Mode, Team, Universe};
pub use constructs::Construct;
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, VertexId, VertexSet};
pub use qalgebra::{LinearConstruct, QPolynomial};
