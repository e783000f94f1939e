//! Clique values, generalized Randić indices and exact verification of the
//! weighted clique handshaking identities.
//!
//! The value of a `k`-clique is the number of vertices adjacent to all of its
//! vertices. Degrees are the values of 1-cliques, and the number of triangles
//! through an edge is the value of a 2-clique. The generalized Randić index
//! of order `k` is
//!
//! ```text
//! R(G; k) = sum over (k+1)-cliques Q of  1 / sqrt( prod_{facets f of Q} val(f) )
//! ```
//!
//! which is the classical Randić index at `k = 1`. It never exceeds
//! `c_k / (k + 1)`, where `c_k` counts `k`-cliques.
//!
//! ```
//! use clique_randic::{randic_index, Graph};
//!
//! let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
//! let r2 = randic_index(&k4, 2)?;
//! assert!((r2 - 2f64.sqrt()).abs() < 1e-12);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! Identities come back as [`IdentityReport`]s with both sides as exact
//! rationals:
//!
//! ```
//! use clique_randic::{reciprocal_identity, Graph};
//!
//! let diamond = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
//! let rep = reciprocal_identity(&diamond, 2)?;
//! assert!(rep.holds);
//! assert_eq!(rep.lhs.to_string(), "5");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod clique;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod randic;
pub mod scan;

pub use clique::{
    clique_counts, clique_value, enumerate_cliques, enumerate_cliques_par, facets,
    is_clique_regular, Clique, CliqueCounts, CliqueTable, CliqueValue,
};
pub use error::{AnalysisError, CliqueError, GraphError, ParseError, ScanError};
pub use graph::{Components, Graph, Vertex, VertexSet};
pub use io::{parse, serialize, GraphFormat};
pub use randic::{
    bound_report, clique_handshake_identity, gm_hm_check, gm_hm_tight, incidence_matrix_check,
    randic_index, reciprocal_identity, BoundReport, IdentityKind, IdentityReport, IncidenceMatrix,
    WeightFunction, BOUND_TOLERANCE,
};
pub use scan::{scan, scan_orders, scan_with_jobs, ScanReport};

pub use num_rational::BigRational;
