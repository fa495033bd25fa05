//! Chromatic symmetric functions in exact arithmetic.
//!
//! The crate computes `X_G` for finite simple graphs three independent ways
//! (proper colorings in finitely many variables, the signed sum over edge
//! subsets, and the Möbius sum over the lattice of contractions), builds the
//! bases `{X_{G_λ}}` of the degree-`n` symmetric functions from any family of
//! connected graphs `G_k` on `k` vertices, and evaluates the closed-form
//! expansions for complete, star, path and cycle graphs.
//!
//! ```
//! use chromsym::{chromatic, graph::Graph, Limits};
//!
//! let triangle = Graph::complete(3).unwrap();
//! let x = chromatic::subset_expansion(&triangle, &Limits::default()).unwrap();
//! assert_eq!(x.to_string(), "2*p[3] - 3*p[2,1] + 1*p[1,1,1]");
//! ```

pub mod basis;
pub mod chromatic;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod limits;
pub mod linalg;
pub mod partition;
pub mod symfunc;

pub use error::{Cap, Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use partition::{lex_leq, partitions_of, z_of, Partition};
pub use symfunc::{Basis, Coeff, SymFunc, TruncatedPoly};
