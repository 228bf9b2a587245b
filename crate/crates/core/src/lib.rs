//! Domination numbers of graphs and their Cartesian products.
//!
//! The crate computes exact domination numbers over bit-row graphs, builds
//! Cartesian products, and checks the lower bound
//! `γ(G □ H) ≥ ½γ(G)γ(H) + ½max(γ(G), γ(H))` on concrete instances by
//! materialising every set of its counting argument ([`trace`]).
//!
//! ```
//! use vizbound::{graph, solver};
//!
//! let g = graph::grid(4, 4).unwrap();
//! let r = solver::gamma_bb(&g, &solver::SolverLimits::default()).unwrap();
//! assert_eq!(r.gamma, 4);
//! ```

pub mod bitset;
pub mod cli;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod product;
pub mod solver;
pub mod trace;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{encode_graph6, parse_graph6};
pub use harness::{check_pair, remark_search, sweep, HarnessConfig, PairReport, RemarkReport};
pub use product::{cartesian_product, ProductGraph};
pub use solver::{gamma_bb, gamma_oracle, gamma_restricted, DominationResult, SolverLimits};
pub use trace::{build_trace, verify_trace, ProofTrace, TraceVerdict};
