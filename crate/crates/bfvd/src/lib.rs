//! Biclique-free vertex deletion: may at most `k` vertices be deleted so
//! that no complete bipartite `K_{i,j}` subgraph remains?
//!
//! The crate bundles:
//! - smaller-side enumeration and the membership reduction
//!   ([`biclique`]);
//! - exact solvers parameterized by vertex cover, degeneracy, and feedback
//!   vertex number, plus a brute-force oracle they are all checked
//!   against ([`solvers`]);
//! - kernelization by the feedback edge number: the weighted
//!   bounded-degree pipeline with characteristic-matrix path replacement
//!   ([`wbdd`]) and the linear kernel for `i >= 2` ([`bfvd_kernel`]);
//! - wrappers between bounded-degree deletion and the biclique problem,
//!   including the degree-blowup gadget ([`reduce`]);
//! - seeded generators and the benchmark harness ([`gen`], [`harness`]).
//!
//! The `parallel` feature (default) runs enumeration sweeps, table
//! construction, and benchmark batches on rayon; without it everything
//! falls back to sequential iteration with identical results.

pub mod bfvd_kernel;
pub mod biclique;
mod bits;
pub mod error;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod params;
pub mod parse;
mod par;
pub mod reduce;
pub mod report;
pub mod solvers;
pub mod structure;
pub mod trace;
pub mod wbdd;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use instance::{BddInstance, BfvdInstance, ParsedInstance, WbddInstance};
pub use solvers::{solve, SolveOptions, Strategy, Verdict};
