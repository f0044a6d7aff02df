//! Canonical edge labelings of the complete graph `K_n` and exact,
//! per-order certification of the antimagic-type properties they induce.
//!
//! - [`labeling`]: the pair ranking `F(i, j)`, its inverse and edge labelings.
//! - [`closed_forms`]: exact per-vertex sums and weights.
//! - [`graph`]: graph/digraph model and the edge-list file format.
//! - [`oracle`]: definition-level checkers and exhaustive search.
//! - [`certifier`]: per-order certificates and range scans.
//! - [`cli`]: the `kn-antimagic` command line.

pub mod certifier;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod oracle;

pub use error::{Error, Result};
pub use labeling::{
    label_all, label_index, label_inverse, label_subgraph, EdgeLabel, EdgePair, LabelAssignment,
    Order,
};
