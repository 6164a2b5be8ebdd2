//! Exact spanning-tree and spanning-forest generating functions on
//! Sierpinski gaskets and on Schreier graphs of the Hanoi Towers group.
//!
//! Every graph in here carries edges labelled `a`, `b` or `c`; weighting those
//! labels by three variables turns the tree count into a trivariate polynomial.
//! The crate computes it several independent ways (recursion, closed product
//! form, weighted matrix-tree cofactor, Schur decimation, brute-force
//! enumeration) so they can be checked against each other.

pub mod algebra;
pub mod error;
pub mod gf;
pub mod graph;
pub mod label;
pub mod matrix_tree;
pub mod oracle;
pub mod report;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use label::Label;
