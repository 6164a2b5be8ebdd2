//! Weighted matrix-tree theorem: exact Laplacian cofactors for any labelled
//! graph, and the decimation pipeline specific to Hanoi graphs.

mod lambda;
mod laplacian;
mod matrix;
mod schur;
mod tables;

pub use lambda::{
    divergence, generator_matrix, hanoi_tn_schur, hanoi_tn_schur_with, lambda_matrix, orbit_exponent,
    schur_map_rederived, SchurOutcome, SCHUR_LEVEL_CAP,
};
pub use laplacian::{cofactor_at, tree_gf_cofactor, weighted_laplacian};
pub use matrix::RationalMatrix;
pub use schur::{random_state, schur_denominator, schur_map, SchurMapVariant, SchurState, Term, Transcription};
