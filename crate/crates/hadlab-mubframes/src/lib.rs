//! Mutually unbiased bases and equiangular structures: the tensor product
//! construction, an exact factorization of bicirculant Hadamard matrices into
//! MUB triplets, real equiangular line packings from real MUBs, and
//! equiangular tight frames through signature matrices.

pub mod frames;
pub mod lines;
pub mod mub;
pub mod zauner;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MubFrameError {
    #[error("{0}")]
    Domain(String),
    #[error("matrix is not Hadamard (deviation {0})")]
    NotHadamard(f64),
    #[error("flattening failed; best deviation {0}")]
    NotFlat(f64),
}

pub use frames::{
    frame_dimension, hadamard_to_signature, hoggar, is_skew_design, paley_design, q9,
    signature_gram, signature_to_hadamard, skew_to_signature, SignatureMatrix,
};
pub use lines::{
    equiangular_from_mubs, is_real_unbiased, line_lower_bound, real_mubs_dim4, LineSet,
};
pub use mub::{is_unbiased, mub_tensor, order2_triplet, MubSet};
pub use zauner::{is_bicirculant, rephase_to_bicirculant, zauner_factor, ZaunerFactorization};
