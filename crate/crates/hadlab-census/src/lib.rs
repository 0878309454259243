//! Exhaustive enumeration and classification of Hadamard matrices with
//! q-th-root-of-unity entries at small orders, per-class statistics
//! (defect, automorphism order, vanishing minors, Z_q-rank), and the
//! block construction lifting a root-of-unity matrix with a small-rank
//! exponent factorization to larger orders and root degrees.

pub mod auto;
pub mod enumerate;
pub mod rows;
pub mod spectral;
pub mod stats;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("{0}")]
    Domain(String),
    #[error("search budget exhausted: {0}")]
    BudgetExceeded(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub use auto::automorphism_pair_count;
pub use enumerate::{brute_force_census, enumerate_bh, CensusOptions, CensusResult};
pub use rows::{candidate_rows, rows_orthogonal};
pub use spectral::{
    example12_qs, km_bh6_8, km_doubling_factors, spectral_double, spectral_lift, tao_bh6_3,
};
pub use stats::{census_stats, class_stats, render_stats_table, ClassStats};
