//! Equivalence invariants for complex Hadamard matrices: the defect, the
//! Haagerup set, the minor fingerprint, the rectangular rank profile, the
//! Z_q-rank of exponent matrices, and a monomial-equivalence decision
//! procedure with verified witnesses.

mod cluster;
mod defect;
mod equiv;
mod fingerprint;
mod haagerup;
mod rank;
mod zq;

pub use cluster::cluster_reals;
pub use defect::{defect, fourier_defect, DefectReport};
pub use equiv::{act_classify, are_equivalent, ActFlags, EquivResult, Witness, DEFAULT_BUDGET};
pub use fingerprint::{fingerprint, minor_modulus, Fingerprint};
pub use haagerup::{haagerup_set, same_value_set};
pub use rank::{rank_profile, rank_profile_slot, submatrix_rank, RankProfile};
pub use zq::{zq_rank, ZqRank};

/// Binomial coefficient as u64 (small arguments only).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u64;
    for i in 0..k {
        num = num * (n - i) as u64 / (i + 1) as u64;
    }
    num
}
