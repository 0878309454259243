use hadlab_core::{CMat, C64};

use crate::cluster::dedup_complex;

/// The set of phase products h_ij·h_kl·conj(h_il)·conj(h_kj) over all index
/// quadruples, deduplicated with tolerance `tol` and sorted by (re, im).
/// Invariant under monomial equivalence.
pub fn haagerup_set(h: &CMat, tol: f64) -> Vec<C64> {
    let n = h.order();
    let mut values = Vec::with_capacity(n * n * n * n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                for l in 0..n {
                    values.push(h[(i, j)] * h[(k, l)] * h[(i, l)].conj() * h[(k, j)].conj());
                }
            }
        }
    }
    dedup_complex(values, tol)
}

/// Compare two deduplicated value sets up to `tol`: every element of each is
/// matched by one of the other.
pub fn same_value_set(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.iter().all(|x| b.iter().any(|y| (x - y).norm() <= tol))
        && b.iter().all(|y| a.iter().any(|x| (x - y).norm() <= tol))
}
