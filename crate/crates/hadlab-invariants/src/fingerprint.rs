use hadlab_core::{CMat, C64};
use itertools::Itertools;

use crate::cluster::cluster_reals;

/// Default dedup tolerance on minor moduli.
pub const TOL_FP: f64 = 1e-7;

/// Moduli of the d×d minors for d = 2..dmax, each collected as a sorted list
/// of (modulus, multiplicity) pairs.  Invariant under monomial equivalence.
#[derive(Clone, Debug, PartialEq)]
pub struct Fingerprint {
    /// Entry k corresponds to minor order d = k + 2.
    pub per_degree: Vec<Vec<(f64, u64)>>,
}

impl Fingerprint {
    /// Compare to another fingerprint with tolerance on the values.
    pub fn matches(&self, other: &Fingerprint, tol: f64) -> bool {
        self.per_degree.len() == other.per_degree.len()
            && self
                .per_degree
                .iter()
                .zip(&other.per_degree)
                .all(|(a, b)| {
                    a.len() == b.len()
                        && a.iter()
                            .zip(b)
                            .all(|(&(x, m), &(y, k))| (x - y).abs() <= tol && m == k)
                })
    }

    /// Number of vanishing d×d minors (modulus below `tol`), if that degree
    /// was computed.
    pub fn vanishing_count(&self, d: usize, tol: f64) -> Option<u64> {
        self.per_degree.get(d.checked_sub(2)?).map(|list| {
            list.iter()
                .filter(|&&(v, _)| v <= tol)
                .map(|&(_, m)| m)
                .sum()
        })
    }
}

/// |det| of the submatrix selected by `rows` × `cols`, via LU with partial
/// pivoting.
pub fn minor_modulus(h: &CMat, rows: &[usize], cols: &[usize]) -> f64 {
    let d = rows.len();
    debug_assert_eq!(d, cols.len());
    let mut a: Vec<C64> = Vec::with_capacity(d * d);
    for &r in rows {
        for &c in cols {
            a.push(h[(r, c)]);
        }
    }
    let mut det: f64 = 1.0;
    for k in 0..d {
        let mut piv = k;
        let mut best = a[k * d + k].norm();
        for i in k + 1..d {
            let v = a[i * d + k].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != k {
            for j in 0..d {
                a.swap(k * d + j, piv * d + j);
            }
        }
        let pivot = a[k * d + k];
        det *= pivot.norm();
        for i in k + 1..d {
            let f = a[i * d + k] / pivot;
            for j in k + 1..d {
                let akj = a[k * d + j];
                a[i * d + j] -= f * akj;
            }
        }
    }
    det
}

/// Compute the fingerprint up to minor order `dmax` (capped at ⌊n/2⌋).
pub fn fingerprint(h: &CMat, dmax: usize) -> Fingerprint {
    let n = h.order();
    let dmax = dmax.min(n / 2);
    let mut per_degree = Vec::new();
    for d in 2..=dmax {
        let mut values = Vec::new();
        for rows in (0..n).combinations(d) {
            for cols in (0..n).combinations(d) {
                values.push(minor_modulus(h, &rows, &cols));
            }
        }
        per_degree.push(cluster_reals(values, TOL_FP));
    }
    Fingerprint { per_degree }
}
