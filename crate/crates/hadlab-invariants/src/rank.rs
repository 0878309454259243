use hadlab_core::{CMat, C64};
use itertools::Itertools;

use crate::cluster::cluster_reals;
use crate::defect::RANK_TOL;

/// For each shape (j,k), the sorted (rank, multiplicity) histogram over all
/// j×k submatrices.  Invariant under monomial equivalence.
#[derive(Clone, Debug, PartialEq)]
pub struct RankProfile {
    pub slots: Vec<((usize, usize), Vec<(usize, u64)>)>,
}

/// Numerical rank of the submatrix selected by `rows` × `cols`, by Gaussian
/// elimination with full column scanning and a relative pivot cutoff.
pub fn submatrix_rank(h: &CMat, rows: &[usize], cols: &[usize]) -> usize {
    let (r, c) = (rows.len(), cols.len());
    let mut a: Vec<C64> = Vec::with_capacity(r * c);
    let mut scale: f64 = 0.0;
    for &i in rows {
        for &j in cols {
            let z = h[(i, j)];
            scale = scale.max(z.norm());
            a.push(z);
        }
    }
    if scale == 0.0 {
        return 0;
    }
    let cutoff = RANK_TOL * scale * (r.max(c) as f64);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..c {
        // pivot search in this column
        let mut piv = row;
        let mut best = 0.0;
        for i in row..r {
            let v = a[i * c + col].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best <= cutoff {
            continue;
        }
        if piv != row {
            for j in 0..c {
                a.swap(row * c + j, piv * c + j);
            }
        }
        let pivot = a[row * c + col];
        for i in row + 1..r {
            let f = a[i * c + col] / pivot;
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for j in col..c {
                let p = a[row * c + j];
                a[i * c + j] -= f * p;
            }
        }
        rank += 1;
        row += 1;
        if row == r {
            break;
        }
    }
    rank
}

/// Rank histogram of a single (j,k) shape.
pub fn rank_profile_slot(h: &CMat, j: usize, k: usize) -> Vec<(usize, u64)> {
    let n = h.order();
    let mut values = Vec::new();
    for rows in (0..n).combinations(j) {
        for cols in (0..n).combinations(k) {
            values.push(submatrix_rank(h, &rows, &cols) as f64);
        }
    }
    cluster_reals(values, 0.5)
        .into_iter()
        .map(|(v, m)| (v.round() as usize, m))
        .collect()
}

/// Full rectangular rank profile over 2 ≤ j,k ≤ n−2.  Exponential in n; use
/// `rank_profile_slot` for individual shapes of larger matrices.
pub fn rank_profile(h: &CMat) -> RankProfile {
    let n = h.order();
    assert!(n >= 4, "rank_profile needs order at least 4");
    let mut slots = Vec::new();
    for j in 2..=n - 2 {
        for k in 2..=n - 2 {
            slots.push(((j, k), rank_profile_slot(h, j, k)));
        }
    }
    RankProfile { slots }
}
