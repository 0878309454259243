use hadlab_core::CMat;
use ndarray::Array2;
use ndarray_linalg::SVD;

/// Relative singular-value cutoff for numerical rank decisions.
pub const RANK_TOL: f64 = 1e-8;

/// Result of a defect computation.
#[derive(Clone, Debug)]
pub struct DefectReport {
    /// Dimension of the solution space of the phasing system.
    pub m: usize,
    /// The defect m − 2n + 1.
    pub d: i64,
    /// Singular values of the system matrix, descending.
    pub singular_values: Vec<f64>,
    /// Set when a singular value falls within a factor of 10 of the rank
    /// cutoff on either side, making the rank decision fragile.
    pub ambiguous: bool,
}

/// Dimension count for the first-order phasing freedom of a Hadamard matrix:
/// the real linear system Σ_k H_ik·conj(H_jk)·(R_ik − R_jk) = 0 over all
/// pairs i < j, in the n² real unknowns R.  The defect is the solution-space
/// dimension minus the trivial 2n−1 row/column phasing directions.
pub fn defect(h: &CMat) -> DefectReport {
    let n = h.order();
    let rows = n * (n - 1); // two real equations per pair
    let mut a = Array2::<f64>::zeros((rows.max(1), n * n));
    let mut r = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = h[(i, k)] * h[(j, k)].conj();
                // coefficient +c on R_ik, −c on R_jk; split into Re and Im rows
                a[(r, i * n + k)] += c.re;
                a[(r, j * n + k)] -= c.re;
                a[(r + 1, i * n + k)] += c.im;
                a[(r + 1, j * n + k)] -= c.im;
            }
            r += 2;
        }
    }
    let (_, s, _) = a.svd(false, false).expect("SVD failed");
    let singular_values: Vec<f64> = s.to_vec();
    let smax = singular_values.first().copied().unwrap_or(0.0);
    let cutoff = RANK_TOL * smax;
    let rank = singular_values.iter().filter(|&&x| x > cutoff).count();
    let ambiguous = smax > 0.0
        && singular_values
            .iter()
            .any(|&x| x > cutoff / 10.0 && x < cutoff * 10.0);
    let m = n * n - rank;
    DefectReport { m, d: m as i64 - 2 * n as i64 + 1, singular_values, ambiguous }
}

/// Closed form for the defect of the Fourier matrix F_n with
/// n = Π p_i^{α_i}:  d(F_n) = n·Π(1 + α_i − α_i/p_i) − 2n + 1.
///
/// Note: a frequently reprinted version places a "−2" inside the product,
/// which already fails at n = 6 (it would give 2 instead of the numerically
/// verified 4); the placement used here is cross-validated against `defect`.
pub fn fourier_defect(n: u64) -> Result<i64, String> {
    if n < 2 {
        return Err(format!("order {n} too small"));
    }
    let factors = hadlab_core::factorize(n);
    // n·Π(1+α−α/p) = n·Π((p + αp − α)/p); the denominator Πp divides n.
    let mut num: i128 = n as i128;
    let mut den: i128 = 1;
    for (p, a) in factors {
        num *= (p as i128) * (1 + a as i128) - a as i128;
        den *= p as i128;
    }
    debug_assert_eq!(num % den, 0);
    Ok((num / den - 2 * n as i128 + 1) as i64)
}
