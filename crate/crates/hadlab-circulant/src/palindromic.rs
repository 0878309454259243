//! The substitution u = x + 1/x for palindromic polynomials: an even-degree
//! polynomial with mirrored coefficients factors through a polynomial of half
//! the degree in u, and its unimodular roots correspond to real roots of the
//! transform in [-2, 2].

use crate::CirculantError;
use hadlab_core::C64;
use hadlab_dilation::RecipPoly;

/// Halves a palindromic polynomial of even degree 2m: returns the degree-m
/// polynomial T with f(x) = x^m T(x + 1/x). Coefficients are in increasing
/// degree, as in `RecipPoly`.
pub fn palindromic_transform(f: &RecipPoly) -> Result<RecipPoly, CirculantError> {
    let deg = f.coeffs.len().saturating_sub(1);
    if deg % 2 != 0 || deg == 0 {
        return Err(CirculantError::Domain(format!(
            "degree {deg} is not a positive even number"
        )));
    }
    let m = deg / 2;
    let scale = f.max_coeff().max(1e-300);
    for k in 0..=deg {
        if (f.coeffs[k] - f.coeffs[deg - k]).norm() > 1e-9 * scale {
            return Err(CirculantError::Domain(
                "coefficients are not palindromic".into(),
            ));
        }
    }
    // P_k(u) represents x^k + x^{-k}: P_0 = 2, P_1 = u, P_k = u P_{k-1} - P_{k-2}.
    let zero = C64::new(0.0, 0.0);
    let mut p_prev = vec![C64::new(2.0, 0.0)];
    let mut p_cur = vec![zero, C64::new(1.0, 0.0)];
    let mut t = vec![zero; m + 1];
    t[0] = f.coeffs[m];
    for k in 1..=m {
        for (i, &pc) in p_cur.iter().enumerate() {
            t[i] += f.coeffs[m + k] * pc;
        }
        if k < m {
            let mut next = vec![zero; k + 2];
            for (i, &pc) in p_cur.iter().enumerate() {
                next[i + 1] += pc;
            }
            for (i, &pp) in p_prev.iter().enumerate() {
                next[i] -= pp;
            }
            p_prev = p_cur;
            p_cur = next;
        }
    }
    Ok(RecipPoly::new(t))
}

/// Real roots of the transform lying in [-2, 2]; each corresponds to a
/// conjugate pair of unimodular roots of the original palindromic polynomial.
pub fn transform_roots_in_band(t: &RecipPoly, tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = t
        .roots()
        .into_iter()
        .filter(|r| r.im.abs() < tol * (1.0 + r.re.abs()) && r.re.abs() <= 2.0 + tol)
        .map(|r| r.re.clamp(-2.0, 2.0))
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}
