//! Constructions from conference matrices and block designs, the
//! self-adjoint square-order lift, and the order-9 signature matrix.

use crate::residue::{conference_paley, quadratic_character};
use crate::CatalogError;
use hadlab_core::{root_of_unity, CMat, C64};

fn mat(rows: Vec<Vec<C64>>) -> CMat {
    CMat::from_rows(rows).expect("rectangular row data")
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Complex Hadamard matrix of order n = p+1 with entries {1, a, ā} obtained
/// from a normalized symmetric conference matrix: in the core of C + I the
/// off-diagonal entries (1, −1) become (a, ā) with
/// a = −2/(n−2) ± i√(n(n−4))/(n−2).
pub fn conf_three_entry(p: u64, plus: bool) -> Result<CMat, CatalogError> {
    let cm = conference_paley(p)?;
    let n = cm.order();
    let nf = n as f64;
    let im = (nf * (nf - 4.0)).sqrt() / (nf - 2.0) * if plus { 1.0 } else { -1.0 };
    let a = c(-2.0 / (nf - 2.0), im);
    Ok(CMat::from_fn(n, |i, j| {
        if i == 0 || j == 0 || i == j {
            c(1.0, 0.0)
        } else if cm[(i, j)].re > 0.0 {
            a
        } else {
            a.conj()
        }
    }))
}

/// Complex Hadamard matrix of order n−1 = p with entries {1, a, ā}: the core
/// of a symmetric conference matrix of order n with (0, 1, −1) replaced by
/// (1, a, ā), where a = (−1 ±_A √(n−1))/(n−2) ±_B i√(n²−5n+4 ±_A 2√(n−1))/(n−2).
pub fn conf_core_three_entry(p: u64, plus_a: bool, plus_b: bool) -> Result<CMat, CatalogError> {
    let cm = conference_paley(p)?;
    let n = cm.order();
    let nf = n as f64;
    let sa = if plus_a { 1.0 } else { -1.0 };
    let sb = if plus_b { 1.0 } else { -1.0 };
    let root = (nf - 1.0).sqrt();
    let re = (-1.0 + sa * root) / (nf - 2.0);
    let rad = nf * nf - 5.0 * nf + 4.0 + sa * 2.0 * root;
    let a = c(re, sb * rad.max(0.0).sqrt() / (nf - 2.0));
    Ok(CMat::from_fn(n - 1, |i, j| {
        if i == j {
            c(1.0, 0.0)
        } else if cm[(i + 1, j + 1)].re > 0.0 {
            a
        } else {
            a.conj()
        }
    }))
}

/// Two-entry complex Hadamard matrix of order p (prime, p ≡ 3 mod 4): the
/// circulant quadratic-residue design with its zeros replaced by
/// a = −1 + 1/(2m) ± i√(4m−1)/(2m), where m = (p+1)/4.
pub fn two_entry(p: u64, plus: bool) -> Result<CMat, CatalogError> {
    if p % 4 != 3 {
        return Err(CatalogError::Domain(format!("{p} ≢ 3 (mod 4)")));
    }
    // Validate primality via the residue table builder.
    crate::residue::paley_matrix(p)?;
    let m = (p + 1) as f64 / 4.0;
    let sign = if plus { 1.0 } else { -1.0 };
    let a = c(-1.0 + 1.0 / (2.0 * m), sign * (4.0 * m - 1.0).sqrt() / (2.0 * m));
    let n = p as usize;
    Ok(CMat::from_fn(n, |i, j| {
        let k = ((j + n) - i) % n;
        if k != 0 && quadratic_character(k as u64, p) == 1 {
            c(1.0, 0.0)
        } else {
            a
        }
    }))
}

/// Self-adjoint complex Hadamard matrix of order n² with constant diagonal 1:
/// block (i,j) is x_{ij}·h_j* h_i for the rows h_i of the input matrix.  The
/// phase table must satisfy x_{ii} = 1 and stays unimodular; passing an
/// all-ones table gives the plain lift.
pub fn selfadj_lift(h: &CMat, phases: &CMat) -> Result<CMat, CatalogError> {
    let n = h.order();
    if phases.order() != n {
        return Err(CatalogError::Domain(
            "phase table must match the order of the seed matrix".into(),
        ));
    }
    for i in 0..n {
        if (phases[(i, i)] - c(1.0, 0.0)).norm() > 1e-9 {
            return Err(CatalogError::Domain("phase table diagonal must be 1".into()));
        }
        for j in 0..n {
            if (phases[(i, j)].norm() - 1.0).abs() > 1e-9 {
                return Err(CatalogError::Domain("phase table must be unimodular".into()));
            }
        }
    }
    Ok(CMat::from_fn(n * n, |r, s| {
        let (i, a) = (r / n, r % n);
        let (j, b) = (s / n, s % n);
        phases[(i, j)] * h[(j, a)].conj() * h[(i, b)]
    }))
}

/// The order-9 self-adjoint signature matrix over cube roots of unity; adding
/// the identity yields a complex Hadamard matrix.
pub fn q9() -> CMat {
    let w = root_of_unity(3);
    let w2 = w * w;
    let o = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    mat(vec![
        vec![o, one, one, one, one, one, one, one, one],
        vec![one, o, one, w, w, w, w2, w2, w2],
        vec![one, one, o, w2, w2, w2, w, w, w],
        vec![one, w2, w, o, w, w2, one, w, w2],
        vec![one, w2, w, w2, o, w, w, w2, one],
        vec![one, w2, w, w, w2, o, w2, one, w],
        vec![one, w, w2, one, w2, w, o, w2, w],
        vec![one, w, w2, w2, w, one, w, o, w2],
        vec![one, w, w2, w, one, w2, w2, w, o],
    ])
}

/// H = Q₉ + I, a complex Hadamard matrix of order 9.
pub fn q9h() -> CMat {
    q9().add(&CMat::identity(9))
}
