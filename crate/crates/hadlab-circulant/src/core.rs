//! Hadamard matrices with circulant core: the shifted quotient system, the
//! phase-recovery lift from quotients to the core row, and the index-2/4
//! coset constructions of bordered matrices.

use crate::arith::{is_prime, two_square_decomposition};
use crate::indexk::{coset_row, index4_generator};
use crate::CirculantError;
use hadlab_core::{CMat, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// A core row together with its bordered Hadamard matrix of order n + 1.
#[derive(Clone, Debug)]
pub struct CoreSolution {
    /// First row of the circulant core.
    pub x: Vec<C64>,
    /// The core bordered by a row and column of ones.
    pub bordered: CMat,
}

impl CoreSolution {
    pub fn from_row(x: Vec<C64>) -> CoreSolution {
        let bordered = bordered(&x);
        CoreSolution { x, bordered }
    }
}

/// Borders a circulant core (given by its first row) with ones.
pub fn bordered(x: &[C64]) -> CMat {
    let n = x.len();
    CMat::from_fn(n + 1, |i, j| {
        if i == 0 || j == 0 {
            c(1.0, 0.0)
        } else {
            x[(j + n - i) % n]
        }
    })
}

/// Largest residual of the shifted quotient system: every cyclic
/// consecutive-product sum equals -1 and the full product is one.
pub fn core_residual(z: &[C64]) -> Result<f64, CirculantError> {
    let n = z.len();
    if n == 0 || z.iter().any(|v| v.norm() < 1e-14) {
        return Err(CirculantError::Domain("invalid quotient vector".into()));
    }
    let mut worst: f64 = 0.0;
    for k in 1..n {
        let mut sum = C64::new(0.0, 0.0);
        for i in 0..n {
            let mut prod = C64::new(1.0, 0.0);
            for j in 0..k {
                prod *= z[(i + j) % n];
            }
            sum += prod;
        }
        worst = worst.max((sum + c(1.0, 0.0)).norm());
    }
    let full: C64 = z.iter().product();
    Ok(worst.max((full - c(1.0, 0.0)).norm()))
}

/// Lifts a unimodular quotient-level solution of the shifted system to the
/// core row: the cumulative products scaled by the negated conjugate of
/// their full sum, which is forced to be unimodular.
pub fn core_x_from_z(z: &[C64], tol: f64) -> Result<CoreSolution, CirculantError> {
    let r = core_residual(z)?;
    if r > tol {
        return Err(CirculantError::Residual(r));
    }
    if z.iter().any(|v| (v.norm() - 1.0).abs() > tol) {
        return Err(CirculantError::Domain("quotients must be unimodular".into()));
    }
    let n = z.len();
    let mut cum = Vec::with_capacity(n);
    let mut acc = c(1.0, 0.0);
    cum.push(acc);
    for &zi in &z[..n - 1] {
        acc *= zi;
        cum.push(acc);
    }
    // The sum of cumulative products z0, z0 z1, ..., z0...z_{n-1} is forced
    // onto the unit circle by the shifted system.
    let mut s = c(0.0, 0.0);
    let mut run = c(1.0, 0.0);
    for &zi in z {
        run *= zi;
        s += run;
    }
    if (s.norm() - 1.0).abs() > 1e-6 {
        return Err(CirculantError::Domain(format!(
            "cumulative-product sum has modulus {} instead of 1",
            s.norm()
        )));
    }
    let phase = -s.conj();
    let x: Vec<C64> = cum.iter().map(|&v| phase * v).collect();
    Ok(CoreSolution::from_row(x))
}

fn coset_core(p: u64, k: usize, g: u64, cvals: &[C64]) -> CoreSolution {
    let sum: C64 = cvals.iter().sum();
    let x0 = -sum * ((p - 1) as f64 / k as f64) - c(1.0, 0.0);
    CoreSolution::from_row(coset_row(p, k, g, cvals, x0))
}

/// Index-2 circulant cores for p ≡ 1 (mod 4): four coset pairs (a, conj a)
/// with a = ±i or the pair of deep points on the unit circle.
pub fn core_index2(p: u64) -> Result<Vec<CoreSolution>, CirculantError> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(CirculantError::Domain(format!(
            "{p} is not a prime congruent to 1 modulo 4"
        )));
    }
    let pf = p as f64;
    let g = crate::arith::generators(p)
        .next()
        .ok_or_else(|| CirculantError::NotPrime(p))?;
    let deep = ((pf - 1.0) * (pf - 1.0) - 4.0).sqrt() / (pf - 1.0);
    let avals = [
        c(0.0, 1.0),
        c(0.0, -1.0),
        c(-2.0 / (pf - 1.0), deep),
        c(-2.0 / (pf - 1.0), -deep),
    ];
    Ok(avals
        .iter()
        .map(|&a| coset_core(p, 2, g, &[a, a.conj()]))
        .collect())
}

/// First index-4 circulant core for p ≡ 1 (mod 8): coset values
/// (a, -a, conj a, -conj a) with a determined by t alone.
pub fn core_index4_a(p: u64) -> Result<CoreSolution, CirculantError> {
    if !is_prime(p) || p % 8 != 1 {
        return Err(CirculantError::Domain(format!(
            "{p} is not a prime congruent to 1 modulo 8"
        )));
    }
    let (_, ti) = two_square_decomposition(p)?;
    let t = ti as f64;
    let a = c(
        (1.0 - (1.0 + t * t).sqrt()) / t,
        (-2.0 + 2.0 * (1.0 + t * t).sqrt()).sqrt() / t,
    );
    let g = index4_generator(p)?;
    Ok(coset_core(p, 4, g, &[a, -a, a.conj(), -a.conj()]))
}

/// Ingredients of the second index-4 core: the radicands (A, B) satisfying
/// (p-1)^4 (A² - B) = (p+1)² (p-3)².
pub fn core_index4_b_params(p: u64) -> Result<(f64, f64), CirculantError> {
    let (si, ti) = two_square_decomposition(p)?;
    let (s, t) = (si as f64, ti as f64);
    let pf = p as f64;
    let den = t * t * (pf - 1.0) * (pf - 1.0);
    let a = (t * t * (pf * pf + 2.0 * (s - 2.0) * (s - 2.0) + 1.0) + 2.0 * (s - 1.0).powi(4)) / den;
    let b = (4.0 * (t * t * (pf + (s - 2.0) * (s - 2.0) + 2.0) + (s - 1.0).powi(4))
        / (t.powi(4) * (pf - 1.0).powi(4)))
        * (t * t
            * (t * t * (2.0 * s * s + t * t - 1.0)
                + ((s + 1.0) * (s + 1.0) + 2.0) * (s - 1.0) * (s - 1.0))
            + (s - 1.0).powi(4));
    Ok((a, b))
}

/// Second index-4 circulant core for p ≡ 1 (mod 8): coset values
/// (a, b, conj a, conj b) with a, b on opposite sides of -2/(p-1).
pub fn core_index4_b(p: u64) -> Result<CoreSolution, CirculantError> {
    if !is_prime(p) || p % 8 != 1 {
        return Err(CirculantError::Domain(format!(
            "{p} is not a prime congruent to 1 modulo 8"
        )));
    }
    let (a, b) = core_index4_b_params(p)?;
    let pf = p as f64;
    let q = (a - b.sqrt()).sqrt();
    let av = c(
        -2.0 / (pf - 1.0) + q,
        (1.0 - (2.0 / (pf - 1.0) - q).powi(2)).sqrt(),
    );
    let bv = c(
        -2.0 / (pf - 1.0) - q,
        -(1.0 - (2.0 / (pf - 1.0) + q).powi(2)).sqrt(),
    );
    let g = index4_generator(p)?;
    Ok(coset_core(p, 4, g, &[av, bv, av.conj(), bv.conj()]))
}
