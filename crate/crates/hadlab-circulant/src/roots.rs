//! Cyclic n-roots: the quotient-level polynomial system, the x-level first
//! rows of circulant Hadamard matrices, the quadratic-exponent classical
//! solutions and Backelin's interleaved families.

use crate::CirculantError;
use hadlab_core::C64;
use std::f64::consts::TAU;

/// A quotient-level solution candidate of the cyclic system: n numbers whose
/// cyclic convolution sums vanish and whose product is one.
#[derive(Clone, Debug)]
pub struct CyclicRoot {
    pub z: Vec<C64>,
}

impl CyclicRoot {
    pub fn new(z: Vec<C64>, tol: f64) -> Result<Self, CirculantError> {
        let r = cyclic_residual(&z)?;
        if r > tol {
            return Err(CirculantError::Residual(r));
        }
        Ok(CyclicRoot { z })
    }

    pub fn order(&self) -> usize {
        self.z.len()
    }

    pub fn residual(&self) -> f64 {
        cyclic_residual(&self.z).unwrap_or(f64::INFINITY)
    }
}

/// Largest residual of the cyclic system: the k-fold consecutive-product sums
/// for k = 1..n-1 must vanish and the full product must be one.
pub fn cyclic_residual(z: &[C64]) -> Result<f64, CirculantError> {
    let n = z.len();
    if z.iter().any(|v| v.norm() < 1e-14) {
        return Err(CirculantError::Domain("zero entry in quotient vector".into()));
    }
    if n == 0 {
        return Err(CirculantError::Domain("empty vector".into()));
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
        worst = worst.max(sum.norm());
    }
    let full: C64 = z.iter().product();
    Ok(worst.max((full - C64::new(1.0, 0.0)).norm()))
}

/// Converts a quotient-level solution to the x-level first row
/// (1, z0, z0 z1, ...) of the corresponding circulant matrix.
pub fn x_from_z(z: &[C64]) -> Vec<C64> {
    let mut x = Vec::with_capacity(z.len());
    let mut acc = C64::new(1.0, 0.0);
    x.push(acc);
    for &zi in &z[..z.len().saturating_sub(1)] {
        acc *= zi;
        x.push(acc);
    }
    x
}

/// The classical quadratic-exponent first rows: alpha must be a unit modulo n.
/// These generate exactly the Fourier-equivalent circulant matrices.
pub fn classical(n: usize, alpha: i64, beta: i64) -> Result<Vec<C64>, CirculantError> {
    if n < 2 {
        return Err(CirculantError::Domain("order must be at least 2".into()));
    }
    let g = gcd(alpha.rem_euclid(n as i64) as u64, n as u64);
    if g != 1 {
        return Err(CirculantError::Domain(format!(
            "{alpha} is not a unit modulo {n}"
        )));
    }
    let nf = n as f64;
    Ok((0..n)
        .map(|i| {
            let ii = i as f64;
            let expo = if n % 2 == 0 {
                alpha as f64 * ii * ii / 2.0 + beta as f64 * ii
            } else {
                alpha as f64 * ii * (ii - 1.0) / 2.0 + beta as f64 * ii
            };
            C64::from_polar(1.0, TAU * expo / nf)
        })
        .collect())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Backelin's interleaved family: for m² | n, repeats a product-one block of
/// length m scaled by successive powers of a primitive (n/m)-th root of
/// unity. The last block entry is derived from the product-one constraint.
pub fn backelin(
    n: usize,
    m: usize,
    zprefix: &[C64],
    alpha: C64,
) -> Result<CyclicRoot, CirculantError> {
    if m == 0 || n % (m * m) != 0 {
        return Err(CirculantError::Domain(format!(
            "{} does not divide {n}",
            m * m
        )));
    }
    if zprefix.len() != m - 1 {
        return Err(CirculantError::Domain(format!(
            "expected {} free block entries, got {}",
            m - 1,
            zprefix.len()
        )));
    }
    let q = n / m;
    // alpha must be a primitive q-th root of unity.
    let aq = alpha.powu(q as u32);
    if (aq - C64::new(1.0, 0.0)).norm() > 1e-9 {
        return Err(CirculantError::Domain(
            "alpha is not an (n/m)-th root of unity".into(),
        ));
    }
    for d in 1..q {
        if q % d == 0 && (alpha.powu(d as u32) - C64::new(1.0, 0.0)).norm() < 1e-9 {
            return Err(CirculantError::Domain(
                "alpha is not primitive".into(),
            ));
        }
    }
    let mut block: Vec<C64> = zprefix.to_vec();
    let prod: C64 = block.iter().product();
    if prod.norm() < 1e-14 {
        return Err(CirculantError::Domain("zero entry in block".into()));
    }
    block.push(C64::new(1.0, 0.0) / prod);
    let mut z = Vec::with_capacity(n);
    let mut scale = C64::new(1.0, 0.0);
    for _ in 0..q {
        for &b in &block {
            z.push(scale * b);
        }
        scale *= alpha;
    }
    CyclicRoot::new(z, 1e-8)
}
