//! Factorization of a Hadamard matrix with circulant blocks into a product of
//! two flat Hadamard matrices, yielding a MUB triplet.  The matrix is first
//! rephased into bicirculant form (diagonal scalings only), block-diagonalized
//! by the Fourier conjugation, and each per-frequency 2x2 unitary is split
//! using the flat-factor representation of 2x2 unitaries.  A phase-descent
//! polish over the residual per-frequency freedom runs only when the exact
//! assembly is not already flat.

use crate::MubFrameError;
use hadlab_core::{CMat, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Result of the factorization: T = Z1 Z2* / sqrt(n) with Z1, Z2 Hadamard
/// whenever `flat` holds; `deviation` is the largest | |entry| - 1 |.
#[derive(Clone, Debug)]
pub struct ZaunerFactorization {
    pub z1: CMat,
    pub z2: CMat,
    pub deviation: f64,
    pub flat: bool,
}

/// Whether all four m x m blocks of an order-2m matrix are circulant.
pub fn is_bicirculant(t: &CMat, tol: f64) -> bool {
    let n = t.order();
    if n % 2 != 0 {
        return false;
    }
    let m = n / 2;
    for bi in 0..2 {
        for bj in 0..2 {
            for i in 0..m {
                for j in 0..m {
                    let base = t[(bi * m, bj * m + (j + m - i) % m)];
                    if (t[(bi * m + i, bj * m + j)] - base).norm() > tol {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Finds unimodular diagonal scalings D1, D2 such that D1 T D2 has circulant
/// blocks, when they exist.  Returns (d1, d2, D1 T D2).
///
/// The circulant condition couples only the multiplicative increments of the
/// scalings along each block; those increments are recovered in closed form
/// from entry ratios, up to an m-th root of unity which is resolved by trial.
pub fn rephase_to_bicirculant(
    t: &CMat,
    tol: f64,
) -> Result<(Vec<C64>, Vec<C64>, CMat), MubFrameError> {
    let n = t.order();
    if n % 2 != 0 {
        return Err(MubFrameError::Domain(format!(
            "order {n} is odd; no 2x2 block structure"
        )));
    }
    let m = n / 2;
    if t.as_slice().iter().any(|z| z.norm() < 1e-12) {
        return Err(MubFrameError::Domain("zero entry".into()));
    }
    // Ratio of cyclically consecutive diagonal entries within block (bi, bj).
    let r = |bi: usize, bj: usize, i: usize, j: usize| -> C64 {
        t[(bi * m + (i + 1) % m, bj * m + (j + 1) % m)] / t[(bi * m + i, bj * m + j)]
    };
    let prod00: C64 = (0..m).map(|i| r(0, 0, i, 0)).product();
    let base_eta = prod00.powf(1.0 / m as f64);
    for root in 0..m {
        let eta00 = (base_eta * C64::from_polar(1.0, TAU * root as f64 / m as f64)).unscale(
            (base_eta.norm()).max(1e-300),
        );
        // Increments of d1 within each row block and of d2 within each
        // column block: zeta[bi][i] * eta[bj][j] = r(bi, bj, i, j).
        let mut zeta = [vec![c(0.0, 0.0); m], vec![c(0.0, 0.0); m]];
        let mut eta = [vec![c(0.0, 0.0); m], vec![c(0.0, 0.0); m]];
        for i in 0..m {
            zeta[0][i] = r(0, 0, i, 0) / eta00;
            zeta[1][i] = r(1, 0, i, 0) / eta00;
        }
        for j in 0..m {
            eta[0][j] = r(0, 0, 0, j) / zeta[0][0];
            eta[1][j] = r(0, 1, 0, j) / zeta[0][0];
        }
        let mut d1 = vec![c(1.0, 0.0); n];
        let mut d2 = vec![c(1.0, 0.0); n];
        for b in 0..2 {
            for i in 1..m {
                d1[b * m + i] = d1[b * m + i - 1] / zeta[b][i - 1];
                d2[b * m + i] = d2[b * m + i - 1] / eta[b][i - 1];
            }
        }
        for v in d1.iter_mut().chain(d2.iter_mut()) {
            *v = v.unscale(v.norm());
        }
        let s = CMat::from_fn(n, |i, j| d1[i] * t[(i, j)] * d2[j]);
        if is_bicirculant(&s, tol) {
            return Ok((d1, d2, s));
        }
    }
    Err(MubFrameError::Domain(
        "no diagonal rephasing to circulant blocks found".into(),
    ))
}

/// Splits a 2x2 unitary U into P Q* with all eight entries of modulus
/// 1/sqrt(2), via unimodular parameters (u, v, x, y).
fn flat_split(u11: C64, u12: C64, u21: C64, u22: C64) -> ([C64; 4], [C64; 4]) {
    let y = if (u11 * u12).norm() > 1e-12 {
        C64::new(0.0, 1.0) * u11.conj() * u12 / (u11 * u12).norm()
    } else {
        c(1.0, 0.0)
    };
    let (uu, vv) = if u12.norm() < 1e-12 {
        (u11, u11)
    } else if u11.norm() < 1e-12 {
        (u12 / y, -u12 / y)
    } else {
        (u11 + u12 / y, u11 - u12 / y)
    };
    let x = if (uu - vv).norm() > 1e-9 {
        (uu - vv) / (2.0 * u21)
    } else {
        // Diagonal-like U: the second row fixes y x^-1 instead.
        uu * y / u22
    };
    let s = 1.0 / 2f64.sqrt();
    let p = [uu * s, vv * s, uu / x * s, -vv / x * s];
    let q = [c(s, 0.0), c(s, 0.0), y.conj() * s, -y.conj() * s];
    (p, q)
}

fn unitary_fourier(m: usize) -> CMat {
    let s = 1.0 / (m as f64).sqrt();
    CMat::from_fn(m, |j, k| {
        C64::from_polar(s, TAU * (j * k) as f64 / m as f64)
    })
}

/// Factors a (possibly diagonally rephased) bicirculant Hadamard matrix T of
/// order 2m as T = Z1 Z2* / sqrt(2m) with Z1 and Z2 Hadamard, so that
/// {I, Z1/sqrt(2m), Z2/sqrt(2m)} is a MUB triplet.
pub fn zauner_factor(t: &CMat, tol: f64) -> Result<ZaunerFactorization, MubFrameError> {
    let n = t.order();
    let rep = t.is_hadamard(1e-6);
    if !rep.pass {
        return Err(MubFrameError::NotHadamard(
            rep.max_row_defect.max(rep.max_unimod_defect),
        ));
    }
    let (d1, d2, s) = rephase_to_bicirculant(t, 1e-8)?;
    let m = n / 2;
    let f = unitary_fourier(m);
    let w = CMat::from_fn(n, |i, j| {
        if i / m == j / m {
            f[(i % m, j % m)]
        } else {
            c(0.0, 0.0)
        }
    });
    let nmat = w.adjoint().matmul(&s).matmul(&w);
    let scale = 1.0 / (n as f64).sqrt();
    let mut ps = Vec::with_capacity(m);
    let mut qs = Vec::with_capacity(m);
    for j in 0..m {
        let (p, q) = flat_split(
            nmat[(j, j)] * scale,
            nmat[(j, m + j)] * scale,
            nmat[(m + j, j)] * scale,
            nmat[(m + j, m + j)] * scale,
        );
        ps.push(p);
        qs.push(q);
    }
    let assemble = |phases: &[f64]| -> (CMat, CMat) {
        let root_n = (n as f64).sqrt();
        let mut g1 = CMat::zeros(n);
        let mut g2 = CMat::zeros(n);
        for j in 0..m {
            let e0 = C64::from_polar(1.0, phases[2 * j]);
            let e1 = C64::from_polar(1.0, phases[2 * j + 1]);
            g1[(j, j)] = ps[j][0] * e0;
            g1[(j, m + j)] = ps[j][1] * e1;
            g1[(m + j, j)] = ps[j][2] * e0;
            g1[(m + j, m + j)] = ps[j][3] * e1;
            g2[(j, j)] = qs[j][0] * e0;
            g2[(j, m + j)] = qs[j][1] * e1;
            g2[(m + j, j)] = qs[j][2] * e0;
            g2[(m + j, m + j)] = qs[j][3] * e1;
        }
        let z1 = w.matmul(&g1).scale(c(root_n, 0.0));
        let z2 = w.matmul(&g2).scale(c(root_n, 0.0));
        (z1, z2)
    };
    let deviation = |z1: &CMat, z2: &CMat| z1.unimod_defect().max(z2.unimod_defect());

    let mut phases = vec![0.0; 2 * m];
    let (mut z1, mut z2) = assemble(&phases);
    let mut dev = deviation(&z1, &z2);
    if dev > tol {
        // Residual per-frequency phase freedom, flattened by multi-start
        // coordinate descent on the torus.
        let objective = |ph: &[f64]| {
            let (a, b) = assemble(ph);
            let sum = |z: &CMat| -> f64 {
                z.as_slice().iter().map(|v| (v.norm() - 1.0).powi(2)).sum()
            };
            sum(&a) + sum(&b)
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..32 {
            let mut cur: Vec<f64> = (0..2 * m).map(|_| rng.gen_range(0.0..TAU)).collect();
            let mut val = objective(&cur);
            let mut step = 0.5;
            while step > 1e-9 {
                let mut improved = false;
                for k in 0..cur.len() {
                    for dir in [step, -step] {
                        let old = cur[k];
                        cur[k] = old + dir;
                        let v = objective(&cur);
                        if v < val {
                            val = v;
                            improved = true;
                        } else {
                            cur[k] = old;
                        }
                    }
                }
                if !improved {
                    step *= 0.5;
                }
            }
            let (a, b) = assemble(&cur);
            let d = deviation(&a, &b);
            if d < dev {
                dev = d;
                z1 = a;
                z2 = b;
                phases = cur;
            }
            if dev < tol {
                break;
            }
        }
        let _ = phases;
    }
    // Undo the rephasing: T = (D1* Z1)(D2 Z2)* / sqrt(n).
    let z1 = CMat::from_fn(n, |i, j| d1[i].conj() * z1[(i, j)]);
    let z2 = CMat::from_fn(n, |i, j| d2[i] * z2[(i, j)]);
    Ok(ZaunerFactorization {
        flat: dev < tol,
        z1,
        z2,
        deviation: dev,
    })
}
