//! Parametric families of complex Hadamard matrices of orders 4 and 6.

use crate::CatalogError;
use hadlab_core::{root_of_unity, CMat, C64};

fn mat(rows: Vec<Vec<C64>>) -> CMat {
    CMat::from_rows(rows).expect("rectangular row data")
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn check_unimodular(z: C64, name: &str) -> Result<(), CatalogError> {
    if (z.norm() - 1.0).abs() > 1e-9 {
        return Err(CatalogError::Domain(format!(
            "parameter {name} = {z} is not unimodular"
        )));
    }
    Ok(())
}

/// One-parameter order-4 family: rows (1,1,1,1), (1,ia,−1,−ia), (1,−1,1,−1),
/// (1,−ia,−1,ia) with a unimodular.  At a = i the matrix is real.
pub fn f4_1(a: C64) -> Result<CMat, CatalogError> {
    check_unimodular(a, "a")?;
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    Ok(mat(vec![
        vec![one, one, one, one],
        vec![one, i * a, -one, -i * a],
        vec![one, -one, one, -one],
        vec![one, -i * a, -one, i * a],
    ]))
}

/// The symmetric order-6 matrix over cube roots of unity.
pub fn s6() -> CMat {
    let w = root_of_unity(3);
    let w2 = w * w;
    let one = c(1.0, 0.0);
    mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, one, w, w2, w2, w],
        vec![one, w, one, w, w2, w2],
        vec![one, w2, w, one, w, w2],
        vec![one, w2, w2, w, one, w],
        vec![one, w, w2, w2, w, one],
    ])
}

/// One-parameter order-6 family with entries in {±1, ±i, ±ci, ±c̄i}.
pub fn d6_1(cp: C64) -> Result<CMat, CatalogError> {
    check_unimodular(cp, "c")?;
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    let cb = cp.conj();
    Ok(mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, -one, i, -cp * i, -i, cp * i],
        vec![one, i, -one, cp * i, -i, -cp * i],
        vec![one, -cb * i, cb * i, -one, i, -i],
        vec![one, -i, -i, i, -one, i],
        vec![one, cb * i, -cb * i, -i, i, -one],
    ]))
}

/// Two-parameter order-6 Fourier family.
pub fn f6_2(a: C64, b: C64) -> Result<CMat, CatalogError> {
    check_unimodular(a, "a")?;
    check_unimodular(b, "b")?;
    let w = root_of_unity(3);
    let w2 = w * w;
    let one = c(1.0, 0.0);
    Ok(mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, w, w2, a, a * w, a * w2],
        vec![one, w2, w, b, b * w2, b * w],
        vec![one, one, one, -one, -one, -one],
        vec![one, w, w2, -a, -a * w, -a * w2],
        vec![one, w2, w, -b, -b * w2, -b * w],
    ]))
}

/// The circulant order-6 matrix Circ(1, id, −d, −i, −d̄, id̄) with
/// d = (1−√3)/2 + i·√(2√3)/2.
pub fn c6() -> CMat {
    let s3 = 3.0_f64.sqrt();
    let d = c((1.0 - s3) / 2.0, (2.0 * s3).sqrt() / 2.0);
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    let db = d.conj();
    CMat::circulant(&[one, i * d, -d, -i, -db, i * db])
}

/// Self-adjoint one-parameter order-6 family indexed by the phase θ of
/// y = e^{iθ}; the discrete `plus` flag selects the branch of x.
/// θ is restricted to the arcs where x stays unimodular.
pub fn b6_1(theta: f64, plus: bool) -> Result<CMat, CatalogError> {
    let bound = ((3.0_f64.sqrt() - 1.0) / 2.0).acos();
    let pi = std::f64::consts::PI;
    if !(theta.abs() >= bound - 1e-12 && theta.abs() <= pi + 1e-12) {
        return Err(CatalogError::Domain(format!(
            "phase {theta} outside the admissible arcs ±[{bound}, π]"
        )));
    }
    let y = c(theta.cos(), theta.sin());
    let one = c(1.0, 0.0);
    let num_rad = one * 2.0_f64.sqrt()
        * (one + y * 2.0 + y * y * y * 2.0 + y.powu(4)).sqrt();
    let base = one + y * 2.0 + y * y;
    let den = one + y * 2.0 - y * y;
    let x = if plus {
        (base + num_rad) / den
    } else {
        (base - num_rad) / den
    };
    let z = (one + y * 2.0 - y * y) / (y * (-one + y * 2.0 + y * y));
    for (v, name) in [(x, "x"), (z, "z")] {
        if (v.norm() - 1.0).abs() > 1e-8 {
            return Err(CatalogError::Domain(format!(
                "derived entry {name} = {v} is not unimodular at θ = {theta}"
            )));
        }
    }
    let xb = x.conj();
    let yb = y.conj();
    let zb = z.conj();
    let xyz = x * y * z;
    let t = xb * yb * zb;
    Ok(mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, -one, -xb, -y, y, xb],
        vec![one, -x, one, y, zb, -t],
        vec![one, -yb, yb, -one, -t, t],
        vec![one, yb, z, -xyz, one, -xb],
        vec![one, x, -xyz, xyz, -x, -one],
    ]))
}

/// Splits a unimodular target t/4 into the two conjugate unimodular numbers
/// t/4 ± i·t·√(16−|t|²)/(4|t|) whose sum is t/2.
fn split_pair(t: C64) -> Result<(C64, C64), CatalogError> {
    let m = t.norm();
    if m < 1e-12 || m > 4.0 + 1e-12 {
        return Err(CatalogError::Domain(format!(
            "auxiliary value {t} has modulus {m} outside (0, 4]"
        )));
    }
    let rad = (16.0 - m * m).max(0.0).sqrt();
    let shift = t * C64::new(0.0, rad / (4.0 * m));
    Ok((t / 4.0 + shift, t / 4.0 - shift))
}

/// Self-adjoint one-parameter order-6 family indexed by a unimodular x ≠ ±i.
pub fn m6_1(x: C64) -> Result<CMat, CatalogError> {
    check_unimodular(x, "x")?;
    if (x - c(0.0, 1.0)).norm() < 1e-9 || (x + c(0.0, 1.0)).norm() < 1e-9 {
        return Err(CatalogError::Domain("x = ±i is excluded".into()));
    }
    let one = c(1.0, 0.0);
    let (a, b) = split_pair(x * x - x * 2.0 - one)?;
    // The middle pair flips the sign of the real part only: −t/4 ± i t√(16−|t|²)/(4|t|).
    let t2 = x * x + one;
    let (p, q) = split_pair(t2)?;
    let (cc, d) = (p - t2 * 0.5, q - t2 * 0.5);
    let (e, f) = split_pair(x * x + x * 2.0 - one)?;
    Ok(mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, -one, x, x, -x, -x],
        vec![one, x, a, b, cc, d],
        vec![one, x, b, a, d, cc],
        vec![one, -x, cc, d, e, f],
        vec![one, -x, d, cc, f, e],
    ]))
}

/// The obstruction polynomial for the order-6 two-parameter family: the cubic
/// x³ − αx² + ᾱx − 1 has all roots unimodular iff D(α) ≤ 0.
pub fn x6_discriminant(alpha: C64) -> f64 {
    let m2 = alpha.norm_sqr();
    m2 * m2 + 18.0 * m2 - 8.0 * (alpha * alpha * alpha).re - 27.0
}

/// Roots of x³ − αx² + ᾱx − 1, computed by Cardano-style deflation and
/// polished with Newton steps; sorted by argument.
fn unimodular_cubic_roots(alpha: C64) -> Vec<C64> {
    // Companion-free: find one root by Newton from several phase seeds, then
    // deflate to a quadratic.
    let f = |x: C64| x * x * x - alpha * x * x + alpha.conj() * x - C64::new(1.0, 0.0);
    let fp = |x: C64| x * x * 3.0 - alpha * x * 2.0 + alpha.conj();
    let mut roots: Vec<C64> = Vec::new();
    let mut seeds: Vec<C64> = (0..12)
        .map(|k| C64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 12.0))
        .collect();
    seeds.push(alpha / 3.0 + C64::new(0.3, 0.2));
    for seed in seeds {
        let mut x = seed;
        for _ in 0..80 {
            let d = fp(x);
            if d.norm() < 1e-14 {
                break;
            }
            let step = f(x) / d;
            x -= step;
            if step.norm() < 1e-15 {
                break;
            }
        }
        if f(x).norm() < 1e-10 && roots.iter().all(|&r| (r - x).norm() > 1e-7) {
            roots.push(x);
        }
        if roots.len() == 3 {
            break;
        }
    }
    roots.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
    roots
}

/// Two-parameter order-6 family indexed by α with D(α) ≤ 0 and D(−α) ≤ 0;
/// (x, y) are roots of the cubic at α and (u, v) roots of the cubic at −α.
pub fn x6_2(alpha: C64) -> Result<CMat, CatalogError> {
    if x6_discriminant(alpha) > 1e-9 || x6_discriminant(-alpha) > 1e-9 {
        return Err(CatalogError::Domain(format!(
            "α = {alpha} lies outside the admissible region"
        )));
    }
    let rp = unimodular_cubic_roots(alpha);
    let rm = unimodular_cubic_roots(-alpha);
    if rp.len() != 3 || rm.len() != 3 {
        return Err(CatalogError::Domain(format!(
            "cubic root extraction failed at α = {alpha}"
        )));
    }
    let (x, y) = (rp[0], rp[1]);
    let (u, v) = (rm[0], rm[1]);
    let one = c(1.0, 0.0);
    let xy = x * y;
    Ok(mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, x * xy, y * xy, xy / (u * v), u * xy, v * xy],
        vec![one, x / y, x * xy, x / u, x / v, u * v * x],
        vec![one, u * v * x, u * xy, -one, -u * xy, -u * v * x],
        vec![one, x / u, v * xy, -x / u, -one, -v * xy],
        vec![one, x / v, xy / (u * v), -xy / (u * v), -x / v, -one],
    ]))
}

/// The auxiliary unimodular value used by the two-phase order-6 family.
fn k6_f(x1: f64, x2: f64) -> C64 {
    let half_sum = (x1 + x2) / 2.0;
    let half_diff = (x1 - x2) / 2.0;
    let phase = C64::from_polar(1.0, half_sum);
    let trig = C64::new(half_diff.cos(), -half_sum.sin());
    let inner = 1.0 / (1.0 + x1.sin() * x2.sin()) - 0.25;
    phase * trig * C64::new(0.5, inner.max(0.0).sqrt())
}

/// Two-phase order-6 family; every 2×2 block of the output is Hadamard.
pub fn k6_2(x1: f64, x2: f64) -> Result<CMat, CatalogError> {
    if 1.0 + x1.sin() * x2.sin() <= 1e-12 {
        return Err(CatalogError::Domain(format!(
            "phases ({x1}, {x2}) hit the singular locus sin x1 · sin x2 = −1"
        )));
    }
    let z1 = C64::from_polar(1.0, x1);
    let z2 = C64::from_polar(1.0, x2);
    let f1 = k6_f(x1, x2);
    let f2 = k6_f(x1, -x2);
    let f3 = k6_f(-x1, -x2);
    let f4 = k6_f(-x1, x2);
    let one = c(1.0, 0.0);
    Ok(mat(vec![
        vec![one, one, one, one, one, one],
        vec![one, -one, z1, -z1, z1, -z1],
        vec![one, z2, -f1, -z2 * f2, -f3.conj(), -z2 * f4.conj()],
        vec![
            one,
            -z2,
            -z1 * f2.conj(),
            z1 * z2 * f1.conj(),
            -z1 * f4,
            z1 * z2 * f3,
        ],
        vec![one, z2, -f3.conj(), -z2 * f4.conj(), -f1, -z2 * f2],
        vec![
            one,
            -z2,
            -z1 * f4,
            z1 * z2 * f3,
            -z1 * f2.conj(),
            z1 * z2 * f1.conj(),
        ],
    ]))
}

/// Möbius transform z ↦ (αz − β)/(β̄z − ᾱ).
fn moebius(alpha: C64, beta: C64, z: C64) -> C64 {
    (alpha * z - beta) / (beta.conj() * z - alpha.conj())
}

/// Inverse of [`moebius`]: solves (αw − β)/(β̄w − ᾱ) = z for w.
fn moebius_inv(alpha: C64, beta: C64, z: C64) -> C64 {
    (alpha.conj() * z - beta) / (beta.conj() * z - alpha)
}

/// Three-parameter order-6 family built from 2×2 blocks tied together by
/// Möbius transformations; all sign choices of the square roots give
/// equivalent matrices, so principal branches are used.
pub fn k6_3(theta: f64, phi: f64, z1: C64) -> Result<CMat, CatalogError> {
    check_unimodular(z1, "z1")?;
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let s32 = i * (3.0_f64.sqrt() / 2.0);
    let eip = C64::from_polar(1.0, phi);
    let a11 = -one / 2.0 + s32 * (c(theta.cos(), 0.0) + eip.conj() * theta.sin());
    let a12 = -one / 2.0 + s32 * (c(-theta.cos(), 0.0) + eip * theta.sin());
    let a = [[a11, a12], [a12.conj(), -a11.conj()]];
    // B = −F2 − A entrywise in this 2×2 block pattern.
    let f2 = [[one, one], [one, -one]];
    let mut b = [[c(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for s in 0..2 {
            b[r][s] = -f2[r][s] - a[r][s];
        }
    }
    let (alpha_a, beta_a) = (a[0][1] * a[0][1], a[0][0] * a[0][0]);
    let (alpha_b, beta_b) = (b[0][1] * b[0][1], b[0][0] * b[0][0]);
    let z1sq = z1 * z1;
    let z2 = moebius_inv(alpha_a, beta_a, moebius(alpha_b, beta_b, z1sq)).sqrt();
    let z3 = moebius(alpha_a, beta_a, z1sq).sqrt();
    let z4 = moebius(alpha_b, beta_b, z1sq).sqrt();
    for (z, name) in [(z2, "z2"), (z3, "z3"), (z4, "z4")] {
        if (z.norm() - 1.0).abs() > 1e-8 {
            return Err(CatalogError::Domain(format!(
                "derived block phase {name} = {z} is not unimodular"
            )));
        }
    }
    let zcol = |z: C64| [[one, one], [z, -z]];
    let zrow = |z: C64| [[one, z], [one, -z]];
    let (zc1, zc2) = (zcol(z1), zcol(z2));
    let (zr3, zr4) = (zrow(z3), zrow(z4));
    let mul = |p: &[[C64; 2]; 2], q: &[[C64; 2]; 2]| {
        let mut out = [[c(0.0, 0.0); 2]; 2];
        for r in 0..2 {
            for s in 0..2 {
                out[r][s] = p[r][0] * q[0][s] + p[r][1] * q[1][s];
            }
        }
        out
    };
    let scale = |p: &[[C64; 2]; 2], t: f64| {
        let mut out = *p;
        for row in out.iter_mut() {
            for v in row.iter_mut() {
                *v *= t;
            }
        }
        out
    };
    let blocks: [[[[C64; 2]; 2]; 3]; 3] = [
        [f2, zc1, zc2],
        [zr3, scale(&mul(&mul(&zr3, &a), &zc1), 0.5), scale(&mul(&mul(&zr3, &b), &zc2), 0.5)],
        [zr4, scale(&mul(&mul(&zr4, &b), &zc1), 0.5), scale(&mul(&mul(&zr4, &a), &zc2), 0.5)],
    ];
    Ok(CMat::from_fn(6, |r, s| {
        blocks[r / 2][s / 2][r % 2][s % 2]
    }))
}
