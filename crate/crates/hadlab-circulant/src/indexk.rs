//! Simple-index-k circulant Hadamard matrices of prime order: the reduced
//! rational system on coset values, the quadratic-residue constructions
//! (k = 2), the trigonometric closed forms (k = 3) and the symmetric
//! quartic-residue family (k = 4).

use crate::arith::{
    cosets, generators, is_prime, minus_one_coset, transition_numbers, two_square_decomposition,
};
use crate::CirculantError;
use hadlab_core::{CMat, C64};
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// How the coset values of a solution sit in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionClass {
    Real,
    Unimodular,
    Complex,
}

/// One solution of the reduced index-k system: coset values `c`, the
/// generator fixing the coset labelling, and its class.
#[derive(Clone, Debug)]
pub struct IndexKSolution {
    pub p: u64,
    pub k: usize,
    pub g: u64,
    pub c: Vec<C64>,
    pub class: SolutionClass,
}

impl IndexKSolution {
    pub fn new(p: u64, k: usize, g: u64, cvals: Vec<C64>) -> IndexKSolution {
        let class = classify(&cvals, 1e-8);
        IndexKSolution {
            p,
            k,
            g,
            c: cvals,
            class,
        }
    }

    /// First row of the corresponding circulant matrix: entry i takes the
    /// value of the coset containing i, with a leading one.
    pub fn x_row(&self) -> Vec<C64> {
        coset_row(self.p, self.k, self.g, &self.c, c(1.0, 0.0))
    }

    pub fn matrix(&self) -> CMat {
        CMat::circulant(&self.x_row())
    }

    /// Largest residual of the reduced rational system.
    pub fn residual(&self) -> f64 {
        index_residual(self.p, self.k, self.g, &self.c).unwrap_or(f64::INFINITY)
    }
}

pub fn classify(cvals: &[C64], tol: f64) -> SolutionClass {
    if cvals.iter().all(|z| z.im.abs() < tol) {
        SolutionClass::Real
    } else if cvals.iter().all(|z| (z.norm() - 1.0).abs() < tol) {
        SolutionClass::Unimodular
    } else {
        SolutionClass::Complex
    }
}

/// Assembles the length-p first row with x0 given and x_i = c_j on coset j.
pub fn coset_row(p: u64, k: usize, g: u64, cvals: &[C64], x0: C64) -> Vec<C64> {
    let gs = cosets(p, k, g);
    let mut x = vec![x0; p as usize];
    for (i, gi) in gs.iter().enumerate() {
        for &b in gi {
            x[b as usize] = cvals[i];
        }
    }
    x
}

/// Largest residual of the k reduced rational equations on the coset values.
pub fn index_residual(p: u64, k: usize, g: u64, cvals: &[C64]) -> Result<f64, CirculantError> {
    let n = transition_numbers(p, g, k)?;
    let m = minus_one_coset(p, k, g);
    let mut worst: f64 = 0.0;
    for a in 0..k {
        let mut v = cvals[a] + C64::new(1.0, 0.0) / cvals[(a + m) % k];
        for (i, row) in n.iter().enumerate() {
            for (j, &nij) in row.iter().enumerate() {
                v += cvals[(a + j) % k] / cvals[(a + i) % k] * nij as f64;
            }
        }
        worst = worst.max(v.norm());
    }
    Ok(worst)
}

/// Index-2 circulant Hadamard matrices from the quadratic residues modulo an
/// odd prime: two matrices for p ≡ 3 (mod 4), four for p ≡ 1 (mod 4).
pub fn index2(p: u64) -> Result<Vec<CMat>, CirculantError> {
    if !is_prime(p) || p == 2 {
        return Err(CirculantError::NotPrime(p));
    }
    let pf = p as f64;
    let n = p as usize;
    let mut residue = vec![false; n];
    for x in 1..p {
        residue[(x * x % p) as usize] = true;
    }
    let build = |s_val: C64, n_val: C64| {
        CMat::circulant(
            &(0..n)
                .map(|i| {
                    if i == 0 {
                        c(1.0, 0.0)
                    } else if residue[i] {
                        s_val
                    } else {
                        n_val
                    }
                })
                .collect::<Vec<_>>(),
        )
    };
    let mut out = Vec::new();
    if p % 4 == 3 {
        for sign in [1.0, -1.0] {
            let alpha = c(-(pf - 1.0) / (pf + 1.0), sign * 2.0 * pf.sqrt() / (pf + 1.0));
            out.push(build(c(1.0, 0.0), alpha));
        }
    } else {
        for alpha in index2_alphas(p) {
            out.push(build(alpha, alpha.conj()));
            out.push(build(alpha.conj(), alpha));
        }
    }
    Ok(out)
}

/// The two coset values for p ≡ 1 (mod 4), one per square-root branch; both
/// are unimodular.
pub fn index2_alphas(p: u64) -> Vec<C64> {
    let pf = p as f64;
    [1.0f64, -1.0]
        .iter()
        .map(|&s| {
            c(
                (-1.0 + s * pf.sqrt()) / (pf - 1.0),
                (pf * pf - 3.0 * pf + s * 2.0 * pf.sqrt()).sqrt() / (pf - 1.0),
            )
        })
        .collect()
}

/// Gaussian decomposition 4p = A² + 27B² with A ≡ 1 (mod 3) and B > 0.
pub fn gaussian_decomposition(p: u64) -> Result<(i64, i64), CirculantError> {
    let target = 4 * p as i64;
    let bound = ((target as f64).sqrt() as i64) + 1;
    for a in -bound..=bound {
        if a.rem_euclid(3) != 1 {
            continue;
        }
        let rem = target - a * a;
        if rem <= 0 || rem % 27 != 0 {
            continue;
        }
        let b2 = rem / 27;
        let b = (b2 as f64).sqrt().round() as i64;
        if b * b == b2 && b > 0 {
            return Ok((a, b));
        }
    }
    Err(CirculantError::Domain(format!(
        "no Gaussian decomposition of 4*{p}"
    )))
}

/// Smallest generator normalizing the coset labels for index 3 (the coset of
/// g must be the one with the smaller transition count from the residues).
pub fn index3_generator(p: u64) -> Result<u64, CirculantError> {
    for g in generators(p) {
        let n = transition_numbers(p, g, 3)?;
        if n[0][1] < n[0][2] {
            return Ok(g);
        }
    }
    Err(CirculantError::Domain(format!(
        "no normalized generator modulo {p}"
    )))
}

/// Smallest generator normalizing the coset labels for index 4 (positive t in
/// the two-square decomposition, equivalently n01 > n03).
pub fn index4_generator(p: u64) -> Result<u64, CirculantError> {
    for g in generators(p) {
        let n = transition_numbers(p, g, 4)?;
        if n[0][1] > n[0][3] {
            return Ok(g);
        }
    }
    Err(CirculantError::Domain(format!(
        "no normalized generator modulo {p}"
    )))
}

/// The two base coset-value triples of the index-3 classification, from the
/// trigonometric closed forms.
pub fn index3_base_triples(p: u64) -> Result<[[C64; 3]; 2], CirculantError> {
    if !is_prime(p) || p % 6 != 1 {
        return Err(CirculantError::Domain(format!(
            "{p} is not a prime congruent to 1 modulo 6"
        )));
    }
    let (ai, bi) = gaussian_decomposition(p)?;
    let (a, b) = (ai as f64, bi as f64);
    let pf = p as f64;
    let u = pf.sqrt();
    let v = (pf + 4.0 * a + 16.0).sqrt();
    let theta = (a * pf.sqrt() / (2.0 * pf)).acos() / 3.0;
    let s3 = 3.0f64.sqrt();

    let den1 = 2.0 * (pf * pf - 3.0 * pf - a);
    let alpha1 = c(
        (pf * a - 2.0 * pf - 2.0 * a) / den1,
        3.0 * s3 * pf.sqrt() * (pf - 4.0).sqrt() * b / den1,
    );
    let beta1 = c(
        -pf.sqrt() * (pf - 4.0) * (a + 2.0) / den1,
        -3.0 * s3 * (pf - 4.0).sqrt() * (pf - 2.0) * b / den1,
    );
    let gamma1 = c(
        -3.0 * s3 * pf.sqrt() * (pf - 4.0) * b / den1,
        (pf - 4.0).sqrt() * (pf * a - 2.0 * pf - 2.0 * a) / den1,
    );

    let den2 = u * u + u * v + 2.0;
    let alpha2 = c(
        -(u * u - u * v - 4.0) / (2.0 * den2),
        u * (4.0 + u - v).sqrt() * (4.0 - u + v).sqrt() / (2.0 * den2),
    );
    let beta2 = c(
        u * (a + 2.0) / den2,
        (u * u + u * v + 4.0) * (4.0 + u - v).sqrt() * (4.0 - u + v).sqrt() / (4.0 * den2),
    );
    let gamma2 = c(
        3.0 * s3 * u * b / den2,
        (u * u - u * v - 4.0) * (u + v + 4.0).sqrt() * (u + v - 4.0).sqrt() / (4.0 * den2),
    );

    let triple = |alpha: C64, beta: C64, gamma: C64| {
        let mut t = [c(0.0, 0.0); 3];
        for (i, ti) in t.iter_mut().enumerate() {
            let phi = theta - TAU / 3.0 * i as f64;
            *ti = alpha + beta * phi.cos() + gamma * phi.sin();
        }
        t
    };
    Ok([
        triple(alpha1, beta1, gamma1),
        triple(alpha2, beta2, gamma2),
    ])
}

/// All twelve unimodular index-3 solutions (two base triples, their cyclic
/// permutations and conjugates) for a prime p ≡ 1 (mod 6).
pub fn index3(p: u64) -> Result<Vec<IndexKSolution>, CirculantError> {
    let g = index3_generator(p)?;
    let bases = index3_base_triples(p)?;
    let mut out = Vec::with_capacity(12);
    for base in bases {
        for shift in 0..3 {
            let rotated: Vec<C64> = (0..3).map(|i| base[(i + shift) % 3]).collect();
            let conj: Vec<C64> = rotated.iter().map(|z| z.conj()).collect();
            out.push(IndexKSolution::new(p, 3, g, rotated));
            out.push(IndexKSolution::new(p, 3, g, conj));
        }
    }
    Ok(out)
}

/// Closed-form ingredients of the symmetric index-4 family for one
/// square-root branch (sign = ±1): (zeta, A, B, C, D).
pub fn index4_params(p: u64, sign: f64) -> Result<(f64, f64, f64, f64, f64), CirculantError> {
    if !is_prime(p) || p % 8 != 1 {
        return Err(CirculantError::Domain(format!(
            "{p} is not a prime congruent to 1 modulo 8"
        )));
    }
    let (si, ti) = two_square_decomposition(p)?;
    let (s, t) = (si as f64, ti as f64);
    let pf = p as f64;
    let zeta = 2.0 * (-1.0 + sign * pf.sqrt()) / (pf - 1.0);
    let den = t * t * (pf - 1.0) * (pf - 1.0);
    let a = 2.0 * pf * (pf - 2.0 * s + 1.0) / den;
    let b = sign * 2.0 * (pf * (s - 2.0) + s) / den;
    let cc = pf * (pf * (t * t + 2.0) - 4.0 * s - 3.0 * t * t + 2.0) / den;
    let d = sign * 2.0 * (pf * (s - 2.0) + s + t * t) / den;
    Ok((zeta, a, b, cc, d))
}

/// The base coset quadruple (a, b, conj a, conj b) of the symmetric index-4
/// family for one square-root branch.
pub fn index4_base_quad(p: u64, sign: f64) -> Result<[C64; 4], CirculantError> {
    let (zeta, a, b, cc, d) = index4_params(p, sign)?;
    let (si, ti) = two_square_decomposition(p)?;
    let (s, t) = (si as f64, ti as f64);
    let pf = p as f64;
    let ra = zeta / 2.0 + (a + b * pf.sqrt()).sqrt() - (cc + d * pf.sqrt()).sqrt();
    let rb = zeta - ra;
    let ia = (1.0 - ra * ra).sqrt();
    // The product identity fixes the orientation of the second imaginary part.
    let rhs = 2.0 * (zeta - 2.0 * ra) * (2.0 + zeta * (s - 1.0));
    let ib = (1.0 - rb * rb).sqrt() * (rhs / (4.0 * t * ia)).signum();
    let av = c(ra, ia);
    let bv = c(rb, ib);
    Ok([av, bv, av.conj(), bv.conj()])
}

/// The two symmetric index-4 circulant Hadamard matrices of order p ≡ 1
/// (mod 8), one per square-root branch.
pub fn index4_symmetric(p: u64) -> Result<[CMat; 2], CirculantError> {
    let g = index4_generator(p)?;
    let plus = IndexKSolution::new(p, 4, g, index4_base_quad(p, 1.0)?.to_vec());
    let minus = IndexKSolution::new(p, 4, g, index4_base_quad(p, -1.0)?.to_vec());
    Ok([plus.matrix(), minus.matrix()])
}
