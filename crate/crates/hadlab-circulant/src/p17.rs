//! The complete solution set of the index-4 coset system at p = 17: seventy
//! quadruples described by nested radicals, grouped by the factor of the
//! degree-70 resolvent they come from.

use crate::indexk::{index2_alphas, IndexKSolution, SolutionClass};
use crate::CirculantError;
use hadlab_core::C64;
use hadlab_dilation::RecipPoly;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

const S17_GEN: u64 = 3;

/// Inverts h = x + 1/x in closed form, returning the branch with nonnegative
/// imaginary part (real |h| <= 2), the root outside the unit interval scaled
/// consistently otherwise; the second solution is always the reciprocal.
pub fn lift(h: C64) -> (C64, C64) {
    let (a, b) = (h.re, h.im);
    let x1 = if b.abs() < 1e-12 {
        if a.abs() <= 2.0 {
            c(a / 2.0, (4.0 - a * a).sqrt() / 2.0)
        } else {
            c(a / 2.0 + (a * a - 4.0).sqrt() / 2.0, 0.0)
        }
    } else if a.abs() < 1e-12 {
        c(0.0, b / 2.0 + (b * b + 4.0).sqrt() / 2.0)
    } else {
        let inner = (4.0 * a * a * b * b + (a * a - b * b - 4.0).powi(2)).sqrt();
        let re = a / 2.0 + (2.0 * a * a - 2.0 * b * b - 8.0 + 2.0 * inner).sqrt() / 4.0;
        let im = b / 2.0
            + (a * b).signum() * (-2.0 * a * a + 2.0 * b * b + 8.0 + 2.0 * inner).sqrt() / 4.0;
        c(re, im)
    };
    (x1, c(1.0, 0.0) / x1)
}

/// A labelled batch of coset quadruples.
#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub solutions: Vec<IndexKSolution>,
}

impl SolutionSet {
    pub fn count(&self, class: SolutionClass) -> usize {
        self.solutions.iter().filter(|s| s.class == class).count()
    }
}

fn push_cyclic(out: &mut Vec<IndexKSolution>, quad: [C64; 4]) {
    for shift in 0..4 {
        let rotated: Vec<C64> = (0..4).map(|i| quad[(i + shift) % 4]).collect();
        out.push(IndexKSolution::new(17, 4, S17_GEN, rotated));
    }
}

fn recip(q: &[C64; 4]) -> [C64; 4] {
    [
        c(1.0, 0.0) / q[0],
        c(1.0, 0.0) / q[1],
        c(1.0, 0.0) / q[2],
        c(1.0, 0.0) / q[3],
    ]
}

fn conj(q: &[C64; 4]) -> [C64; 4] {
    [q[0].conj(), q[1].conj(), q[2].conj(), q[3].conj()]
}

/// Sorted real roots of a real-coefficient quartic, flagged if any pair of
/// roots is too close to order reliably.
fn quartic_real_roots(coeffs: [f64; 5]) -> Result<[f64; 4], CirculantError> {
    let poly = RecipPoly::new(coeffs.iter().map(|&v| c(v, 0.0)).collect());
    let mut roots: Vec<f64> = poly
        .roots()
        .into_iter()
        .filter(|r| r.im.abs() < 1e-9 * (1.0 + r.re.abs()))
        .map(|r| r.re)
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if roots.len() != 4 {
        return Err(CirculantError::Domain(
            "quartic does not have four real roots".into(),
        ));
    }
    if roots.windows(2).any(|w| (w[1] - w[0]).abs() < 1e-9) {
        return Err(CirculantError::Domain(
            "ambiguous root ordering in quartic".into(),
        ));
    }
    Ok([roots[0], roots[1], roots[2], roots[3]])
}

/// All seventy coset quadruples solving the order-17 index-4 system:
/// 26 real, 28 unimodular and 16 other solutions.
pub fn index4_p17_all() -> Result<SolutionSet, CirculantError> {
    let s17 = 17f64.sqrt();
    let mut out: Vec<IndexKSolution> = Vec::with_capacity(70);

    // Constant quadruples from the quadratic factor.
    let eps = (-15.0 + 221f64.sqrt()) / 2.0;
    for v in [eps, 1.0 / eps] {
        let q = c(v, 0.0);
        out.push(IndexKSolution::new(17, 4, S17_GEN, vec![q, q, q, q]));
    }

    // Index-2 embeddings from the quartic factor: alternating conjugate pairs.
    for alpha in index2_alphas(17) {
        out.push(IndexKSolution::new(
            17,
            4,
            S17_GEN,
            vec![alpha, alpha.conj(), alpha, alpha.conj()],
        ));
        out.push(IndexKSolution::new(
            17,
            4,
            S17_GEN,
            vec![alpha.conj(), alpha, alpha.conj(), alpha],
        ));
    }

    // The two degree-8 factors share their halved-variable values.
    let h0 = |sa: f64, sb: f64| c(-(1.0 + sa * 5.0 * s17) / 8.0 + sb * (34.0 + sa * 2.0 * s17).sqrt() / 8.0, 0.0);
    let h1 = |sa: f64, sb: f64| c((-1.0 + sa * 3.0 * s17) / 8.0 + sb * (34.0 + sa * 2.0 * s17).sqrt() / 8.0, 0.0);
    let lifted = |h: C64| lift(h).0;
    let v34_quads: [[C64; 4]; 4] = [
        {
            let (a, b) = (lifted(h0(1.0, 1.0)), lifted(h1(1.0, -1.0)));
            [a, b, c(1.0, 0.0) / a, c(1.0, 0.0) / b]
        },
        {
            let (a, b) = (lifted(h0(-1.0, -1.0)), lifted(h1(-1.0, 1.0)));
            [a, c(1.0, 0.0) / b, c(1.0, 0.0) / a, b]
        },
        {
            let (a, b) = (lifted(h0(1.0, -1.0)), lifted(h1(1.0, 1.0)));
            [a, c(1.0, 0.0) / b, c(1.0, 0.0) / a, b]
        },
        {
            let (a, b) = (lifted(h0(-1.0, 1.0)), lifted(h1(-1.0, -1.0)));
            [a, b, c(1.0, 0.0) / a, c(1.0, 0.0) / b]
        },
    ];
    for quad in v34_quads {
        push_cyclic(&mut out, quad);
    }

    // The degree-16 factor: one genuinely complex quadruple, closed under
    // conjugation, reciprocation and cyclic shifts.
    let h0c = |sa: f64, sb: f64| {
        let t17 = (17.0 * s17).sqrt();
        let inner = (289.0 + 136.0 * s17 + sa * 68.0 * t17).sqrt();
        let re = 2.0
            + sa * (34.0 + 18.0 * s17).sqrt() / 4.0
            + sb * (34.0 + sa * 4.0 * t17 + 2.0 * inner).sqrt() / 4.0;
        let im = sa
            * (-(-34.0 + 18.0 * s17).sqrt() / 4.0
                - sb * (-34.0 - sa * 4.0 * t17 + 2.0 * inner).sqrt() / 4.0);
        c(re, im)
    };
    let base = [
        lifted(h0c(1.0, 1.0)),
        c(1.0, 0.0) / lifted(h0c(-1.0, -1.0)),
        lifted(h0c(1.0, -1.0)),
        lifted(h0c(-1.0, 1.0)),
    ];
    for quad in [base, conj(&base), recip(&base), recip(&conj(&base))] {
        push_cyclic(&mut out, quad);
    }

    // The degree-32 factor: four quartics on the halved variables, selected
    // by sign patterns on the elementary symmetric functions.
    let sig1 = |sa: f64, sb: f64| (53.0 + sa * 59.0 * s17) / 13.0 + sb * (63546.0 + sa * 6358.0 * s17).sqrt() / 13.0;
    let sig2 = |sa: f64, sb: f64| {
        (48164.0 + sa * 7130.0 * s17) / 338.0 + sb * (3307173846.0 + sa * 705523222.0 * s17).sqrt() / 338.0
    };
    let sig3 = |sa: f64, sb: f64| {
        (801857.0 + sa * 89585.0 * s17) / 4394.0
            + sb * 4.0 * (48275292054.0 + sa * 8767889417.0 * s17).sqrt() / 4394.0
    };
    let sig4 = |sa: f64, sb: f64| {
        -(11854643.0 + sa * 2053159.0 * s17) / 8788.0
            + sb * 2.0 * (53118166790942.0 + sa * 12183750689646.0 * s17).sqrt() / 8788.0
    };
    let signatures = [
        (sig1(1.0, -1.0), sig2(1.0, -1.0), sig3(1.0, -1.0), sig4(1.0, 1.0)),
        (sig1(-1.0, 1.0), sig2(-1.0, -1.0), sig3(-1.0, -1.0), sig4(-1.0, 1.0)),
        (sig1(-1.0, -1.0), sig2(-1.0, 1.0), sig3(-1.0, 1.0), sig4(-1.0, -1.0)),
        (sig1(1.0, 1.0), sig2(1.0, 1.0), sig3(1.0, 1.0), sig4(1.0, -1.0)),
    ];
    let inv = |z: C64| c(1.0, 0.0) / z;
    for (idx, (s1, s2, s3, s4)) in signatures.into_iter().enumerate() {
        let r = quartic_real_roots([s4, -s3, s2, -s1, 1.0])?;
        let l: Vec<C64> = r.iter().map(|&v| lifted(c(v, 0.0))).collect();
        let quad = match idx {
            0 => [l[0], l[2], l[3], inv(l[1])],
            1 => [l[0], l[1], l[3], inv(l[2])],
            2 => [l[0], l[1], l[2], inv(l[3])],
            _ => [l[0], inv(l[1]), inv(l[2]), inv(l[3])],
        };
        push_cyclic(&mut out, quad);
        push_cyclic(&mut out, recip(&quad));
    }

    Ok(SolutionSet { solutions: out })
}
