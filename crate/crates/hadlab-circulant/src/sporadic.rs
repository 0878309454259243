//! Sporadic bordered-circulant Hadamard matrices at orders 7 and 11 whose
//! core entries are algebraic numbers of large degree rather than roots of
//! unity, given in radical/trigonometric closed form.

use crate::core::{bordered, CoreSolution};
use crate::CirculantError;
use hadlab_core::C64;
use hadlab_dilation::{decompose_pair, RecipPoly};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// The resolvent parameter of the order-7 sporadic matrix: the relevant root
/// of a cubic with integer coefficients, in trigonometric form.
pub fn q7_alpha() -> f64 {
    let s = 1993741f64.sqrt();
    40169.0 / 3.0
        + 50.0 * s / 3.0
            * ((2731019453.0 * s / (1993741.0 * 1993741.0)).acos() / 3.0
                - 4.0 * std::f64::consts::PI / 3.0)
                .cos()
}

/// Coefficients (descending) of the degree-6 real polynomial whose roots are
/// twice the real parts of the order-7 sporadic core entries.
pub fn q7_poly(alpha: f64) -> [f64; 7] {
    let a2 = alpha * alpha;
    [
        2054570000.0,
        4109140000.0,
        16.0 * a2 + 9768064.0 * alpha - 5227993936.0,
        1956.0 * a2 + 64132324.0 * alpha - 12170223176.0,
        11393.0 * a2 + 427075897.0 * alpha + 1676016222.0,
        4644.0 * a2 + 2280446676.0 * alpha + 8524444776.0,
        -17074.0 * a2 + 3269963754.0 * alpha + 2727593304.0,
    ]
}

/// The sporadic order-7 Hadamard matrix with circulant core of size 6; its
/// entries are not roots of unity.
pub fn q7() -> Result<CoreSolution, CirculantError> {
    let alpha = q7_alpha();
    let coeffs = q7_poly(alpha);
    // RecipPoly stores coefficients in increasing degree.
    let poly = RecipPoly::new(coeffs.iter().rev().map(|&v| c(v, 0.0)).collect());
    let mut roots: Vec<f64> = poly
        .roots()
        .into_iter()
        .filter(|r| r.im.abs() < 1e-6 * (1.0 + r.re.abs()))
        .map(|r| r.re)
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if roots.len() != 6 {
        return Err(CirculantError::Domain(format!(
            "expected six real roots, found {}",
            roots.len()
        )));
    }
    let z: Vec<C64> = roots
        .iter()
        .map(|&r| c(r / 2.0, (1.0 - r * r / 4.0).max(0.0).sqrt()))
        .collect();
    let x = vec![z[0], z[2], z[1].conj(), z[3], z[4].conj(), z[5].conj()];
    Ok(CoreSolution {
        bordered: bordered(&x),
        x,
    })
}

/// The radical parameter of the order-11 sporadic pair.
pub fn q11_gamma() -> f64 {
    (396.0 + 18.0 * (8468.0 + 12.0 * 12309f64.sqrt()).cbrt()
        + 3.0 * (1829088.0 - 2592.0 * 12309f64.sqrt()).cbrt())
    .sqrt()
        / 3.0
}

/// The two sporadic order-11 Hadamard matrices with symmetric circulant core
/// of size 10; both have non-root-of-unity entries and distinct invariants.
pub fn q11() -> Result<[CoreSolution; 2], CirculantError> {
    let g = q11_gamma();
    let quartic = RecipPoly::new(vec![
        c(1008.0, 0.0),
        c(-(336.0 * g - 1344.0), 0.0),
        c(
            -(g.powi(5) - 132.0 * g.powi(3) - 56.0 * g * g + 1088.0 * g + 1232.0),
            0.0,
        ),
        c(-(336.0 * g - 1344.0), 0.0),
        c(1008.0, 0.0),
    ]);
    let mut cands: Vec<C64> = quartic
        .unimodular_roots(1e-7)
        .into_iter()
        .filter(|z| z.im > 0.0)
        .collect();
    cands.sort_by(|u, v| u.re.partial_cmp(&v.re).unwrap());
    if cands.len() != 2 {
        return Err(CirculantError::Domain(format!(
            "expected two unimodular quartic roots in the upper half-plane, found {}",
            cands.len()
        )));
    }
    let mut out = Vec::with_capacity(2);
    for a in cands {
        let bc_sum = -(30.0 * a.powu(7) + 53.0 * a.powu(6) - 83.0 * a.powu(5) - 56.0 * a.powu(4)
            + 117.0 * a.powu(3)
            - 176.0 * a.powu(2)
            + 103.0 * a
            + c(59.0, 0.0))
            / 48.0;
        let (b, cc) = decompose_pair(-bc_sum)
            .map_err(|e| CirculantError::Domain(format!("pair split failed: {e}")))?;
        let x = vec![
            a,
            b,
            b.conj(),
            cc,
            cc.conj(),
            a.conj(),
            cc.conj(),
            cc,
            b.conj(),
            b,
        ];
        out.push(CoreSolution {
            bordered: bordered(&x),
            x,
        });
    }
    Ok([out.remove(0), out.remove(0)])
}
