//! The order-6 dilation construction: starting from a 3×3 unimodular corner
//! block, complete three mutually orthogonal rows and columns via the
//! orthogonal-triple identities, then fill in the last block by unitarity.
//! Matrices whose entries all stay unimodular form the generic four-parameter
//! family of complex Hadamard matrices of order 6.

mod poly;

pub use poly::RecipPoly;

use hadlab_core::{CMat, C64};
use thiserror::Error;

/// Default tolerance for unimodularity of polynomial roots.
pub const ROOT_TOL: f64 = 1e-7;
/// Default tolerance on orthogonality residuals of candidate rows.
pub const ORTHO_TOL: f64 = 1e-6;
/// Verification tolerance for assembled matrices (looser than the exact
/// constructors: sextic root-finding noise).
pub const OUTPUT_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum DilationError {
    #[error("parameter outside the domain: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("singular block: {0}")]
    Singular(String),
    #[error("polynomial is not self-inversive")]
    NotSelfInversive,
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn check_unimodular(z: C64, name: &str) -> Result<(), DilationError> {
    if (z.norm() - 1.0).abs() > 1e-9 {
        return Err(DilationError::Domain(format!(
            "{name} = {z} is not unimodular"
        )));
    }
    Ok(())
}

/// The four unimodular entries of the corner block
/// [[1,1,1],[1,a,b],[1,c,d]].
#[derive(Clone, Copy, Debug)]
pub struct QuadPoint {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl QuadPoint {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<QuadPoint, DilationError> {
        check_unimodular(a, "a")?;
        check_unimodular(b, "b")?;
        check_unimodular(c, "c")?;
        check_unimodular(d, "d")?;
        Ok(QuadPoint { a, b, c, d })
    }

    /// The 3×3 corner block.
    pub fn corner(&self) -> CMat {
        let one = c(1.0, 0.0);
        CMat::from_rows(vec![
            vec![one, one, one],
            vec![one, self.a, self.b],
            vec![one, self.c, self.d],
        ])
        .expect("rectangular")
    }

    /// The quadruple of the transposed corner block.
    pub fn transposed(&self) -> QuadPoint {
        QuadPoint {
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }
}

/// The six free entries completing two partial rows (1,a,b,e,s1,s2) and
/// (1,c,d,f,s3,s4) to an orthogonal triple with the all-ones row.
#[derive(Clone, Copy, Debug)]
pub struct RowSextuple {
    pub e: C64,
    pub s1: C64,
    pub s2: C64,
    pub f: C64,
    pub s3: C64,
    pub s4: C64,
}

/// The triple product (1+a+b+e)(1+c̄+d̄+f̄)(1+cā+db̄+fē); real exactly on
/// orthogonal triples of rows.
pub fn haagerup_poly(a: C64, b: C64, cc: C64, d: C64, e: C64, f: C64) -> C64 {
    let one = c(1.0, 0.0);
    (one + a + b + e)
        * (one + cc.conj() + d.conj() + f.conj())
        * (one + cc * a.conj() + d * b.conj() + f * e.conj())
}

/// Splits −sigma into two unimodular numbers: the unique pair when
/// 0 < |sigma| ≤ 2, and the conventional free pair (1, −1) when sigma = 0.
pub fn decompose_pair(sigma: C64) -> Result<(C64, C64), DilationError> {
    let m = sigma.norm();
    if m > 2.0 + 1e-9 {
        return Err(DilationError::Domain(format!(
            "|sigma| = {m} exceeds 2; no unimodular pair sums to -sigma"
        )));
    }
    if m < 1e-12 {
        return Ok((c(1.0, 0.0), c(-1.0, 0.0)));
    }
    let m = m.min(2.0);
    let shift = sigma / m * c(0.0, (1.0 - m * m / 4.0).max(0.0).sqrt());
    Ok((-sigma / 2.0 + shift, -sigma / 2.0 - shift))
}

/// Whether the partial rows (1,a,b,e,*,*) and (1,c,d,f,*,*) extend to an
/// orthogonal triple with the all-ones row: the triple-product identity must
/// hold and |1+a+b+e| ≤ 2.
pub fn triple_ortho_feasible(a: C64, b: C64, cc: C64, d: C64, e: C64, f: C64) -> bool {
    let one = c(1.0, 0.0);
    let sigma = one + a + b + e;
    let delta = one + cc + d + f;
    let psi = one + cc * a.conj() + d * b.conj() + f * e.conj();
    let h = haagerup_poly(a, b, cc, d, e, f);
    let rhs = 4.0 - sigma.norm_sqr() - delta.norm_sqr() - psi.norm_sqr();
    (h - c(rhs, 0.0)).norm() < 1e-9 && sigma.norm() <= 2.0 + 1e-9
}

/// The six coefficient polynomials (in the indeterminate e) of the two
/// quadratic relations satisfied by the companion entry f on an orthogonal
/// triple: F1 + F2·f + F3·f² = 0 and G1 + G2·f + G3·f² = 0.
#[allow(clippy::type_complexity)]
pub fn lin_coeffs(
    a: C64,
    b: C64,
    cc: C64,
    d: C64,
) -> (
    RecipPoly,
    RecipPoly,
    RecipPoly,
    RecipPoly,
    RecipPoly,
    RecipPoly,
) {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let (a2, b2, c2, d2) = (a * a, b * b, cc * cc, d * d);
    let cd = cc * d;
    let ab = a * b;

    let f1 = RecipPoly::new(vec![
        z,
        cd * (a2 * b + a * b2 + b * cc + b2 * cc + a * d + a2 * d),
        -cd * (a + b + a * cc + ab * cc + b * d + ab * d),
    ]);
    let f2 = RecipPoly::new(vec![
        -ab * (b * cc + b * c2 + a * d + c2 * d + a * d2 + cc * d2),
        a2 * b * cc - b2 * cc + b * c2 - a * b2 * c2 - a2 * d + a * b2 * d - a * c2 * d
            + b2 * c2 * d
            + a * d2
            - a2 * b * d2
            + a2 * cc * d2
            - b * cc * d2,
        ab * cc + b * c2 + ab * d + b * c2 * d + a * d2 + a * cc * d2,
    ]);
    // F3 = −(abcde)²·conj(F1); on the unit circle the conjugate of F1(e) is
    // its reciprocal-conjugate divided by e², so the e² factors cancel.
    let f3 = f1.conj_reciprocal(2).scale(-(ab * cd) * (ab * cd));

    let g1 = RecipPoly::new(vec![
        z,
        cd * (2.0 * ab + a2 * b + a * b2 + b * cc + 2.0 * ab * cc + b2 * cc + a * d + a2 * d
            + 2.0 * ab * d),
        2.0 * cd * (ab + b * cc + a * d),
    ]);
    let g2 = RecipPoly::new(vec![
        2.0 * ab * cd * (one + a + b),
        2.0 * ab * cc + a2 * b * cc + 2.0 * a * b2 * cc + b * c2 + 2.0 * ab * c2 + 2.0 * b2 * c2
            + 2.0 * ab * d
            + 2.0 * a2 * b * d
            + a * b2 * d
            + 2.0 * a * cd
            + 2.0 * a2 * cd
            + 2.0 * b * cd
            + 12.0 * ab * cd
            + 2.0 * a2 * b * cd
            + 2.0 * b2 * cd
            + 2.0 * a * b2 * cd
            + 2.0 * b * c2 * d
            + 2.0 * ab * c2 * d
            + b2 * c2 * d
            + a * d2
            + 2.0 * a2 * d2
            + 2.0 * ab * d2
            + 2.0 * a * cc * d2
            + a2 * cc * d2
            + 2.0 * ab * cc * d2,
        ab * cc + b * c2 + ab * d + 2.0 * a * cd + 2.0 * b * cd + 2.0 * ab * cd + b * c2 * d
            + a * d2
            + a * cc * d2,
    ]);
    let g3 = RecipPoly::new(vec![
        ab * (cc + a * cc + 2.0 * b * cc + d + 2.0 * a * d + b * d + 2.0 * cd + a * cd + b * cd),
        2.0 * ab * (cc + d + cd),
        z,
    ]);
    (f1, f2, f3, g1, g2, g3)
}

/// The unique unimodular-candidate value of e at which the leading quadratic
/// coefficient F3 vanishes.
pub fn degenerate_e0(a: C64, b: C64, cc: C64, d: C64) -> C64 {
    let (a2, b2) = (a * a, b * b);
    (a2 * b + a2 * d + a * b2 + a * d + b2 * cc + b * cc)
        / (a * b * cc + a * b * d + a * cc + a + b * d + b)
}

/// Numerator and denominator polynomials of the companion map F(e) =
/// −(F3G1 − F1G3)/(F3G2 − F2G3), trimmed to degree 3.
fn companion_fraction(a: C64, b: C64, cc: C64, d: C64) -> (RecipPoly, RecipPoly) {
    let (f1, f2, f3, g1, g2, g3) = lin_coeffs(a, b, cc, d);
    let trim3 = |p: RecipPoly| -> RecipPoly {
        let mut coeffs = p.coeffs;
        while coeffs.len() > 4 {
            coeffs.pop();
        }
        coeffs.resize(4, c(0.0, 0.0));
        RecipPoly::new(coeffs)
    };
    let n = trim3(f3.mul(&g1).sub(&f1.mul(&g3)));
    let dd = trim3(f3.mul(&g2).sub(&f2.mul(&g3)));
    (n, dd)
}

/// The companion entry f = F(e) of the second partial row, given e on the
/// first.  Fails with a branch signal when both numerator and denominator
/// vanish at e (the degenerate direction where two values of f coexist).
pub fn companion_value(a: C64, b: C64, cc: C64, d: C64, e: C64) -> Result<C64, DilationError> {
    let (n, dd) = companion_fraction(a, b, cc, d);
    let scale = dd.max_coeff().max(n.max_coeff()).max(1e-300);
    let den = dd.eval(e);
    if den.norm() < 1e-8 * scale {
        return Err(DilationError::Degenerate(
            "companion denominator vanishes at e; recover f from the quadratic relation".into(),
        ));
    }
    Ok(-n.eval(e) / den)
}

/// The degree-6 polynomial in e whose unimodular roots are the admissible
/// first-row entries: a⁴b⁴c³d³·e³·(|N(e)|² − |D(e)|²) expressed through
/// reciprocal-conjugate algebra.  Self-inversive up to the monomial factor.
pub fn fundamental_poly(a: C64, b: C64, cc: C64, d: C64) -> RecipPoly {
    let (n, dd) = companion_fraction(a, b, cc, d);
    let pref = a * a * a * a * b * b * b * b * cc * cc * cc * d * d * d;
    n.mul(&n.conj_reciprocal(3))
        .sub(&dd.mul(&dd.conj_reciprocal(3)))
        .scale(pref)
}

/// Whether a self-inversive polynomial has exclusively unimodular roots:
/// true iff every root of the derivative lies in the closed unit disk.
pub fn cohn_test(p: &RecipPoly) -> Result<bool, DilationError> {
    let coeffs = &p.coeffs;
    let m = coeffs.len() - 1;
    let scale = p.max_coeff().max(1e-300);
    // Determine ε from the outermost nonzero pair and check the mirror.
    let k0 = (0..=m)
        .find(|&k| coeffs[k].norm() > 1e-9 * scale || coeffs[m - k].norm() > 1e-9 * scale)
        .ok_or(DilationError::NotSelfInversive)?;
    if coeffs[k0].norm() < 1e-9 * scale {
        return Err(DilationError::NotSelfInversive);
    }
    let eps = coeffs[m - k0] / coeffs[k0].conj();
    if (eps.norm() - 1.0).abs() > 1e-7 {
        return Err(DilationError::NotSelfInversive);
    }
    for k in 0..=m {
        if (coeffs[m - k] - eps * coeffs[k].conj()).norm() > 1e-7 * scale {
            return Err(DilationError::NotSelfInversive);
        }
    }
    Ok(p.derivative().roots().iter().all(|r| r.norm() <= 1.0 + 1e-9))
}

fn inv3(m: &CMat) -> Result<CMat, DilationError> {
    let det = m.det();
    if det.norm() < 1e-10 {
        return Err(DilationError::Singular(format!("|det| = {}", det.norm())));
    }
    let e = |i: usize, j: usize| m[(i, j)];
    let cof = |i: usize, j: usize| -> C64 {
        let (r1, r2) = ((i + 1) % 3, (i + 2) % 3);
        let (c1, c2) = ((j + 1) % 3, (j + 2) % 3);
        e(r1, c1) * e(r2, c2) - e(r1, c2) * e(r2, c1)
    };
    Ok(CMat::from_fn(3, |i, j| cof(j, i) / det))
}

/// Completes the unique fourth block D = −C·E*·(B⁻¹)* so that
/// [[E,B],[C,D]]/√6 is unitary, given three orthogonal rows and columns.
pub fn complete_block_d(e: &CMat, b: &CMat, cc: &CMat) -> Result<CMat, DilationError> {
    if e.order() != 3 || b.order() != 3 || cc.order() != 3 {
        return Err(DilationError::Domain("blocks must be 3×3".into()));
    }
    let binv = inv3(b)?;
    Ok(cc.matmul(&e.adjoint()).matmul(&binv.adjoint()).scale(c(-1.0, 0.0)))
}

/// Embedding report for a 3×3 unimodular block: the largest eigenvalue of
/// E*E must not exceed the order 6, and the entry sum obeys |ΣE| ≤ √54.
#[derive(Clone, Copy, Debug)]
pub struct EmbedReport {
    pub lambda_max: f64,
    pub entry_sum_abs: f64,
    pub pass: bool,
}

/// Necessary conditions for a 3×3 block to embed into an order-6 complex
/// Hadamard matrix.
pub fn embed_precheck(e: &CMat) -> EmbedReport {
    let g = e.adjoint().matmul(e);
    // Largest eigenvalue of the positive semidefinite 3×3 Gram matrix by
    // power iteration.
    let mut v = [c(1.0, 0.3), c(0.7, -0.2), c(-0.4, 0.9)];
    let mut lambda = 0.0;
    for _ in 0..500 {
        let mut w = [c(0.0, 0.0); 3];
        for i in 0..3 {
            for j in 0..3 {
                w[i] += g[(i, j)] * v[j];
            }
        }
        let norm = (w.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt();
        if norm < 1e-300 {
            break;
        }
        lambda = norm
            / (v.iter().map(|z| z.norm_sqr()).sum::<f64>())
                .sqrt()
                .max(1e-300);
        for i in 0..3 {
            v[i] = w[i] / norm;
        }
    }
    let sum: C64 = e.as_slice().iter().sum();
    EmbedReport {
        lambda_max: lambda,
        entry_sum_abs: sum.norm(),
        pass: lambda <= 6.0 + 1e-8 && sum.norm() <= 54f64.sqrt() + 1e-8,
    }
}

/// The elliptical form x + y + x² + y² + xy² + x²y whose vanishing marks the
/// degenerate parameter pairs excluded by the canonical choice of the corner
/// block.
pub fn elliptical_form(x: C64, y: C64) -> C64 {
    x + y + x * x + y * y + x * y * y + x * x * y
}

/// Whether the quadruple is in canonical position: the product
/// (b−1)(c−1)(b−d²)(c−d²)(b−c)(bc−d)ℰ(b,d)ℰ(c,d) must not vanish.
pub fn canonical_precheck(_a: C64, b: C64, cc: C64, d: C64) -> bool {
    let one = c(1.0, 0.0);
    let d2 = d * d;
    let prod = (b - one)
        * (cc - one)
        * (b - d2)
        * (cc - d2)
        * (b - cc)
        * (b * cc - d)
        * elliptical_form(b, d)
        * elliptical_form(cc, d);
    prod.norm() > 1e-9
}

/// Whether an order-6 complex Hadamard matrix lies in the degenerate
/// three-parameter class: some dephasing puts a −1 in the core, i.e. some
/// 2×2 submatrix satisfies H[i][j]H[r][c] + H[r][j]H[i][c] = 0.
pub fn k6_membership(h: &CMat) -> bool {
    let n = h.order();
    for r in 0..n {
        for i in 0..n {
            if i == r {
                continue;
            }
            for cc in 0..n {
                for j in 0..n {
                    if j == cc {
                        continue;
                    }
                    if (h[(i, j)] * h[(r, cc)] + h[(r, j)] * h[(i, cc)]).norm() < 1e-7 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Whether the matrix is a phased permutation of the symmetric cube-root
/// matrix: all dephased entry ratios are cube roots of unity.
fn is_cube_root_matrix(h: &CMat) -> bool {
    let n = h.order();
    for i in 0..n {
        for j in 0..n {
            let ratio = h[(i, j)] * h[(0, 0)] / (h[(0, j)] * h[(i, 0)]);
            let arg3 = ratio.arg() * 3.0 / std::f64::consts::TAU;
            if (arg3 - arg3.round()).abs() > 1e-6 {
                return false;
            }
        }
    }
    true
}

/// All companion candidates at e: the unique ratio when the denominator is
/// healthy, otherwise the unimodular roots of the quadratic relation.
fn companion_candidates(
    f1: &RecipPoly,
    f2: &RecipPoly,
    f3: &RecipPoly,
    n: &RecipPoly,
    dd: &RecipPoly,
    e: C64,
) -> Vec<C64> {
    let scale = n.max_coeff().max(dd.max_coeff()).max(1e-300);
    let den = dd.eval(e);
    if den.norm() > 1e-7 * scale {
        return vec![-n.eval(e) / den];
    }
    // Degenerate direction: both quadratic relations are proportional; take
    // the unimodular roots of F3 f² + F2 f + F1 = 0 at this e.
    let (c0, c1, c2) = (f1.eval(e), f2.eval(e), f3.eval(e));
    RecipPoly::new(vec![c0, c1, c2])
        .roots()
        .into_iter()
        .filter(|f| (f.norm() - 1.0).abs() < 1e-6)
        .map(|f| f / f.norm())
        .collect()
}

fn validate_sextuple(q: &QuadPoint, s: &RowSextuple) -> bool {
    let one = c(1.0, 0.0);
    for z in [s.e, s.s1, s.s2, s.f, s.s3, s.s4] {
        if (z.norm() - 1.0).abs() > ORTHO_TOL {
            return false;
        }
    }
    let r2sum = one + q.a + q.b + s.e + s.s1 + s.s2;
    let r3sum = one + q.c + q.d + s.f + s.s3 + s.s4;
    let cross = one
        + q.a * q.c.conj()
        + q.b * q.d.conj()
        + s.e * s.f.conj()
        + s.s1 * s.s3.conj()
        + s.s2 * s.s4.conj();
    // Discard the degenerate vanishing 2-sums that belong to the excluded
    // three-parameter class.
    if (s.s1 + s.s2).norm() < ORTHO_TOL || (s.s3 + s.s4).norm() < ORTHO_TOL {
        return false;
    }
    r2sum.norm() < ORTHO_TOL && r3sum.norm() < ORTHO_TOL && cross.norm() < ORTHO_TOL
}

fn push_unique(list: &mut Vec<RowSextuple>, s: RowSextuple) {
    let close = |x: &RowSextuple| {
        (x.e - s.e).norm() < 1e-7
            && (x.s1 - s.s1).norm() < 1e-7
            && (x.s2 - s.s2).norm() < 1e-7
            && (x.f - s.f).norm() < 1e-7
            && (x.s3 - s.s3).norm() < 1e-7
            && (x.s4 - s.s4).norm() < 1e-7
    };
    if !list.iter().any(close) {
        list.push(s);
    }
}

/// All validated row sextuples completing the corner block's rows to an
/// orthogonal triple: the side solver behind the dilation construction.
pub fn solve_side(q: &QuadPoint) -> Result<Vec<RowSextuple>, DilationError> {
    let (a, b, cc, d) = (q.a, q.b, q.c, q.d);
    let (f1, f2, f3, _, _, _) = lin_coeffs(a, b, cc, d);
    if f3.is_zero(1e-9) {
        return Err(DilationError::Degenerate(
            "leading quadratic coefficient vanishes identically".into(),
        ));
    }
    let (n, dd) = companion_fraction(a, b, cc, d);
    let p = fundamental_poly(a, b, cc, d);
    if p.is_zero(1e-9 * p.max_coeff().max(1.0)) {
        return Err(DilationError::Degenerate(
            "fundamental polynomial vanishes identically".into(),
        ));
    }
    let roots = p.unimodular_roots(ROOT_TOL);
    let e0 = degenerate_e0(a, b, cc, d);
    let one = c(1.0, 0.0);
    let mut out: Vec<RowSextuple> = Vec::new();

    if (e0.norm() - 1.0).abs() > ROOT_TOL {
        // Symmetric branch: the pairs (e,f), (s1,s3), (s2,s4) play the same
        // role, so an unordered root triplet with the first-row sum constraint
        // is enumerated once; assigning a different root to the e slot only
        // permutes columns of the assembled matrix.
        let target = -(one + a + b);
        let m = roots.len();
        for i in 0..m {
            for j in i..m {
                for k in j..m {
                    if (roots[i] + roots[j] + roots[k] - target).norm() > ORTHO_TOL {
                        continue;
                    }
                    let (e, s1, s2) = (roots[i], roots[j], roots[k]);
                    for f in companion_candidates(&f1, &f2, &f3, &n, &dd, e) {
                        for s3 in companion_candidates(&f1, &f2, &f3, &n, &dd, s1) {
                            for s4 in companion_candidates(&f1, &f2, &f3, &n, &dd, s2) {
                                let s = RowSextuple { e, s1, s2, f, s3, s4 };
                                if validate_sextuple(q, &s) {
                                    push_unique(&mut out, s);
                                }
                            }
                        }
                    }
                }
            }
        }
    } else {
        // Decomposition branch: e determines f; the trailing pairs follow
        // from the row sums, with the pairing fixed by the third
        // orthogonality relation.
        for &e in &roots {
            if (e - e0).norm() < 1e-7 {
                continue;
            }
            let sigma = one + a + b + e;
            if sigma.norm() > 2.0 + ORTHO_TOL {
                continue;
            }
            for f in companion_candidates(&f1, &f2, &f3, &n, &dd, e) {
                if (f.norm() - 1.0).abs() > ORTHO_TOL {
                    continue;
                }
                let f = f / f.norm();
                let delta = one + cc + d + f;
                if delta.norm() > 2.0 + ORTHO_TOL {
                    continue;
                }
                let Ok((s1, s2)) = decompose_pair(sigma) else {
                    continue;
                };
                let Ok((p3, p4)) = decompose_pair(delta) else {
                    continue;
                };
                for (s3, s4) in [(p3, p4), (p4, p3)] {
                    let s = RowSextuple { e, s1, s2, f, s3, s4 };
                    if validate_sextuple(q, &s) {
                        push_unique(&mut out, s);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs the full dilation construction on a quadruple: solves both sides,
/// assembles candidate blocks, completes the fourth block by unitarity, and
/// returns every assembled matrix that is Hadamard, lies outside the
/// degenerate three-parameter class and is not the symmetric cube-root
/// matrix.
pub fn dilate(q: &QuadPoint) -> Result<Vec<CMat>, DilationError> {
    let sol_b = solve_side(q)?;
    let sol_c = solve_side(&q.transposed())?;
    let e = q.corner();
    let one = c(1.0, 0.0);
    let mut out: Vec<CMat> = Vec::new();
    for sb in &sol_b {
        let b = CMat::from_rows(vec![
            vec![one, one, one],
            vec![sb.e, sb.s1, sb.s2],
            vec![sb.f, sb.s3, sb.s4],
        ])
        .expect("rectangular");
        if b.det().norm() < 1e-8 {
            continue;
        }
        for sc in &sol_c {
            let cblk = CMat::from_rows(vec![
                vec![one, sc.e, sc.f],
                vec![one, sc.s1, sc.s3],
                vec![one, sc.s2, sc.s4],
            ])
            .expect("rectangular");
            let Ok(dblk) = complete_block_d(&e, &b, &cblk) else {
                continue;
            };
            if dblk
                .as_slice()
                .iter()
                .any(|z| (z.norm() - 1.0).abs() > ORTHO_TOL)
            {
                continue;
            }
            let h = CMat::from_fn(6, |i, j| match (i < 3, j < 3) {
                (true, true) => e[(i, j)],
                (true, false) => b[(i, j - 3)],
                (false, true) => cblk[(i - 3, j)],
                (false, false) => dblk[(i - 3, j - 3)],
            });
            if !h.is_hadamard(OUTPUT_TOL).pass {
                continue;
            }
            if k6_membership(&h) || is_cube_root_matrix(&h) {
                continue;
            }
            if !out.iter().any(|g| g.max_dist(&h) < 1e-7) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

/// A closed-form generic input: Re[a] is the unique real root of
/// 4r³ − 2r + 1 = 0 with Im[a] > 0, and c = (−a³+a²+a+1)/(a⁴+a³+a²−a);
/// the quadruple (a, ā, c, a) makes both fundamental polynomials solvable by
/// radicals.  Returns the quadruple and all matrices it dilates to.
pub fn closed_form_example() -> Result<(QuadPoint, Vec<CMat>), DilationError> {
    // Newton for the unique real root of 4r³ − 2r + 1.
    let mut r = -1.0f64;
    for _ in 0..100 {
        let fval = 4.0 * r * r * r - 2.0 * r + 1.0;
        let fder = 12.0 * r * r - 2.0;
        let step = fval / fder;
        r -= step;
        if step.abs() < 1e-16 {
            break;
        }
    }
    let a = c(r, (1.0 - r * r).max(0.0).sqrt());
    let a2 = a * a;
    let a3 = a2 * a;
    let a4 = a3 * a;
    let one = c(1.0, 0.0);
    let cc = (-a3 + a2 + a + one) / (a4 + a3 + a2 - a);
    let q = QuadPoint::new(a, a.conj(), cc, a)?;
    let mats = dilate(&q)?;
    Ok((q, mats))
}
