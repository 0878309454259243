use hadlab_catalog::{d6_1, k6_3, s6, x6_2};
use hadlab_core::{fourier, CMat, C64};
use hadlab_dilation::*;
use hadlab_invariants::{are_equivalent, EquivResult, DEFAULT_BUDGET};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn phase(t: f64) -> C64 {
    C64::from_polar(1.0, t)
}

fn w3() -> C64 {
    phase(std::f64::consts::TAU / 3.0)
}

/// The two orthogonal sixth-root triples with |Σ| = |Δ| = √3 but different
/// cross-sum moduli (1 versus 2).
fn sixth_root_triples() -> Vec<(C64, C64, C64, C64, C64, C64, [C64; 4])> {
    let w = w3();
    let w2 = w * w;
    // (a, b, c, d, e, f, [s1, s2, s3, s4])
    vec![
        (
            -w2,
            w,
            -w,
            w2,
            c(-1.0, 0.0),
            c(-1.0, 0.0),
            [w2, -w, w, -w2],
        ),
        (
            -w2,
            w,
            -w2,
            w2,
            c(-1.0, 0.0),
            -w,
            [w2, -w, w, c(-1.0, 0.0)],
        ),
    ]
}

#[test]
fn triple_product_values() {
    let one = c(1.0, 0.0);
    assert!((haagerup_poly(one, one, one, one, one, one) - c(64.0, 0.0)).norm() < 1e-12);

    for (a, b, cc, d, e, f, s) in sixth_root_triples() {
        let h = haagerup_poly(a, b, cc, d, e, f);
        assert!(h.im.abs() < 1e-12, "triple product must be real, got {h}");
        let sigma = one + a + b + e;
        let delta = one + cc + d + f;
        let psi = one + cc * a.conj() + d * b.conj() + f * e.conj();
        assert!((sigma.norm() - 3f64.sqrt()).abs() < 1e-12);
        assert!((delta.norm() - 3f64.sqrt()).abs() < 1e-12);
        assert!(
            (psi.norm() - 1.0).abs() < 1e-9 || (psi.norm() - 2.0).abs() < 1e-9,
            "cross-sum modulus {}",
            psi.norm()
        );
        // The triples really are orthogonal rows.
        let r2sum = sigma + s[0] + s[1];
        let r3sum = delta + s[2] + s[3];
        assert!(r2sum.norm() < 1e-12 && r3sum.norm() < 1e-12);
    }

    // Orthogonal triple from the order-6 Fourier matrix.
    let f6 = fourier(6);
    let h = haagerup_poly(
        f6[(1, 1)],
        f6[(1, 2)],
        f6[(2, 1)],
        f6[(2, 2)],
        f6[(1, 3)],
        f6[(2, 3)],
    );
    assert!(h.im.abs() < 1e-12);
}

#[test]
fn pair_decomposition() {
    let (s1, s2) = decompose_pair(c(2.0, 0.0)).unwrap();
    assert!((s1 - c(-1.0, 0.0)).norm() < 1e-12 && (s2 - c(-1.0, 0.0)).norm() < 1e-12);

    let (s1, s2) = decompose_pair(c(1.0, 0.0)).unwrap();
    let r3 = 3f64.sqrt() / 2.0;
    assert!((s1 - c(-0.5, r3)).norm() < 1e-12);
    assert!((s2 - c(-0.5, -r3)).norm() < 1e-12);

    let (s1, s2) = decompose_pair(c(0.0, 0.0)).unwrap();
    assert!((s1 - c(1.0, 0.0)).norm() < 1e-12 && (s2 + s1).norm() < 1e-12);

    for k in 0..40 {
        let sigma = C64::from_polar(2.0 * (k as f64 + 0.5) / 40.0, 0.37 * k as f64);
        let (s1, s2) = decompose_pair(sigma).unwrap();
        assert!((s1.norm() - 1.0).abs() < 1e-10 && (s2.norm() - 1.0).abs() < 1e-10);
        assert!((s1 + s2 + sigma).norm() < 1e-10);
    }
    assert!(decompose_pair(c(2.5, 0.0)).is_err());
}

#[test]
fn triple_feasibility() {
    for (a, b, cc, d, e, f, _) in sixth_root_triples() {
        assert!(triple_ortho_feasible(a, b, cc, d, e, f));
    }
    let one = c(1.0, 0.0);
    assert!(!triple_ortho_feasible(one, one, one, one, one, one));
    let f6 = fourier(6);
    assert!(triple_ortho_feasible(
        f6[(1, 1)],
        f6[(1, 2)],
        f6[(2, 1)],
        f6[(2, 2)],
        f6[(1, 3)],
        f6[(2, 3)],
    ));
}

/// Extracts (a,b,c,d) and the column-j pair (e,f) from rows 1 and 2 of a
/// dephased order-6 matrix.
fn row_data(h: &CMat, j: usize) -> (C64, C64, C64, C64, C64, C64) {
    (
        h[(1, 1)],
        h[(1, 2)],
        h[(2, 1)],
        h[(2, 2)],
        h[(1, j)],
        h[(2, j)],
    )
}

#[test]
fn quadratic_relations_vanish_on_real_matrices() {
    let mats = vec![
        x6_2(c(0.4, 0.3)).unwrap(),
        x6_2(c(-0.2, 0.55)).unwrap(),
        d6_1(phase(0.8)).unwrap(),
        fourier(6),
    ];
    for h in &mats {
        let (a, b, cc, d, _, _) = row_data(h, 3);
        let (f1, f2, f3, g1, g2, g3) = lin_coeffs(a, b, cc, d);
        let scale = f1
            .max_coeff()
            .max(f2.max_coeff())
            .max(f3.max_coeff())
            .max(1.0);
        for j in 3..6 {
            let (_, _, _, _, e, f) = row_data(h, j);
            let rf = f1.eval(e) + f2.eval(e) * f + f3.eval(e) * f * f;
            let rg = g1.eval(e) + g2.eval(e) * f + g3.eval(e) * f * f;
            assert!(rf.norm() < 1e-9 * scale, "first relation residual {rf}");
            assert!(rg.norm() < 1e-9 * scale, "second relation residual {rg}");
        }
    }
}

#[test]
fn degenerate_value_is_reciprocal_of_leading_root() {
    // The leading quadratic coefficient is degree one in e; its root is the
    // reciprocal conjugate of the closed-form degenerate value, so the two
    // coincide exactly when that root lies on the unit circle.
    for (k, t) in [(0usize, 0.7), (1, -1.3), (2, 2.1)] {
        let a = phase(0.31 + 0.7 * k as f64);
        let b = phase(t);
        let cc = phase(1.1 - 0.4 * k as f64);
        let d = phase(-0.9 + 0.2 * k as f64);
        let (_, _, f3, _, _, _) = lin_coeffs(a, b, cc, d);
        let e0 = degenerate_e0(a, b, cc, d);
        let root = -f3.coeffs[0] / f3.coeffs[1];
        assert!(f3.eval(root).norm() < 1e-9 * f3.max_coeff());
        assert!(
            (e0 * root.conj() - c(1.0, 0.0)).norm() < 1e-9,
            "degenerate value must be the reciprocal conjugate of the root"
        );
    }
}

#[test]
fn known_degenerate_quadruple_collapses_both_relations() {
    // Cube-root quadruple for which both relation combinations vanish.
    let w = w3();
    let w2 = w * w;
    let one = c(1.0, 0.0);
    let (f1, f2, f3, g1, g2, g3) = lin_coeffs(one, one, w, w2);
    let n = f3.mul(&g1).sub(&f1.mul(&g3));
    let dd = f3.mul(&g2).sub(&f2.mul(&g3));
    let scale = f3.max_coeff().max(g2.max_coeff()).max(1.0);
    assert!(n.is_zero(1e-9 * scale * scale));
    assert!(dd.is_zero(1e-9 * scale * scale));
}

#[test]
fn companion_map_reproduces_matrix_entries() {
    // On a generic matrix the companion map sends each entry of the second
    // dephased row to the entry directly below it.
    let (_, mats) = closed_form_example().unwrap();
    assert!(!mats.is_empty());
    for h in &mats {
        let (a, b, cc, d, _, _) = row_data(h, 3);
        for j in 3..6 {
            let (_, _, _, _, e, f) = row_data(h, j);
            let fv = companion_value(a, b, cc, d, e).expect("nondegenerate direction");
            assert!((fv - f).norm() < 1e-7, "companion mismatch: {fv} vs {f}");
        }
    }
    // On the two-parameter bicirculant family the fraction degenerates: its
    // numerator vanishes identically, so the companion map is undefined at
    // every matrix direction.
    let h = x6_2(c(0.4, 0.3)).unwrap();
    let (a, b, cc, d, _, _) = row_data(&h, 3);
    for j in 3..6 {
        let (_, _, _, _, e, _) = row_data(&h, j);
        assert!(companion_value(a, b, cc, d, e).is_err());
    }
}

#[test]
fn sextic_structure_and_roots() {
    // Self-inversive with a real middle coefficient, up to the monomial
    // prefactor; and actual matrix entries appear among the roots.
    for h in [x6_2(c(0.4, 0.3)).unwrap(), x6_2(c(-0.2, 0.55)).unwrap()] {
        let (a, b, cc, d, _, _) = row_data(&h, 3);
        let p = fundamental_poly(a, b, cc, d);
        assert_eq!(p.degree(), 6);
        let pref = a * a * a * a * b * b * b * b * cc * cc * cc * d * d * d;
        let reduced = p.scale(c(1.0, 0.0) / pref);
        let scale = reduced.max_coeff();
        for k in 0..=6 {
            assert!(
                (reduced.coeffs[6 - k] - reduced.coeffs[k].conj()).norm() < 1e-9 * scale,
                "coefficient mirror fails at {k}"
            );
        }
        assert!(reduced.coeffs[3].im.abs() < 1e-9 * scale);
        for j in 3..6 {
            let (_, _, _, _, e, _) = row_data(&h, j);
            assert!(
                p.eval(e).norm() < 1e-7 * scale * pref.norm(),
                "matrix entry must be a root"
            );
        }
    }
}

#[test]
fn unimodular_root_criterion() {
    let one = c(1.0, 0.0);
    let p = RecipPoly::new(vec![one, c(0.0, 0.0), one]);
    assert!(cohn_test(&p).unwrap());
    let q = RecipPoly::new(vec![one, c(-3.0, 0.0), one]);
    assert!(!cohn_test(&q).unwrap());
    // Not self-inversive.
    let r = RecipPoly::new(vec![one, c(2.0, 0.0)]);
    assert!(cohn_test(&r).is_err());
}

fn block(h: &CMat, r0: usize, c0: usize) -> CMat {
    CMat::from_fn(3, |i, j| h[(r0 + i, c0 + j)])
}

#[test]
fn block_completion_matches_known_matrices() {
    for h in [fourier(6), x6_2(c(0.4, 0.3)).unwrap()] {
        let e = block(&h, 0, 0);
        let b = block(&h, 0, 3);
        let cc = block(&h, 3, 0);
        let d = complete_block_d(&e, &b, &cc).unwrap();
        let actual = block(&h, 3, 3);
        assert!(d.max_dist(&actual) < 1e-9, "completion must be unique");
    }
    // A singular off-diagonal block is rejected: rank-one unimodular blocks
    // have zero determinant, so no unique completion exists.
    let u = [phase(0.2), phase(1.4), phase(-0.7)];
    let v = [phase(0.9), phase(-2.1), phase(0.4)];
    let singular = CMat::from_fn(3, |i, j| u[i] * v[j]);
    let f6 = fourier(6);
    assert!(complete_block_d(&block(&f6, 0, 0), &singular, &block(&f6, 3, 0)).is_err());
}

#[test]
fn embedding_prechecks() {
    let ones = CMat::ones(3);
    let rep = embed_precheck(&ones);
    assert!(!rep.pass && rep.entry_sum_abs > 54f64.sqrt());
    assert!((rep.lambda_max - 9.0).abs() < 1e-6);

    let f6 = fourier(6);
    assert!(embed_precheck(&block(&f6, 0, 0)).pass);

    // Rank-1 unimodular block: largest Gram eigenvalue is 9 > 6.
    let u = [phase(0.2), phase(1.4), phase(-0.7)];
    let v = [phase(0.9), phase(-2.1), phase(0.4)];
    let rank1 = CMat::from_fn(3, |i, j| u[i] * v[j]);
    let rep = embed_precheck(&rank1);
    assert!(!rep.pass && (rep.lambda_max - 9.0).abs() < 1e-6);
}

#[test]
fn canonical_position_test() {
    assert!(canonical_precheck(
        c(0.0, 1.0),
        phase(1.0),
        phase(2.0),
        phase(3.5)
    ));
    // The product of the second and third phases equals the fourth, which is
    // one of the excluded coincidences.
    assert!(!canonical_precheck(
        c(0.0, 1.0),
        phase(1.0),
        phase(2.0),
        phase(3.0)
    ));
    assert!(!canonical_precheck(
        c(0.0, 1.0),
        phase(2.0),
        phase(2.0),
        phase(3.0)
    ));
    assert!(!canonical_precheck(
        c(0.0, 1.0),
        c(1.0, 0.0),
        phase(2.0),
        phase(3.0)
    ));
}

#[test]
fn degenerate_class_membership() {
    assert!(k6_membership(&d6_1(phase(0.8)).unwrap()));
    assert!(!k6_membership(&s6()));
    let h = k6_3(0.7, 1.9, phase(0.45)).unwrap();
    assert!(h.is_hadamard(1e-10).pass);
    assert!(k6_membership(&h));
}

#[test]
fn closed_form_example_dilates() {
    let (q, mats) = closed_form_example().unwrap();
    assert!(canonical_precheck(q.a, q.b, q.c, q.d));
    assert!(embed_precheck(&q.corner()).pass);
    assert!(!mats.is_empty(), "the closed-form input must dilate");
    assert!(mats.len() <= 4);
    for h in &mats {
        assert!(h.is_hadamard(1e-8).pass);
        assert!(!k6_membership(h));
    }
    // The crafted quadruple has a itself among the sextic roots, and the
    // companion of a on the transposed side is its conjugate.
    let p = fundamental_poly(q.a, q.b, q.c, q.d);
    assert!(p.eval(q.a).norm() < 1e-7 * p.max_coeff());
    assert!(cohn_test(&p).unwrap(), "all six roots must be unimodular");
}

/// Applies row and column permutations and re-dephases.
fn permuted_dephased(h: &CMat, rp: [usize; 6], cp: [usize; 6]) -> CMat {
    let p = CMat::from_fn(6, |i, j| h[(rp[i], cp[j])]);
    p.dephase().unwrap().0
}

#[test]
fn dilation_round_trips_generic_matrices() {
    // Generic matrices are scarce in the named catalog (the previously known
    // order-6 families other than the isolated symmetric matrix all sit inside
    // the degenerate three-parameter class), so round-trip through corners of
    // the construction's own outputs: extract a different dephased corner and
    // check that dilating it recovers the matrix up to equivalence.
    let (_, mats) = closed_form_example().unwrap();
    assert!(!mats.is_empty());
    let perms: [([usize; 6], [usize; 6]); 4] = [
        ([0, 1, 2, 3, 4, 5], [0, 1, 3, 2, 4, 5]),
        ([0, 1, 2, 3, 4, 5], [0, 3, 4, 1, 2, 5]),
        ([0, 1, 3, 2, 4, 5], [0, 1, 2, 3, 4, 5]),
        ([0, 1, 2, 3, 4, 5], [0, 2, 4, 1, 3, 5]),
    ];
    for h in &mats {
        let mut recovered = false;
        'perms: for (rp, cp) in perms {
            let g = permuted_dephased(h, rp, cp);
            let q = match QuadPoint::new(g[(1, 1)], g[(1, 2)], g[(2, 1)], g[(2, 2)]) {
                Ok(q) => q,
                Err(_) => continue,
            };
            if !canonical_precheck(q.a, q.b, q.c, q.d) || !embed_precheck(&q.corner()).pass {
                continue;
            }
            let Ok(cands) = dilate(&q) else { continue };
            for m in &cands {
                if let EquivResult::Equivalent(w) = are_equivalent(m, h, DEFAULT_BUDGET) {
                    assert!(w.verify(m, h, 1e-6));
                    recovered = true;
                    break 'perms;
                }
            }
        }
        assert!(recovered, "dilation must recover the matrix from another corner");
    }
}
