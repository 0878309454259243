use hadlab_catalog::{construct, FamilyPoint};
use hadlab_circulant::*;
use hadlab_core::{fourier, CMat, C64};
use hadlab_invariants::{are_equivalent, fingerprint, EquivResult, DEFAULT_BUDGET};
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn phase(t: f64) -> C64 {
    C64::from_polar(1.0, t)
}

fn rows_close(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < tol)
}

fn assert_equivalent(a: &CMat, b: &CMat) {
    match are_equivalent(a, b, DEFAULT_BUDGET) {
        EquivResult::Equivalent(w) => assert!(w.verify(a, b, 1e-6)),
        other => panic!("expected equivalence, got {other:?}"),
    }
}

#[test]
fn modular_arithmetic_basics() {
    assert!(is_prime(17) && is_prime(2) && !is_prime(1) && !is_prime(91));
    assert_eq!(generators(7).collect::<Vec<_>>(), vec![3, 5]);
    let gs = cosets(17, 4, 3);
    assert_eq!(gs[0], vec![1, 4, 13, 16]);
    assert_eq!(gs[1], vec![3, 5, 12, 14]);
    assert_eq!(gs[2], vec![2, 8, 9, 15]);
    assert_eq!(gs[3], vec![6, 7, 10, 11]);
    // -1 is a quadratic residue exactly when p = 1 mod 4.
    assert_eq!(minus_one_coset(13, 2, 2), 0);
    assert_eq!(minus_one_coset(7, 2, 3), 1);
    assert_eq!(two_square_decomposition(17).unwrap(), (1, 4));
    assert_eq!(two_square_decomposition(73).unwrap(), (-3, 8));
}

#[test]
fn quartic_residue_transition_numbers_match_closed_forms() {
    // At p = 17 with (s, t) = (1, 4) the sixteen transition numbers follow
    // the classical closed forms in s and t.
    let n = transition_numbers(17, 3, 4).unwrap();
    let expected = [[0, 2, 1, 0], [2, 0, 1, 1], [1, 1, 1, 1], [0, 1, 1, 2]];
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(n[i][j], expected[i][j], "entry ({i},{j})");
        }
    }
    // Row 0 misses one element (p - 1 maps to zero), other rows are full.
    assert_eq!(n[0].iter().sum::<usize>(), 3);
    for row in &n[1..] {
        assert_eq!(row.iter().sum::<usize>(), 4);
    }
}

#[test]
fn quadratic_exponent_rows_are_hadamard() {
    for (n, alpha, beta) in [(4, 1, 0), (5, 1, 0), (6, 1, 1), (7, 2, 1), (8, 3, 2), (9, 1, 0)] {
        let row = classical(n, alpha, beta).unwrap();
        let rep = CMat::circulant(&row).is_hadamard(1e-8);
        assert!(rep.pass, "order {n}: {rep:?}");
    }
    assert!(classical(6, 2, 0).is_err(), "2 is not a unit modulo 6");
}

#[test]
fn quadratic_exponent_row_is_fourier_equivalent() {
    let row = classical(5, 1, 0).unwrap();
    assert_equivalent(&CMat::circulant(&row), &fourier(5));
}

#[test]
fn interleaved_family_matches_printed_order_12_row() {
    let a = phase(0.7);
    let alpha = phase(TAU / 6.0);
    let root = backelin(12, 2, &[a], alpha).unwrap();
    assert!(root.residual() < 1e-9);
    let x = x_from_z(&root.z);
    let h = CMat::circulant(&x);
    assert!(h.is_hadamard(1e-8).pass);
    let w = phase(TAU / 3.0);
    let one = c(1.0, 0.0);
    let printed = [
        one,
        a,
        one,
        -w * w * a,
        w,
        w * w * a,
        one,
        -a,
        one,
        w * w * a,
        w,
        -w * w * a,
    ];
    assert!(rows_close(&x, &printed, 1e-9));
}

#[test]
fn interleaved_family_rejects_bad_parameters() {
    let a = phase(0.4);
    assert!(backelin(10, 2, &[a], phase(TAU / 5.0)).is_err(), "4 does not divide 10");
    assert!(backelin(12, 2, &[a], phase(TAU / 3.0)).is_err(), "alpha must be primitive of order 6");
    assert!(backelin(12, 2, &[a, a], phase(TAU / 6.0)).is_err(), "wrong block length");
}

#[test]
fn quadratic_residue_matrices_are_hadamard() {
    for p in [5u64, 7, 11, 13, 19] {
        let mats = index2(p).unwrap();
        assert_eq!(mats.len(), if p % 4 == 3 { 2 } else { 4 });
        for m in &mats {
            assert!(m.is_hadamard(1e-8).pass, "p = {p}");
        }
    }
    for alpha in index2_alphas(13) {
        assert!((alpha.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn cubic_residue_decomposition_uses_fixed_convention() {
    // 4p = A^2 + 27 B^2 with A = 1 mod 3 and B > 0.
    for (p, a, b) in [(7, 1, 1), (13, -5, 1), (19, 7, 1), (31, 4, 2), (37, -11, 1)] {
        assert_eq!(gaussian_decomposition(p).unwrap(), (a, b), "p = {p}");
    }
}

#[test]
fn cubic_residue_solutions_are_hadamard() {
    for p in [7u64, 13] {
        let sols = index3(p).unwrap();
        assert_eq!(sols.len(), 12);
        for s in &sols {
            assert_eq!(s.class, SolutionClass::Unimodular);
            assert!(s.residual() < 1e-9, "p = {p}, residual {}", s.residual());
            assert!(s.matrix().is_hadamard(1e-8).pass, "p = {p}");
        }
    }
}

#[test]
fn cubic_residue_order_7_contains_the_root_of_unity_row() {
    // One of the twelve solutions at p = 7 is the printed root-of-unity row
    // (1, w^4, w^2, w, w, w^2, w^4).
    let w = phase(TAU / 7.0);
    let printed: Vec<C64> = [0u32, 4, 2, 1, 1, 2, 4].iter().map(|&e| w.powu(e)).collect();
    let hit = index3(7)
        .unwrap()
        .iter()
        .any(|s| rows_close(&s.x_row(), &printed, 1e-8));
    assert!(hit);
}

#[test]
fn cubic_residue_order_7_second_branch_has_degree_12_minimal_polynomial() {
    let bases = index3_base_triples(7).unwrap();
    let coeffs: [f64; 13] = [
        1.0, -12.0, 24.0, 4.0, -9.0, 27.0, -21.0, 27.0, -9.0, 4.0, 24.0, -12.0, 1.0,
    ];
    for val in bases[1] {
        let mut acc = c(0.0, 0.0);
        for &co in &coeffs {
            acc = acc * val + c(co, 0.0);
        }
        assert!(acc.norm() < 1e-6, "minimal polynomial residual {}", acc.norm());
    }
}

#[test]
fn quartic_residue_symmetric_parameters_at_17() {
    let (zeta, a, b, cc, d) = index4_params(17, 1.0).unwrap();
    assert!((zeta - 2.0 * (-1.0 + 17f64.sqrt()) / 16.0).abs() < 1e-12);
    assert!((a - 17.0 / 128.0).abs() < 1e-12);
    assert!((b + 1.0 / 128.0).abs() < 1e-12);
    assert!((cc - 17.0 / 16.0).abs() < 1e-12);
    assert!(d.abs() < 1e-12);
    // The two real parts always sum to zeta.
    for sign in [1.0, -1.0] {
        let (zeta, ..) = index4_params(17, sign).unwrap();
        let quad = index4_base_quad(17, sign).unwrap();
        assert!((quad[0].re + quad[1].re - zeta).abs() < 1e-10);
    }
}

#[test]
fn quartic_residue_symmetric_matrices_are_hadamard_and_distinct() {
    for p in [17u64, 41] {
        let [h1, h2] = index4_symmetric(p).unwrap();
        assert!(h1.is_hadamard(1e-8).pass, "p = {p}, first branch");
        assert!(h2.is_hadamard(1e-8).pass, "p = {p}, second branch");
    }
    // The two branches at p = 17 are genuinely inequivalent: their
    // minor-modulus multisets differ.
    let [h1, h2] = index4_symmetric(17).unwrap();
    let f1 = fingerprint(&h1, 3);
    let f2 = fingerprint(&h2, 3);
    assert!(!f1.matches(&f2, 1e-6), "branches should be inequivalent");
}

#[test]
fn half_sum_lift_closed_forms() {
    let (x1, x2) = lift(c(2.0, 0.0));
    assert!((x1 - c(1.0, 0.0)).norm() < 1e-12 && (x2 - c(1.0, 0.0)).norm() < 1e-12);
    let (x1, x2) = lift(c(0.0, 0.0));
    assert!((x1 - c(0.0, 1.0)).norm() < 1e-12 && (x2 + c(0.0, 1.0)).norm() < 1e-12);
    let (x1, x2) = lift(c(3.0, 0.0));
    let s5 = 5f64.sqrt();
    assert!((x1.re - (3.0 + s5) / 2.0).abs() < 1e-12);
    assert!((x2.re - (3.0 - s5) / 2.0).abs() < 1e-12);
    // Generic complex argument: both lifts invert x + 1/x.
    let h = c(0.3, 0.4);
    for x in [lift(h).0, lift(h).1] {
        assert!((x + c(1.0, 0.0) / x - h).norm() < 1e-10);
    }
}

#[test]
fn order_17_census_has_seventy_solutions_in_three_classes() {
    let set = index4_p17_all().unwrap();
    assert_eq!(set.solutions.len(), 70);
    assert_eq!(set.count(SolutionClass::Real), 26);
    assert_eq!(set.count(SolutionClass::Unimodular), 28);
    assert_eq!(set.count(SolutionClass::Complex), 16);
    for s in &set.solutions {
        assert!(s.residual() < 1e-8, "residual {}", s.residual());
        if s.class == SolutionClass::Unimodular {
            assert!(s.matrix().is_hadamard(1e-8).pass);
        }
    }
    // All seventy coset quadruples are distinct.
    for (i, a) in set.solutions.iter().enumerate() {
        for b in &set.solutions[..i] {
            assert!(!rows_close(&a.c, &b.c, 1e-6), "duplicate solution");
        }
    }
}

#[test]
fn order_17_census_contains_the_symmetric_pair() {
    let set = index4_p17_all().unwrap();
    for sign in [1.0, -1.0] {
        let quad = index4_base_quad(17, sign).unwrap();
        let hit = set.solutions.iter().any(|s| rows_close(&s.c, &quad, 1e-8));
        assert!(hit, "symmetric branch {sign} missing from the census");
    }
}

#[test]
fn core_lift_reconstructs_a_unimodular_core() {
    let sol = &core_index2(5).unwrap()[0];
    let n = sol.x.len();
    let z: Vec<C64> = (0..n).map(|i| sol.x[(i + 1) % n] / sol.x[i]).collect();
    let rebuilt = core_x_from_z(&z, 1e-8).unwrap();
    assert!(rows_close(&rebuilt.x, &sol.x, 1e-9));
    assert!(rebuilt.bordered.is_hadamard(1e-8).pass);
}

#[test]
fn core_lift_rejects_invalid_quotients() {
    assert!(core_x_from_z(&[c(1.0, 0.0); 4], 1e-8).is_err());
}

#[test]
fn quadratic_residue_cores_at_5_hit_known_order_6_families() {
    let sols = core_index2(5).unwrap();
    assert_eq!(sols.len(), 4);
    for s in &sols {
        assert!(s.bordered.is_hadamard(1e-8).pass);
    }
    // The imaginary-unit pair lands in the one-parameter circulant-core
    // family at its base point; the other pair gives the symmetric matrix.
    let d6 = construct(&FamilyPoint::new("D6_1", vec![c(1.0, 0.0)])).unwrap();
    let s6 = construct(&FamilyPoint::new("S6", vec![])).unwrap();
    assert_equivalent(&sols[0].bordered, &d6);
    assert_equivalent(&sols[2].bordered, &s6);
}

#[test]
fn quartic_residue_cores_are_hadamard() {
    for p in [17u64, 41] {
        let a = core_index4_a(p).unwrap();
        let b = core_index4_b(p).unwrap();
        assert_eq!(a.bordered.order() as u64, p + 1);
        assert!(a.bordered.is_hadamard(1e-8).pass, "p = {p}, family a");
        assert!(b.bordered.is_hadamard(1e-8).pass, "p = {p}, family b");
    }
}

#[test]
fn quartic_residue_core_radicands_satisfy_the_norm_identity() {
    for p in [17u64, 41, 73] {
        let (a, b) = core_index4_b_params(p).unwrap();
        let pf = p as f64;
        let lhs = (pf - 1.0).powi(4) * (a * a - b);
        let rhs = (pf + 1.0).powi(2) * (pf - 3.0).powi(2);
        assert!((lhs - rhs).abs() < 1e-6 * rhs, "p = {p}: {lhs} vs {rhs}");
    }
}

#[test]
fn sporadic_order_7_matrix() {
    let alpha = q7_alpha();
    let cubic = alpha.powi(3) - 40169.0 * alpha * alpha + 122486812.0 * alpha + 124134308.0;
    assert!(cubic.abs() < 1e-1, "cubic residual {cubic}");
    let sol = q7().unwrap();
    assert_eq!(sol.bordered.order(), 7);
    assert!(sol.bordered.is_hadamard(1e-8).pass);
    // Inequivalent to the order-7 Fourier matrix: the minor-modulus
    // multisets differ.
    let f = fingerprint(&sol.bordered, 3);
    let g = fingerprint(&fourier(7), 3);
    assert!(!f.matches(&g, 1e-6));
    // Entries are not roots of unity of any small order.
    let z = sol.x[0];
    for k in 1..=100u32 {
        assert!((z.powu(k) - c(1.0, 0.0)).norm() > 1e-3, "order {k}");
    }
}

#[test]
fn sporadic_order_11_pair() {
    let [s1, s2] = q11().unwrap();
    for s in [&s1, &s2] {
        assert_eq!(s.bordered.order(), 11);
        assert!(s.bordered.is_hadamard(1e-8).pass);
        // The core is a symmetric circulant: the row is a palindrome after
        // its first entry.
        let n = s.x.len();
        for k in 1..n {
            assert!((s.x[k] - s.x[n - k]).norm() < 1e-9);
        }
    }
    let f1 = fingerprint(&s1.bordered, 3);
    let f2 = fingerprint(&s2.bordered, 3);
    assert!(!f1.matches(&f2, 1e-6), "the two matrices are inequivalent");
}

#[test]
fn palindromic_substitution_halves_the_degree() {
    let to_poly = |v: &[f64]| {
        hadlab_dilation::RecipPoly::new(v.iter().map(|&x| c(x, 0.0)).collect())
    };
    // x^2 + x + 1 -> u + 1 and x^2 - 3x + 1 -> u - 3.
    let t = palindromic_transform(&to_poly(&[1.0, 1.0, 1.0])).unwrap();
    assert!(rows_close(&t.coeffs, &[c(1.0, 0.0), c(1.0, 0.0)], 1e-12));
    let t = palindromic_transform(&to_poly(&[1.0, -3.0, 1.0])).unwrap();
    assert!(rows_close(&t.coeffs, &[c(-3.0, 0.0), c(1.0, 0.0)], 1e-12));
    // 2x^6 + 2x^5 + 2x^4 - 5x^3 + 2x^2 + 2x + 2 -> 2u^3 + 2u^2 - 4u - 9.
    let t = palindromic_transform(&to_poly(&[2.0, 2.0, 2.0, -5.0, 2.0, 2.0, 2.0])).unwrap();
    let expect = [c(-9.0, 0.0), c(-4.0, 0.0), c(2.0, 0.0), c(2.0, 0.0)];
    assert!(rows_close(&t.coeffs, &expect, 1e-12));
    assert!(palindromic_transform(&to_poly(&[1.0, 2.0, 3.0])).is_err());
    assert!(palindromic_transform(&to_poly(&[1.0, 1.0])).is_err());
}

#[test]
fn band_roots_of_the_transform_lift_to_unimodular_roots() {
    let f = hadlab_dilation::RecipPoly::new(
        [2.0, 2.0, 2.0, -5.0, 2.0, 2.0, 2.0].iter().map(|&x| c(x, 0.0)).collect(),
    );
    let t = palindromic_transform(&f).unwrap();
    let band = transform_roots_in_band(&t, 1e-9);
    assert!(!band.is_empty());
    for u in band {
        let (x, _) = lift(c(u, 0.0));
        assert!((x.norm() - 1.0).abs() < 1e-9);
        assert!(f.eval(x).norm() < 1e-6 * f.max_coeff());
    }
}
