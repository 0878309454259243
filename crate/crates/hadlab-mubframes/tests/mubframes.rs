use hadlab_catalog::{construct, FamilyPoint};
use hadlab_core::{CMat, C64};
use hadlab_mubframes::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    let n = a.order();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (a[(i, j)] - b[(i, j)]).norm())
        .fold(0.0, f64::max)
}

/// Order-6 Hadamard matrix with circulant blocks, parametrized by a
/// unimodular c.
fn bicirculant6(cv: C64) -> CMat {
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    let cb = cv.conj();
    let rows = [
        [one, i * cb, i * cv],
        [one, cb, -cv],
        [one, -cb, cv],
        [-one, i * cb, i * cv],
    ];
    CMat::from_fn(6, |r, s| {
        let block = 2 * (r / 3) + s / 3;
        rows[block][(s % 3 + 3 - r % 3) % 3]
    })
}

#[test]
fn order2_triplet_is_the_classical_one() {
    let t = order2_triplet();
    assert_eq!(t.count(), 3);
    let prod = t.hadamards[0].matmul(&t.hadamards[1].adjoint());
    let expect = CMat::from_rows(vec![
        vec![c(1.0, -1.0), c(1.0, 1.0)],
        vec![c(1.0, 1.0), c(1.0, -1.0)],
    ])
    .unwrap();
    assert!(max_abs_diff(&prod, &expect) < 1e-12);
}

#[test]
fn tensor_of_order2_triplets_gives_an_order4_triplet() {
    let t = order2_triplet();
    let t4 = mub_tensor(&t, &t, 1e-10).unwrap();
    assert_eq!(t4.n, 4);
    assert_eq!(t4.count(), 3);
}

#[test]
fn repeated_basis_is_biased() {
    let t = order2_triplet();
    assert!(!is_unbiased(&t.hadamards[0], &t.hadamards[0], 1e-10));
    let bad = MubSet::new(
        2,
        vec![t.hadamards[0].clone(), t.hadamards[0].clone()],
        1e-10,
    );
    assert!(bad.is_err());
}

#[test]
fn basis_count_bound_is_enforced() {
    let t = order2_triplet();
    let too_many = vec![
        t.hadamards[0].clone(),
        t.hadamards[1].clone(),
        t.hadamards[0].clone(),
    ];
    assert!(MubSet::new(2, too_many, 1e-10).is_err());
}

#[test]
fn bicirculant_detection() {
    let t = bicirculant6(C64::from_polar(1.0, 0.9));
    assert!(is_bicirculant(&t, 1e-12));
    let mut s = t.clone();
    s[(1, 2)] = s[(1, 2)] * c(0.0, 1.0);
    assert!(!is_bicirculant(&s, 1e-6));
}

#[test]
fn factorization_of_the_order6_bicirculant_family() {
    let t = bicirculant6(C64::from_polar(1.0, 0.9));
    assert!(t.is_hadamard(1e-10).pass);
    let f = zauner_factor(&t, 1e-6).unwrap();
    assert!(f.flat, "deviation {}", f.deviation);
    assert!(f.deviation < 1e-6);
    assert!(f.z1.is_hadamard(1e-8).pass);
    assert!(f.z2.is_hadamard(1e-8).pass);
    let prod = f.z1.matmul(&f.z2.adjoint());
    assert!(max_abs_diff(&prod, &t.scale(c(6f64.sqrt(), 0.0))) < 1e-8);
    let triplet = MubSet::new(6, vec![f.z1.clone(), f.z2.clone()], 1e-8).unwrap();
    assert_eq!(triplet.count(), 3);
}

#[test]
fn factorization_of_dephased_order6_points() {
    for alpha in [c(0.5, 0.2), c(0.1, 0.4), c(-0.3, 0.25)] {
        let t = construct(&FamilyPoint::new("X6_2", vec![alpha])).unwrap();
        assert!(t.is_hadamard(1e-9).pass);
        let f = zauner_factor(&t, 1e-6).unwrap();
        assert!(f.flat, "alpha {alpha}: deviation {}", f.deviation);
        assert!(f.z1.is_hadamard(1e-8).pass);
        assert!(f.z2.is_hadamard(1e-8).pass);
        let prod = f.z1.matmul(&f.z2.adjoint());
        assert!(max_abs_diff(&prod, &t.scale(c(6f64.sqrt(), 0.0))) < 1e-8);
        assert!(is_unbiased(&f.z1, &f.z2, 1e-8));
    }
}

#[test]
fn factorization_rejects_bad_inputs() {
    let f5 = hadlab_core::fourier(5);
    assert!(zauner_factor(&f5, 1e-6).is_err());
    let not_hadamard = CMat::identity(6);
    assert!(zauner_factor(&not_hadamard, 1e-6).is_err());
}

#[test]
fn rephasing_recovers_circulant_blocks() {
    let t = construct(&FamilyPoint::new("X6_2", vec![c(0.5, 0.2)])).unwrap();
    assert!(!is_bicirculant(&t, 1e-6));
    let (d1, d2, s) = rephase_to_bicirculant(&t, 1e-8).unwrap();
    assert!(is_bicirculant(&s, 1e-8));
    for v in d1.iter().chain(d2.iter()) {
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }
    let rebuilt = CMat::from_fn(6, |i, j| d1[i] * t[(i, j)] * d2[j]);
    assert!(max_abs_diff(&rebuilt, &s) < 1e-12);
}

#[test]
fn twelve_lines_in_dimension_seven() {
    let bases = real_mubs_dim4();
    assert!(is_real_unbiased(&bases[0], &bases[1], 1e-12));
    assert!(is_real_unbiased(&bases[1], &bases[2], 1e-12));
    let lines = equiangular_from_mubs(&bases).unwrap();
    assert_eq!(lines.dim, 7);
    assert_eq!(lines.vectors.len(), 12);
    assert!((lines.cosine - 1.0 / 3.0).abs() < 1e-12);
    assert!(lines.verify() < 1e-12);
}

#[test]
fn truncation_gives_eight_lines_in_dimension_six() {
    let lines = equiangular_from_mubs(&real_mubs_dim4()).unwrap();
    let t = lines.truncate();
    assert_eq!(t.dim, 6);
    assert_eq!(t.vectors.len(), 8);
    assert!(t.verify() < 1e-12);
}

#[test]
fn single_basis_is_rejected() {
    let bases = real_mubs_dim4();
    assert!(equiangular_from_mubs(&bases[..1]).is_err());
}

#[test]
fn line_count_lower_bounds() {
    assert_eq!(line_lower_bound(7), 12);
    assert_eq!(line_lower_bound(10), 10);
    assert_eq!(line_lower_bound(25), 144);
    assert_eq!(line_lower_bound(49), 144);
    for n in 1..=200usize {
        let lb = line_lower_bound(n) as f64;
        let floor = 8.0 * n as f64 * (4.0 * n as f64 + 33.0) / 1089.0;
        assert!(lb >= floor, "n = {n}: {lb} < {floor}");
    }
}

#[test]
fn order9_signature_matrix() {
    let sig = q9();
    assert!((sig.mu + 2.0).abs() < 1e-12);
    assert!((frame_dimension(9, sig.mu) - 6.0).abs() < 1e-12);
    let neg = sig.negate();
    assert!((frame_dimension(9, neg.mu) - 3.0).abs() < 1e-12);
    let h = signature_to_hadamard(&sig).unwrap();
    assert!(h.is_hadamard(1e-10).pass);
    let back = hadamard_to_signature(&h, 1e-10).unwrap();
    assert!((back.mu - sig.mu).abs() < 1e-10);
    assert!(max_abs_diff(&back.q, &sig.q) < 1e-12);
}

#[test]
fn frame_gram_is_a_projection() {
    for sig in [q9(), skew_to_signature(&paley_design(7).unwrap()).unwrap()] {
        let g = signature_gram(&sig);
        assert!(max_abs_diff(&g.matmul(&g), &g) < 1e-9);
        let k = frame_dimension(sig.order(), sig.mu);
        let trace: C64 = (0..sig.order()).map(|i| g[(i, i)]).sum();
        assert!((trace.re - k).abs() < 1e-9);
    }
}

#[test]
fn quadratic_residue_skew_designs() {
    for (p, k) in [(7u64, 4.0), (11, 6.0)] {
        let u = paley_design(p).unwrap();
        assert!(is_skew_design(&u));
        let sig = skew_to_signature(&u).unwrap();
        assert!((frame_dimension(p as usize, sig.mu) - k).abs() < 1e-9);
        let neg = sig.negate();
        assert!((frame_dimension(p as usize, neg.mu) - (p as f64 - k)).abs() < 1e-9);
        let h = signature_to_hadamard(&sig).unwrap();
        assert!(h.is_hadamard(1e-9).pass);
    }
    assert!(paley_design(5).is_err());
    assert!(paley_design(9).is_err());
    let mut bad = paley_design(7).unwrap();
    bad[0][1] = 1 - bad[0][1];
    assert!(!is_skew_design(&bad));
    assert!(skew_to_signature(&bad).is_err());
}

#[test]
fn pauli_orbit_frame_in_dimension_eight() {
    let (vectors, gram) = hoggar();
    assert_eq!(vectors.len(), 64);
    for i in 0..64 {
        assert!((gram[(i, i)].re - 0.125).abs() < 1e-12);
        assert!(gram[(i, i)].im.abs() < 1e-12);
        for j in 0..i {
            assert!(
                (gram[(i, j)].norm() - 1.0 / 24.0).abs() < 1e-12,
                "({i}, {j}): {}",
                gram[(i, j)].norm()
            );
        }
    }
    // The Gram matrix is idempotent: the frame is tight in dimension 8.
    assert!(max_abs_diff(&gram.matmul(&gram), &gram) < 1e-10);
    // Normalized off-diagonal entries are fourth roots of unity.
    for i in 0..64 {
        for j in 0..64 {
            if i != j {
                let w = gram[(i, j)].scale(24.0);
                assert!((w.powu(4) - c(1.0, 0.0)).norm() < 1e-9);
            }
        }
    }
}
