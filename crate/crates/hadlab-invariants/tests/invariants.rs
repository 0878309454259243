use hadlab_core::{blog_to_cmat, cmat_to_blog, fourier, kronecker, root_power, BLog, CMat, C64};
use hadlab_invariants::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn h4() -> CMat {
    kronecker(&fourier(2), &fourier(2))
}

fn random_monomial_scramble(h: &CMat, rng: &mut impl Rng) -> CMat {
    let n = h.order();
    let mut rperm: Vec<usize> = (0..n).collect();
    let mut cperm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        rperm.swap(i, rng.gen_range(0..=i));
        cperm.swap(i, rng.gen_range(0..=i));
    }
    let phase = |rng: &mut dyn rand::RngCore| {
        let t: f64 = rand::Rng::gen_range(rng, 0.0..std::f64::consts::TAU);
        c(t.cos(), t.sin())
    };
    let d1: Vec<C64> = (0..n).map(|_| phase(rng)).collect();
    let d2: Vec<C64> = (0..n).map(|_| phase(rng)).collect();
    CMat::from_fn(n, |i, j| d1[i] * h[(rperm[i], cperm[j])] * d2[j])
}

#[test]
fn defect_of_small_fourier_matrices() {
    assert_eq!(defect(&fourier(6)).d, 4);
    assert_eq!(defect(&fourier(4)).d, 1);
    for p in [2usize, 3, 5, 7] {
        let rep = defect(&fourier(p));
        assert_eq!(rep.d, 0, "F_{p} should be isolated");
        assert!(!rep.ambiguous);
    }
}

#[test]
fn defect_of_real_order_four() {
    assert_eq!(defect(&h4()).d, 3);
}

#[test]
fn defect_is_equivalence_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for h in [fourier(6), h4()] {
        let base = defect(&h).d;
        for _ in 0..3 {
            let g = random_monomial_scramble(&h, &mut rng);
            assert_eq!(defect(&g).d, base);
        }
        assert_eq!(defect(&h.conj()).d, base);
        assert_eq!(defect(&h.transpose()).d, base);
        assert_eq!(defect(&h.adjoint()).d, base);
    }
}

#[test]
fn fourier_defect_closed_form() {
    assert_eq!(fourier_defect(6).unwrap(), 4);
    assert_eq!(fourier_defect(4).unwrap(), 1);
    for p in [2u64, 3, 5, 7, 11, 13] {
        assert_eq!(fourier_defect(p).unwrap(), 0);
    }
    assert!(fourier_defect(1).is_err());
    // Cross-validate against the numerical defect.
    for n in 2..=12u64 {
        assert_eq!(
            fourier_defect(n).unwrap(),
            defect(&fourier(n as usize)).d,
            "closed form disagrees at n = {n}"
        );
    }
}

#[test]
fn haagerup_sets_of_order_four() {
    let hs = haagerup_set(&h4(), 1e-7);
    assert!(same_value_set(&hs, &[c(1.0, 0.0), c(-1.0, 0.0)], 1e-9));
    let f4 = haagerup_set(&fourier(4), 1e-7);
    assert!(same_value_set(
        &f4,
        &[c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)],
        1e-9
    ));
    let f1 = haagerup_set(&fourier(1), 1e-7);
    assert!(same_value_set(&f1, &[c(1.0, 0.0)], 1e-9));
}

#[test]
fn haagerup_set_is_equivalence_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = fourier(6);
    let base = haagerup_set(&h, 1e-7);
    for _ in 0..3 {
        let g = random_monomial_scramble(&h, &mut rng);
        assert!(same_value_set(&base, &haagerup_set(&g, 1e-7), 1e-6));
    }
}

#[test]
fn fingerprint_of_order_eight_sylvester() {
    let h8 = kronecker(&h4(), &fourier(2));
    let fp = fingerprint(&h8, 4);
    let expected = [
        vec![(0.0, 336u64), (2.0, 448)],
        vec![(0.0, 1344), (4.0, 1792)],
        vec![(0.0, 1428), (8.0, 3136), (16.0, 336)],
    ];
    assert_eq!(fp.per_degree.len(), 3);
    for (got, want) in fp.per_degree.iter().zip(&expected) {
        assert_eq!(got.len(), want.len());
        for (&(v, m), &(wv, wm)) in got.iter().zip(want) {
            assert!((v - wv).abs() < 1e-8, "value {v} vs {wv}");
            assert_eq!(m, wm);
        }
    }
    // Multiplicity sums are C(8,d)² for d = 2,3,4.
    for (k, deg) in fp.per_degree.iter().enumerate() {
        let d = k + 2;
        let total: u64 = deg.iter().map(|&(_, m)| m).sum();
        assert_eq!(total, binomial(8, d) * binomial(8, d));
    }
    assert_eq!(fp.vanishing_count(4, 1e-7), Some(1428));
}

#[test]
fn fingerprint_degenerate_small_order() {
    let fp = fingerprint(&fourier(2), 4);
    assert!(fp.per_degree.is_empty());
}

#[test]
fn fingerprint_is_equivalence_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let h = fourier(6);
    let base = fingerprint(&h, 3);
    for _ in 0..2 {
        let g = random_monomial_scramble(&h, &mut rng);
        assert!(base.matches(&fingerprint(&g, 3), 1e-6));
    }
}

#[test]
fn rank_profile_small_cases() {
    let rp = rank_profile(&h4());
    let slot = &rp.slots.iter().find(|(s, _)| *s == (2, 2)).unwrap().1;
    assert_eq!(slot, &vec![(1, 12), (2, 24)]);
    let rp4 = rank_profile_slot(&fourier(4), 2, 2);
    assert_eq!(rp4, vec![(1, 4), (2, 32)]);
    let j6 = CMat::ones(6);
    assert_eq!(rank_profile_slot(&j6, 2, 2), vec![(1, 225)]);
    // Multiplicity sums are C(n,j)·C(n,k).
    for ((j, k), hist) in &rp.slots {
        let total: u64 = hist.iter().map(|&(_, m)| m).sum();
        assert_eq!(total, binomial(4, *j) * binomial(4, *k));
    }
}

#[test]
fn zq_rank_basics() {
    // The log of F2 factors as (0,1)ᵀ·(0,1) mod 2, so its rank is 1.
    let f2 = BLog::from_rows(2, &[&[0, 0], &[0, 1]]);
    assert_eq!(zq_rank(&f2, 1 << 30), ZqRank::Exact(1));
    // Any Fourier log is the outer product (0..n-1)·(0..n-1)ᵀ, hence rank 1.
    let f3 = cmat_to_blog(&fourier(3), 3, 1e-9).unwrap();
    assert_eq!(zq_rank(&f3, 1 << 30), ZqRank::Exact(1));
    // The log of F2⊗F2 has three distinct nonzero rows over Z_2, so no single
    // row generates them all, while two rows do.
    let h4log = cmat_to_blog(&kronecker(&fourier(2), &fourier(2)), 2, 1e-9).unwrap();
    assert_eq!(zq_rank(&h4log, 1 << 30), ZqRank::Exact(2));
    let zero = BLog::from_rows(4, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    assert_eq!(zq_rank(&zero, 1 << 30), ZqRank::Exact(1));
    // Tiny budget yields an explicit lower-bound answer.
    let f4 = cmat_to_blog(&fourier(4), 4, 1e-9).unwrap();
    assert!(matches!(zq_rank(&f4, 1), ZqRank::Unknown { at_least: 1 }));
}

#[test]
fn zq_rank_of_factored_butson() {
    // A BH(6,8) built as a product of a 6×3 and 3×6 exponent matrix has
    // Z_8-rank at most 3; its rows are not spanned by fewer.
    let s = [
        [0u32, 2, 4, 1, 5, 6],
        [0, 6, 3, 4, 2, 7],
        [0, 6, 7, 2, 4, 3],
    ];
    let qt = [
        [0u32, 0, 1, 0, 0, 7],
        [0, 1, 0, 1, 0, 1],
        [0, 1, 0, 0, 1, 1],
    ];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 0..6 {
        let mut row = Vec::new();
        for j in 0..6 {
            let mut acc = 0u32;
            for k in 0..3 {
                acc += qt[k][i] * s[k][j];
            }
            row.push(acc % 8);
        }
        rows.push(row);
    }
    let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
    let l = BLog::from_rows(8, &refs);
    // It is a Butson matrix:
    assert!(blog_to_cmat(&l).is_hadamard(1e-10).pass);
    match zq_rank(&l, 1 << 34) {
        ZqRank::Exact(r) => assert!(r <= 3, "rank {r} exceeds factorization bound"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn equivalence_of_fourier_four_forms() {
    // F2⊗F2 and F4 are separated by their Haagerup sets.
    let res = are_equivalent(&h4(), &fourier(4), DEFAULT_BUDGET);
    assert!(res.is_inequivalent(), "got {res:?}");
    // F6 and F2⊗F3 are equivalent.
    let res = are_equivalent(&fourier(6), &kronecker(&fourier(2), &fourier(3)), DEFAULT_BUDGET);
    match res {
        EquivResult::Equivalent(w) => {
            assert!(w.verify(&fourier(6), &kronecker(&fourier(2), &fourier(3)), 1e-8));
        }
        other => panic!("expected equivalence, got {other:?}"),
    }
}

#[test]
fn equivalence_finds_witness_for_scrambles() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for h in [fourier(6), kronecker(&h4(), &fourier(2)), fourier(7)] {
        for _ in 0..2 {
            let k = random_monomial_scramble(&h, &mut rng);
            match are_equivalent(&h, &k, DEFAULT_BUDGET) {
                EquivResult::Equivalent(w) => assert!(w.verify(&h, &k, 1e-8)),
                other => panic!("expected witness for scramble, got {other:?}"),
            }
        }
    }
}

#[test]
fn equivalence_distinguishes_order_eight_products() {
    // F8 and F2⊗F4 have different Haagerup sets (8th vs 4th roots).
    let g = kronecker(&fourier(2), &fourier(4));
    let res = are_equivalent(&fourier(8), &g, DEFAULT_BUDGET);
    assert!(res.is_inequivalent(), "F8 vs F2⊗F4: {res:?}");
}

#[test]
fn act_flags_of_real_matrix() {
    let flags = act_classify(&h4(), DEFAULT_BUDGET);
    assert_eq!(flags.conjugate, Some(true));
    assert_eq!(flags.adjoint, Some(true));
    assert_eq!(flags.transpose, Some(true));
}

#[test]
fn minor_modulus_agrees_with_full_determinant() {
    let f = fourier(5);
    let idx: Vec<usize> = (0..5).collect();
    assert!((minor_modulus(&f, &idx, &idx) - f.det().norm()).abs() < 1e-8);
}
