use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::matrix::{CMat, C64};

/// Generalized tensor product: `ms` holds v Hadamard matrices of order k,
/// `ns` holds k Hadamard matrices of order v.  The (i,j)-th v×v block of the
/// result is Diag([M_1]_ij, …, [M_v]_ij)·N_j, giving a Hadamard matrix of
/// order vk.
pub fn generalized_tensor(ms: &[CMat], ns: &[CMat]) -> Result<CMat, CoreError> {
    let v = ms.len();
    let k = ns.len();
    if v == 0 || k == 0 {
        return Err(CoreError::DimensionMismatch("empty factor list".into()));
    }
    for m in ms {
        if m.order() != k {
            return Err(CoreError::DimensionMismatch(format!(
                "expected {} matrices of order {}, got order {}",
                v,
                k,
                m.order()
            )));
        }
    }
    for nmat in ns {
        if nmat.order() != v {
            return Err(CoreError::DimensionMismatch(format!(
                "expected {} matrices of order {}, got order {}",
                k,
                v,
                nmat.order()
            )));
        }
    }
    let mut out = CMat::zeros(v * k);
    for i in 0..k {
        for j in 0..k {
            for a in 0..v {
                let d = ms[a][(i, j)];
                for b in 0..v {
                    out[(i * v + a, j * v + b)] = d * ns[j][(a, b)];
                }
            }
        }
    }
    Ok(out)
}

/// Diță's construction: the special case of the generalized tensor product
/// with all k×k factors equal to `m`, plus free diagonal phases `ds[j]`
/// applied to each v×v factor (block (i,j) = [M]_ij·Diag(ds[j])·N_j).
pub fn dita(m: &CMat, ns: &[CMat], ds: &[Vec<C64>]) -> Result<CMat, CoreError> {
    let k = m.order();
    if ns.len() != k || ds.len() != k {
        return Err(CoreError::DimensionMismatch(format!(
            "need {k} inner matrices and diagonals"
        )));
    }
    let phased: Vec<CMat> = ns
        .iter()
        .zip(ds)
        .map(|(nmat, d)| {
            let v = nmat.order();
            assert_eq!(d.len(), v, "dita: diagonal length mismatch");
            CMat::from_fn(v, |a, b| d[a] * nmat[(a, b)])
        })
        .collect();
    let ms = vec![m.clone(); phased[0].order()];
    generalized_tensor(&ms, &phased)
}

/// Decide whether two Kronecker products of Fourier matrices are equivalent.
///
/// Two order sequences are connected by the moves permute / merge-coprime /
/// split-coprime exactly when, for every prime p, the multisets of p-power
/// parts of their entries coincide.
pub fn fourier_product_equivalent(seq1: &[u64], seq2: &[u64]) -> Result<bool, CoreError> {
    let p1: u64 = seq1.iter().product();
    let p2: u64 = seq2.iter().product();
    if p1 != p2 {
        return Err(CoreError::ProductMismatch(p1, p2));
    }
    Ok(prime_power_multiset(seq1) == prime_power_multiset(seq2))
}

/// For each prime p, the sorted multiset of p-power parts appearing among the
/// sequence entries (parts equal to 1 are dropped).
fn prime_power_multiset(seq: &[u64]) -> BTreeMap<u64, Vec<u64>> {
    let mut map: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &x in seq {
        assert!(x >= 2, "fourier factors must be at least 2");
        for (p, a) in factorize(x) {
            map.entry(p).or_default().push(p.pow(a));
        }
    }
    for v in map.values_mut() {
        v.sort_unstable();
    }
    map
}

/// Trial-division factorization (inputs here are small).
pub fn factorize(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= x {
        if x % p == 0 {
            let mut a = 0;
            while x % p == 0 {
                x /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}
