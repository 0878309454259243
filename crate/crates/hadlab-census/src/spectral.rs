//! Block constructions that lift a root-of-unity Hadamard matrix given by a
//! small-rank exponent factorization L = Q S (mod q) to larger orders,
//! preserving a small Z-rank, together with the published data sets they
//! apply to.

use crate::CensusError;
use hadlab_core::{blog_to_cmat, BLog};

type IntMat = Vec<Vec<u32>>;

fn dims(m: &IntMat) -> (usize, usize) {
    (m.len(), m.first().map_or(0, Vec::len))
}

fn product_mod(qm: &IntMat, sm: &IntMat, modulus: u32) -> Result<IntMat, CensusError> {
    let (n, r) = dims(qm);
    let (r2, n2) = dims(sm);
    if r != r2 || n != n2 || n == 0 {
        return Err(CensusError::Domain(format!(
            "factor shapes {n}x{r} and {r2}x{n2} do not compose to a square matrix"
        )));
    }
    Ok((0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    (0..r)
                        .map(|k| qm[a][k] * sm[k][b])
                        .sum::<u32>()
                        % modulus
                })
                .collect()
        })
        .collect())
}

fn check_hadamard(l: &BLog) -> Result<(), CensusError> {
    let rep = blog_to_cmat(l).is_hadamard(1e-8);
    if !rep.pass {
        return Err(CensusError::Domain(format!(
            "exponent product does not evaluate to a Hadamard matrix \
             (row defect {:.2e}, entry defect {:.2e})",
            rep.max_row_defect, rep.max_unimod_defect
        )));
    }
    Ok(())
}

/// Lifts a factorization L = Q S (mod q) of an order-n matrix of q-th roots
/// to an order-mn matrix of mq-th roots: block (i, j) of the output exponent
/// matrix is m·QS + j·(first column of Q broadcast) + i·j·q  (mod mq).
/// The rank of the lifted exponent matrix stays at most the rank of L.
pub fn spectral_lift(qm: &IntMat, sm: &IntMat, m: u32, q: u32) -> Result<BLog, CensusError> {
    if m == 0 || q == 0 {
        return Err(CensusError::Domain("m and q must be positive".into()));
    }
    let qs = product_mod(qm, sm, q)?;
    let n = qs.len();
    check_hadamard(&BLog::new(n, q, qs.concat())?)?;
    let mq = m * q;
    let mn = m as usize * n;
    let mut entries = vec![0u32; mn * mn];
    for bi in 0..m as usize {
        for bj in 0..m as usize {
            for a in 0..n {
                for b in 0..n {
                    let v = (m * qs[a][b] + bj as u32 * qm[a][0]
                        + (bi as u32 * bj as u32 % m) * q)
                        % mq;
                    entries[(bi * n + a) * mn + bj * n + b] = v;
                }
            }
        }
    }
    let out = BLog::new(mn, mq, entries)?;
    check_hadamard(&out)?;
    Ok(out)
}

/// Doubling branch available when q is even and the first row of S is even:
/// the order-2n exponent matrix [[QS, QS + c], [QS, QS + c + q/2]] with
/// c[a][b] = Q[a][0], again over q-th roots, with the Z-rank preserved.
pub fn spectral_double(qm: &IntMat, sm: &IntMat, q: u32) -> Result<BLog, CensusError> {
    if q % 2 != 0 {
        return Err(CensusError::Domain("root degree must be even".into()));
    }
    if sm.first().is_some_and(|row| row.iter().any(|&v| v % 2 != 0)) {
        return Err(CensusError::Domain(
            "first row of the right factor must be even".into(),
        ));
    }
    let qs = product_mod(qm, sm, q)?;
    let n = qs.len();
    check_hadamard(&BLog::new(n, q, qs.concat())?)?;
    let mn = 2 * n;
    let mut entries = vec![0u32; mn * mn];
    for a in 0..n {
        for b in 0..n {
            let base = qs[a][b];
            let shift = qm[a][0];
            entries[a * mn + b] = base;
            entries[a * mn + n + b] = (base + shift) % q;
            entries[(n + a) * mn + b] = base;
            entries[(n + a) * mn + n + b] = (base + shift + q / 2) % q;
        }
    }
    let out = BLog::new(mn, q, entries)?;
    check_hadamard(&out)?;
    Ok(out)
}

fn transpose(m: &[Vec<u32>]) -> IntMat {
    let (r, c) = dims(&m.to_vec());
    (0..c).map(|j| (0..r).map(|i| m[i][j]).collect()).collect()
}

/// The published order-6 matrix of cube roots whose index set is spectral
/// but cannot tile: the exponent matrix Q (its right factor is the
/// identity).
pub fn tao_bh6_3() -> BLog {
    BLog::from_rows(
        3,
        &[
            &[0, 0, 0, 0, 0, 0][..],
            &[0, 0, 1, 2, 2, 1],
            &[0, 1, 0, 1, 2, 2],
            &[0, 2, 1, 0, 1, 2],
            &[0, 2, 2, 1, 0, 1],
            &[0, 1, 2, 2, 1, 0],
        ],
    )
}

/// The rank-3 factorization (Q, S) of an order-6 matrix of eighth roots.
pub fn km_bh6_8() -> (IntMat, IntMat) {
    let s: IntMat = vec![
        vec![0, 2, 4, 1, 5, 6],
        vec![0, 6, 3, 4, 2, 7],
        vec![0, 6, 7, 2, 4, 3],
    ];
    let qt: IntMat = vec![
        vec![0, 0, 1, 0, 0, 7],
        vec![0, 1, 0, 1, 0, 1],
        vec![0, 1, 0, 0, 1, 1],
    ];
    (transpose(&qt), s)
}

/// Alternative factorization (Q', S') of the same order-6 matrix with an
/// even first row in S', enabling the doubling branch (order 12, rank 3).
pub fn km_doubling_factors() -> (IntMat, IntMat) {
    let s: IntMat = vec![
        vec![0, 4, 2, 6, 6, 2],
        vec![0, 2, 4, 1, 5, 6],
        vec![0, 6, 3, 4, 2, 7],
    ];
    let qt: IntMat = vec![
        vec![0, 1, 0, 0, 1, 1],
        vec![0, 0, 1, 0, 0, 7],
        vec![0, 0, 0, 1, 7, 0],
    ];
    (transpose(&qt), s)
}

/// Rank-3 factorization of an order-12 matrix of eighth roots whose S has an
/// even first row; doubling it yields an order-24 matrix of rank 3.
pub fn example12_qs() -> (IntMat, IntMat) {
    let s: IntMat = vec![
        vec![0, 2, 4, 2, 6, 6, 0, 2, 4, 2, 6, 6],
        vec![0, 4, 2, 6, 7, 3, 1, 5, 3, 7, 0, 4],
        vec![0, 5, 6, 1, 4, 2, 0, 5, 6, 1, 4, 2],
    ];
    let qt: IntMat = vec![
        vec![0, 0, 1, 1, 0, 1, 2, 2, 3, 3, 2, 3],
        vec![0, 1, 0, 3, 0, 0, 4, 5, 4, 7, 4, 4],
        vec![0, 0, 0, 0, 1, 3, 4, 4, 4, 4, 5, 7],
    ];
    (transpose(&qt), s)
}
