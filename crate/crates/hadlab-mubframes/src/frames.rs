//! Equiangular tight frames through signature matrices: self-adjoint
//! unimodular-off-diagonal matrices with two eigenvalues, their translation
//! to and from Hadamard matrices, constructions from skew difference-set
//! designs, and the Pauli-orbit frame in dimension 8.

use crate::MubFrameError;
use hadlab_core::{CMat, C64};
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// A signature matrix: self-adjoint with zero diagonal and unimodular
/// off-diagonal entries, satisfying Q^2 = (n-1) I + mu Q for a real mu.
/// Such a Q has exactly two eigenvalues and encodes an equiangular tight
/// frame of n vectors.
#[derive(Clone, Debug)]
pub struct SignatureMatrix {
    pub q: CMat,
    pub mu: f64,
}

impl SignatureMatrix {
    /// Validates the structural conditions and recovers mu from the
    /// quadratic relation.
    pub fn new(q: CMat, tol: f64) -> Result<SignatureMatrix, MubFrameError> {
        let n = q.order();
        if n < 2 {
            return Err(MubFrameError::Domain("order must be at least 2".into()));
        }
        for i in 0..n {
            if q[(i, i)].norm() > tol {
                return Err(MubFrameError::Domain("diagonal is not zero".into()));
            }
            for j in 0..n {
                if j != i && (q[(i, j)].norm() - 1.0).abs() > tol {
                    return Err(MubFrameError::Domain(
                        "off-diagonal entries are not unimodular".into(),
                    ));
                }
                if (q[(i, j)] - q[(j, i)].conj()).norm() > tol {
                    return Err(MubFrameError::Domain("matrix is not self-adjoint".into()));
                }
            }
        }
        let q2 = q.matmul(&q);
        let mu = (q2[(0, 1)] / q[(0, 1)]).re;
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j {
                    c((n - 1) as f64, 0.0)
                } else {
                    q[(i, j)].scale(mu)
                };
                if (q2[(i, j)] - expect).norm() > tol * n as f64 {
                    return Err(MubFrameError::Domain(
                        "matrix does not satisfy the two-eigenvalue relation".into(),
                    ));
                }
            }
        }
        Ok(SignatureMatrix { q, mu })
    }

    pub fn order(&self) -> usize {
        self.q.order()
    }

    /// The negated signature matrix, encoding the complementary frame of n
    /// vectors in dimension n - k.
    pub fn negate(&self) -> SignatureMatrix {
        SignatureMatrix {
            q: self.q.scale(c(-1.0, 0.0)),
            mu: -self.mu,
        }
    }
}

/// Dimension k of the equiangular tight frame of n vectors encoded by a
/// signature matrix of order n with parameter mu.
pub fn frame_dimension(n: usize, mu: f64) -> f64 {
    let nf = n as f64;
    nf / 2.0 - mu * nf / (2.0 * (4.0 * (nf - 1.0) + mu * mu).sqrt())
}

/// Lifts a signature matrix with |mu| <= 2 to a Hadamard matrix
/// H = Q + lambda I with lambda = -mu/2 + i sqrt(1 - mu^2/4).
pub fn signature_to_hadamard(sig: &SignatureMatrix) -> Result<CMat, MubFrameError> {
    if sig.mu.abs() > 2.0 + 1e-9 {
        return Err(MubFrameError::Domain(format!(
            "|mu| = {} exceeds 2; the diagonal shift cannot be unimodular",
            sig.mu.abs()
        )));
    }
    let lambda = c(
        -sig.mu / 2.0,
        (1.0 - sig.mu * sig.mu / 4.0).max(0.0).sqrt(),
    );
    let n = sig.order();
    Ok(CMat::from_fn(n, |i, j| {
        if i == j {
            lambda
        } else {
            sig.q[(i, j)]
        }
    }))
}

/// Recovers a signature matrix from a Hadamard matrix with constant
/// diagonal, by subtracting the diagonal entry.
pub fn hadamard_to_signature(h: &CMat, tol: f64) -> Result<SignatureMatrix, MubFrameError> {
    let n = h.order();
    let lambda = h[(0, 0)];
    for i in 1..n {
        if (h[(i, i)] - lambda).norm() > tol {
            return Err(MubFrameError::Domain("diagonal is not constant".into()));
        }
    }
    let q = CMat::from_fn(n, |i, j| if i == j { c(0.0, 0.0) } else { h[(i, j)] });
    SignatureMatrix::new(q, tol)
}

/// Gram matrix of the unit-vector tight frame encoded by the signature
/// matrix: (k/n) I + sqrt(k(n-k) / (n^2 (n-1))) Q.
pub fn signature_gram(sig: &SignatureMatrix) -> CMat {
    let n = sig.order();
    let nf = n as f64;
    let k = frame_dimension(n, sig.mu);
    let off = (k * (nf - k) / (nf * nf * (nf - 1.0))).sqrt();
    CMat::from_fn(n, |i, j| {
        if i == j {
            c(k / nf, 0.0)
        } else {
            sig.q[(i, j)].scale(off)
        }
    })
}

/// The order-9 cube-root signature matrix with mu = -2, encoding a tight
/// frame of 9 vectors in dimension 6; Q + I is Hadamard.
pub fn q9() -> SignatureMatrix {
    // -1 marks a zero entry; otherwise the power of the primitive cube root.
    const E: [[i8; 9]; 9] = [
        [-1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 1, 1, 1, 2, 2, 2],
        [0, 0, -1, 2, 2, 2, 1, 1, 1],
        [0, 2, 1, -1, 1, 2, 0, 1, 2],
        [0, 2, 1, 2, -1, 1, 1, 2, 0],
        [0, 2, 1, 1, 2, -1, 2, 0, 1],
        [0, 1, 2, 0, 2, 1, -1, 2, 1],
        [0, 1, 2, 2, 1, 0, 1, -1, 2],
        [0, 1, 2, 1, 0, 2, 2, 1, -1],
    ];
    let q = CMat::from_fn(9, |i, j| match E[i][j] {
        -1 => c(0.0, 0.0),
        e => C64::from_polar(1.0, TAU * e as f64 / 3.0),
    });
    SignatureMatrix::new(q, 1e-12).expect("the cube-root signature matrix is exact")
}

/// The quadratic-residue tournament matrix of prime order p = 3 (mod 4):
/// U_{ij} = 1 exactly when j - i is a nonzero square mod p.
pub fn paley_design(p: u64) -> Result<Vec<Vec<u8>>, MubFrameError> {
    if p % 4 != 3 || !is_prime_small(p) {
        return Err(MubFrameError::Domain(format!(
            "{p} is not a prime congruent to 3 mod 4"
        )));
    }
    let mut is_qr = vec![false; p as usize];
    for a in 1..p {
        is_qr[((a * a) % p) as usize] = true;
    }
    let n = p as usize;
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| u8::from(is_qr[(j + n - i) % n]))
                .collect()
        })
        .collect())
}

fn is_prime_small(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Whether a 0/1 matrix of order n = 4m - 1 is a skew design: U + U^T + I is
/// all ones and U U^T = m I + (m - 1) J.
pub fn is_skew_design(u: &[Vec<u8>]) -> bool {
    let n = u.len();
    if n % 4 != 3 || u.iter().any(|row| row.len() != n) {
        return false;
    }
    let m = (n + 1) / 4;
    for i in 0..n {
        if u[i][i] != 0 {
            return false;
        }
        for j in 0..n {
            if i != j && u[i][j] + u[j][i] != 1 {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let dot: usize = (0..n).map(|l| (u[i][l] * u[j][l]) as usize).sum();
            let expect = if i == j { m + (m - 1) } else { m - 1 };
            if dot != expect {
                return false;
            }
        }
    }
    true
}

/// Converts a skew design of order n = 4m - 1 into a signature matrix via
/// the unimodular weight a = -1 + 1/(2m) + i sqrt(4m - 1)/(2m): the entry is
/// sqrt(a) on the design support and its conjugate on the transpose support.
pub fn skew_to_signature(u: &[Vec<u8>]) -> Result<SignatureMatrix, MubFrameError> {
    if !is_skew_design(u) {
        return Err(MubFrameError::Domain("not a skew design".into()));
    }
    let n = u.len();
    let m = (n + 1) as f64 / 4.0;
    let a = c(-1.0 + 1.0 / (2.0 * m), (4.0 * m - 1.0).sqrt() / (2.0 * m));
    let lambda = a.sqrt();
    let q = CMat::from_fn(n, |i, j| {
        if i == j {
            c(0.0, 0.0)
        } else if u[i][j] == 1 {
            lambda.conj()
        } else {
            lambda
        }
    });
    SignatureMatrix::new(q, 1e-9)
}

fn pauli_group() -> [[[C64; 2]; 2]; 4] {
    let o = c(1.0, 0.0);
    let z = c(0.0, 0.0);
    let i = c(0.0, 1.0);
    [
        [[o, z], [z, o]],
        [[z, o], [o, z]],
        [[z, -i], [i, z]],
        [[o, z], [z, -o]],
    ]
}

/// The 64-vector equiangular tight frame in dimension 8: the orbit of a
/// fiducial vector under triple tensor products of Pauli matrices.  Returns
/// the vectors (squared norm 1/8) and their Gram matrix, whose off-diagonal
/// entries all have modulus 1/24.
pub fn hoggar() -> (Vec<Vec<C64>>, CMat) {
    let tau = c(1.0, 1.0).unscale(2f64.sqrt());
    let s = 3f64.sqrt() / 12.0;
    let phi: Vec<C64> = vec![
        c(0.0, 0.0),
        c(0.0, 0.0),
        tau,
        tau.conj(),
        tau,
        -tau,
        c(0.0, 0.0),
        c(2f64.sqrt(), 0.0),
    ]
    .into_iter()
    .map(|v| v.scale(s))
    .collect();
    let g = pauli_group();
    let mut vectors = Vec::with_capacity(64);
    for a in 0..4 {
        for b in 0..4 {
            for d in 0..4 {
                let mut v = vec![c(0.0, 0.0); 8];
                for (row, out) in v.iter_mut().enumerate() {
                    let (r0, r1, r2) = (row >> 2 & 1, row >> 1 & 1, row & 1);
                    for (col, phil) in phi.iter().enumerate() {
                        let (c0, c1, c2) = (col >> 2 & 1, col >> 1 & 1, col & 1);
                        *out += g[a][r0][c0] * g[b][r1][c1] * g[d][r2][c2] * phil;
                    }
                }
                vectors.push(v);
            }
        }
    }
    let gram = CMat::from_fn(64, |i, j| {
        vectors[j]
            .iter()
            .zip(&vectors[i])
            .map(|(x, y)| x.conj() * y)
            .sum()
    });
    (vectors, gram)
}
