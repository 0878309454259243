//! Equiangular line packings in real Euclidean space, built from real
//! unbiased bases by rescaling and appending coordinates.

use crate::MubFrameError;

/// A set of unit vectors in R^dim spanning pairwise equiangular lines with
/// common angle arccos(cosine).
#[derive(Clone, Debug)]
pub struct LineSet {
    pub dim: usize,
    pub vectors: Vec<Vec<f64>>,
    pub cosine: f64,
}

impl LineSet {
    /// Largest deviation from unit norm and from the common |cosine| across
    /// all pairs.
    pub fn verify(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, v) in self.vectors.iter().enumerate() {
            let nrm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            worst = worst.max((nrm - 1.0).abs());
            for w in &self.vectors[..i] {
                let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                worst = worst.max((dot.abs() - self.cosine).abs());
            }
        }
        worst
    }

    /// Drops the last coordinate and every vector supported on it, then
    /// renormalizes; the surviving vectors stay equiangular with the same
    /// cosine in one dimension fewer.
    pub fn truncate(&self) -> LineSet {
        let d = self.dim - 1;
        let vectors: Vec<Vec<f64>> = self
            .vectors
            .iter()
            .filter(|v| v[d].abs() < 1e-12)
            .map(|v| {
                let head = &v[..d];
                let nrm: f64 = head.iter().map(|x| x * x).sum::<f64>().sqrt();
                head.iter().map(|x| x / nrm).collect()
            })
            .collect();
        LineSet {
            dim: d,
            vectors,
            cosine: self.cosine,
        }
    }
}

/// Whether two real orthonormal bases (rows) are unbiased: all cross inner
/// products have modulus 1/sqrt(d).
pub fn is_real_unbiased(b1: &[Vec<f64>], b2: &[Vec<f64>], tol: f64) -> bool {
    let d = b1.len();
    if b2.len() != d || b1.iter().chain(b2).any(|v| v.len() != d) {
        return false;
    }
    let target = 1.0 / (d as f64).sqrt();
    b1.iter().all(|v| {
        b2.iter().all(|w| {
            let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
            (dot.abs() - target).abs() < tol
        })
    })
}

/// Three pairwise real unbiased orthonormal bases of R^4: the identity, the
/// rescaled real Hadamard matrix of order 4, and a sign twist of it.
pub fn real_mubs_dim4() -> Vec<Vec<Vec<f64>>> {
    let ident: Vec<Vec<f64>> = (0..4)
        .map(|i| (0..4).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let h: Vec<Vec<f64>> = vec![
        vec![1.0, 1.0, 1.0, 1.0],
        vec![1.0, 1.0, -1.0, -1.0],
        vec![1.0, -1.0, 1.0, -1.0],
        vec![1.0, -1.0, -1.0, 1.0],
    ]
    .into_iter()
    .map(|r| r.into_iter().map(|x| x / 2.0).collect())
    .collect();
    let k: Vec<Vec<f64>> = vec![
        vec![1.0, -1.0, -1.0, -1.0],
        vec![1.0, -1.0, 1.0, 1.0],
        vec![1.0, 1.0, -1.0, 1.0],
        vec![1.0, 1.0, 1.0, -1.0],
    ]
    .into_iter()
    .map(|r| r.into_iter().map(|x| x / 2.0).collect())
    .collect();
    vec![ident, h, k]
}

/// Converts k >= 2 pairwise unbiased orthonormal bases of R^d into d * k
/// equiangular unit lines in R^{d + k} with cosine 1/(sqrt(d) + 1): every
/// vector is shrunk by a common factor and the i-th basis gains a bump in
/// the i-th appended coordinate.
pub fn equiangular_from_mubs(bases: &[Vec<Vec<f64>>]) -> Result<LineSet, MubFrameError> {
    let k = bases.len();
    if k < 2 {
        return Err(MubFrameError::Domain(
            "need at least two unbiased bases".into(),
        ));
    }
    let d = bases[0].len();
    for b in bases {
        if b.len() != d || b.iter().any(|v| v.len() != d) {
            return Err(MubFrameError::Domain("basis dimension mismatch".into()));
        }
    }
    for (i, b1) in bases.iter().enumerate() {
        for b2 in &bases[..i] {
            if !is_real_unbiased(b1, b2, 1e-9) {
                return Err(MubFrameError::Domain("bases are not unbiased".into()));
            }
        }
    }
    let s = (d as f64).sqrt();
    let a = (s / (s + 1.0)).sqrt();
    let bump = 1.0 / (s + 1.0).sqrt();
    let mut vectors = Vec::with_capacity(d * k);
    for (i, b) in bases.iter().enumerate() {
        for v in b {
            let mut w: Vec<f64> = v.iter().map(|x| a * x).collect();
            w.extend(std::iter::repeat(0.0).take(k));
            w[d + i] = bump;
            vectors.push(w);
        }
    }
    Ok(LineSet {
        dim: d + k,
        vectors,
        cosine: 1.0 / (s + 1.0),
    })
}

fn exact_order(t: u32) -> usize {
    3 * (1usize << (2 * t - 1)) + 1
}

fn exact_count(t: u32) -> usize {
    (1usize << (2 * t)) * ((1usize << (2 * t - 1)) + 1)
}

/// A lower bound on the maximum number of equiangular lines in R^n, from the
/// unbiased-basis construction at the orders n = 3 * 2^(2t-1) + 1 and
/// coordinate truncation in between.
pub fn line_lower_bound(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    // Exact-match orders get the full construction of 2(n-1)(n+2)/9 lines.
    for t in 1.. {
        match exact_order(t).cmp(&n) {
            std::cmp::Ordering::Equal => return 2 * (n - 1) * (n + 2) / 9,
            std::cmp::Ordering::Greater => break,
            std::cmp::Ordering::Less => {}
        }
    }
    if n <= 25 {
        return n;
    }
    // 3 * 2^(2t-1) + 1 < n <= 3 * 2^(2t+1) + 1 for some t >= 2.
    let mut t = 2;
    while 3 * (1usize << (2 * t + 1)) + 1 < n {
        t += 1;
    }
    let four_t1 = 1usize << (2 * (t + 1));
    if n <= four_t1 + (1usize << (2 * t - 3)) {
        exact_count(t as u32)
    } else {
        four_t1 * (n - four_t1)
    }
}
