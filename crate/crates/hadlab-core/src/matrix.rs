use std::ops::{Index, IndexMut};

use crate::error::CoreError;

pub type C64 = num_complex::Complex<f64>;

/// Default unimodularity tolerance (absolute per entry).
pub const TOL_UNIMOD: f64 = 1e-10;
/// Default orthogonality tolerance (scaled by the order in `is_hadamard`).
pub const TOL_ORTHO: f64 = 1e-10;

/// Dense square complex matrix, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    n: usize,
    data: Vec<C64>,
}

/// Outcome of a Hadamard verification.
#[derive(Clone, Copy, Debug)]
pub struct VerifyReport {
    /// Largest |⟨row_i,row_j⟩| over i≠j together with |⟨row_i,row_i⟩−n|.
    pub max_row_defect: f64,
    /// Largest | |h_ij| − 1 |.
    pub max_unimod_defect: f64,
    pub pass: bool,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// All-ones matrix of order n.
    pub fn ones(n: usize) -> Self {
        CMat { n, data: vec![C64::new(1.0, 0.0); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self, CoreError> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(CoreError::NotSquare { rows: n, cols: r.len() });
            }
        }
        Ok(CMat { n, data: rows.into_iter().flatten().collect() })
    }

    /// Build from a closure over (row, col).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Circulant matrix induced by its first row: C[i][j] = x[(j-i) mod n].
    pub fn circulant(x: &[C64]) -> Self {
        let n = x.len();
        Self::from_fn(n, |i, j| x[(j + n - i) % n])
    }

    pub fn diag(d: &[C64]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = d[i];
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[C64]> {
        self.data.chunks(self.n)
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn conj(&self) -> Self {
        CMat { n: self.n, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        CMat { n: self.n, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMat {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMat {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matmul: order mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }

    /// ⟨row_i, row_j⟩ = Σ_k h_ik conj(h_jk).
    pub fn row_inner(&self, i: usize, j: usize) -> C64 {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    /// Max-norm distance to another matrix.
    pub fn max_dist(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus of self*self^adj − n·I: a direct orthogonality residual.
    pub fn gram_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let ip = self.row_inner(i, j);
                let target = if i == j { C64::new(n as f64, 0.0) } else { C64::new(0.0, 0.0) };
                worst = worst.max((ip - target).norm());
            }
        }
        worst
    }

    /// Largest deviation of entry moduli from 1.
    pub fn unimod_defect(&self) -> f64 {
        self.data
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Verify the Hadamard property: unimodular entries and pairwise
    /// orthogonal rows.  The orthogonality tolerance is scaled by the order.
    pub fn is_hadamard(&self, tol: f64) -> VerifyReport {
        let row = self.gram_defect();
        let uni = self.unimod_defect();
        VerifyReport {
            max_row_defect: row,
            max_unimod_defect: uni,
            pass: uni <= tol && row <= tol * self.n as f64,
        }
    }

    /// Dephase with the (1,1) entry as pivot.  Returns (D1·M·D2, d1, d2) where
    /// D1 = Diag(d1), D2 = Diag(d2) make the first row and column all ones.
    pub fn dephase(&self) -> Result<(Self, Vec<C64>, Vec<C64>), CoreError> {
        let n = self.n;
        for i in 0..n {
            if self[(i, 0)].norm() < 1e-14 {
                return Err(CoreError::ZeroPivot { row: i, col: 0 });
            }
            if self[(0, i)].norm() < 1e-14 {
                return Err(CoreError::ZeroPivot { row: 0, col: i });
            }
        }
        // Row phases make the first column all ones; then column phases make
        // the (already scaled) first row all ones.
        let d1: Vec<C64> = (0..n)
            .map(|i| {
                let z = self[(i, 0)];
                z.conj() / z.norm()
            })
            .collect();
        let d2: Vec<C64> = (0..n)
            .map(|j| {
                let z = d1[0] * self[(0, j)];
                z.conj() / z.norm()
            })
            .collect();
        let out = Self::from_fn(n, |i, j| d1[i] * self[(i, j)] * d2[j]);
        Ok((out, d1, d2))
    }

    /// Dephase using (r,c) as the pivot entry: first permutes row r to the top
    /// and column c to the front, then dephases.
    pub fn dephase_pivot(&self, r: usize, c: usize) -> Result<Self, CoreError> {
        let n = self.n;
        let m = Self::from_fn(n, |i, j| {
            let si = if i == 0 { r } else if i == r { 0 } else { i };
            let sj = if j == 0 { c } else if j == c { 0 } else { j };
            self[(si, sj)]
        });
        Ok(m.dephase()?.0)
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> C64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = C64::new(1.0, 0.0);
        for k in 0..n {
            let mut piv = k;
            let mut best = a[k * n + k].norm();
            for i in k + 1..n {
                let v = a[i * n + k].norm();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                if f.norm_sqr() == 0.0 {
                    continue;
                }
                for j in k..n {
                    let akj = a[k * n + j];
                    a[i * n + j] -= f * akj;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for CMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}
