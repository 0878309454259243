use crate::error::CoreError;
use crate::matrix::{CMat, C64};
use crate::root_power;

/// Integer exponent representation of a matrix built from q-th roots of
/// unity: H = EXP(2πi·L/q) entrywise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BLog {
    n: usize,
    q: u32,
    entries: Vec<u32>,
}

impl BLog {
    pub fn new(n: usize, q: u32, entries: Vec<u32>) -> Result<Self, CoreError> {
        if entries.len() != n * n {
            return Err(CoreError::DimensionMismatch(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        if q == 0 {
            return Err(CoreError::Precondition("root order q must be positive".into()));
        }
        let entries = entries.into_iter().map(|e| e % q).collect();
        Ok(BLog { n, q, entries })
    }

    pub fn from_rows(q: u32, rows: &[&[u32]]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "BLog::from_rows: ragged rows");
            entries.extend(r.iter().map(|&e| e % q));
        }
        BLog { n, q, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn root_order(&self) -> u32 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v % self.q;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Re-express with root order `new_q` (a multiple of the current one).
    pub fn rescale_root_order(&self, new_q: u32) -> Result<Self, CoreError> {
        if new_q % self.q != 0 {
            return Err(CoreError::Precondition(format!(
                "{} is not a multiple of root order {}",
                new_q, self.q
            )));
        }
        let f = new_q / self.q;
        Ok(BLog {
            n: self.n,
            q: new_q,
            entries: self.entries.iter().map(|&e| e * f).collect(),
        })
    }
}

/// Evaluate the exponent matrix to a complex matrix.
pub fn blog_to_cmat(l: &BLog) -> CMat {
    let q = l.root_order() as usize;
    CMat::from_fn(l.order(), |i, j| root_power(q, l.get(i, j) as i64))
}

/// Recognize a matrix of q-th roots of unity, entrywise within `tol`.
pub fn cmat_to_blog(m: &CMat, q: u32, tol: f64) -> Result<BLog, CoreError> {
    let n = m.order();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(nearest_root_exponent(m[(i, j)], q, tol).ok_or(
                CoreError::NotRootOfUnity { row: i, col: j, q: q as usize, tol },
            )?);
        }
    }
    BLog::new(n, q, entries)
}

/// Exponent t with |z − exp(2πi t/q)| ≤ tol, if one exists.
pub fn nearest_root_exponent(z: C64, q: u32, tol: f64) -> Option<u32> {
    let t = (z.arg() / (2.0 * std::f64::consts::PI) * q as f64).round() as i64;
    let t = t.rem_euclid(q as i64) as u32;
    if (z - root_power(q as usize, t as i64)).norm() <= tol {
        Some(t)
    } else {
        None
    }
}
