use crate::error::CoreError;
use crate::matrix::{CMat, C64};

/// A one-parameter orbit obtained from a pair of rows (u,v) with u_i² = v_i²
/// for all i: the entries at the index set {i : u_i + v_i = 0} in both rows
/// are multiplied by a free unimodular number.
#[derive(Clone, Debug)]
pub struct PairOrbit {
    pub row_u: usize,
    pub row_v: usize,
    pub indices: Vec<usize>,
}

impl PairOrbit {
    /// Evaluate the orbit at the unimodular parameter `alpha`.
    pub fn eval(&self, h: &CMat, alpha: C64) -> CMat {
        let mut out = h.clone();
        for &i in &self.indices {
            out[(self.row_u, i)] *= alpha;
            out[(self.row_v, i)] *= alpha;
        }
        out
    }
}

/// Find all row pairs of a dephased even-order Hadamard matrix that admit the
/// sign-pattern parametrization.  Returns an empty list for odd orders.
pub fn parametrize_pair_rows(h: &CMat, tol: f64) -> Vec<PairOrbit> {
    let n = h.order();
    let mut orbits = Vec::new();
    if n < 4 || n % 2 != 0 {
        return orbits;
    }
    for u in 0..n {
        for v in u + 1..n {
            let mut indices = Vec::new();
            let mut ok = true;
            for i in 0..n {
                let a = h[(u, i)];
                let b = h[(v, i)];
                if (a * a - b * b).norm() > tol {
                    ok = false;
                    break;
                }
                if (a + b).norm() <= tol {
                    indices.push(i);
                }
            }
            if ok && !indices.is_empty() && indices.len() < n {
                orbits.push(PairOrbit { row_u: u, row_v: v, indices });
            }
        }
    }
    orbits
}

/// A block-structured orbit: two distinguished rows carrying values (a,b) and
/// (b,a) on two distinguished columns, a column block where the two rows agree
/// (x), a column block where they are negatives (y), and a split of the
/// remaining rows into those agreeing on the two columns (z-type) and those
/// with opposite values (w-type).
#[derive(Clone, Debug)]
pub struct BlockOrbit {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub y_cols: Vec<usize>,
    pub w_rows: Vec<usize>,
    /// True when a = b, unlocking the second free parameter.
    pub two_param: bool,
}

impl BlockOrbit {
    /// Evaluate at unimodular α (and β if the orbit is two-parameter; β is
    /// ignored otherwise).  The y-block entries of the two distinguished rows
    /// are scaled by α, the w-type entries of the two distinguished columns by
    /// conj(α) (times β when available).
    pub fn eval(&self, h: &CMat, alpha: C64, beta: C64) -> CMat {
        let mut out = h.clone();
        for &j in &self.y_cols {
            out[(self.rows.0, j)] *= alpha;
            out[(self.rows.1, j)] *= alpha;
        }
        let wscale = if self.two_param { alpha.conj() * beta } else { alpha.conj() };
        for &i in &self.w_rows {
            out[(i, self.cols.0)] *= wscale;
            out[(i, self.cols.1)] *= wscale;
        }
        out
    }
}

/// Search a dephased Hadamard matrix for the block pattern enabling the
/// two-row/two-column parametrization, returning the first orbit found.
pub fn parametrize_block(h: &CMat, tol: f64) -> Result<BlockOrbit, CoreError> {
    let orbits = parametrize_block_all(h, tol);
    orbits.into_iter().next().ok_or(CoreError::PatternNotFound)
}

/// All block orbits of the matrix (row pair, column pair and the induced
/// partition), requiring a nonempty y-block so the parameter is effective.
pub fn parametrize_block_all(h: &CMat, tol: f64) -> Vec<BlockOrbit> {
    let n = h.order();
    let mut found = Vec::new();
    if n < 4 {
        return found;
    }
    for u in 1..n {
        for v in 1..n {
            if v == u {
                continue;
            }
            for c1 in 1..n {
                for c2 in c1 + 1..n {
                    let a = h[(u, c1)];
                    let b = h[(u, c2)];
                    if (h[(v, c1)] - b).norm() > tol || (h[(v, c2)] - a).norm() > tol {
                        continue;
                    }
                    // Partition remaining columns into x (equal) and y (negated).
                    let mut y_cols = Vec::new();
                    let mut ok = true;
                    for j in 1..n {
                        if j == c1 || j == c2 {
                            continue;
                        }
                        let p = h[(u, j)];
                        let q = h[(v, j)];
                        if (p - q).norm() <= tol {
                            // x block
                        } else if (p + q).norm() <= tol {
                            y_cols.push(j);
                        } else {
                            ok = false;
                            break;
                        }
                    }
                    if !ok || y_cols.is_empty() {
                        continue;
                    }
                    // Partition remaining rows into z-type and w-type.
                    let mut w_rows = Vec::new();
                    for i in 1..n {
                        if i == u || i == v {
                            continue;
                        }
                        let p = h[(i, c1)];
                        let q = h[(i, c2)];
                        if (p - q).norm() <= tol {
                            // z type
                        } else if (p + q).norm() <= tol {
                            w_rows.push(i);
                        } else {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        continue;
                    }
                    found.push(BlockOrbit {
                        rows: (u, v),
                        cols: (c1, c2),
                        y_cols: y_cols.clone(),
                        w_rows,
                        two_param: (a - b).norm() <= tol,
                    });
                }
            }
        }
    }
    found
}

/// Matrix exponential by scaling-and-squaring with a Taylor series; adequate
/// for the small orders used here.
fn expm(a: &CMat) -> CMat {
    let n = a.order();
    let norm: f64 = (0..n)
        .map(|i| (0..n).map(|j| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let k = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scale = 2f64.powi(-(k as i32));
    let b = a.scale(C64::new(scale, 0.0));
    let mut term = CMat::identity(n);
    let mut sum = CMat::identity(n);
    for m in 1..=24 {
        term = term.matmul(&b).scale(C64::new(1.0 / m as f64, 0.0));
        sum = sum.add(&term);
    }
    let mut result = sum;
    for _ in 0..k {
        result = result.matmul(&result);
    }
    result
}

fn is_self_adjoint(m: &CMat, tol: f64) -> bool {
    m.max_dist(&m.adjoint()) <= tol
}

fn commutator_norm(a: &CMat, b: &CMat) -> f64 {
    a.matmul(b).max_dist(&b.matmul(a))
}

/// Commuting-square parametrization, exponential variant: given a diagonal
/// non-scalar self-adjoint A with B = H*AH/n self-adjoint and [A,B] = 0,
/// returns H·exp(itAB), a Hadamard matrix for every real t.
pub fn nicoara_variant1(h: &CMat, a_diag: &[f64], t: f64) -> Result<CMat, CoreError> {
    let n = h.order();
    if a_diag.len() != n {
        return Err(CoreError::DimensionMismatch("diagonal length".into()));
    }
    if a_diag.iter().all(|&x| (x - a_diag[0]).abs() < 1e-12) {
        return Err(CoreError::Precondition("A must not be scalar".into()));
    }
    let a = CMat::diag(&a_diag.iter().map(|&x| C64::new(x, 0.0)).collect::<Vec<_>>());
    let b = h
        .adjoint()
        .matmul(&a)
        .matmul(h)
        .scale(C64::new(1.0 / n as f64, 0.0));
    if !is_self_adjoint(&b, 1e-9) {
        return Err(CoreError::Precondition("B = H*AH/n is not self-adjoint".into()));
    }
    if commutator_norm(&a, &b) > 1e-9 {
        return Err(CoreError::Precondition("[A,B] != 0".into()));
    }
    let u = expm(&a.matmul(&b).scale(C64::new(0.0, t)));
    Ok(h.matmul(&u))
}

/// Commuting-square parametrization, projection variant: A1, A2 diagonal 0/1
/// projections with B_i = H*A_iH/n projections and [A1,B1] = [A2,B2]; returns
/// H·U*(a) where U(a) = I + (a−1)A1B1 + (conj(a)−1)A2B2.
pub fn nicoara_variant2(
    h: &CMat,
    a1_diag: &[f64],
    a2_diag: &[f64],
    a: C64,
) -> Result<CMat, CoreError> {
    let n = h.order();
    if a1_diag.len() != n || a2_diag.len() != n {
        return Err(CoreError::DimensionMismatch("diagonal length".into()));
    }
    for d in [a1_diag, a2_diag] {
        if !d.iter().all(|&x| x == 0.0 || x == 1.0) {
            return Err(CoreError::Precondition("diagonals must be 0/1 projections".into()));
        }
    }
    let a1 = CMat::diag(&a1_diag.iter().map(|&x| C64::new(x, 0.0)).collect::<Vec<_>>());
    let a2 = CMat::diag(&a2_diag.iter().map(|&x| C64::new(x, 0.0)).collect::<Vec<_>>());
    let inv_n = C64::new(1.0 / n as f64, 0.0);
    let b1 = h.adjoint().matmul(&a1).matmul(h).scale(inv_n);
    let b2 = h.adjoint().matmul(&a2).matmul(h).scale(inv_n);
    for (name, b) in [("B1", &b1), ("B2", &b2)] {
        if !is_self_adjoint(b, 1e-9) || b.matmul(b).max_dist(b) > 1e-9 {
            return Err(CoreError::Precondition(format!("{name} is not an orthogonal projection")));
        }
    }
    let c1 = a1.matmul(&b1).sub(&b1.matmul(&a1));
    let c2 = a2.matmul(&b2).sub(&b2.matmul(&a2));
    if c1.max_dist(&c2) > 1e-9 {
        return Err(CoreError::Precondition("[A1,B1] != [A2,B2]".into()));
    }
    let one = C64::new(1.0, 0.0);
    let u = CMat::identity(n)
        .add(&a1.matmul(&b1).scale(a - one))
        .add(&a2.matmul(&b2).scale(a.conj() - one));
    Ok(h.matmul(&u.adjoint()))
}
