//! Petrescu-style block arrays: assembly from blocks, identity validation,
//! and the concrete parametric examples of orders 4, 7 and 13.

use crate::CatalogError;
use hadlab_core::{root_of_unity, root_power, CMat, C64};

fn mat(rows: Vec<Vec<C64>>) -> CMat {
    CMat::from_rows(rows).expect("rectangular row data")
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn unimod(z: C64, name: &str) -> Result<(), CatalogError> {
    if (z.norm() - 1.0).abs() > 1e-9 {
        return Err(CatalogError::Domain(format!(
            "parameter {name} = {z} is not unimodular"
        )));
    }
    Ok(())
}

/// Rectangular complex block used by the assembly routines.
#[derive(Clone, Debug)]
pub struct Block {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C64>,
}

impl Block {
    pub fn from_rows(rows: &[Vec<C64>]) -> Block {
        let r = rows.len();
        let k = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == k));
        Block {
            rows: r,
            cols: k,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_square(m: &CMat) -> Block {
        let n = m.order();
        Block {
            rows: n,
            cols: n,
            data: m.as_slice().to_vec(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    pub fn adjoint(&self) -> Block {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).conj());
            }
        }
        Block {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn matmul(&self, other: &Block) -> Block {
        assert_eq!(self.cols, other.rows);
        let mut data = vec![c(0.0, 0.0); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.at(i, k);
                for j in 0..other.cols {
                    data[i * other.cols + j] += v * other.at(k, j);
                }
            }
        }
        Block {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }
}

/// Largest absolute deviation of `m` from a·I + b·J on its own shape.
fn dist_from_aj(m: &Block, a: C64, b: C64) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.rows {
        for j in 0..m.cols {
            let target = if i == j { a + b } else { b };
            worst = worst.max((m.at(i, j) - target).norm());
        }
    }
    worst
}

/// Assembles the 3s+1 array [[X, Y, T], [Y, X, T], [T*, T*, D]] from its
/// blocks.  X and Y must be s×s, T s×(s+1) and D (s+1)×(s+1).
pub fn petrescu_assemble(
    x: &Block,
    y: &Block,
    t: &Block,
    d: &Block,
) -> Result<CMat, CatalogError> {
    let s = x.rows;
    if x.cols != s || y.rows != s || y.cols != s {
        return Err(CatalogError::Domain("X and Y must be square of order s".into()));
    }
    if t.rows != s || t.cols != s + 1 || d.rows != s + 1 || d.cols != s + 1 {
        return Err(CatalogError::Domain(
            "T must be s×(s+1) and D must be square of order s+1".into(),
        ));
    }
    let n = 3 * s + 1;
    let ta = t.adjoint();
    Ok(CMat::from_fn(n, |i, j| {
        let (bi, ii) = if i < s {
            (0, i)
        } else if i < 2 * s {
            (1, i - s)
        } else {
            (2, i - 2 * s)
        };
        let (bj, jj) = if j < s {
            (0, j)
        } else if j < 2 * s {
            (1, j - s)
        } else {
            (2, j - 2 * s)
        };
        match (bi, bj) {
            (0, 0) | (1, 1) => x.at(ii, jj),
            (0, 1) | (1, 0) => y.at(ii, jj),
            (0, 2) | (1, 2) => t.at(ii, jj),
            (2, 0) | (2, 1) => ta.at(ii, jj),
            _ => d.at(ii, jj),
        }
    }))
}

/// Extracts (X, Y, T, D) from an order-3s+1 matrix laid out as the block
/// array above.
pub fn petrescu_blocks(h: &CMat) -> Result<(Block, Block, Block, Block), CatalogError> {
    let n = h.order();
    if n % 3 != 1 || n < 4 {
        return Err(CatalogError::Domain(format!(
            "order {n} is not of the form 3s+1 with s ≥ 1"
        )));
    }
    let s = (n - 1) / 3;
    let sub = |r0: usize, c0: usize, rr: usize, cc: usize| Block {
        rows: rr,
        cols: cc,
        data: (0..rr)
            .flat_map(|i| (0..cc).map(move |j| (i, j)))
            .map(|(i, j)| h[(r0 + i, c0 + j)])
            .collect(),
    };
    Ok((
        sub(0, 0, s, s),
        sub(0, s, s, s),
        sub(0, 2 * s, s, s + 1),
        sub(2 * s, 2 * s, s + 1, s + 1),
    ))
}

/// Result of checking one structural identity of the block array.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub residual: f64,
    pub pass: bool,
}

/// Full validation report for a Petrescu-style array.
#[derive(Clone, Debug)]
pub struct PetrescuReport {
    pub s: usize,
    pub checks: Vec<IdentityCheck>,
}

impl PetrescuReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|ch| ch.pass)
    }
    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|ch| !ch.pass)
            .map(|ch| ch.name)
            .collect()
    }
}

/// Validates all structural identities of the block array at tolerance `tol`:
/// the row-orthogonality conditions on the border block T, the sum/difference
/// conditions on X ± Y, the normality pattern of D, the border coupling, the
/// reconstruction identity for X + Y, commutation of D with J, the constant
/// row sum of D with modulus √n, and the determinant modulus of D.
pub fn petrescu_validate(h: &CMat, tol: f64) -> Result<PetrescuReport, CatalogError> {
    let (x, y, t, d) = petrescu_blocks(h)?;
    let s = x.rows;
    let n = 3 * s + 1;
    let sf = s as f64;
    let mut checks = Vec::new();
    let mut push = |name: &'static str, residual: f64| {
        checks.push(IdentityCheck {
            name,
            residual,
            pass: residual <= tol,
        });
    };

    // Unimodularity of the block entries.
    let unimod_res = |b: &Block| {
        b.data
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0f64, f64::max)
    };
    push("unimodular-X", unimod_res(&x));
    push("unimodular-Y", unimod_res(&y));
    push("unimodular-T", unimod_res(&t));
    push("unimodular-D", unimod_res(&d));

    let ta = t.adjoint();
    // T T* = (s+1) I_s
    push("border-row-orthogonality", dist_from_aj(&t.matmul(&ta), c(sf + 1.0, 0.0), c(0.0, 0.0)));
    // T* T = (s+1) I − J
    push(
        "border-column-gram",
        dist_from_aj(&ta.matmul(&t), c(sf + 1.0, 0.0), c(-1.0, 0.0)),
    );
    // T J = 0 (row sums of T vanish)
    let tj: f64 = (0..s)
        .map(|i| (0..=s).map(|j| t.at(i, j)).sum::<C64>().norm())
        .fold(0.0, f64::max);
    push("border-zero-row-sums", tj);

    // (X+Y)(X+Y)* = (s−1) I
    let add = |p: &Block, q: &Block, sign: f64| Block {
        rows: p.rows,
        cols: p.cols,
        data: p
            .data
            .iter()
            .zip(&q.data)
            .map(|(&u, &v)| u + v * sign)
            .collect(),
    };
    let xpy = add(&x, &y, 1.0);
    let xmy = add(&x, &y, -1.0);
    push(
        "sum-block-gram",
        dist_from_aj(&xpy.matmul(&xpy.adjoint()), c(sf - 1.0, 0.0), c(0.0, 0.0)),
    );
    push(
        "difference-block-gram",
        dist_from_aj(&xmy.matmul(&xmy.adjoint()), c(3.0 * sf + 1.0, 0.0), c(0.0, 0.0)),
    );

    // D D* = D* D = (s−1) I + 2 J
    let da = d.adjoint();
    let r1 = dist_from_aj(&d.matmul(&da), c(sf - 1.0, 0.0), c(2.0, 0.0));
    let r2 = dist_from_aj(&da.matmul(&d), c(sf - 1.0, 0.0), c(2.0, 0.0));
    push("corner-normal-gram", r1.max(r2));

    // (X+Y) T + T D* = 0
    let coupling = add(&xpy.matmul(&t), &t.matmul(&da), 1.0);
    push(
        "coupling",
        coupling.data.iter().map(|z| z.norm()).fold(0.0, f64::max),
    );

    // X + Y = −1/(s+1) T D* T*
    let recon = t.matmul(&da).matmul(&ta);
    let recon_res = xpy
        .data
        .iter()
        .zip(&recon.data)
        .map(|(&u, &v)| (u + v / (sf + 1.0)).norm())
        .fold(0.0f64, f64::max);
    push("sum-block-reconstruction", recon_res);

    // J D = D J = c J with |c| = √n
    let row_sums: Vec<C64> = (0..=s).map(|i| (0..=s).map(|j| d.at(i, j)).sum()).collect();
    let col_sums: Vec<C64> = (0..=s).map(|j| (0..=s).map(|i| d.at(i, j)).sum()).collect();
    let c0 = row_sums[0];
    let spread = row_sums
        .iter()
        .chain(&col_sums)
        .map(|&v| (v - c0).norm())
        .fold(0.0f64, f64::max);
    push("corner-constant-line-sums", spread);
    push(
        "corner-line-sum-modulus",
        (c0.norm() - (n as f64).sqrt()).abs(),
    );

    // |det D|² = (s−1)^s (3s+1)
    let dm = CMat::from_fn(s + 1, |i, j| d.at(i, j));
    let target = (sf - 1.0).powi(s as i32) * (3.0 * sf + 1.0);
    push(
        "corner-determinant-modulus",
        (dm.det().norm_sqr() - target).abs() / target.max(1.0),
    );

    Ok(PetrescuReport { s, checks })
}

/// One-parameter Petrescu family of order 7 over sixth roots of unity
/// (entries in {±ω^k, ±aω², ±āω²}).
pub fn p7_1(a: C64) -> Result<CMat, CatalogError> {
    unimod(a, "a")?;
    let w = root_of_unity(3);
    let w2 = w * w;
    let one = c(1.0, 0.0);
    let ab = a.conj();
    Ok(mat(vec![
        vec![one, a * w2, w, -a * w2, w, w2, one],
        vec![ab * w2, one, -ab * w2, w, w2, w, one],
        vec![w, -a * w2, one, a * w2, w, w2, one],
        vec![-ab * w2, w, ab * w2, one, w2, w, one],
        vec![w2, w, w2, w, -w2, one, one],
        vec![w, w2, w, w2, one, -w2, one],
        vec![one, one, one, one, one, one, -w2],
    ]))
}

/// The real order-4 Petrescu array (equivalent to the Sylvester matrix).
pub fn p4_1(a: C64) -> Result<CMat, CatalogError> {
    unimod(a, "a")?;
    let one = c(1.0, 0.0);
    Ok(mat(vec![
        vec![a, -a, -one, one],
        vec![-a, a, -one, one],
        vec![-one, -one, one, one],
        vec![one, one, one, one],
    ]))
}

/// Four-parameter Petrescu family of order 13.  The auxiliary unimodular
/// value e satisfies Re[eω] = −Re[d]/2; the principal branch is chosen.
pub fn p13a_4(a: C64, b: C64, cc: C64, d: C64) -> Result<CMat, CatalogError> {
    for (z, n) in [(a, "a"), (b, "b"), (cc, "c"), (d, "d")] {
        unimod(z, n)?;
    }
    let w = root_of_unity(3);
    let one = c(1.0, 0.0);
    let re = -d.re / 2.0;
    let ew = c(re, (1.0 - re * re).max(0.0).sqrt());
    let e = ew * w.conj();

    let x = Block::from_rows(&[
        vec![w, a, b, cc],
        vec![d * d * w / a, w, -b * d * e / a, -cc * d * w / (a * e)],
        vec![w / b, -a * w / (b * d * e), -one, cc * w / (b * d * e)],
        vec![w / cc, -a * e / (cc * d), b * e / (cc * d), -one],
    ]);
    // Y agrees with −X off the diagonal; on the diagonal the roles of ω and
    // −1 are exchanged.
    let y = Block::from_rows(&[
        vec![-one, -a, -b, -cc],
        vec![-d * d * w / a, -one, b * d * e / a, cc * d * w / (a * e)],
        vec![-w / b, a * w / (b * d * e), w, -cc * w / (b * d * e)],
        vec![-w / cc, a * e / (cc * d), -b * e / (cc * d), w],
    ]);
    let t = Block {
        rows: 4,
        cols: 5,
        data: (0..4)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .map(|(i, j)| root_power(5, ((i + 1) * (j + 1)) as i64))
            .collect(),
    };
    let w2 = w * w;
    let dblock = Block {
        rows: 5,
        cols: 5,
        data: (0..5)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .map(|(i, j)| if i == j { one } else { w2 })
            .collect(),
    };
    petrescu_assemble(&x, &y, &t, &dblock)
}
