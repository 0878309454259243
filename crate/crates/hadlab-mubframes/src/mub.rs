//! Mutually unbiased bases, stored as the unscaled Hadamard matrices whose
//! rows (divided by sqrt n) are the basis vectors; the identity basis is
//! implicit.

use crate::MubFrameError;
use hadlab_core::{kronecker, CMat, C64};

/// A collection of pairwise mutually unbiased bases of order n: the identity
/// plus the stored Hadamard matrices scaled by 1/sqrt(n).
#[derive(Clone, Debug)]
pub struct MubSet {
    pub n: usize,
    pub hadamards: Vec<CMat>,
}

impl MubSet {
    /// Validates the Hadamard property of each matrix, pairwise
    /// unbiasedness, and the n + 1 upper bound on the number of bases.
    pub fn new(n: usize, hadamards: Vec<CMat>, tol: f64) -> Result<MubSet, MubFrameError> {
        if hadamards.len() + 1 > n + 1 {
            return Err(MubFrameError::Domain(format!(
                "{} bases exceed the maximum of {} in order {n}",
                hadamards.len() + 1,
                n + 1
            )));
        }
        for h in &hadamards {
            if h.order() != n {
                return Err(MubFrameError::Domain("order mismatch".into()));
            }
            let rep = h.is_hadamard(tol);
            if !rep.pass {
                return Err(MubFrameError::NotHadamard(
                    rep.max_row_defect.max(rep.max_unimod_defect),
                ));
            }
        }
        for (i, a) in hadamards.iter().enumerate() {
            for (j, b) in hadamards[..i].iter().enumerate() {
                if !is_unbiased(a, b, tol) {
                    return Err(MubFrameError::Domain(format!(
                        "bases {} and {} are biased",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(MubSet { n, hadamards })
    }

    /// Number of bases including the identity.
    pub fn count(&self) -> usize {
        self.hadamards.len() + 1
    }
}

/// Whether the bases H1/sqrt(n) and H2/sqrt(n) are unbiased: every cross
/// inner product has squared modulus 1/n, equivalently H1 H2*/sqrt(n) is
/// again Hadamard.
pub fn is_unbiased(h1: &CMat, h2: &CMat, tol: f64) -> bool {
    if h1.order() != h2.order() {
        return false;
    }
    let n = h1.order() as f64;
    let m = h1.matmul(&h2.adjoint());
    // |(H1 H2*)_{ij}| = sqrt(n) entrywise, i.e. H1 H2*/sqrt(n) is unimodular.
    (0..h1.order())
        .all(|i| (0..h1.order()).all(|j| (m[(i, j)].norm() - n.sqrt()).abs() < tol * n))
}

/// The tensor construction: min(k1, k2) MUBs in order n1 n2 from k1 and k2
/// MUBs in orders n1 and n2, by tensoring the i-th matrices together.
pub fn mub_tensor(a: &MubSet, b: &MubSet, tol: f64) -> Result<MubSet, MubFrameError> {
    let m = a.hadamards.len().min(b.hadamards.len());
    let hadamards: Vec<CMat> = (0..m)
        .map(|i| kronecker(&a.hadamards[i], &b.hadamards[i]))
        .collect();
    MubSet::new(a.n * b.n, hadamards, tol)
}

/// The classical order-2 triplet: identity, the real Hadamard matrix and its
/// imaginary twin.
pub fn order2_triplet() -> MubSet {
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let f2 = CMat::from_rows(vec![vec![one, one], vec![one, -one]]).unwrap();
    let v = CMat::from_rows(vec![vec![one, i], vec![one, -i]]).unwrap();
    MubSet::new(2, vec![f2, v], 1e-10).expect("the order-2 triplet is exact")
}
