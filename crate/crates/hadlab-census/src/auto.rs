//! Automorphism counting for matrices of q-th roots of unity: the number of
//! ordered pairs (P, Q) of monomial matrices with q-th-root nonzero entries
//! such that P H Q = H.

use hadlab_core::BLog;

/// Counts the ordered pairs (P, Q) with P H Q = H.
///
/// In exponent form a pair is (row permutation rho, column permutation
/// gamma, phase vectors a, b) with L[i][j] = a[i] + b[j] + L[rho(i)][gamma(j)]
/// (mod q).  For fixed (rho, gamma) the phases, when they exist, form
/// exactly q solutions (one free offset), so the count is q times the number
/// of compatible permutation pairs.  Those are enumerated by a depth-first
/// search over row images with per-column candidate masks: once rows 0 and i
/// are mapped, a column image t survives for column j only if the phase
/// discrepancy it induces agrees between the two rows.
pub fn automorphism_pair_count(l: &BLog) -> u64 {
    let n = l.order();
    let q = l.root_order();
    assert!(n <= 64, "automorphism search limited to order 64");
    let mut pairs = 0u64;
    // rho(0) = s0, gamma(0) = t0 anchor the normalization.
    for s0 in 0..n {
        for t0 in 0..n {
            let mut rho = vec![usize::MAX; n];
            rho[0] = s0;
            let used = 1u64 << s0;
            // masks[j]: still-possible images of column j.  With only row 0
            // assigned every image is consistent, so no initial refinement
            // beyond pinning column 0 is needed.
            let masks = {
                let mut m = vec![(1u64 << n) - 1; n];
                m[0] = 1 << t0;
                m
            };
            dfs(l, 1, &mut rho, used, &masks, t0, &mut pairs);
        }
    }
    pairs * q as u64
}

fn dfs(l: &BLog, i: usize, rho: &mut [usize], used: u64, masks: &[u64], t0: usize, pairs: &mut u64) {
    let n = l.order();
    if i == n {
        *pairs += count_matchings(masks, n);
        return;
    }
    for s in 0..n {
        if used & (1 << s) != 0 {
            continue;
        }
        rho[i] = s;
        let mut next = masks.to_vec();
        if refine_row(l, &mut next, i, rho, t0) {
            dfs(l, i + 1, rho, used | (1 << s), &next, t0, pairs);
        }
        rho[i] = usize::MAX;
    }
}

/// Mask refinement comparing row i against row 0 under the current rho.
fn refine_row(l: &BLog, masks: &mut [u64], i: usize, rho: &[usize], t0: usize) -> bool {
    let n = l.order();
    let q = l.root_order();
    let s = rho[i];
    let s0 = rho[0];
    for j in 1..n {
        let mut m = masks[j];
        let mut keep = 0u64;
        while m != 0 {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            let vi = (l.get(i, j) + l.get(s, t0) + 2 * q - l.get(i, 0) - l.get(s, t)) % q;
            let v0 = (l.get(0, j) + l.get(s0, t0) + 2 * q - l.get(0, 0) - l.get(s0, t)) % q;
            if vi == v0 {
                keep |= 1 << t;
            }
        }
        masks[j] = keep;
        if keep == 0 {
            return false;
        }
    }
    true
}

/// Number of systems of distinct representatives of the column masks.
fn count_matchings(masks: &[u64], n: usize) -> u64 {
    fn rec(masks: &[u64], j: usize, used: u64, n: usize) -> u64 {
        if j == n {
            return 1;
        }
        let mut total = 0;
        let mut m = masks[j] & !used;
        while m != 0 {
            let t = m & m.wrapping_neg();
            m &= m - 1;
            total += rec(masks, j + 1, used | t, n);
        }
        total
    }
    rec(masks, 0, 0, n)
}
