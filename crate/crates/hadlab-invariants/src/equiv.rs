use hadlab_core::{CMat, C64};

use crate::fingerprint::fingerprint;
use crate::haagerup::{haagerup_set, same_value_set};

/// Default node budget for the backtracking search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Entry-matching tolerance inside the combinatorial search.
const ENTRY_TOL: f64 = 1e-7;

/// A monomial transform carrying H onto K:
/// K[i][j] = d1[i] · H[row_perm[i]][col_perm[j]] · d2[j].
#[derive(Clone, Debug)]
pub struct Witness {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub d1: Vec<C64>,
    pub d2: Vec<C64>,
}

impl Witness {
    /// Apply the transform to `h`.
    pub fn apply(&self, h: &CMat) -> CMat {
        CMat::from_fn(h.order(), |i, j| {
            self.d1[i] * h[(self.row_perm[i], self.col_perm[j])] * self.d2[j]
        })
    }

    /// Verify the witness by direct multiplication against `k`.
    pub fn verify(&self, h: &CMat, k: &CMat, tol: f64) -> bool {
        self.apply(h).max_dist(k) <= tol
    }
}

/// Outcome of an equivalence test.
#[derive(Clone, Debug)]
pub enum EquivResult {
    Equivalent(Witness),
    /// With the invariant or exhausted-search reason.
    Inequivalent(String),
    /// The search budget ran out before a decision.
    Undecided,
}

impl EquivResult {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivResult::Equivalent(_))
    }
    pub fn is_inequivalent(&self) -> bool {
        matches!(self, EquivResult::Inequivalent(_))
    }
}

/// ACT flags: is H equivalent to its adjoint / entrywise conjugate /
/// transpose?  `None` marks an undecided search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActFlags {
    pub adjoint: Option<bool>,
    pub conjugate: Option<bool>,
    pub transpose: Option<bool>,
}

/// Decide monomial equivalence of two Hadamard matrices of the same order.
/// Fast invariants (Haagerup set, fingerprint up to 3×3 minors) screen out
/// inequivalent pairs; otherwise a backtracking search over permutations of
/// the dephased matrices either produces a verified witness or exhausts.
pub fn are_equivalent(h: &CMat, k: &CMat, budget: u64) -> EquivResult {
    if h.order() != k.order() {
        return EquivResult::Inequivalent("different orders".into());
    }
    let n = h.order();
    if n == 1 {
        return EquivResult::Equivalent(Witness {
            row_perm: vec![0],
            col_perm: vec![0],
            d1: vec![k[(0, 0)] / h[(0, 0)]],
            d2: vec![C64::new(1.0, 0.0)],
        });
    }
    let hs_h = haagerup_set(h, 1e-7);
    let hs_k = haagerup_set(k, 1e-7);
    if !same_value_set(&hs_h, &hs_k, 1e-6) {
        return EquivResult::Inequivalent("Haagerup sets differ".into());
    }
    if n >= 6 {
        let fp_h = fingerprint(h, 3);
        let fp_k = fingerprint(k, 3);
        if !fp_h.matches(&fp_k, 1e-6) {
            return EquivResult::Inequivalent("fingerprints differ".into());
        }
    }

    let k0 = match k.dephase() {
        Ok((m, _, _)) => m,
        Err(_) => return EquivResult::Undecided,
    };
    let mut nodes: u64 = 0;
    for r in 0..n {
        for c in 0..n {
            let hd = match h.dephase_pivot(r, c) {
                Ok(m) => m,
                Err(_) => continue,
            };
            match match_dephased(&hd, &k0, budget, &mut nodes) {
                Some((rho, gamma)) => {
                    // Translate core perms through the pivot swaps back to H.
                    let swap = |x: usize, p: usize| {
                        if x == 0 { p } else if x == p { 0 } else { x }
                    };
                    let row_perm: Vec<usize> = (0..n).map(|i| swap(rho[i], r)).collect();
                    let col_perm: Vec<usize> = (0..n).map(|j| swap(gamma[j], c)).collect();
                    // Recover the diagonals from the rank-one ratio pattern.
                    let ratio = |i: usize, j: usize| k[(i, j)] / h[(row_perm[i], col_perm[j])];
                    let d1: Vec<C64> = (0..n).map(|i| ratio(i, 0)).collect();
                    let d2: Vec<C64> = (0..n).map(|j| ratio(0, j) / ratio(0, 0)).collect();
                    let w = Witness { row_perm, col_perm, d1, d2 };
                    if w.verify(h, k, 1e-6 * n as f64) {
                        return EquivResult::Equivalent(w);
                    }
                    // A failed reconstruction means numerical trouble; keep
                    // scanning other pivots.
                }
                None => {
                    if nodes >= budget {
                        return EquivResult::Undecided;
                    }
                }
            }
        }
    }
    if nodes >= budget {
        EquivResult::Undecided
    } else {
        EquivResult::Inequivalent("no monomial transform exists".into())
    }
}

/// ACT classification of H: equivalence against H*, conj(H), Hᵀ.
pub fn act_classify(h: &CMat, budget: u64) -> ActFlags {
    let to_flag = |r: EquivResult| match r {
        EquivResult::Equivalent(_) => Some(true),
        EquivResult::Inequivalent(_) => Some(false),
        EquivResult::Undecided => None,
    };
    ActFlags {
        adjoint: to_flag(are_equivalent(h, &h.adjoint(), budget)),
        conjugate: to_flag(are_equivalent(h, &h.conj(), budget)),
        transpose: to_flag(are_equivalent(h, &h.transpose(), budget)),
    }
}

/// Search for row/column permutations fixing index 0 with
/// K0[i][j] = Hd[rho[i]][gamma[j]], both matrices dephased.
fn match_dephased(
    hd: &CMat,
    k0: &CMat,
    budget: u64,
    nodes: &mut u64,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = hd.order();
    assert!(n <= 64, "equivalence search limited to order 64");
    // Row candidates by entry multisets.
    let mut row_cand: Vec<Vec<usize>> = vec![Vec::new(); n];
    row_cand[0].push(0);
    for i in 1..n {
        for s in 1..n {
            if multiset_eq(k0.row(i), hd.row(s)) {
                row_cand[i].push(s);
            }
        }
        if row_cand[i].is_empty() {
            return None;
        }
    }
    // Column masks by column multisets.
    let col = |m: &CMat, j: usize| -> Vec<C64> { (0..n).map(|i| m[(i, j)]).collect() };
    let hcols: Vec<Vec<C64>> = (0..n).map(|j| col(hd, j)).collect();
    let kcols: Vec<Vec<C64>> = (0..n).map(|j| col(k0, j)).collect();
    let mut masks = vec![0u64; n];
    masks[0] = 1;
    for j in 1..n {
        for t in 1..n {
            if multiset_eq(&kcols[j], &hcols[t]) {
                masks[j] |= 1 << t;
            }
        }
        if masks[j] == 0 {
            return None;
        }
    }
    // Assign rows in order of fewest candidates.
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&i| row_cand[i].len());
    let mut rho = vec![usize::MAX; n];
    rho[0] = 0;
    let mut used: u64 = 1;
    if dfs(hd, k0, &order, 0, &row_cand, &mut rho, &mut used, &masks, budget, nodes) {
        // Masks at the leaf admit a perfect matching; rebuild it.
        let mut final_masks = masks.clone();
        refine_all(hd, k0, &rho, &mut final_masks);
        let gamma = perfect_matching(&final_masks)?;
        Some((rho, gamma))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    hd: &CMat,
    k0: &CMat,
    order: &[usize],
    depth: usize,
    row_cand: &[Vec<usize>],
    rho: &mut Vec<usize>,
    used: &mut u64,
    masks: &[u64],
    budget: u64,
    nodes: &mut u64,
) -> bool {
    if depth == order.len() {
        let mut final_masks = masks.to_vec();
        refine_all(hd, k0, rho, &mut final_masks);
        return perfect_matching(&final_masks).is_some();
    }
    let i = order[depth];
    for &s in &row_cand[i] {
        if *used & (1 << s) != 0 {
            continue;
        }
        *nodes += 1;
        if *nodes >= budget {
            return false;
        }
        // Refine the column masks against this row assignment.
        let n = hd.order();
        let mut next = masks.to_vec();
        let mut dead = false;
        for j in 0..n {
            let mut m = next[j];
            let mut keep = 0u64;
            while m != 0 {
                let t = m.trailing_zeros() as usize;
                m &= m - 1;
                if (hd[(s, t)] - k0[(i, j)]).norm() <= ENTRY_TOL {
                    keep |= 1 << t;
                }
            }
            next[j] = keep;
            if keep == 0 {
                dead = true;
                break;
            }
        }
        if dead {
            continue;
        }
        rho[i] = s;
        *used |= 1 << s;
        if dfs(hd, k0, order, depth + 1, row_cand, rho, used, &next, budget, nodes) {
            return true;
        }
        *used &= !(1 << s);
        rho[i] = usize::MAX;
    }
    false
}

/// Re-derive the column masks implied by a complete row assignment.
fn refine_all(hd: &CMat, k0: &CMat, rho: &[usize], masks: &mut [u64]) {
    let n = hd.order();
    for j in 0..n {
        let mut m = masks[j];
        let mut keep = 0u64;
        while m != 0 {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            if (0..n).all(|i| (hd[(rho[i], t)] - k0[(i, j)]).norm() <= ENTRY_TOL) {
                keep |= 1 << t;
            }
        }
        masks[j] = keep;
    }
}

/// Kuhn's bipartite matching over the candidate masks.
fn perfect_matching(masks: &[u64]) -> Option<Vec<usize>> {
    let n = masks.len();
    let mut match_col: Vec<Option<usize>> = vec![None; n]; // target t -> source j
    fn try_assign(
        j: usize,
        masks: &[u64],
        visited: &mut u64,
        match_col: &mut Vec<Option<usize>>,
    ) -> bool {
        let mut m = masks[j] & !*visited;
        while m != 0 {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            *visited |= 1 << t;
            if match_col[t].is_none()
                || try_assign(match_col[t].unwrap(), masks, visited, match_col)
            {
                match_col[t] = Some(j);
                return true;
            }
        }
        false
    }
    for j in 0..n {
        let mut visited = 0u64;
        if !try_assign(j, masks, &mut visited, &mut match_col) {
            return None;
        }
    }
    let mut gamma = vec![usize::MAX; n];
    for (t, j) in match_col.iter().enumerate() {
        gamma[j.unwrap()] = t;
    }
    Some(gamma)
}

/// Multiset equality of unimodular entry lists within `ENTRY_TOL`, by greedy
/// matching (adequate for the well-separated entry values arising here).
fn multiset_eq(a: &[C64], b: &[C64]) -> bool {
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (i, y) in b.iter().enumerate() {
            if !used[i] && (x - y).norm() <= ENTRY_TOL {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
