//! Per-class statistics: defect, automorphism order, vanishing 4x4 minors,
//! Z_q-rank, equivalence to adjoint/conjugate/transpose, and presence of
//! order-4 Hadamard submatrices.

use crate::auto::automorphism_pair_count;
use crate::enumerate::CensusResult;
use crate::rows::vanishing_sum;
use hadlab_core::{blog_to_cmat, BLog};
use hadlab_invariants::{act_classify, defect, fingerprint, zq_rank, ActFlags, ZqRank};

#[derive(Clone, Debug)]
pub struct ClassStats {
    pub defect: i64,
    /// Ordered pairs (P, Q) of q-th-root monomial matrices with P H Q = H.
    pub auto_order: u64,
    pub vanishing_minors_4: u64,
    pub zq_rank: ZqRank,
    pub act: ActFlags,
    /// Whether some 4x4 submatrix is itself Hadamard (a doubling trace).
    pub sub_hadamard: bool,
}

/// Compute the statistics of a single class representative.
pub fn class_stats(l: &BLog) -> ClassStats {
    let h = blog_to_cmat(l);
    let fp = fingerprint(&h, 4.min(h.order()));
    ClassStats {
        defect: defect(&h).d,
        auto_order: automorphism_pair_count(l),
        vanishing_minors_4: fp.vanishing_count(4, 1e-8).unwrap_or(0),
        zq_rank: zq_rank(l, 2_000_000_000),
        act: act_classify(&h, hadlab_invariants::DEFAULT_BUDGET),
        sub_hadamard: has_sub_hadamard(l, 4),
    }
}

pub fn census_stats(result: &CensusResult) -> Vec<ClassStats> {
    result.class_reps.iter().map(class_stats).collect()
}

/// Exact search for a k x k submatrix whose rows are pairwise orthogonal
/// (entries are unimodular, so that submatrix is Hadamard of order k).
pub fn has_sub_hadamard(l: &BLog, k: usize) -> bool {
    let n = l.order();
    if k > n {
        return false;
    }
    let q = l.root_order();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    for rs in combinations(&rows, k) {
        for cs in combinations(&cols, k) {
            let mut ok = true;
            'pairs: for a in 0..k {
                for b in a + 1..k {
                    let diffs = cs
                        .iter()
                        .map(|&j| (l.get(rs[a], j) + q - l.get(rs[b], j)) % q);
                    if !vanishing_sum(diffs, q) {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                return true;
            }
        }
    }
    false
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Plain-text table with one labeled row per class.
pub fn render_stats_table(rows: &[(String, ClassStats)]) -> String {
    let mut out = String::from("label act auto defect zq_rank vanishing4 sub4\n");
    for (label, s) in rows {
        let flag = |f: Option<bool>| match f {
            Some(true) => 'Y',
            Some(false) => 'N',
            None => '?',
        };
        let rank = match &s.zq_rank {
            ZqRank::Exact(r) => r.to_string(),
            ZqRank::Unknown { at_least } => format!(">={at_least}"),
        };
        out.push_str(&format!(
            "{} {}{}{} {} {} {} {} {}\n",
            label,
            flag(s.act.adjoint),
            flag(s.act.conjugate),
            flag(s.act.transpose),
            s.auto_order,
            s.defect,
            rank,
            s.vanishing_minors_4,
            if s.sub_hadamard { 'Y' } else { 'N' },
        ));
    }
    out
}
