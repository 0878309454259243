use hadlab_core::BLog;
use itertools::Itertools;

/// Outcome of a Z_q-rank computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZqRank {
    Exact(usize),
    /// The search budget was exhausted after ruling out all r below this.
    Unknown { at_least: usize },
}

/// Minimal r such that some r rows of the exponent matrix L generate every
/// row of L as integer combinations mod q.  Per the brute-force reduction,
/// the generating rows can always be taken from L itself, and each row is
/// tested by enumerating all q^r coefficient vectors (q need not be prime,
/// so Gaussian elimination only bounds this from above).
pub fn zq_rank(l: &BLog, budget: u64) -> ZqRank {
    let n = l.order();
    let q = l.root_order();
    // Distinct rows only; duplicates are generated for free.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 0..n {
        let r = l.row(i).to_vec();
        if !rows.contains(&r) {
            rows.push(r);
        }
    }
    if rows.iter().all(|r| r.iter().all(|&e| e == 0)) {
        return ZqRank::Exact(1);
    }
    let mut spent: u64 = 0;
    for r in 1..=rows.len() {
        let combos = q.pow(r as u32) as u64;
        for basis in (0..rows.len()).combinations(r) {
            let cost = combos * n as u64;
            spent = spent.saturating_add(cost * rows.len() as u64);
            if spent > budget {
                return ZqRank::Unknown { at_least: r };
            }
            if spans_all(&rows, &basis, q) {
                return ZqRank::Exact(r);
            }
        }
    }
    // Every row of L is itself in the candidate set, so this is unreachable,
    // but keep a conservative answer.
    ZqRank::Exact(rows.len())
}

fn spans_all(rows: &[Vec<u32>], basis: &[usize], q: u32) -> bool {
    let n = rows[0].len();
    let r = basis.len();
    'target: for row in rows {
        // enumerate coefficient vectors in base q
        let total = (q as u64).pow(r as u32);
        'coeff: for mut code in 0..total {
            let mut acc = vec![0u64; n];
            for &b in basis {
                let c = (code % q as u64) as u64;
                code /= q as u64;
                if c != 0 {
                    for (a, &e) in acc.iter_mut().zip(&rows[b]) {
                        *a += c * e as u64;
                    }
                }
            }
            for (a, &e) in acc.iter().zip(row) {
                if (*a % q as u64) != e as u64 {
                    continue 'coeff;
                }
            }
            continue 'target;
        }
        return false;
    }
    true
}
