//! Row candidates for the dephased search: exponent vectors whose root-of-
//! unity evaluations sum to zero, and exact pairwise orthogonality tests.

/// Whether the multiset of exponents (mod q) evaluates to a vanishing sum of
/// q-th roots of unity.  Exact for q in {2, 3, 4}; a numerically safe check
/// otherwise (sums of at most ~100 roots of unity are either exactly zero or
/// bounded away from zero far beyond the tolerance used).
pub fn vanishing_sum(exponents: impl Iterator<Item = u32>, q: u32) -> bool {
    let mut counts = vec![0i64; q as usize];
    let mut total = 0usize;
    for e in exponents {
        counts[(e % q) as usize] += 1;
        total += 1;
    }
    match q {
        1 => total == 0,
        2 => counts[0] == counts[1],
        3 => counts[0] == counts[1] && counts[1] == counts[2],
        4 => counts[0] == counts[2] && counts[1] == counts[3],
        _ => {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for (t, &c) in counts.iter().enumerate() {
                let a = std::f64::consts::TAU * t as f64 / q as f64;
                re += c as f64 * a.cos();
                im += c as f64 * a.sin();
            }
            re.hypot(im) < 1e-6
        }
    }
}

/// Exact orthogonality of two exponent rows: the entrywise exponent
/// differences form a vanishing sum.
pub fn rows_orthogonal(a: &[u32], b: &[u32], q: u32) -> bool {
    vanishing_sum(a.iter().zip(b).map(|(&x, &y)| (x + q - y % q) % q), q)
}

/// All length-n exponent rows with leading 0 that are orthogonal to the
/// all-ones row, in lexicographic order.  These are exactly the possible
/// core rows of a dephased matrix.
pub fn candidate_rows(n: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut row = vec![0u32; n];
    fill(&mut row, 1, q, &mut out);
    out
}

fn fill(row: &mut Vec<u32>, pos: usize, q: u32, out: &mut Vec<Vec<u32>>) {
    if pos == row.len() {
        if vanishing_sum(row.iter().copied(), q) {
            out.push(row.clone());
        }
        return;
    }
    for e in 0..q {
        row[pos] = e;
        fill(row, pos + 1, q, out);
    }
    row[pos] = 0;
}
