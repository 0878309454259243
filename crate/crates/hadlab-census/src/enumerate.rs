//! Depth-first enumeration of dephased matrices of q-th roots of unity with
//! pairwise orthogonal rows, up to monomial equivalence.
//!
//! The search walks cliques in the compatibility graph of candidate core
//! rows, kept in lexicographically increasing order, and additionally
//! requires the columns to be in lexicographic order; every equivalence
//! class contains such a doubly-sorted member (alternately sorting rows and
//! columns strictly decreases the row-major reading of the matrix, so the
//! process terminates at a doubly-sorted matrix in the same class).  The
//! survivors are bucketed by an exact integer invariant and reduced to
//! class representatives by the equivalence backtracker.

use crate::rows::{candidate_rows, rows_orthogonal};
use crate::CensusError;
use hadlab_core::{blog_to_cmat, BLog, CMat};
use hadlab_invariants::{are_equivalent, EquivResult, DEFAULT_BUDGET};
use std::collections::HashMap;
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Search-node budget across all workers.
    pub budget: u64,
    pub workers: usize,
    /// Directory for worker-local resume files; each worker records the
    /// top-level branches it has completed together with their matrices.
    pub checkpoint_dir: Option<PathBuf>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: 1_000_000_000,
            workers: 1,
            checkpoint_dir: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusResult {
    pub n: usize,
    pub q: u32,
    /// One representative per equivalence class, in first-found order over
    /// the sorted enumeration (deterministic across worker counts).
    pub class_reps: Vec<BLog>,
    /// Number of classes merged further under adjoint/conjugate/transpose.
    pub act_class_count: usize,
    /// False when the node budget ran out before the search finished.
    pub complete: bool,
    pub nodes: u64,
    pub matrices_seen: u64,
}

struct Searcher<'a> {
    cands: &'a [Vec<u32>],
    compat: &'a [Vec<u64>],
    n: usize,
    rows_needed: usize,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    found: Vec<Vec<u32>>,
}

impl<'a> Searcher<'a> {
    /// Extend the clique from `chosen`; `allowed` is the bitset of rows
    /// compatible with everything chosen so far, `tied` has bit j set when
    /// columns j and j+1 are still equal on the chosen prefix.
    fn extend(&mut self, chosen: &mut Vec<usize>, allowed: &[u64], tied: u64, min_idx: usize) {
        if self.exhausted {
            return;
        }
        if chosen.len() == self.rows_needed {
            let mut flat = Vec::with_capacity(self.rows_needed * self.n);
            for &i in chosen.iter() {
                flat.extend_from_slice(&self.cands[i]);
            }
            self.found.push(flat);
            return;
        }
        let remaining = self.rows_needed - chosen.len();
        for idx in iter_bits(allowed) {
            if idx < min_idx {
                continue;
            }
            // Not enough larger candidates left to finish the clique.
            if idx + remaining > self.cands.len() {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            let row = &self.cands[idx];
            let mut new_tied = tied;
            let mut ok = true;
            for j in 1..self.n - 1 {
                if tied & (1 << j) != 0 {
                    match row[j].cmp(&row[j + 1]) {
                        std::cmp::Ordering::Greater => {
                            ok = false;
                            break;
                        }
                        std::cmp::Ordering::Less => new_tied &= !(1 << j),
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            if !ok {
                continue;
            }
            let next_allowed: Vec<u64> = allowed
                .iter()
                .zip(&self.compat[idx])
                .map(|(a, b)| a & b)
                .collect();
            chosen.push(idx);
            self.extend(chosen, &next_allowed, new_tied, idx + 1);
            chosen.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            if b == 0 {
                None
            } else {
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(w * 64 + t)
            }
        })
    })
}

/// Exact integer equivalence invariant: the histogram, over residues mod q,
/// of the dephased exponent quadruples L[i][j] - L[i][j'] - L[i'][j] +
/// L[i'][j'] across all index pairs i < i', j < j'.  Diagonal phases cancel
/// in the quadruple, and permutations only reorder the multiset.
fn quad_histogram(core: &[u32], n: usize, q: u32) -> Vec<u64> {
    // Reconstitute the full matrix with zero first row and column.
    let get = |i: usize, j: usize| -> u32 {
        if i == 0 {
            0
        } else {
            core[(i - 1) * n + j]
        }
    };
    let mut hist = vec![0u64; q as usize];
    for i in 0..n {
        for i2 in i + 1..n {
            for j in 0..n {
                for j2 in j + 1..n {
                    let v =
                        (get(i, j) + get(i2, j2) + 2 * q - get(i, j2) - get(i2, j)) % q;
                    hist[v as usize] += 1;
                }
            }
        }
    }
    hist
}

fn core_to_blog(core: &[u32], n: usize, q: u32) -> BLog {
    let mut entries = vec![0u32; n * n];
    entries[n..].copy_from_slice(core);
    BLog::new(n, q, entries).expect("well-formed exponent matrix")
}

/// Enumerates all equivalence classes of n x n Hadamard matrices with
/// entries q-th roots of unity.
pub fn enumerate_bh(
    n: usize,
    q: u32,
    opts: &CensusOptions,
) -> Result<CensusResult, CensusError> {
    if n < 2 || n > 16 || q == 0 {
        return Err(CensusError::Domain(format!(
            "order {n} with root degree {q} is out of the supported range"
        )));
    }
    let cands = candidate_rows(n, q);
    if cands.is_empty() {
        return Ok(CensusResult {
            n,
            q,
            class_reps: Vec::new(),
            act_class_count: 0,
            complete: true,
            nodes: 0,
            matrices_seen: 0,
        });
    }
    let words = cands.len().div_ceil(64);
    let mut compat = vec![vec![0u64; words]; cands.len()];
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if rows_orthogonal(&cands[i], &cands[j], q) {
                compat[i][j / 64] |= 1 << (j % 64);
                compat[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let workers = opts.workers.max(1);
    let per_budget = opts.budget / workers as u64;
    let full: Vec<u64> = (0..words)
        .map(|w| {
            let hi = ((w + 1) * 64).min(cands.len());
            let lo = w * 64;
            if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            }
        })
        .collect();

    // Each worker owns the top-level branches congruent to its index and
    // appends finished branches to its resume file.
    let run_worker = |w: usize| -> Result<(Vec<Vec<u32>>, u64, bool), CensusError> {
        let ckpt_path = opts
            .checkpoint_dir
            .as_ref()
            .map(|d| d.join(format!("bh{n}x{q}_worker{w}.ckpt")));
        let mut done: Vec<bool> = vec![false; cands.len()];
        let mut found: Vec<Vec<u32>> = Vec::new();
        if let Some(p) = &ckpt_path {
            if let Ok(text) = std::fs::read_to_string(p) {
                let mut pending: Vec<Vec<u32>> = Vec::new();
                for line in text.lines() {
                    if let Some(rest) = line.strip_prefix("mat ") {
                        pending.push(
                            rest.split_whitespace()
                                .map(|t| t.parse::<u32>().unwrap_or(0))
                                .collect(),
                        );
                    } else if let Some(rest) = line.strip_prefix("done ") {
                        if let Ok(i) = rest.trim().parse::<usize>() {
                            if i < done.len() {
                                done[i] = true;
                                found.append(&mut pending);
                            }
                        }
                    }
                }
            }
        }
        let mut s = Searcher {
            cands: &cands,
            compat: &compat,
            n,
            rows_needed: n - 1,
            budget: per_budget,
            nodes: 0,
            exhausted: false,
            found: Vec::new(),
        };
        for i1 in (w..cands.len()).step_by(workers) {
            if done[i1] || s.exhausted {
                continue;
            }
            let before = s.found.len();
            let mut chosen = vec![i1];
            s.nodes += 1;
            // First-row column ordering: nondecreasing entries.
            let mut tied = u64::MAX;
            let mut ok = true;
            for j in 1..n - 1 {
                match cands[i1][j].cmp(&cands[i1][j + 1]) {
                    std::cmp::Ordering::Greater => {
                        ok = false;
                        break;
                    }
                    std::cmp::Ordering::Less => tied &= !(1 << j),
                    std::cmp::Ordering::Equal => {}
                }
            }
            if ok {
                let allowed: Vec<u64> = full
                    .iter()
                    .zip(&compat[i1])
                    .map(|(a, b)| a & b)
                    .collect();
                s.extend(&mut chosen, &allowed, tied, i1 + 1);
            }
            if s.exhausted {
                break;
            }
            if let Some(p) = &ckpt_path {
                let mut f = std::fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(p)?;
                for m in &s.found[before..] {
                    let line: Vec<String> = m.iter().map(|v| v.to_string()).collect();
                    writeln!(f, "mat {}", line.join(" "))?;
                }
                writeln!(f, "done {i1}")?;
            }
        }
        found.append(&mut s.found);
        Ok((found, s.nodes, !s.exhausted))
    };

    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut nodes = 0u64;
    let mut complete = true;
    if workers == 1 {
        let (f, nd, cp) = run_worker(0)?;
        all = f;
        nodes = nd;
        complete = cp;
    } else {
        let results: Vec<Result<(Vec<Vec<u32>>, u64, bool), CensusError>> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers)
                    .map(|w| scope.spawn(move || run_worker(w)))
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
        for r in results {
            let (f, nd, cp) = r?;
            all.extend(f);
            nodes += nd;
            complete &= cp;
        }
    }
    // Deterministic merge independent of worker count.
    all.sort_unstable();
    all.dedup();
    let matrices_seen = all.len() as u64;

    let class_reps = reduce_classes(&all, n, q);
    let act_class_count = act_classes(&class_reps);
    Ok(CensusResult {
        n,
        q,
        class_reps,
        act_class_count,
        complete,
        nodes,
        matrices_seen,
    })
}

fn reduce_classes(mats: &[Vec<u32>], n: usize, q: u32) -> Vec<BLog> {
    let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<(BLog, CMat)> = Vec::new();
    for core in mats {
        let key = quad_histogram(core, n, q);
        let ids = buckets.entry(key).or_default();
        let l = core_to_blog(core, n, q);
        let h = blog_to_cmat(&l);
        let known = ids
            .iter()
            .any(|&i| are_equivalent(&reps[i].1, &h, DEFAULT_BUDGET).is_equivalent());
        if !known {
            ids.push(reps.len());
            reps.push((l, h));
        }
    }
    reps.into_iter().map(|(l, _)| l).collect()
}

/// Number of groups the class representatives fall into when additionally
/// identifying a matrix with its adjoint, conjugate and transpose.
fn act_classes(reps: &[BLog]) -> usize {
    let hs: Vec<CMat> = reps.iter().map(blog_to_cmat).collect();
    let mut group = (0..reps.len()).collect::<Vec<usize>>();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            if group[j] != j {
                continue;
            }
            let linked = [hs[j].adjoint(), hs[j].conj(), hs[j].transpose()]
                .iter()
                .any(|k| {
                    matches!(are_equivalent(&hs[i], k, DEFAULT_BUDGET), EquivResult::Equivalent(_))
                });
            if linked {
                group[j] = group[i];
            }
        }
    }
    let mut roots: Vec<usize> = group
        .iter()
        .enumerate()
        .map(|(i, &g)| if g == i { i } else { group[g] })
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Unpruned reference census for tiny parameters: every ordered tuple of
/// distinct candidate rows is checked for pairwise orthogonality, with no
/// canonicity constraints, and the survivors reduced to classes.
pub fn brute_force_census(n: usize, q: u32) -> Vec<BLog> {
    let cands = candidate_rows(n, q);
    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    brute_extend(&cands, n, q, &mut chosen, &mut all);
    all.sort_unstable();
    all.dedup();
    reduce_classes(&all, n, q)
}

fn brute_extend(
    cands: &[Vec<u32>],
    n: usize,
    q: u32,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<u32>>,
) {
    if chosen.len() == n - 1 {
        let mut flat = Vec::with_capacity((n - 1) * n);
        for &i in chosen.iter() {
            flat.extend_from_slice(&cands[i]);
        }
        out.push(flat);
        return;
    }
    for i in 0..cands.len() {
        if chosen.contains(&i) {
            continue;
        }
        if chosen
            .iter()
            .all(|&j| rows_orthogonal(&cands[i], &cands[j], q))
        {
            chosen.push(i);
            brute_extend(cands, n, q, chosen, out);
            chosen.pop();
        }
    }
}
