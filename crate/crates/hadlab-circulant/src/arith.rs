//! Small modular-arithmetic helpers: primality, primitive roots, power-residue
//! cosets and their transition numbers.

use crate::CirculantError;

/// Trial-division primality test; the orders in this crate are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Whether `g` generates the multiplicative group modulo the prime `p`.
pub fn is_generator(g: u64, p: u64) -> bool {
    if g % p == 0 {
        return false;
    }
    // g is a generator iff g^((p-1)/q) != 1 for every prime divisor q of p-1.
    let mut n = p - 1;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                return false;
            }
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 && pow_mod(g, (p - 1) / n, p) == 1 {
        return false;
    }
    true
}

/// All generators of the multiplicative group modulo `p`, in increasing order.
pub fn generators(p: u64) -> impl Iterator<Item = u64> {
    (2..p).filter(move |&g| is_generator(g, p))
}

/// The `k` power-residue cosets `G_i = g^i G_0` of the subgroup of k-th
/// residues modulo `p`, indexed by `i`; elements sorted increasingly.
pub fn cosets(p: u64, k: usize, g: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new(); k];
    let mut x = 1u64;
    for e in 0..(p - 1) as usize {
        out[e % k].push(x);
        x = x * g % p;
    }
    for gi in out.iter_mut() {
        gi.sort_unstable();
    }
    out
}

/// Transition numbers of order `k` modulo `p` with respect to the generator
/// `g`: entry (i, j) counts the elements b of coset i with b + 1 in coset j.
pub fn transition_numbers(p: u64, g: u64, k: usize) -> Result<Vec<Vec<usize>>, CirculantError> {
    if !is_prime(p) {
        return Err(CirculantError::NotPrime(p));
    }
    if k == 0 || ((p - 1) as usize) % k != 0 {
        return Err(CirculantError::Domain(format!(
            "{k} does not divide {} - 1",
            p
        )));
    }
    if !is_generator(g, p) {
        return Err(CirculantError::Domain(format!(
            "{g} is not a generator modulo {p}"
        )));
    }
    let gs = cosets(p, k, g);
    let mut which = vec![usize::MAX; p as usize];
    for (i, gi) in gs.iter().enumerate() {
        for &b in gi {
            which[b as usize] = i;
        }
    }
    let mut n = vec![vec![0usize; k]; k];
    for (i, gi) in gs.iter().enumerate() {
        for &b in gi {
            let succ = (b + 1) % p;
            if succ != 0 {
                n[i][which[succ as usize]] += 1;
            }
        }
    }
    Ok(n)
}

/// The coset index of `p - 1` modulo `p` (the `m` of the reduced rational
/// equations); zero exactly when `-1` is a k-th residue.
pub fn minus_one_coset(p: u64, k: usize, g: u64) -> usize {
    let gs = cosets(p, k, g);
    for (i, gi) in gs.iter().enumerate() {
        if gi.binary_search(&(p - 1)).is_ok() {
            return i;
        }
    }
    unreachable!("p - 1 is always a unit")
}

/// Decomposes a prime p = s² + t² with s ≡ 1 (mod 4) and t > 0.
pub fn two_square_decomposition(p: u64) -> Result<(i64, i64), CirculantError> {
    let pi = p as i64;
    for s in -(pi / 2)..=(pi / 2) {
        if s.rem_euclid(4) != 1 {
            continue;
        }
        let t2 = pi - s * s;
        if t2 <= 0 {
            continue;
        }
        let t = (t2 as f64).sqrt().round() as i64;
        if t * t == t2 {
            return Ok((s, t.abs()));
        }
    }
    Err(CirculantError::Domain(format!(
        "{p} is not a sum of two squares"
    )))
}
