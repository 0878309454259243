//! Number-theoretic existence and nonexistence tests for Butson-type
//! Hadamard matrices and for the Petrescu block construction.

use hadlab_core::factorize;

/// Outcome of a feasibility screen.  "No obstruction" never claims existence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub infeasible: bool,
    /// Identifiers of the rules that fired.
    pub reasons: Vec<String>,
}

impl FeasibilityVerdict {
    fn clear() -> Self {
        FeasibilityVerdict { infeasible: false, reasons: Vec::new() }
    }
    fn hit(mut self, reason: &str) -> Self {
        self.infeasible = true;
        self.reasons.push(reason.to_string());
        self
    }
}

/// Vanishing sums of q-th roots of unity of length n exist iff n is a natural
/// linear combination of the primes dividing q.
pub fn lam_leung(n: u64, q: u64) -> bool {
    assert!(q >= 2, "root order must be at least 2");
    let primes: Vec<u64> = factorize(q).into_iter().map(|(p, _)| p).collect();
    let n = n as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for &p in &primes {
        for s in p as usize..=n {
            if reachable[s - p as usize] {
                reachable[s] = true;
            }
        }
    }
    reachable[n]
}

/// Squarefree part of n (product of primes with odd exponent).
pub fn squarefree_part(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .filter(|&(_, a)| a % 2 == 1)
        .map(|(p, _)| p)
        .product()
}

fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
pub fn legendre(a: u64, p: u64) -> i32 {
    let r = modpow(a % p, (p - 1) / 2, p);
    if r == 0 {
        0
    } else if r == 1 {
        1
    } else {
        -1
    }
}

/// Nonexistence screens for BH(n,6) matrices: the quadratic-form restriction
/// on the squarefree part of odd n, and the determinant-norm obstruction
/// |A+Bω|² = nⁿ which is never 2 modulo 3.
pub fn bh6_tests(n: u64) -> FeasibilityVerdict {
    let mut v = FeasibilityVerdict::clear();
    if n == 0 {
        return v.hit("empty-order");
    }
    if n % 2 == 1 {
        let sf = squarefree_part(n);
        if factorize(sf).iter().any(|&(p, _)| p % 6 == 5) {
            v = v.hit("squarefree-part-prime-5-mod-6");
        }
    }
    if modpow(n % 3, n, 3) == 2 {
        v = v.hit("determinant-norm-2-mod-3");
    }
    v
}

/// Divisibility and quadratic-character screens for BH(n,q) with q a prime
/// power p^a or twice one: (1) a BH(n,p^a) with n > 1 forces p | n;
/// (3) for p ≡ 3 mod 4 and odd n = p^b·r²·s with s squarefree and coprime to
/// p, a prime divisor of s that is a quadratic non-residue mod p rules out
/// BH(n,p^a) and BH(n,2p^a).
pub fn bn_tests(n: u64, q: u64) -> FeasibilityVerdict {
    let mut v = FeasibilityVerdict::clear();
    if n <= 1 {
        return v;
    }
    let fq = factorize(q);
    // Identify q as p^a or 2·p^a with p odd.
    let odd_primes: Vec<u64> = fq.iter().map(|&(p, _)| p).filter(|&p| p != 2).collect();
    if fq.len() == 1 {
        let p = fq[0].0;
        if n % p != 0 {
            v = v.hit("prime-power-root-order-requires-divisibility");
        }
    }
    if odd_primes.len() == 1 && fq.iter().all(|&(p, a)| p != 2 || a == 1) {
        let p = odd_primes[0];
        if p % 4 == 3 && n % 2 == 1 {
            // n = p^b · m with (m,p)=1; s = squarefree part of m.
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            let s = squarefree_part(m);
            if factorize(s).iter().any(|&(qp, _)| legendre(qp, p) == -1) {
                v = v.hit("quadratic-character-obstruction");
            }
        }
    }
    v
}

/// Feasibility of a Petrescu-type BH(n,q) matrix with n = 3s+1 (only q = 6
/// carries the determinant screen): the block determinant forces the
/// squarefree part of (3s+1)(s−1)^s to be odd and free of primes ≡ 5 mod 6,
/// and a BH(s+1,q) matrix must exist for the border block.
pub fn petrescu_feasible(n: u64, q: u64) -> Result<FeasibilityVerdict, String> {
    if n % 3 != 1 {
        return Err(format!("order {n} is not of the form 3s+1"));
    }
    let s = (n - 1) / 3;
    let mut v = FeasibilityVerdict::clear();
    if s == 0 {
        return Ok(v);
    }
    if q == 6 {
        if s == 1 {
            // |det D|² = (s−1)^s(3s+1) = 0 contradicts invertibility.
            return Ok(v.hit("singular-border-block"));
        }
        // squarefree part of (3s+1)(s−1)^s
        let mut sf = squarefree_part(3 * s + 1);
        if s % 2 == 1 {
            let f = squarefree_part(s - 1);
            // combine squarefree parts: shared primes cancel
            let g = gcd(sf, f);
            sf = sf / g * (f / g);
        }
        if sf % 2 == 0 {
            v = v.hit("block-determinant-even-squarefree-part");
        }
        if factorize(sf).iter().any(|&(p, _)| p % 6 == 5) {
            v = v.hit("block-determinant-prime-5-mod-6");
        }
        if bh6_tests(s + 1).infeasible {
            v = v.hit("no-suitable-border-matrix");
        }
    } else if factorize(q).len() <= 2 && bn_tests(s + 1, q).infeasible {
        v = v.hit("no-suitable-border-matrix");
    }
    Ok(v)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
