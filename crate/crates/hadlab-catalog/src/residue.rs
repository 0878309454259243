//! Quadratic/quartic residue tables modulo a prime, the circulant residue
//! matrices built from them, and the classical bordered constructions.

use crate::CatalogError;
use hadlab_core::{CMat, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
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

/// Quadratic character χ(k) mod p as +1 / −1 / 0.
pub fn quadratic_character(k: u64, p: u64) -> i32 {
    let r = modpow(k % p, (p - 1) / 2, p);
    if r == 0 {
        0
    } else if r == 1 {
        1
    } else {
        -1
    }
}

/// Smallest generator of the multiplicative group mod p.
pub fn primitive_root(p: u64) -> u64 {
    'outer: for g in 2..p {
        let mut seen = 1u64;
        let mut x = 1u64;
        for _ in 1..p - 1 {
            x = x * g % p;
            if x == 1 {
                continue 'outer;
            }
            seen += 1;
        }
        if seen == p - 1 {
            return g;
        }
    }
    panic!("no primitive root mod {p}");
}

/// Index (discrete log base the smallest primitive root) of every nonzero
/// residue: `ind[x] = i` with g^i = x.
pub fn index_table(p: u64) -> Vec<u64> {
    let g = primitive_root(p);
    let mut ind = vec![0u64; p as usize];
    let mut x = 1u64;
    for i in 0..p - 1 {
        ind[x as usize] = i;
        x = x * g % p;
    }
    ind
}

/// The circulant ±1/0 matrix Circ(x) with x₀ = 0 and x_k = χ(k).
pub fn paley_matrix(p: u64) -> Result<CMat, CatalogError> {
    if !is_prime(p) || p < 3 {
        return Err(CatalogError::Domain(format!("{p} is not an odd prime")));
    }
    let first: Vec<C64> = (0..p)
        .map(|k| c(quadratic_character(k, p) as f64, 0.0))
        .collect();
    Ok(CMat::circulant(&first))
}

/// Circulant (0,1)-indicator of a residue class: entry (i,j) is 1 when
/// j−i mod p lies in the class selected by `keep`.
fn indicator_circulant(p: u64, keep: impl Fn(u64) -> bool) -> CMat {
    let first: Vec<C64> = (0..p)
        .map(|k| if k != 0 && keep(k) { c(1.0, 0.0) } else { c(0.0, 0.0) })
        .collect();
    CMat::circulant(&first)
}

/// (S, N): circulant indicators of the nonzero squares and nonsquares mod p.
pub fn square_indicators(p: u64) -> (CMat, CMat) {
    (
        indicator_circulant(p, |k| quadratic_character(k, p) == 1),
        indicator_circulant(p, |k| quadratic_character(k, p) == -1),
    )
}

/// (Q, S, N): circulant indicators of quartic residues, quadratic-but-not-
/// quartic residues, and quadratic nonresidues mod p (p ≡ 1 mod 4).
pub fn quartic_indicators(p: u64) -> (CMat, CMat, CMat) {
    let ind = index_table(p);
    (
        indicator_circulant(p, |k| ind[k as usize] % 4 == 0),
        indicator_circulant(p, |k| ind[k as usize] % 4 == 2),
        indicator_circulant(p, |k| ind[k as usize] % 2 == 1),
    )
}

/// Splits the nonresidues mod p by residue of the index mod 4: elements
/// g^{4i+1} versus g^{4i+3}.
pub fn nonresidue_split(p: u64) -> (CMat, CMat) {
    let ind = index_table(p);
    (
        indicator_circulant(p, |k| ind[k as usize] % 4 == 1),
        indicator_circulant(p, |k| ind[k as usize] % 4 == 3),
    )
}

fn bordered(core: &CMat) -> CMat {
    let p = core.order();
    CMat::from_fn(p + 1, |i, j| {
        if i == 0 || j == 0 {
            c(1.0, 0.0)
        } else {
            core[(i - 1, j - 1)]
        }
    })
}

/// Real Hadamard matrix of order p+1 for prime p ≡ 3 mod 4: the circulant
/// core P − I bordered by ones.
pub fn paley_real(p: u64) -> Result<CMat, CatalogError> {
    if p % 4 != 3 {
        return Err(CatalogError::Domain(format!("{p} ≢ 3 (mod 4)")));
    }
    let pm = paley_matrix(p)?;
    let core = pm.sub(&CMat::identity(p as usize));
    Ok(bordered(&core))
}

/// BH(p+1, 4) matrix for prime p ≡ 1 mod 4: the circulant core iP − I
/// bordered by ones.
pub fn paley_bh4(p: u64) -> Result<CMat, CatalogError> {
    if p % 4 != 1 {
        return Err(CatalogError::Domain(format!("{p} ≢ 1 (mod 4)")));
    }
    let pm = paley_matrix(p)?;
    let core = pm.scale(c(0.0, 1.0)).sub(&CMat::identity(p as usize));
    Ok(bordered(&core))
}

/// Normalized symmetric conference matrix of order p+1 for prime p ≡ 1 mod 4.
pub fn conference_paley(p: u64) -> Result<CMat, CatalogError> {
    if p % 4 != 1 {
        return Err(CatalogError::Domain(format!("{p} ≢ 1 (mod 4)")));
    }
    let pm = paley_matrix(p)?;
    let n = p as usize + 1;
    Ok(CMat::from_fn(n, |i, j| {
        if i == j {
            c(0.0, 0.0)
        } else if i == 0 || j == 0 {
            c(1.0, 0.0)
        } else {
            pm[(i - 1, j - 1)]
        }
    }))
}
