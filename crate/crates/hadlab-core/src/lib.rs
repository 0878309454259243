//! Core linear algebra for the Hadamard matrix workbench.
//!
//! Provides the dense complex matrix carrier [`CMat`], the root-exponent
//! representation [`BLog`] for matrices built from roots of unity, Hadamard
//! verification, dephasing, tensor-type constructions and the generic
//! parametrization schemes that introduce free phases into a matrix.

mod blog;
mod error;
mod io;
mod matrix;
mod param;
mod tensor;

pub use blog::{blog_to_cmat, cmat_to_blog, BLog};
pub use error::CoreError;
pub use io::{load_matrix, read_blog, read_cmat, write_blog, write_cmat};
pub use matrix::{CMat, VerifyReport, C64, TOL_ORTHO, TOL_UNIMOD};
pub use param::{
    nicoara_variant1, nicoara_variant2, parametrize_block, parametrize_block_all,
    parametrize_pair_rows, BlockOrbit, PairOrbit,
};
pub use tensor::{dita, factorize, fourier_product_equivalent, generalized_tensor};

/// Principal primitive n-th root of unity exp(2πi/n).
pub fn root_of_unity(n: usize) -> C64 {
    use std::f64::consts::PI;
    let theta = 2.0 * PI / n as f64;
    C64::new(theta.cos(), theta.sin())
}

/// exp(2πi·k/n) with exact reduction of k mod n.
pub fn root_power(n: usize, k: i64) -> C64 {
    use std::f64::consts::PI;
    let k = k.rem_euclid(n as i64);
    let theta = 2.0 * PI * k as f64 / n as f64;
    C64::new(theta.cos(), theta.sin())
}

/// The Fourier matrix F_n with entries exp(2πi(i-1)(j-1)/n).
pub fn fourier(n: usize) -> CMat {
    assert!(n >= 1, "fourier: order must be positive");
    let mut m = CMat::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = root_power(n, (i * j) as i64);
        }
    }
    m
}

/// Kronecker product of two Hadamard matrices (Sylvester's lifting).
pub fn kronecker(h: &CMat, k: &CMat) -> CMat {
    let (n, m) = (h.order(), k.order());
    let mut out = CMat::zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            let hij = h[(i, j)];
            for a in 0..m {
                for b in 0..m {
                    out[(i * m + a, j * m + b)] = hij * k[(a, b)];
                }
            }
        }
    }
    out
}
