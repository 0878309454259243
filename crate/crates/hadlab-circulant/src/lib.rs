//! Circulant and bordered-circulant complex Hadamard matrices: cyclic root
//! systems, power-residue coset parametrizations at prime orders (index 2,
//! 3 and 4), the complete index-4 solution census at order 17, circulant-core
//! constructions, and two sporadic matrices whose entries are not roots of
//! unity.

pub mod arith;
pub mod core;
pub mod indexk;
pub mod p17;
pub mod palindromic;
pub mod roots;
pub mod sporadic;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CirculantError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0}")]
    Domain(String),
    #[error("residual {0} exceeds tolerance")]
    Residual(f64),
}

pub use crate::core::{
    bordered, core_index2, core_index4_a, core_index4_b, core_index4_b_params, core_residual,
    core_x_from_z, CoreSolution,
};
pub use arith::{
    cosets, generators, is_generator, is_prime, minus_one_coset, pow_mod, transition_numbers,
    two_square_decomposition,
};
pub use indexk::{
    gaussian_decomposition, index2, index2_alphas, index3, index3_base_triples, index3_generator,
    index4_base_quad, index4_generator, index4_params, index4_symmetric, IndexKSolution,
    SolutionClass,
};
pub use p17::{index4_p17_all, lift, SolutionSet};
pub use palindromic::{palindromic_transform, transform_roots_in_band};
pub use roots::{backelin, classical, cyclic_residual, x_from_z, CyclicRoot};
pub use sporadic::{q11, q11_gamma, q7, q7_alpha, q7_poly};
