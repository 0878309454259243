//! Named constructions of complex Hadamard matrices: parametric families,
//! sporadic examples shipped as exponent tables, residue-based bordered and
//! bicirculant matrices, and block-array assembly with validation.

pub mod conference;
pub mod data;
pub mod families6;
pub mod families8;
pub mod petrescu;
pub mod residue;
pub mod weighing;

use hadlab_core::{CMat, C64};
use thiserror::Error;

pub use conference::{conf_core_three_entry, conf_three_entry, q9, q9h, selfadj_lift, two_entry};
pub use data::{bh16_4, bh16_6, l14a, w19};
pub use families6::{b6_1, c6, d6_1, f4_1, f6_2, k6_2, k6_3, m6_1, s6, x6_2, x6_discriminant};
pub use families8::{d8b_5, f8_5, s8_4};
pub use petrescu::{
    p13a_4, p4_1, p7_1, petrescu_assemble, petrescu_blocks, petrescu_validate, Block,
    IdentityCheck, PetrescuReport,
};
pub use residue::{conference_paley, paley_bh4, paley_matrix, paley_real};
pub use weighing::{bhp2_6, bicirculant, w10_3, w22, w25, w34, w58};

/// Errors reported by the constructors.
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("parameter outside the family domain: {0}")]
    Domain(String),
    #[error("wrong number of parameters for {family}: expected {expected}, got {got}")]
    Arity {
        family: String,
        expected: usize,
        got: usize,
    },
}

/// A named family together with a concrete parameter vector.  Real-valued
/// parameters (phases, primes, branch flags) are carried in the real part.
#[derive(Clone, Debug)]
pub struct FamilyPoint {
    pub family_id: String,
    pub params: Vec<C64>,
}

impl FamilyPoint {
    pub fn new(family_id: &str, params: Vec<C64>) -> FamilyPoint {
        FamilyPoint {
            family_id: family_id.to_string(),
            params,
        }
    }
}

fn need(p: &FamilyPoint, n: usize) -> Result<(), CatalogError> {
    if p.params.len() != n {
        return Err(CatalogError::Arity {
            family: p.family_id.clone(),
            expected: n,
            got: p.params.len(),
        });
    }
    Ok(())
}

fn as_prime(z: C64, what: &str) -> Result<u64, CatalogError> {
    let p = z.re.round();
    if z.im.abs() > 1e-9 || (z.re - p).abs() > 1e-9 || p < 2.0 {
        return Err(CatalogError::Domain(format!("{what} must be a prime integer")));
    }
    Ok(p as u64)
}

fn as_order(z: C64, what: &str) -> Result<usize, CatalogError> {
    let n = z.re.round();
    if z.im.abs() > 1e-9 || (z.re - n).abs() > 1e-9 || n < 1.0 {
        return Err(CatalogError::Domain(format!("{what} must be a positive integer")));
    }
    Ok(n as usize)
}

fn as_flag(z: C64) -> bool {
    z.re >= 0.0
}

/// Builds the matrix of a [`FamilyPoint`].  Parameter conventions:
/// unimodular entries are passed as complex numbers, phases as real numbers
/// in the real part, primes/orders as real integers, and branch choices as
/// the sign of a real parameter (≥ 0 means the principal branch).
pub fn construct(p: &FamilyPoint) -> Result<CMat, CatalogError> {
    let q = &p.params;
    match p.family_id.as_str() {
        "F4_1" => {
            need(p, 1)?;
            families6::f4_1(q[0])
        }
        "F6_2" => {
            need(p, 2)?;
            families6::f6_2(q[0], q[1])
        }
        "D6_1" => {
            need(p, 1)?;
            families6::d6_1(q[0])
        }
        "S6" => {
            need(p, 0)?;
            Ok(families6::s6())
        }
        "C6" => {
            need(p, 0)?;
            Ok(families6::c6())
        }
        "B6_1" => {
            need(p, 2)?;
            families6::b6_1(q[0].re, as_flag(q[1]))
        }
        "M6_1" => {
            need(p, 1)?;
            families6::m6_1(q[0])
        }
        "X6_2" => {
            need(p, 1)?;
            families6::x6_2(q[0])
        }
        "K6_2" => {
            need(p, 2)?;
            families6::k6_2(q[0].re, q[1].re)
        }
        "K6_3" => {
            need(p, 3)?;
            families6::k6_3(q[0].re, q[1].re, q[2])
        }
        "F8_5" => {
            need(p, 5)?;
            families8::f8_5(q[0], q[1], q[2], q[3], q[4])
        }
        "S8_4" => {
            need(p, 4)?;
            families8::s8_4(q[0], q[1], q[2], q[3])
        }
        "D8B_5" => {
            need(p, 5)?;
            families8::d8b_5(q[0], q[1], q[2], q[3], q[4])
        }
        "P7_1" => {
            need(p, 1)?;
            petrescu::p7_1(q[0])
        }
        "P13A_4" => {
            need(p, 4)?;
            petrescu::p13a_4(q[0], q[1], q[2], q[3])
        }
        "P4_1" => {
            need(p, 1)?;
            petrescu::p4_1(q[0])
        }
        "BH16_4" => {
            need(p, 0)?;
            Ok(data::bh16_4())
        }
        "BH16_6" => {
            need(p, 0)?;
            Ok(data::bh16_6())
        }
        "L14A" => {
            need(p, 0)?;
            Ok(data::l14a())
        }
        "W19" => {
            need(p, 0)?;
            Ok(data::w19())
        }
        "W22" => {
            need(p, 0)?;
            Ok(weighing::w22())
        }
        "W25" => {
            need(p, 0)?;
            Ok(weighing::w25())
        }
        "W34" => {
            need(p, 0)?;
            Ok(weighing::w34())
        }
        "W58" => {
            need(p, 0)?;
            Ok(weighing::w58())
        }
        "BHp2_6" => {
            need(p, 1)?;
            weighing::bhp2_6(as_prime(q[0], "p")?)
        }
        "PALEY_REAL" => {
            need(p, 1)?;
            residue::paley_real(as_prime(q[0], "p")?)
        }
        "PALEY_BH4" => {
            need(p, 1)?;
            residue::paley_bh4(as_prime(q[0], "p")?)
        }
        "CONF_S" => {
            need(p, 2)?;
            conference::conf_three_entry(as_prime(q[0], "p")?, as_flag(q[1]))
        }
        "CONF_F5" => {
            need(p, 3)?;
            conference::conf_core_three_entry(as_prime(q[0], "p")?, as_flag(q[1]), as_flag(q[2]))
        }
        "TWO_ENTRY" => {
            need(p, 2)?;
            conference::two_entry(as_prime(q[0], "p")?, as_flag(q[1]))
        }
        "SELFADJ_LIFT" => {
            need(p, 1)?;
            let n = as_order(q[0], "n")?;
            let h = hadlab_core::fourier(n);
            conference::selfadj_lift(&h, &CMat::ones(n))
        }
        "Q9H" => {
            need(p, 0)?;
            Ok(conference::q9h())
        }
        other => Err(CatalogError::UnknownFamily(other.to_string())),
    }
}
