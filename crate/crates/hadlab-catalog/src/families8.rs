//! Parametric families of complex Hadamard matrices of order 8.

use crate::CatalogError;
use hadlab_core::{CMat, C64};

fn mat(rows: Vec<Vec<C64>>) -> CMat {
    CMat::from_rows(rows).expect("rectangular row data")
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn unimod(z: C64, name: &str) -> Result<(), CatalogError> {
    if (z.norm() - 1.0).abs() > 1e-9 {
        return Err(CatalogError::Domain(format!(
            "parameter {name} = {z} is not unimodular"
        )));
    }
    Ok(())
}

/// Five-parameter order-8 Fourier-type family.
pub fn f8_5(a: C64, b: C64, cc: C64, d: C64, e: C64) -> Result<CMat, CatalogError> {
    for (z, n) in [(a, "a"), (b, "b"), (cc, "c"), (d, "d"), (e, "e")] {
        unimod(z, n)?;
    }
    let one = c(1.0, 0.0);
    let ace = a.conj() * cc * e;
    Ok(mat(vec![
        vec![one, one, one, one, one, one, one, one],
        vec![one, a, b, cc, -one, -a, -b, -cc],
        vec![one, d, -one, -d, one, d, -one, -d],
        vec![one, e, -b, -ace, -one, -e, b, ace],
        vec![one, -one, one, -one, one, -one, one, -one],
        vec![one, -a, b, -cc, -one, a, -b, cc],
        vec![one, -d, -one, d, one, -d, -one, d],
        vec![one, -e, -b, ace, -one, e, b, -ace],
    ]))
}

/// Four-parameter order-8 family arising from translational tiles.
pub fn s8_4(a: C64, b: C64, cc: C64, d: C64) -> Result<CMat, CatalogError> {
    for (z, n) in [(a, "a"), (b, "b"), (cc, "c"), (d, "d")] {
        unimod(z, n)?;
    }
    let one = c(1.0, 0.0);
    let db = d.conj();
    Ok(mat(vec![
        vec![one, one, one, one, one, one, one, one],
        vec![one, d, -d, -d, -one, cc * d, -cc * d, d],
        vec![one, a * db, b * db, -b * db, one, -one, -one, -a * db],
        vec![one, a, -b, b, -one, -cc * d, cc * d, -a],
        vec![one, -one, -b * db, b * db, one, cc, -cc, -one],
        vec![one, -d, b, -b, -one, d, d, -d],
        vec![one, -a * db, -one, -one, one, -cc, cc, a * db],
        vec![one, -a, d, d, -one, -d, -d, a],
    ]))
}

/// Five-parameter order-8 family constructed from mutually unbiased bases of
/// order 4.
pub fn d8b_5(a: C64, b: C64, cc: C64, d: C64, e: C64) -> Result<CMat, CatalogError> {
    for (z, n) in [(a, "a"), (b, "b"), (cc, "c"), (d, "d"), (e, "e")] {
        unimod(z, n)?;
    }
    let one = c(1.0, 0.0);
    let bce = b * cc.conj() * e;
    Ok(mat(vec![
        vec![one, one, one, one, one, one, one, one],
        vec![one, a, -a, d, -d, -a, a, -one],
        vec![one, b, bce, -d, d, -bce, -b, -one],
        vec![one, cc, -e, -one, -one, e, -cc, one],
        vec![one, -cc, e, -one, -one, -e, cc, one],
        vec![one, -b, -bce, -d, d, bce, b, -one],
        vec![one, -a, a, d, -d, a, -a, -one],
        vec![one, -one, -one, one, one, -one, -one, one],
    ]))
}
