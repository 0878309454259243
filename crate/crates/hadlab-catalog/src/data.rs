//! Embedded sporadic Butson matrices stored as root-exponent tables.

use hadlab_core::{blog_to_cmat, BLog, CMat};

fn from_table(q: u32, rows: &[&[u32]]) -> CMat {
    let l = BLog::from_rows(q, rows);
    blog_to_cmat(&l)
}

/// An isolated BH(14,4) matrix (exponents of i).
pub fn l14a() -> CMat {
    from_table(
        4,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 2, 2, 0, 3, 2, 2, 1, 3, 2, 1, 0],
            &[0, 0, 1, 1, 1, 3, 0, 3, 2, 3, 2, 0, 2, 2],
            &[0, 0, 1, 3, 3, 3, 2, 1, 1, 2, 0, 1, 3, 2],
            &[0, 0, 3, 0, 2, 1, 2, 3, 0, 0, 1, 2, 2, 2],
            &[0, 1, 2, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1, 0],
            &[0, 1, 3, 1, 0, 2, 2, 3, 3, 2, 3, 1, 0, 1],
            &[0, 2, 0, 0, 2, 1, 1, 1, 2, 3, 3, 3, 0, 2],
            &[0, 2, 0, 3, 1, 2, 0, 2, 3, 1, 1, 1, 3, 3],
            &[0, 2, 1, 2, 0, 0, 2, 2, 0, 0, 2, 3, 3, 1],
            &[0, 2, 2, 0, 1, 3, 2, 0, 2, 1, 0, 3, 2, 0],
            &[0, 2, 3, 2, 3, 0, 1, 3, 1, 2, 1, 0, 1, 3],
            &[0, 3, 2, 1, 0, 1, 0, 1, 0, 2, 3, 2, 2, 3],
            &[0, 3, 2, 2, 3, 2, 0, 0, 2, 0, 1, 2, 0, 1],
        ],
    )
}

/// A BH(19,6) matrix assembled from 6×6 and 6×7 blocks (exponents of the
/// sixth root of unity).
pub fn w19() -> CMat {
    from_table(
        6,
        &[
            &[3, 0, 1, 1, 0, 0, 5, 4, 3, 5, 3, 2, 1, 1, 3, 5, 4, 3, 0],
            &[0, 0, 1, 3, 3, 1, 4, 2, 4, 5, 1, 5, 1, 4, 3, 3, 1, 5, 0],
            &[0, 0, 1, 4, 2, 4, 2, 4, 3, 2, 4, 1, 3, 3, 1, 4, 5, 1, 0],
            &[1, 2, 4, 2, 1, 2, 4, 4, 2, 4, 5, 0, 3, 5, 1, 1, 3, 4, 0],
            &[2, 5, 4, 3, 2, 0, 4, 2, 0, 1, 4, 2, 4, 1, 5, 3, 1, 3, 0],
            &[0, 3, 5, 4, 5, 0, 4, 5, 3, 1, 3, 4, 5, 3, 4, 1, 3, 1, 0],
            &[5, 4, 3, 5, 3, 2, 3, 0, 1, 1, 0, 0, 1, 1, 3, 5, 4, 3, 0],
            &[4, 2, 4, 5, 1, 5, 0, 0, 1, 3, 3, 1, 1, 4, 3, 3, 1, 5, 0],
            &[2, 4, 3, 2, 4, 1, 0, 0, 1, 4, 2, 4, 3, 3, 1, 4, 5, 1, 0],
            &[4, 4, 2, 4, 5, 0, 1, 2, 4, 2, 1, 2, 3, 5, 1, 1, 3, 4, 0],
            &[4, 2, 0, 1, 4, 2, 2, 5, 4, 3, 2, 0, 4, 1, 5, 3, 1, 3, 0],
            &[4, 5, 3, 1, 3, 4, 0, 3, 5, 4, 5, 0, 5, 3, 4, 1, 3, 1, 0],
            &[5, 5, 3, 3, 2, 1, 5, 5, 3, 3, 2, 1, 0, 0, 0, 0, 1, 1, 3],
            &[5, 2, 3, 1, 5, 3, 5, 2, 3, 1, 5, 3, 0, 0, 1, 3, 0, 1, 0],
            &[3, 3, 5, 5, 1, 2, 3, 3, 5, 5, 1, 2, 1, 3, 0, 0, 0, 1, 0],
            &[1, 3, 2, 5, 3, 5, 1, 3, 2, 5, 3, 5, 0, 1, 0, 1, 0, 4, 1],
            &[2, 5, 1, 3, 5, 3, 2, 5, 1, 3, 5, 3, 1, 0, 4, 1, 1, 0, 0],
            &[3, 1, 5, 2, 3, 5, 3, 1, 5, 2, 3, 5, 1, 0, 1, 0, 4, 0, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 1, 1, 0, 1, 0, 0],
        ],
    )
}

/// A BH(16,4) matrix with 5+5+6 block structure (exponents of i).
pub fn bh16_4() -> CMat {
    from_table(
        4,
        &[
            &[0, 0, 1, 0, 0, 2, 3, 2, 2, 2, 0, 2, 2, 3, 1, 0],
            &[1, 2, 2, 3, 3, 3, 3, 3, 1, 1, 1, 1, 3, 2, 3, 0],
            &[0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 1, 3, 2, 0],
            &[1, 0, 3, 2, 1, 3, 2, 1, 1, 2, 2, 3, 2, 1, 0, 0],
            &[0, 2, 3, 3, 1, 2, 0, 1, 2, 0, 3, 2, 0, 1, 2, 0],
            &[2, 3, 2, 2, 2, 0, 0, 1, 0, 0, 0, 2, 2, 3, 1, 0],
            &[3, 3, 3, 1, 1, 1, 2, 2, 3, 3, 1, 1, 3, 2, 3, 0],
            &[0, 2, 0, 2, 0, 0, 0, 2, 0, 2, 2, 0, 1, 3, 2, 0],
            &[3, 2, 1, 1, 2, 1, 0, 3, 2, 1, 2, 3, 2, 1, 0, 0],
            &[2, 0, 1, 2, 0, 0, 2, 3, 3, 1, 3, 2, 0, 1, 2, 0],
            &[0, 3, 2, 2, 1, 0, 3, 2, 2, 1, 0, 0, 0, 0, 0, 2],
            &[2, 3, 0, 1, 2, 2, 3, 0, 1, 2, 0, 0, 0, 0, 2, 0],
            &[2, 1, 3, 2, 0, 2, 1, 3, 2, 0, 0, 0, 1, 3, 0, 0],
            &[1, 2, 1, 3, 3, 1, 2, 1, 3, 3, 1, 3, 0, 0, 0, 0],
            &[3, 1, 2, 0, 2, 3, 1, 2, 0, 2, 3, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 1, 0, 0],
        ],
    )
}

/// A BH(16,6) matrix (exponents of the sixth root of unity).
pub fn bh16_6() -> CMat {
    from_table(
        6,
        &[
            &[0, 0, 0, 0, 0, 3, 0, 3, 3, 3, 0, 2, 2, 4, 4, 0],
            &[0, 0, 0, 2, 4, 0, 3, 3, 5, 1, 0, 4, 4, 2, 2, 0],
            &[0, 0, 3, 4, 2, 3, 3, 3, 1, 5, 3, 0, 3, 0, 3, 0],
            &[0, 2, 4, 2, 3, 3, 5, 1, 5, 3, 3, 2, 5, 4, 1, 0],
            &[0, 4, 2, 3, 4, 3, 1, 5, 3, 1, 3, 4, 1, 2, 5, 0],
            &[3, 0, 3, 3, 3, 0, 0, 0, 0, 0, 0, 2, 2, 4, 4, 0],
            &[0, 3, 3, 5, 1, 0, 0, 0, 2, 4, 0, 4, 4, 2, 2, 0],
            &[3, 3, 3, 1, 5, 0, 0, 3, 4, 2, 3, 0, 3, 0, 3, 0],
            &[3, 5, 1, 5, 3, 0, 2, 4, 2, 3, 3, 2, 5, 4, 1, 0],
            &[3, 1, 5, 3, 1, 0, 4, 2, 3, 4, 3, 4, 1, 2, 5, 0],
            &[0, 0, 3, 3, 3, 0, 0, 3, 3, 3, 0, 0, 0, 0, 0, 3],
            &[4, 2, 0, 4, 2, 4, 2, 0, 4, 2, 0, 0, 0, 0, 3, 0],
            &[4, 2, 3, 1, 5, 4, 2, 3, 1, 5, 0, 0, 0, 3, 0, 0],
            &[2, 4, 0, 2, 4, 2, 4, 0, 2, 4, 0, 0, 3, 0, 0, 0],
            &[2, 4, 3, 5, 1, 2, 4, 3, 5, 1, 0, 3, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0],
        ],
    )
}
