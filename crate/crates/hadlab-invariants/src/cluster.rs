use hadlab_core::C64;

/// Cluster a list of real values with an absolute tolerance: returns sorted
/// (representative, multiplicity) pairs.  Values within `tol` of the current
/// cluster representative are merged.
pub fn cluster_reals(mut values: Vec<f64>, tol: f64) -> Vec<(f64, u64)> {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<(f64, u64)> = Vec::new();
    for v in values {
        match out.last_mut() {
            Some((rep, count)) if (v - *rep).abs() <= tol => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Deduplicate complex values with an absolute tolerance, returning the
/// representatives sorted by (re, im).
pub fn dedup_complex(values: impl IntoIterator<Item = C64>, tol: f64) -> Vec<C64> {
    let mut reps: Vec<C64> = Vec::new();
    for v in values {
        if !reps.iter().any(|r| (r - v).norm() <= tol) {
            reps.push(v);
        }
    }
    reps.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    reps
}
