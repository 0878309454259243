use std::fmt::Write as _;
use std::path::Path;

use crate::blog::BLog;
use crate::error::CoreError;
use crate::matrix::{CMat, C64};

/// Serialize to the `.cmat` text format: line 1 is the order n, then n lines
/// of n entries `re,im` with 17 significant digits.
pub fn write_cmat(m: &CMat) -> String {
    let n = m.order();
    let mut s = String::new();
    let _ = writeln!(s, "{n}");
    for i in 0..n {
        let line: Vec<String> = (0..n)
            .map(|j| {
                let z = m[(i, j)];
                format!("{:.16e},{:.16e}", z.re, z.im)
            })
            .collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

/// Parse the `.cmat` text format.
pub fn read_cmat(text: &str) -> Result<CMat, CoreError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| CoreError::Parse("empty .cmat input".into()))?
        .trim()
        .parse()
        .map_err(|e| CoreError::Parse(format!("bad order line: {e}")))?;
    let mut m = CMat::zeros(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| CoreError::Parse(format!("missing row {i}")))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != n {
            return Err(CoreError::Parse(format!(
                "row {i}: expected {n} entries, found {}",
                fields.len()
            )));
        }
        for (j, f) in fields.iter().enumerate() {
            let (re, im) = f
                .split_once(',')
                .ok_or_else(|| CoreError::Parse(format!("row {i} col {j}: missing comma")))?;
            let re: f64 = re
                .parse()
                .map_err(|e| CoreError::Parse(format!("row {i} col {j}: {e}")))?;
            let im: f64 = im
                .parse()
                .map_err(|e| CoreError::Parse(format!("row {i} col {j}: {e}")))?;
            m[(i, j)] = C64::new(re, im);
        }
    }
    Ok(m)
}

/// Serialize to the `.blog` text format: line 1 is `n q`, then n lines of n
/// space-separated exponents in [0,q).
pub fn write_blog(l: &BLog) -> String {
    let n = l.order();
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", n, l.root_order());
    for i in 0..n {
        let line: Vec<String> = l.row(i).iter().map(|e| e.to_string()).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

/// Parse the `.blog` text format.
pub fn read_blog(text: &str) -> Result<BLog, CoreError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CoreError::Parse("empty .blog input".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| CoreError::Parse("missing order".into()))?
        .parse()
        .map_err(|e| CoreError::Parse(format!("bad order: {e}")))?;
    let q: u32 = parts
        .next()
        .ok_or_else(|| CoreError::Parse("missing root order".into()))?
        .parse()
        .map_err(|e| CoreError::Parse(format!("bad root order: {e}")))?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| CoreError::Parse(format!("missing row {i}")))?;
        let row: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
        let row = row.map_err(|e| CoreError::Parse(format!("row {i}: {e}")))?;
        if row.len() != n {
            return Err(CoreError::Parse(format!(
                "row {i}: expected {n} entries, found {}",
                row.len()
            )));
        }
        entries.extend(row);
    }
    BLog::new(n, q, entries)
}

/// Convenience file loader dispatching on extension (.cmat/.blog).
pub fn load_matrix(path: &Path) -> Result<CMat, CoreError> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("blog") => Ok(crate::blog::blog_to_cmat(&read_blog(&text)?)),
        _ => read_cmat(&text),
    }
}
