//! Univariate complex polynomials over a unimodular indeterminate, equipped
//! with the reciprocal-conjugate operator that realizes complex conjugation
//! on the unit circle, and a dense root finder.

use hadlab_core::C64;

/// Polynomial in one complex variable, stored as coefficients in increasing
/// degree.  The variable is understood to range over the unit circle, so the
/// conjugate of `P(e)` equals `conj_reciprocal(P)(e) / e^deg`.
#[derive(Clone, Debug)]
pub struct RecipPoly {
    pub coeffs: Vec<C64>,
}

impl RecipPoly {
    pub fn new(coeffs: Vec<C64>) -> RecipPoly {
        RecipPoly { coeffs }
    }

    pub fn zero(degree: usize) -> RecipPoly {
        RecipPoly {
            coeffs: vec![C64::new(0.0, 0.0); degree + 1],
        }
    }

    /// Nominal degree: index of the last stored coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Largest coefficient modulus, used for relative-scale comparisons.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.norm() < tol)
    }

    pub fn eval(&self, x: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RecipPoly {
        if self.coeffs.len() <= 1 {
            return RecipPoly::zero(0);
        }
        RecipPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| c * (k as f64 + 1.0))
                .collect(),
        )
    }

    /// Reverses the coefficients at the given nominal degree and conjugates
    /// them: for |e| = 1 this satisfies `conj(P(e)) = conj_reciprocal(P)(e) /
    /// e^deg`.  Applying it twice at the same degree is the identity.
    pub fn conj_reciprocal(&self, degree: usize) -> RecipPoly {
        let mut padded = self.coeffs.clone();
        padded.resize(degree + 1, C64::new(0.0, 0.0));
        padded.reverse();
        RecipPoly::new(padded.iter().map(|c| c.conj()).collect())
    }

    pub fn add(&self, other: &RecipPoly) -> RecipPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            out[k] += c;
        }
        RecipPoly::new(out)
    }

    pub fn sub(&self, other: &RecipPoly) -> RecipPoly {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C64) -> RecipPoly {
        RecipPoly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &RecipPoly) -> RecipPoly {
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RecipPoly::new(out)
    }

    /// Strips trailing coefficients below `tol` relative to the largest one.
    fn trimmed(&self, tol: f64) -> Vec<C64> {
        let scale = self.max_coeff().max(1e-300);
        let mut c = self.coeffs.clone();
        while c.len() > 1 && c.last().unwrap().norm() < tol * scale {
            c.pop();
        }
        c
    }

    /// All complex roots, via Durand–Kerner iteration followed by Newton
    /// polishing.  Trailing near-zero coefficients are stripped first.
    pub fn roots(&self) -> Vec<C64> {
        let c = self.trimmed(1e-12);
        let n = c.len() - 1;
        if n == 0 {
            return Vec::new();
        }
        let lead = c[n];
        let monic: Vec<C64> = c.iter().map(|&x| x / lead).collect();
        let eval = |z: C64| -> C64 {
            let mut acc = C64::new(0.0, 0.0);
            for &co in monic.iter().rev() {
                acc = acc * z + co;
            }
            acc
        };
        // Initial guesses on a circle avoiding symmetry axes.
        let mut z: Vec<C64> = (0..n)
            .map(|k| C64::from_polar(1.2, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
            .collect();
        for _ in 0..200 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let mut denom = C64::new(1.0, 0.0);
                for j in 0..n {
                    if j != i {
                        denom *= z[i] - z[j];
                    }
                }
                if denom.norm() < 1e-300 {
                    continue;
                }
                let step = eval(z[i]) / denom;
                z[i] -= step;
                moved = moved.max(step.norm());
            }
            if moved < 1e-14 {
                break;
            }
        }
        // Newton polish each root.
        let dpoly = RecipPoly::new(monic.clone()).derivative();
        for r in z.iter_mut() {
            for _ in 0..50 {
                let d = dpoly.eval(*r);
                if d.norm() < 1e-300 {
                    break;
                }
                let step = eval(*r) / d;
                *r -= step;
                if step.norm() < 1e-15 {
                    break;
                }
            }
        }
        z
    }

    /// Roots within `tol` of the unit circle, each polished along the circle
    /// by a Newton step in the phase, then deduplicated.
    pub fn unimodular_roots(&self, tol: f64) -> Vec<C64> {
        let mut out: Vec<C64> = Vec::new();
        for r in self.roots() {
            if (r.norm() - 1.0).abs() > tol {
                continue;
            }
            let mut e = r / r.norm();
            // Newton on θ for Re/Im of P(e^{iθ}) jointly: minimize |P|² via
            // gradient steps; the phase derivative of P(e^{iθ}) is i e P'(e).
            let dp = self.derivative();
            for _ in 0..50 {
                let p = self.eval(e);
                let d = C64::new(0.0, 1.0) * e * dp.eval(e);
                // d|P|²/dθ = 2 Re[conj(P) dP/dθ]; second order ≈ 2|dP/dθ|².
                let g = 2.0 * (p.conj() * d).re;
                let h = 2.0 * d.norm_sqr();
                if h < 1e-300 {
                    break;
                }
                let step = g / h;
                e = C64::from_polar(1.0, e.arg() - step);
                if step.abs() < 1e-16 {
                    break;
                }
            }
            if !out.iter().any(|&q| (q - e).norm() < 1e-8) {
                out.push(e);
            }
        }
        out
    }
}
