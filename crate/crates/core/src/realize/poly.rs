use serde::{Deserialize, Serialize};

use super::RealizeError;

/// Real polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Trailing zero coefficients are trimmed so the leading one is nonzero.
    /// The zero polynomial keeps a single `0.0`.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::new(vec![0.0]);
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }
}

/// Root of `p` in `[lo, hi]` by bisection with Newton steps taken whenever
/// they stay inside the current bracket.
pub fn find_root(p: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<f64, RealizeError> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let (flo, fhi) = (p.eval(lo), p.eval(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || !flo.is_finite() || !fhi.is_finite() {
        return Err(RealizeError::NoSignChange { lo, hi });
    }
    let dp = p.derivative();
    let rising = fhi > 0.0;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..400 {
        let fx = p.eval(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == rising {
            hi = x;
        } else {
            lo = x;
        }
        let d = dp.eval(x);
        let newton = x - fx / d;
        let next = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let moved = (next - x).abs();
        x = next;
        if moved <= f64::EPSILON * x.abs().max(1.0) || hi - lo <= f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }
    if p.eval(x).abs() <= tol {
        Ok(x)
    } else {
        Err(RealizeError::NoConvergence { value: x, residual: p.eval(x) })
    }
}
