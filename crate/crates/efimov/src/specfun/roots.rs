//! Bracketed scalar root finding.

use crate::error::{Error, Result};

/// A sign-changing interval for [`find_root`].
///
/// The invariant `f_lo * f_hi <= 0` is checked on construction, so holding a
/// `RootBracket` is proof that the interval straddles a root of a continuous
/// function.
#[derive(Debug, Clone, Copy)]
pub struct RootBracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl RootBracket {
    /// Builds a bracket from endpoints with already-known function values.
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::invalid(format!(
                "bracket endpoints must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        if !(f_lo.is_finite() && f_hi.is_finite()) {
            return Err(Error::invalid(format!(
                "bracket function values must be finite, got {f_lo} and {f_hi}"
            )));
        }
        if f_lo * f_hi > 0.0 {
            return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(RootBracket { lo, hi, f_lo, f_hi })
    }

    /// Evaluates `f` at both endpoints and builds the bracket.
    pub fn evaluate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self> {
        let (f_lo, f_hi) = (f(lo), f(hi));
        RootBracket::new(lo, hi, f_lo, f_hi)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Finds a root of `f` inside `bracket` by Brent's method.
///
/// Combines inverse quadratic interpolation and the secant step with a
/// bisection fallback, so convergence is superlinear near simple roots but
/// never slower than bisection. `rel_tol` bounds the relative width of the
/// final interval; it is floored at a few machine epsilons.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: RootBracket, rel_tol: f64) -> Result<f64> {
    if !(rel_tol.is_finite() && rel_tol >= 0.0) {
        return Err(Error::invalid(format!("rel_tol must be finite and >= 0, got {rel_tol}")));
    }
    let rel_tol = rel_tol.max(4.0 * f64::EPSILON);

    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let (mut fa, mut fb) = (bracket.f_lo, bracket.f_hi);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..200 {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * rel_tol * b.abs().max(f64::MIN_POSITIVE);
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Attempt inverse quadratic interpolation (secant if a == c).
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if fb == 0.0 {
            return Ok(b);
        }
    }
    Err(Error::BracketingFailed(
        "Brent iteration did not converge within 200 steps".into(),
    ))
}
