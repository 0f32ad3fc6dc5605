//! Modified Bessel function of imaginary order, K_{is}(x), and its zeros.
//!
//! K_{is} is real for s, x > 0 and oscillates as x -> 0 with period pi/s in
//! ln x; its countably many positive zeros accumulate geometrically at the
//! origin, which is what produces geometric bound-state towers elsewhere in
//! this crate.
//!
//! Evaluation strategy:
//! - x <= 2: the convergent power series in complex order,
//!   K_{is}(x) = -pi/sinh(pi s) * Im sum_k (x/2)^{is} (x^2/4)^k / (k! Gamma(k+1+is)),
//!   whose k = 0 term is the familiar small-x oscillation. The series keeps
//!   full relative accuracy down to the exponentially small zeros, where the
//!   integral representation would lose everything to cancellation.
//! - x > 2: adaptive quadrature of K_{is}(x) = int_0^inf e^{-x cosh t} cos(st) dt,
//!   with e^{-x} factored out so the integrand is O(1).
//!
//! Both routes are cross-validated against each other in the tests over
//! x in [0.05, 2].

use super::gamma::{arg_gamma_one_plus_is, ln_gamma_complex};
use super::quad::integrate_adaptive;
use super::roots::{find_root, RootBracket};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Switch point between the power series and the integral representation.
const SERIES_LIMIT: f64 = 2.0;

/// Beyond this argument e^{-x} has no headroom left in f64; the function
/// value is reported as exactly zero. See [`bessel_k_imag_saturates`].
const SATURATION_X: f64 = 705.0;

/// Zeros below this are not resolvable without falling off the f64 exponent
/// range during refinement.
const ZERO_FLOOR: f64 = 1e-280;

fn validate_order(s: f64) -> Result<()> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::invalid(format!("order parameter s must be finite and > 0, got {s}")));
    }
    Ok(())
}

/// K_{is}(x) for s > 0, x > 0.
///
/// Returns exactly 0.0 once x is large enough that e^{-x} underflows
/// ([`bessel_k_imag_saturates`] reports that condition).
pub fn bessel_k_imag(s: f64, x: f64) -> Result<f64> {
    validate_order(s)?;
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::invalid(format!("argument x must be finite and > 0, got {x}")));
    }
    if x >= SATURATION_X {
        return Ok(0.0);
    }
    if x <= SERIES_LIMIT {
        Ok(k_series(s, x))
    } else {
        Ok(k_quadrature(s, x))
    }
}

/// True when [`bessel_k_imag`] underflows to zero at this argument.
pub fn bessel_k_imag_saturates(x: f64) -> bool {
    x >= SATURATION_X
}

/// Convergent complex-order power series; accurate for x <= 2.
fn k_series(s: f64, x: f64) -> f64 {
    let phase = Complex64::new(0.0, s * (0.5 * x).ln()).exp();
    let mut inv_gamma = (-ln_gamma_complex(Complex64::new(1.0, s))).exp();
    let q = 0.25 * x * x;

    let mut sum = Complex64::new(0.0, 0.0);
    let mut coeff = 1.0_f64; // (x^2/4)^k / k!
    let mut largest = 0.0_f64;
    for k in 0..200u32 {
        let term = inv_gamma * coeff;
        sum += term;
        let magnitude = term.norm();
        largest = largest.max(magnitude);
        if magnitude < 1e-18 * largest {
            break;
        }
        inv_gamma /= Complex64::new(k as f64 + 1.0, s);
        coeff *= q / (k as f64 + 1.0);
    }
    -PI / (PI * s).sinh() * (phase * sum).im
}

/// Integral representation with the exponential factored out:
/// K_{is}(x) = e^{-x} int_0^T e^{-2x sinh^2(t/2)} cos(st) dt.
fn k_quadrature(s: f64, x: f64) -> f64 {
    // 2 x sinh^2(T/2) = 709 bounds the damped factor at e^{-709}.
    let t_max = 2.0 * (709.0 / (2.0 * x)).sqrt().asinh();
    let r = integrate_adaptive(
        |t| {
            let sh = (0.5 * t).sinh();
            (-2.0 * x * sh * sh).exp() * (s * t).cos()
        },
        0.0,
        t_max,
        1e-13,
    );
    (-x).exp() * r.value
}

/// Leading small-argument oscillation:
/// -sqrt(pi/(s sinh(pi s))) * sin(s ln(x/2) - arg Gamma(1+is)).
///
/// Relative accuracy degrades as O(x^2); exposed for cross-checks and for
/// seeding searches near the exact zeros.
pub fn bessel_k_imag_small_x_asymptotic(s: f64, x: f64) -> Result<f64> {
    validate_order(s)?;
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::invalid(format!("argument x must be finite and > 0, got {x}")));
    }
    let amplitude = (PI / (s * (PI * s).sinh())).sqrt();
    Ok(-amplitude * (s * (0.5 * x).ln() - arg_gamma_one_plus_is(s)).sin())
}

/// Location of the n-th zero according to the leading oscillation (n >= 1).
/// Exact zeros sit within a relative O(x_n^2) of these.
pub(crate) fn leading_zero_estimate(s: f64, n: u32) -> f64 {
    2.0 * ((arg_gamma_one_plus_is(s) - n as f64 * PI) / s).exp()
}

/// Zeros of K_{is} returned by [`bessel_k_imag_zeros`].
#[derive(Debug, Clone)]
pub struct BesselZeros {
    /// Zeros in decreasing order, all below the requested upper limit.
    pub zeros: Vec<f64>,
    /// True when fewer than the requested number of zeros could be resolved
    /// before reaching the f64 precision floor.
    pub truncated: bool,
}

/// Finds the `n_max` largest zeros of K_{is} below `x_upper`, in decreasing
/// order.
///
/// Scans log-spaced arguments at 48 points per expected oscillation period
/// pi/s, then polishes each sign change with Brent's method. Zeros smaller
/// than ~1e-280 are abandoned and reported through `truncated`.
pub fn bessel_k_imag_zeros(s: f64, n_max: usize, x_upper: f64) -> Result<BesselZeros> {
    validate_order(s)?;
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1".to_string()));
    }
    if !(x_upper.is_finite() && x_upper > 0.0) {
        return Err(Error::invalid(format!("x_upper must be finite and > 0, got {x_upper}")));
    }

    let eval = |x: f64| bessel_k_imag(s, x).expect("argument stays inside the valid domain");
    let step = (PI / s) / 48.0;
    let mut ln_x = x_upper.min(SATURATION_X - 1.0).ln();
    let mut f_here = eval(ln_x.exp());
    let mut zeros = Vec::with_capacity(n_max);

    while zeros.len() < n_max && ln_x.exp() > ZERO_FLOOR {
        let ln_next = ln_x - step;
        let f_next = eval(ln_next.exp());
        if f_here == 0.0 {
            zeros.push(ln_x.exp());
        } else if f_here * f_next < 0.0 {
            let bracket = RootBracket::new(ln_next.exp(), ln_x.exp(), f_next, f_here)?;
            zeros.push(find_root(eval, bracket, 1e-15)?);
        }
        ln_x = ln_next;
        f_here = f_next;
    }
    let truncated = zeros.len() < n_max;
    Ok(BesselZeros { zeros, truncated })
}
