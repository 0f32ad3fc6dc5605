//! Phase-space (WKB) thermodynamics and state counting for radial channels.
//!
//! Everything here is an integral over the one-dimensional phase space of a
//! radial coordinate r in [r_lo, r_hi] moving in a potential V(r), with the
//! measure dp dr / (2 pi hbar) and units hbar = 2m = 1:
//!
//! - [`partition_function`]: Z(beta) = (2 sqrt(pi))^{-1} beta^{-1/2}
//!   Int e^{-beta V(r)} dr, the classical trace of e^{-beta H};
//! - [`density_of_states`]: g(E) = (2 pi)^{-1} Int dr / sqrt(E - V(r)) over
//!   the classically allowed region V < E;
//! - [`count_states_semiclassical`]: N(E) = pi^{-1} Int sqrt(E - V(r)) dr
//!   for the attractive inverse-square channel, the number of bound states
//!   below energy E <= 0.
//!
//! The three are one family: g = dN/dE, and Z is the Laplace transform of g
//! in beta. That rigidity pins every prefactor; for a flat potential on a
//! box of length L they reduce to the free-particle results
//! Z = L / (2 sqrt(pi beta)) and g = L / (2 pi sqrt(E)), and for the
//! attractive inverse-square channel N(0) reproduces the logarithmic state
//! count (s0/pi) ln(a/r0) of [`crate::spectrum::count_states_formula`].
//!
//! Angular momentum enters through the Langer form of the centrifugal term
//! ([`langer_potential`]): (l + 1/2)^2 in place of l(l + 1). For the l = 0
//! attractive channel this cancels the 1/4 in the radial coupling exactly,
//! leaving -s0^2/r^2; with the bare l(l + 1) = 0 the channel would look
//! stronger by that 1/4 and the semiclassical count would drift further
//! from the quantum one (see the comparison test at the bottom).

use crate::error::{Error, Result};
use crate::specfun::{find_root, integrate_adaptive, RootBracket};
use std::f64::consts::{FRAC_2_SQRT_PI, PI};
use std::fmt;

/// 1 / (2 sqrt(pi)): partition-function prefactor in hbar = 2m = 1 units.
const PARTITION_PREFACTOR: f64 = FRAC_2_SQRT_PI / 4.0;

/// 1 / (2 pi): the phase-space measure dp dr / (2 pi hbar) at hbar = 1.
const DOS_PREFACTOR: f64 = 1.0 / (2.0 * PI);

/// Relative tolerance handed to the adaptive quadrature.
const QUAD_TOL: f64 = 1e-11;

/// Accepted relative error on the summed density-of-states integral. Looser
/// than QUAD_TOL: a sliver of allowed region right above a potential
/// minimum evaluates E - V entirely in rounding noise, so its per-run error
/// bound has a floor; what matters is that floor against the whole
/// integral, not against the sliver.
const DOS_TOTAL_TOL: f64 = 1e-8;

/// Largest exponent with a finite e^x in f64; a Boltzmann factor past this
/// overflows and marks the integral as divergent.
const MAX_EXP_ARG: f64 = 709.0;

/// Uniform scan resolution used to classify the allowed region. Allowed
/// islands narrower than (r_hi - r_lo) / SCAN_INTERVALS between two
/// forbidden samples would go unnoticed; for the monotone 1/r^2 channels
/// this module targets, every allowed region touches a domain endpoint and
/// the scan cannot miss it.
const SCAN_INTERVALS: usize = 512;

/// Radial channel labeled by angular momentum l and inverse-square
/// attraction s0, with the centrifugal term in Langer form.
///
/// The effective potential is
///
/// ```text
/// V_l(r) = [ (l + 1/2)^2 - (s0^2 + 1/4) ] / r^2
/// ```
///
/// i.e. the attractive coupling -(s0^2 + 1/4) plus a centrifugal barrier
/// with l(l + 1) replaced by (l + 1/2)^2. At l = 0 the two 1/4 terms
/// cancel and the channel is -s0^2/r^2; the channel with l = 0 and s0 = 0
/// is exactly flat and doubles as a free-particle box in tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LangerChannel {
    ell: u32,
    s0: f64,
}

impl LangerChannel {
    /// Builds a channel from the angular momentum and the inverse-square
    /// strength s0 (which enters only squared).
    ///
    /// # Errors
    ///
    /// [`Error::InvalidParameter`] when `s0` is not finite.
    pub fn new(ell: u32, s0: f64) -> Result<Self> {
        if !s0.is_finite() {
            return Err(Error::invalid(format!("channel strength must be finite, got {s0}")));
        }
        Ok(Self { ell, s0 })
    }

    /// Angular momentum quantum number.
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Inverse-square strength of the underlying attraction.
    pub fn s0(&self) -> f64 {
        self.s0
    }

    /// Coefficient c of the effective potential c / r^2; negative means
    /// net attraction. Follows the sign convention of
    /// [`crate::spectrum::InverseSquareProblem::coupling`].
    pub fn effective_coupling(&self) -> f64 {
        let half = f64::from(self.ell) + 0.5;
        half * half - (self.s0 * self.s0 + 0.25)
    }
}

/// Effective radial potential of a channel at radius r > 0.
///
/// # Errors
///
/// [`Error::InvalidParameter`] when `r` is not positive and finite.
pub fn langer_potential(chan: &LangerChannel, r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::invalid(format!("radius must be positive and finite, got {r}")));
    }
    let c = chan.effective_coupling();
    if c == 0.0 {
        return Ok(0.0);
    }
    Ok(c / (r * r))
}

/// A potential V(r) on a finite radial domain [r_lo, r_hi].
///
/// The rule is an arbitrary closure; [`RadialPotential::langer`] builds the
/// inverse-square channel of a [`LangerChannel`]. The domain may start at
/// r_lo = 0 (the closure is then evaluated arbitrarily close to, and for
/// divergence probes exactly at, zero; an inverse-square rule produces the
/// correct infinities there).
pub struct RadialPotential {
    v: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    r_lo: f64,
    r_hi: f64,
}

impl fmt::Debug for RadialPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialPotential")
            .field("r_lo", &self.r_lo)
            .field("r_hi", &self.r_hi)
            .finish_non_exhaustive()
    }
}

impl RadialPotential {
    /// Wraps an evaluation rule with its domain.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidParameter`] unless 0 <= r_lo < r_hi < infinity.
    pub fn new(
        r_lo: f64,
        r_hi: f64,
        v: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if !(r_lo.is_finite() && r_lo >= 0.0) {
            return Err(Error::invalid(format!(
                "lower domain edge must be finite and nonnegative, got {r_lo}"
            )));
        }
        if !(r_hi.is_finite() && r_hi > r_lo) {
            return Err(Error::invalid(format!(
                "upper domain edge must be finite and exceed the lower one, got [{r_lo}, {r_hi}]"
            )));
        }
        Ok(Self { v: Box::new(v), r_lo, r_hi })
    }

    /// The inverse-square channel of `chan` on [r_lo, r_hi].
    ///
    /// # Errors
    ///
    /// Same domain validation as [`RadialPotential::new`].
    pub fn langer(chan: LangerChannel, r_lo: f64, r_hi: f64) -> Result<Self> {
        let c = chan.effective_coupling();
        Self::new(r_lo, r_hi, move |r| if c == 0.0 { 0.0 } else { c / (r * r) })
    }

    /// Lower edge of the domain.
    pub fn r_lo(&self) -> f64 {
        self.r_lo
    }

    /// Upper edge of the domain.
    pub fn r_hi(&self) -> f64 {
        self.r_hi
    }

    /// V(r). Defined for r in the domain; no validation on the hot path.
    pub fn evaluate(&self, r: f64) -> f64 {
        (self.v)(r)
    }
}

/// Classical partition function of the channel at inverse temperature beta:
///
/// ```text
/// Z(beta) = (2 sqrt(pi))^{-1} beta^{-1/2} Int_{r_lo}^{r_hi} e^{-beta V(r)} dr
/// ```
///
/// For a flat potential this is L / (2 sqrt(pi beta)); in general it grows
/// like beta^{-1/2} as beta -> 0 and is the Laplace transform of
/// [`density_of_states`]. (The parameter is named for the Boltzmann factor;
/// it is unrelated to the form-factor range of
/// [`crate::two_body::YamaguchiPotential`], which reuses the symbol beta in
/// a different role.)
///
/// # Errors
///
/// [`Error::InvalidParameter`] when `inverse_temperature` is not positive
/// and finite, when the potential evaluates to NaN, or when the quadrature
/// fails to converge. [`Error::DivergentIntegral`] when the Boltzmann
/// factor overflows near an endpoint or anywhere inside the domain, as it
/// does for an attractive inverse-square potential sampled down to r = 0.
pub fn partition_function(pot: &RadialPotential, inverse_temperature: f64) -> Result<f64> {
    let beta = inverse_temperature;
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::invalid(format!(
            "inverse temperature must be positive and finite, got {beta}"
        )));
    }
    // Probe the Boltzmann exponent at geometric offsets from both endpoints.
    // A non-integrable attractive singularity (e.g. -c/r^2 at r_lo = 0)
    // drives -beta V past the overflow threshold long before the quadrature
    // nodes get there, so it is reported as divergent rather than as a
    // quadrature failure.
    let len = pot.r_hi - pot.r_lo;
    for k in [0.0, 1e-3, 1e-6, 1e-9, 1e-12, 1e-15] {
        for r in [pot.r_lo + len * k, pot.r_hi - len * k] {
            let v = pot.evaluate(r);
            if v.is_nan() {
                return Err(Error::invalid(format!("potential evaluated to NaN at r = {r}")));
            }
            if -beta * v > MAX_EXP_ARG {
                return Err(Error::DivergentIntegral(format!(
                    "Boltzmann factor overflows near r = {r}: -beta V = {:e}",
                    -beta * v
                )));
            }
        }
    }
    let q = integrate_adaptive(|r| (-beta * pot.evaluate(r)).exp(), pot.r_lo, pot.r_hi, QUAD_TOL);
    if !q.value.is_finite() {
        return Err(Error::DivergentIntegral(format!(
            "Boltzmann integrand overflowed inside [{}, {}]",
            pot.r_lo, pot.r_hi
        )));
    }
    if !q.converged {
        return Err(Error::invalid(format!(
            "partition-function quadrature did not converge: error estimate {:e}",
            q.error_estimate
        )));
    }
    Ok(PARTITION_PREFACTOR / beta.sqrt() * q.value)
}

/// Semiclassical density of states of the channel at energy E:
///
/// ```text
/// g(E) = (2 pi)^{-1} Int_{V(r) < E} dr / sqrt(E - V(r))
/// ```
///
/// The classically allowed region is located by a uniform scan of the
/// domain followed by root refinement of each turning point; the
/// inverse-square-root endpoint singularity at a turning point t is removed
/// by the substitution r = t -/+ u^2. If E lies below the potential
/// everywhere the allowed region is empty and g = 0.
///
/// # Errors
///
/// [`Error::InvalidParameter`] when `energy` is not finite, when the
/// potential evaluates to NaN on the scan grid, or when the quadrature
/// fails to converge.
pub fn density_of_states(pot: &RadialPotential, energy: f64) -> Result<f64> {
    if !energy.is_finite() {
        return Err(Error::invalid(format!("energy must be finite, got {energy}")));
    }
    let runs = allowed_runs(pot, energy)?;
    let mut total = 0.0;
    let mut total_err = 0.0;
    for run in &runs {
        let (value, err) = integrate_run(pot, energy, run)?;
        total += value;
        total_err += err;
    }
    if total_err > DOS_TOTAL_TOL * total.abs().max(1.0) {
        return Err(Error::invalid(format!(
            "density-of-states quadrature did not converge: value {total:e}, error estimate {total_err:e}"
        )));
    }
    Ok(DOS_PREFACTOR * total)
}

/// One maximal classically allowed interval. A `turning` edge is a root of
/// E - V (integrable inverse-square-root singularity); a non-turning edge
/// is a domain endpoint where E - V stays positive.
struct AllowedRun {
    lo: f64,
    lo_turning: bool,
    hi: f64,
    hi_turning: bool,
}

/// Scans the domain, classifies samples by the sign of E - V, and refines
/// the boundary between allowed and forbidden neighbors with Brent.
fn allowed_runs(pot: &RadialPotential, energy: f64) -> Result<Vec<AllowedRun>> {
    let n = SCAN_INTERVALS;
    let step = (pot.r_hi - pot.r_lo) / n as f64;
    let rs: Vec<f64> = (0..=n)
        .map(|i| if i == n { pot.r_hi } else { pot.r_lo + step * i as f64 })
        .collect();
    let margin: Vec<f64> = rs.iter().map(|&r| energy - pot.evaluate(r)).collect();
    if margin.iter().any(|m| m.is_nan()) {
        return Err(Error::invalid("potential evaluated to NaN on the scan grid".to_string()));
    }
    let h = |r: f64| energy - pot.evaluate(r);

    let mut runs = Vec::new();
    let mut i = 0usize;
    while i <= n {
        if margin[i] > 0.0 {
            let start = i;
            while i + 1 <= n && margin[i + 1] > 0.0 {
                i += 1;
            }
            let (lo, lo_turning) = if start == 0 {
                (rs[0], false)
            } else if margin[start - 1] == 0.0 {
                (rs[start - 1], true)
            } else {
                let bracket =
                    RootBracket::new(rs[start - 1], rs[start], margin[start - 1], margin[start])?;
                (find_root(h, bracket, 1e-15)?, true)
            };
            let (hi, hi_turning) = if i == n {
                (rs[n], false)
            } else if margin[i + 1] == 0.0 {
                (rs[i + 1], true)
            } else {
                let bracket = RootBracket::new(rs[i], rs[i + 1], margin[i], margin[i + 1])?;
                (find_root(h, bracket, 1e-15)?, true)
            };
            runs.push(AllowedRun { lo, lo_turning, hi, hi_turning });
        }
        i += 1;
    }
    Ok(runs)
}

/// Int dr / sqrt(E - V) over one allowed run, with the turning-point
/// substitution applied at whichever edges need it. Returns the value and
/// its error bound; convergence is judged by the caller on the sum over
/// runs.
fn integrate_run(pot: &RadialPotential, energy: f64, run: &AllowedRun) -> Result<(f64, f64)> {
    // Error budget proportional to the run's share of the domain: a sliver
    // whose E - V sits in rounding noise can never meet the full-domain
    // tolerance, and it does not need to; the caller checks the sum.
    let width = run.hi - run.lo;
    let domain = pot.r_hi - pot.r_lo;
    let tol = (QUAD_TOL * domain / width).clamp(QUAD_TOL, 1e-4);
    // Guarded inverse square root: rounding can push E - V a few ulps
    // negative right next to a refined turning point, and the allowed
    // measure there is zero anyway.
    let direct = |r: f64| {
        let d = energy - pot.evaluate(r);
        if d <= 0.0 {
            0.0
        } else {
            d.sqrt().recip()
        }
    };
    let from_above = |t: f64, width: f64| {
        // r = t - u^2 walks down from the upper turning point t.
        integrate_adaptive(
            |u: f64| {
                let d = energy - pot.evaluate(t - u * u);
                if d <= 0.0 {
                    0.0
                } else {
                    2.0 * u / d.sqrt()
                }
            },
            0.0,
            width.sqrt(),
            tol,
        )
    };
    let from_below = |t: f64, width: f64| {
        // r = t + u^2 walks up from the lower turning point t.
        integrate_adaptive(
            |u: f64| {
                let d = energy - pot.evaluate(t + u * u);
                if d <= 0.0 {
                    0.0
                } else {
                    2.0 * u / d.sqrt()
                }
            },
            0.0,
            width.sqrt(),
            tol,
        )
    };

    let checked = |q: crate::specfun::QuadratureResult| -> Result<(f64, f64)> {
        if !q.value.is_finite() {
            return Err(Error::invalid(format!(
                "density-of-states integrand overflowed on [{}, {}]",
                run.lo, run.hi
            )));
        }
        Ok((q.value, q.error_estimate))
    };

    match (run.lo_turning, run.hi_turning) {
        (false, false) => checked(integrate_adaptive(direct, run.lo, run.hi, tol)),
        (false, true) => checked(from_above(run.hi, width)),
        (true, false) => checked(from_below(run.lo, width)),
        (true, true) => {
            let half = 0.5 * width;
            let (v1, e1) = checked(from_below(run.lo, half))?;
            let (v2, e2) = checked(from_above(run.hi, half))?;
            Ok((v1 + v2, e1 + e2))
        }
    }
}

/// Semiclassical bound-state count of the attractive inverse-square channel
/// -s0^2/r^2 between cutoffs r0 < a, at energy E <= 0:
///
/// ```text
/// N(E) = pi^{-1} Int_{r0}^{min(a, r_t)} sqrt(E + s0^2/r^2) dr ,
/// r_t = s0 / sqrt(-E)
/// ```
///
/// At E = 0 the turning point recedes to infinity and the integral is taken
/// analytically: N(0) = (s0/pi) ln(a/r0), the same expression as
/// [`crate::spectrum::count_states_formula`]. The first argument is the
/// coefficient of the 1/r channel strength; passing sqrt(s0^2 + 1/4)
/// instead of s0 reproduces the count without the Langer substitution.
///
/// # Errors
///
/// [`Error::InvalidParameter`] when `s0`, `r0` are not positive and finite,
/// when `a` is not finite or is below `r0` (equality is allowed and counts
/// zero states), when `energy` is positive or not finite, or when the
/// quadrature fails to converge.
pub fn count_states_semiclassical(s0: f64, energy: f64, r0: f64, a: f64) -> Result<f64> {
    if !(s0.is_finite() && s0 > 0.0) {
        return Err(Error::invalid(format!("channel strength must be positive, got {s0}")));
    }
    if !(r0.is_finite() && r0 > 0.0) {
        return Err(Error::invalid(format!("inner cutoff must be positive and finite, got {r0}")));
    }
    if !(a.is_finite() && a >= r0) {
        return Err(Error::invalid(format!(
            "outer cutoff must be finite and at least the inner one, got a = {a}, r0 = {r0}"
        )));
    }
    if !(energy.is_finite() && energy <= 0.0) {
        return Err(Error::invalid(format!("energy must be finite and nonpositive, got {energy}")));
    }
    if energy == 0.0 {
        return Ok(s0 / PI * (a / r0).ln());
    }
    let r_t = s0 / (-energy).sqrt();
    if r_t <= r0 {
        return Ok(0.0);
    }
    let q = if r_t < a {
        // The integrand vanishes like sqrt(r_t - r) at the turning point;
        // the r = r_t - u^2 substitution makes it smooth there.
        integrate_adaptive(
            |u: f64| {
                let r = r_t - u * u;
                let d = energy + (s0 / r) * (s0 / r);
                if d <= 0.0 {
                    0.0
                } else {
                    2.0 * u * d.sqrt()
                }
            },
            0.0,
            (r_t - r0).sqrt(),
            QUAD_TOL,
        )
    } else {
        integrate_adaptive(
            |r: f64| {
                let d = energy + (s0 / r) * (s0 / r);
                if d <= 0.0 {
                    0.0
                } else {
                    d.sqrt()
                }
            },
            r0,
            a,
            QUAD_TOL,
        )
    };
    if !q.converged || !q.value.is_finite() {
        return Err(Error::invalid(format!(
            "state-count quadrature did not converge: error estimate {:e}",
            q.error_estimate
        )));
    }
    Ok(q.value / PI)
}
