//! Adiabatic heavy-heavy-light three-body channel: the light atom is solved
//! in the field of two fixed heavy atoms, and its binding energy becomes the
//! effective potential epsilon(R) between the heavy pair.
//!
//! For the separable light-heavy interaction of [`crate::two_body`] the
//! light-atom eigenvalue problem reduces to one transcendental equation for
//! the binding wavenumber kappa(R) > kappa0,
//!
//! 1 - ((beta+kappa0)/(beta+kappa))^2 = ((beta+kappa0)/(beta+kappa))^2 * B,
//!
//! B = (2 beta / (beta-kappa)^2) (e^{-kappa R} - e^{-beta R})/R
//!     - ((beta+kappa)/(beta-kappa)) e^{-beta R},
//!
//! with epsilon(R) = -kappa^2(R). The module solves this equation robustly
//! across all four regimes of R (inside the force range, the inverse-square
//! window, the crossover at R ~ a, and the Yukawa tail), and maps the
//! heavy-heavy mass ratio to the strength of the induced attractive 1/R^2
//! potential and its scaling exponent s0.
//!
//! The kappa = beta point of B is a removable singularity: with
//! w = (kappa - beta) R and psi(w) = (e^{-w} - 1 + w)/w^2, the bracket is
//! identically B = e^{-beta R} (1 + 2 beta R psi(w)), which is finite and
//! smooth through w = 0. That identity is what lets the solver bracket roots
//! above beta, which the small-R regime requires (kappa ~ 0.567/R exceeds
//! beta once R < 1/beta).

use crate::error::{Error, Result};
use crate::specfun::{find_root, lambert_root, RootBracket};
use crate::two_body::{DimerState, YamaguchiPotential};
use std::fmt;

/// Heavy-to-light mass ratio and the reduced-mass combinations derived
/// from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassConfig {
    mass_ratio: f64,
    mu: f64,
    nu: f64,
    nu_prime: f64,
}

impl MassConfig {
    /// Builds the configuration for heavy mass M = mass_ratio * m (light
    /// mass m = 1/2 in natural units). Requires mass_ratio > 0.
    pub fn new(mass_ratio: f64) -> Result<Self> {
        if !(mass_ratio.is_finite() && mass_ratio > 0.0) {
            return Err(Error::invalid(format!(
                "mass ratio must be finite and > 0, got {mass_ratio}"
            )));
        }
        Ok(Self {
            mass_ratio,
            mu: 0.5 * mass_ratio,
            nu: 2.0 * mass_ratio / (2.0 * mass_ratio + 1.0),
            nu_prime: mass_ratio / (mass_ratio + 1.0),
        })
    }

    /// Heavy-to-light mass ratio.
    pub fn mass_ratio(&self) -> f64 {
        self.mass_ratio
    }

    /// Heavy-heavy reduced mass in units of the light mass: mass_ratio / 2.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Light-pair reduced mass factor 2 M / (2 M + 1) for the light atom
    /// against the heavy pair.
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Light-single reduced mass factor M / (M + 1) for the light atom
    /// against one heavy atom.
    pub fn nu_prime(&self) -> f64 {
        self.nu_prime
    }

    /// Relative error (nu - nu_prime)/nu = 1/(2(M+1)) committed by treating
    /// the two reduced-mass factors as equal, which the adiabatic equation
    /// does; small exactly when the mass ratio is large.
    pub fn nu_approximation_error(&self) -> f64 {
        1.0 / (2.0 * (self.mass_ratio + 1.0))
    }
}

/// Qualitative regime of the adiabatic potential at a given separation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Inside the force range R0; the interaction details dominate.
    ShortRange,
    /// Between R0 and the crossover: epsilon tracks -const/R^2.
    InverseSquare,
    /// Separations comparable to the scattering length, R in [a/3, 3a].
    Crossover,
    /// R > 3a: exponentially screened attraction.
    YukawaTail,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::ShortRange => "short-range",
            Region::InverseSquare => "inverse-square",
            Region::Crossover => "crossover",
            Region::YukawaTail => "yukawa-tail",
        })
    }
}

/// Boundaries are diagnostic conventions: ShortRange up to r0, YukawaTail
/// beyond 3a, Crossover within [a/3, 3a], InverseSquare otherwise. With an
/// infinite scattering length everything beyond r0 is InverseSquare.
fn classify_region(r: f64, r0: f64, a: f64) -> Region {
    if r <= r0 {
        Region::ShortRange
    } else if r > 3.0 * a {
        Region::YukawaTail
    } else if r >= a / 3.0 {
        Region::Crossover
    } else {
        Region::InverseSquare
    }
}

/// One solved point of the adiabatic curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BOPoint {
    r: f64,
    kappa: f64,
    epsilon: f64,
    xi: f64,
    region: Region,
}

impl BOPoint {
    /// Heavy-heavy separation.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// Light-atom binding wavenumber kappa(R) >= kappa0.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Adiabatic potential epsilon(R) = -kappa^2(R).
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Binding shift xi = kappa - kappa0, kept separately because it
    /// underflows kappa's precision at large R.
    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// Regime label for this separation.
    pub fn region(&self) -> Region {
        self.region
    }

    /// Potential measured from the dimer threshold,
    /// epsilon + kappa0^2 = -xi (2 kappa - xi), evaluated from xi so the
    /// exponentially small tail survives the cancellation against -kappa0^2.
    /// This is the quantity that follows the Yukawa form at large R.
    pub fn tail_epsilon(&self) -> f64 {
        -self.xi * (2.0 * self.kappa - self.xi)
    }
}

/// Adiabatic curve over a separation grid, with per-point outcomes.
#[derive(Debug, Clone)]
pub struct BOCurve {
    points: Vec<Result<BOPoint>>,
    dimer: DimerState,
    potential: YamaguchiPotential,
    masses: MassConfig,
}

impl BOCurve {
    /// Per-grid-point outcomes, in grid order.
    pub fn points(&self) -> &[Result<BOPoint>] {
        &self.points
    }

    /// The successfully solved points, in grid order.
    pub fn ok_points(&self) -> impl Iterator<Item = &BOPoint> {
        self.points.iter().filter_map(|p| p.as_ref().ok())
    }

    /// Dimer the curve asymptotes to.
    pub fn dimer(&self) -> &DimerState {
        &self.dimer
    }

    /// Light-heavy potential underlying the curve.
    pub fn potential(&self) -> &YamaguchiPotential {
        &self.potential
    }

    /// Mass configuration carried for downstream strength/scaling maps; the
    /// curve kappa(R) itself is mass-independent in these units.
    pub fn masses(&self) -> &MassConfig {
        &self.masses
    }
}

/// (e^{-w} - 1 + w)/w^2: positive, smooth, psi(0) = 1/2. Series below
/// |w| = 1e-4 (next term is w^4/720), expm1 otherwise; the caller handles
/// w < -35 where e^{-w} would overflow the subtraction.
fn psi_quotient(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        0.5 - w / 6.0 + w * w / 24.0 - w * w * w / 120.0
    } else {
        ((-w).exp_m1() + w) / (w * w)
    }
}

/// Both sides of the binding-shift equation at kappa = kappa0 + xi, each
/// evaluated without cancellation: the left side as xi (u + v)/v^2 with
/// u = beta + kappa0, v = beta + kappa, and the bracket through the psi
/// identity (or directly once e^{-beta R} has damped it beyond reach of
/// the identity's subtraction).
fn equation_sides(r: f64, xi: f64, kappa0: f64, beta: f64) -> (f64, f64) {
    let kappa = kappa0 + xi;
    let u = beta + kappa0;
    let v = beta + kappa;
    let lhs = xi * (u + v) / (v * v);

    let w = (kappa - beta) * r;
    let bracket = if w >= -35.0 {
        (-beta * r).exp() * (1.0 + 2.0 * beta * r * psi_quotient(w))
    } else {
        let d = beta - kappa;
        (2.0 * beta / (d * d * r)) * ((-kappa * r).exp() - (-beta * r).exp())
            - ((beta + kappa) / d) * (-beta * r).exp()
    };
    let ratio = u / v;
    (lhs, ratio * ratio * bracket)
}

/// Solves the adiabatic equation for the light-atom wavenumber at
/// separation `r`.
///
/// `pot` must be the potential that produced `dimer`, with beta > kappa0.
/// The root is located by a logarithmic scan in the shift xi = kappa -
/// kappa0 (the side that is always signed: the equation's left side
/// vanishes at xi = 0 while the right side is positive), then polished
/// with Brent's method. When the shift lies below double-precision
/// resolution, which happens once e^{-kappa0 R} is negligible against
/// every representable xi, the dimer values are returned with xi = 0.
pub fn solve_kappa(r: f64, dimer: &DimerState, pot: &YamaguchiPotential) -> Result<BOPoint> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::invalid(format!("separation R must be finite and > 0, got {r}")));
    }
    let kappa0 = dimer.kappa0();
    let beta = pot.beta();
    if beta <= kappa0 {
        return Err(Error::invalid(format!(
            "adiabatic equation requires beta > kappa0, got beta = {beta}, kappa0 = {kappa0}"
        )));
    }

    let f = |xi: f64| {
        let (lhs, rhs) = equation_sides(r, xi, kappa0, beta);
        lhs - rhs
    };

    let region = classify_region(r, 1.0 / beta, dimer.scattering_length());
    let point = |xi: f64| {
        let kappa = kappa0 + xi;
        BOPoint { r, kappa, epsilon: -kappa * kappa, xi, region }
    };

    // The shift spans hundreds of decades across the curve (~0.567/R at
    // small R, ~e^{-kappa0 R}/R at large R), so scan log-spaced shifts for
    // the first sign change.
    let xi_start = 1e-280_f64.min(1e-3 / r).max(1e-320);
    let xi_end = 100.0 * (beta + 1.0 / r + kappa0);
    if f(xi_start) >= 0.0 {
        return Ok(point(0.0));
    }

    let step = 10.0_f64.powf(0.125);
    let mut lo = xi_start;
    let mut f_lo = f(xi_start);
    while lo < xi_end {
        let hi = (lo * step).min(xi_end);
        let f_hi = f(hi);
        if f_hi == 0.0 {
            return Ok(point(hi));
        }
        if f_lo < 0.0 && f_hi > 0.0 {
            let bracket = RootBracket::new(lo, hi, f_lo, f_hi)?;
            let xi = find_root(&f, bracket, 1e-14)?;
            return Ok(point(xi));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Err(Error::NoAdiabaticRoot { r })
}

/// Solves the curve on a strictly increasing positive grid.
///
/// `r0` overrides the ShortRange boundary used for region labels; the
/// default is the force range 1/beta. Failures are recorded per point so
/// one bad separation does not discard the rest of the curve.
pub fn build_curve(
    dimer: &DimerState,
    pot: &YamaguchiPotential,
    masses: &MassConfig,
    r_grid: &[f64],
    r0: Option<f64>,
) -> Result<BOCurve> {
    if r_grid.is_empty() {
        return Err(Error::invalid("separation grid must not be empty".to_string()));
    }
    for pair in r_grid.windows(2) {
        if !(pair[0] < pair[1]) {
            return Err(Error::invalid(format!(
                "separation grid must be strictly increasing, got {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    if !(r_grid[0].is_finite() && r_grid[0] > 0.0) {
        return Err(Error::invalid(format!(
            "separations must be finite and > 0, got {}",
            r_grid[0]
        )));
    }
    if !r_grid[r_grid.len() - 1].is_finite() {
        return Err(Error::invalid("separations must be finite".to_string()));
    }
    let effective_r0 = match r0 {
        Some(v) if v.is_finite() && v > 0.0 => v,
        Some(v) => {
            return Err(Error::invalid(format!("region boundary r0 must be finite and > 0, got {v}")))
        }
        None => 1.0 / pot.beta(),
    };

    let points = r_grid
        .iter()
        .map(|&r| {
            solve_kappa(r, dimer, pot).map(|p| BOPoint {
                region: classify_region(r, effective_r0, dimer.scattering_length()),
                ..p
            })
        })
        .collect();
    Ok(BOCurve { points, dimer: *dimer, potential: *pot, masses: *masses })
}

/// Screened large-separation form of the adiabatic potential measured from
/// the dimer threshold: -(2/nu) e^{-R/a} / (a R).
pub fn yukawa_tail(r: f64, a: f64, masses: &MassConfig) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::invalid(format!("separation R must be finite and > 0, got {r}")));
    }
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::invalid(format!(
            "scattering length a must be finite and > 0, got {a}"
        )));
    }
    Ok(-(2.0 / masses.nu()) * (-r / a).exp() / (a * r))
}

/// Coefficient c(M) = A^2 (1 + 2M)/4 of the induced -c/R^2 heavy-heavy
/// potential on resonance, with A the omega constant from
/// [`crate::specfun::lambert_root`].
///
/// Defined for every positive mass ratio, though the underlying adiabatic
/// treatment is only controlled for M >> 1; at small M the value
/// approaches A^2/4 ~ 0.080 but should be read as a formula limit, not
/// physics.
pub fn inverse_square_strength(masses: &MassConfig) -> f64 {
    let a = lambert_root();
    a * a * (1.0 + 2.0 * masses.mass_ratio()) / 4.0
}

/// Scaling exponent s0(M) = sqrt(c(M) - 1/4) of the attractive
/// inverse-square channel.
///
/// Below the critical mass ratio [`critical_mass_ratio`] the channel fails
/// to overcome the centrifugal-like 1/4 and the geometric tower is absent;
/// that case is reported as an error carrying the critical value. At the
/// threshold itself s0 = 0 (the scaling factor e^{pi/s0} diverges).
pub fn efimov_s0(masses: &MassConfig) -> Result<f64> {
    let diff = inverse_square_strength(masses) - 0.25;
    if diff < -4.0 * f64::EPSILON {
        return Err(Error::SubcriticalMassRatio {
            mass_ratio: masses.mass_ratio(),
            critical: critical_mass_ratio(),
        });
    }
    Ok(diff.max(0.0).sqrt())
}

/// Mass ratio at which the induced inverse-square attraction reaches the
/// critical strength 1/4: M* = (1/A^2 - 1)/2 ~ 1.054.
pub fn critical_mass_ratio() -> f64 {
    let a = lambert_root();
    (1.0 / (a * a) - 1.0) / 2.0
}
