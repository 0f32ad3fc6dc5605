//! Bound-state towers of the attractive inverse-square radial channel.
//!
//! The s-wave radial problem u'' = [-(s0^2 + 1/4)/r^2 - E] u with a hard
//! inner wall u(r_c) = 0 supports an infinite geometric tower of shallow
//! states: kappa_{n+1} = kappa_n e^{-pi/s0}, E_n = -kappa_n^2. The module
//! computes the tower three independent ways and cross-checks them:
//!
//! - [`spectrum_bessel`]: exactly, as zeros of the modified Bessel function
//!   of imaginary order (the decaying solution is sqrt(kappa r)
//!   K_{i s0}(kappa r), so u(r_c) = 0 pins kappa r_c at a zero of K_{i s0});
//! - [`spectrum_shooting`]: numerically, by Numerov integration on a
//!   logarithmic grid with an eigenvalue search;
//! - [`spectrum_asymptotic`]: by the leading small-argument formula
//!   kappa_n r_c = 2 e^{-gamma} e^{-n pi/s0}, whose accuracy against the
//!   exact zeros settles at a constant phase offset rather than improving
//!   without bound.
//!
//! State counting with a second, outer cutoff ([`count_states_direct`],
//! [`count_states_formula`]) and the cutoff-collapse diagnostic
//! ([`thomas_scaling_check`]) round out the module.

use crate::error::{Error, Result};
use crate::specfun::{bessel_k_imag_zeros, find_root, leading_zero_estimate, RootBracket};
use std::f64::consts::PI;
use std::fmt;

const EULER_GAMMA: f64 = 0.5772156649015329;

/// Below this wavenumber scale the eigenvalue search stops and flags
/// truncation; matches the floor of the Bessel-zero scan.
const KAPPA_FLOOR: f64 = 1e-280;

/// Radial inverse-square problem -(s0^2 + 1/4)/r^2 with a hard wall at r_c
/// and an optional outer wall at r_outer (used only for state counting).
///
/// Stored through s0^2 so the subcritical regime (coupling too weak for any
/// bound state) is representable: [`from_coupling`](Self::from_coupling)
/// accepts any coupling, while [`new`](Self::new) takes a strength s0 > 0
/// directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseSquareProblem {
    s0_sq: f64,
    r_c: f64,
    r_outer: f64,
}

impl InverseSquareProblem {
    /// Builds a supercritical problem from its strength parameter s0 > 0.
    /// `r_outer` may be `f64::INFINITY` when no outer cutoff is wanted.
    pub fn new(s0: f64, r_c: f64, r_outer: f64) -> Result<Self> {
        if !(s0.is_finite() && s0 > 0.0) {
            return Err(Error::invalid(format!(
                "strength parameter s0 must be finite and > 0, got {s0}"
            )));
        }
        Self::with_s0_sq(s0 * s0, r_c, r_outer)
    }

    /// Builds the problem for the radial potential `coupling`/r^2. Any
    /// finite coupling is accepted; couplings above -1/4 (including all
    /// repulsive ones) give a subcritical problem with no bound states.
    pub fn from_coupling(coupling: f64, r_c: f64, r_outer: f64) -> Result<Self> {
        if !coupling.is_finite() {
            return Err(Error::invalid(format!("coupling must be finite, got {coupling}")));
        }
        Self::with_s0_sq(-coupling - 0.25, r_c, r_outer)
    }

    fn with_s0_sq(s0_sq: f64, r_c: f64, r_outer: f64) -> Result<Self> {
        if !(r_c.is_finite() && r_c > 0.0) {
            return Err(Error::invalid(format!(
                "inner cutoff r_c must be finite and > 0, got {r_c}"
            )));
        }
        if !(r_outer > r_c) {
            return Err(Error::invalid(format!(
                "outer cutoff r_outer must exceed r_c = {r_c}, got {r_outer}"
            )));
        }
        Ok(Self { s0_sq, r_c, r_outer })
    }

    /// Strength parameter sqrt(s0^2) of the supercritical channel; 0 when
    /// the problem is subcritical (check
    /// [`supports_bound_states`](Self::supports_bound_states) first).
    pub fn s0(&self) -> f64 {
        self.s0_sq.max(0.0).sqrt()
    }

    /// Signed square of the strength parameter; negative means subcritical.
    pub fn s0_squared(&self) -> f64 {
        self.s0_sq
    }

    /// Coefficient of 1/r^2 in the potential: -(s0^2 + 1/4).
    pub fn coupling(&self) -> f64 {
        -(self.s0_sq + 0.25)
    }

    /// Whether the attraction exceeds the critical -1/4 coupling, so the
    /// geometric tower of bound states exists.
    pub fn supports_bound_states(&self) -> bool {
        self.s0_sq > 0.0
    }

    /// Inner cutoff radius.
    pub fn r_c(&self) -> f64 {
        self.r_c
    }

    /// Outer cutoff radius; +infinity when absent.
    pub fn r_outer(&self) -> f64 {
        self.r_outer
    }
}

/// Which computation produced a [`SpectrumResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumMethod {
    BesselZeros,
    Shooting,
    Asymptotic,
}

impl fmt::Display for SpectrumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumMethod::BesselZeros => "bessel-zeros",
            SpectrumMethod::Shooting => "shooting",
            SpectrumMethod::Asymptotic => "asymptotic",
        })
    }
}

/// Ordered shallow spectrum: kappa_1 > kappa_2 > ... with E_n = -kappa_n^2.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    kappas: Vec<f64>,
    energies: Vec<f64>,
    method: SpectrumMethod,
    truncated: bool,
}

impl SpectrumResult {
    /// States whose energy -kappa^2 underflows to zero are dropped and
    /// reported through the truncation flag, so every stored energy is
    /// strictly negative.
    fn from_kappas(mut kappas: Vec<f64>, method: SpectrumMethod, mut truncated: bool) -> Self {
        if let Some(i) = kappas.iter().position(|&k| k * k == 0.0) {
            kappas.truncate(i);
            truncated = true;
        }
        debug_assert!(kappas.windows(2).all(|p| p[0] > p[1]));
        let energies = kappas.iter().map(|&k| -k * k).collect();
        Self { kappas, energies, method, truncated }
    }

    fn empty(method: SpectrumMethod, truncated: bool) -> Self {
        Self { kappas: Vec::new(), energies: Vec::new(), method, truncated }
    }

    /// Binding wavenumbers in strictly decreasing order.
    pub fn kappas(&self) -> &[f64] {
        &self.kappas
    }

    /// Energies E_n = -kappa_n^2, all strictly negative.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Computation that produced this result.
    pub fn method(&self) -> SpectrumMethod {
        self.method
    }

    /// Number of states found.
    pub fn n_found(&self) -> usize {
        self.kappas.len()
    }

    /// True when fewer states than requested could be resolved before the
    /// double-precision floor.
    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

fn validate_n_max(n_max: usize) -> Result<()> {
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1".to_string()));
    }
    Ok(())
}

/// Exact tower: kappa_n = x_n / r_c with x_n the zeros of K_{i s0}.
///
/// A subcritical problem returns an empty spectrum (K of real order has no
/// positive zeros). States below the representable floor are dropped and
/// flagged.
pub fn spectrum_bessel(prob: &InverseSquareProblem, n_max: usize) -> Result<SpectrumResult> {
    validate_n_max(n_max)?;
    if !prob.supports_bound_states() {
        return Ok(SpectrumResult::empty(SpectrumMethod::BesselZeros, false));
    }
    let s0 = prob.s0();
    // The largest zero sits within ~30% of the leading phase estimate for
    // n = 1; a factor 3 covers it with room to spare.
    let x_upper = 3.0 * leading_zero_estimate(s0, 1);
    if !(x_upper > KAPPA_FLOOR) {
        return Ok(SpectrumResult::empty(SpectrumMethod::BesselZeros, true));
    }
    let zeros = bessel_k_imag_zeros(s0, n_max, x_upper.min(700.0))?;
    let kappas = zeros.zeros.iter().map(|x| x / prob.r_c).collect();
    Ok(SpectrumResult::from_kappas(kappas, SpectrumMethod::BesselZeros, zeros.truncated))
}

/// Leading-order tower kappa_n r_c = 2 e^{-gamma} e^{-n pi/s0}.
///
/// The successive ratio is exactly geometric. Against the exact zeros the
/// relative deviation decreases with n but converges to a constant phase
/// offset (about 24% at s0 near 1), not to zero.
pub fn spectrum_asymptotic(prob: &InverseSquareProblem, n_max: usize) -> Result<SpectrumResult> {
    validate_n_max(n_max)?;
    if !prob.supports_bound_states() {
        return Ok(SpectrumResult::empty(SpectrumMethod::Asymptotic, false));
    }
    let s0 = prob.s0();
    let prefactor = 2.0 * (-EULER_GAMMA).exp() / prob.r_c;
    let mut kappas = Vec::with_capacity(n_max);
    let mut truncated = false;
    for n in 1..=n_max {
        let kappa = prefactor * (-(n as f64) * PI / s0).exp();
        if kappa < KAPPA_FLOOR {
            truncated = true;
            break;
        }
        kappas.push(kappa);
    }
    Ok(SpectrumResult::from_kappas(kappas, SpectrumMethod::Asymptotic, truncated))
}

/// Outcome of one Numerov integration of v'' = W(x) v, v(0) = 0, v'(0) > 0.
struct Shot {
    /// Sign changes of v strictly inside (0, x_end).
    nodes: usize,
    /// Whether the last counted node lies in the final grid interval.
    final_interval_node: bool,
    /// v(x_end) divided by max |v| over the trajectory: scale-free,
    /// continuous in any parameter of W, and confined to [-1, 1].
    end_value: f64,
}

/// Integrates v'' = W(x) v with the Numerov scheme on a uniform grid over
/// [0, x_end]. The overall solution scale is immaterial (the start slope is
/// arbitrary), so the trajectory is renormalized when it grows large; the
/// running maximum is rescaled alongside, which keeps `end_value` exact.
fn numerov_shot<W: Fn(f64) -> f64>(w: W, x_end: f64, h_target: f64) -> Shot {
    let steps = ((x_end / h_target).ceil() as usize).max(16);
    let h = x_end / steps as f64;
    let h2 = h * h;

    let w0 = w(0.0);
    let mut v_prev = 0.0_f64;
    let mut w_prev = w0;
    // Cubic start of the regular solution: v ~ x (1 + W(0) x^2 / 6).
    let mut v_cur = h * (1.0 + w0 * h2 / 6.0);
    let mut w_cur = w(h);

    let mut nodes = 0usize;
    let mut final_interval_node = false;
    let mut v_max = v_cur.abs();

    for i in 2..=steps {
        let w_next = w(i as f64 * h);
        let v_next = (2.0 * (1.0 + 5.0 * h2 * w_cur / 12.0) * v_cur
            - (1.0 - h2 * w_prev / 12.0) * v_prev)
            / (1.0 - h2 * w_next / 12.0);

        if v_next == 0.0 {
            if i < steps {
                nodes += 1;
                final_interval_node = false;
            }
        } else if v_cur * v_next < 0.0 {
            nodes += 1;
            final_interval_node = i == steps;
        }

        v_prev = v_cur;
        w_prev = w_cur;
        v_cur = v_next;
        w_cur = w_next;
        v_max = v_max.max(v_cur.abs());
        if v_max > 1e250 {
            v_prev *= 1e-250;
            v_cur *= 1e-250;
            v_max *= 1e-250;
        }
    }
    Shot { nodes, final_interval_node, end_value: v_cur / v_max }
}

/// One shot of the bound-state problem at trial wavenumber z = kappa r_c:
/// substituting r = r_c e^x and u = e^{x/2} v turns the radial equation at
/// E = -kappa^2 into v'' = (z^2 e^{2x} - s0^2) v. The outer boundary sits
/// where the decaying solution has fallen by e^{-30} (pushed past the
/// classical turning point for large s0).
fn shoot_bound(s0_sq: f64, z: f64, h_target: f64) -> Shot {
    let s0 = s0_sq.sqrt();
    let reach = 30.0 * (s0 / 3.0).max(1.0);
    let x_end = (reach / z).ln();
    numerov_shot(|x| (z * x.exp()).powi(2) - s0_sq, x_end, h_target)
}

/// Step small enough to resolve the log-periodic oscillation (period
/// 2 pi / s0 in x) and the stiff outer decay for any reasonable s0.
fn shooting_step(s0: f64) -> f64 {
    0.002 / (s0 / 2.0).max(1.0)
}

/// Numerical tower by Numerov shooting on a logarithmic grid.
///
/// Sturm oscillation makes the interior node count of the trial solution
/// equal the number of eigenvalues above the trial z, so each state is
/// bracketed by a node-count bisection in log z and polished by Brent's
/// method on the endpoint value. Must agree with [`spectrum_bessel`]; a
/// subcritical problem returns an empty spectrum. When the search would
/// descend below the double-precision floor the partial result is flagged.
pub fn spectrum_shooting(prob: &InverseSquareProblem, n_max: usize) -> Result<SpectrumResult> {
    validate_n_max(n_max)?;
    if !prob.supports_bound_states() {
        return Ok(SpectrumResult::empty(SpectrumMethod::Shooting, false));
    }
    let s0_sq = prob.s0_sq;
    let h = shooting_step(prob.s0());
    let count = |z: f64| shoot_bound(s0_sq, z, h).nodes;
    let end_value = |z: f64| shoot_bound(s0_sq, z, h).end_value;

    // Above z = s0 the effective potential is repulsive everywhere on the
    // grid, so the trial solution is nodeless; verify and escalate in the
    // (unreachable in practice) case roundoff says otherwise.
    let mut z_hi = 1.0_f64.max(prob.s0());
    let mut count_hi = count(z_hi);
    let mut guard = 0;
    while count_hi > 0 {
        z_hi *= 4.0;
        count_hi = count(z_hi);
        guard += 1;
        if guard > 60 {
            return Err(Error::BracketingFailed(
                "no node-free upper bound for the shallow-spectrum search".to_string(),
            ));
        }
    }

    let mut kappas = Vec::with_capacity(n_max);
    let mut truncated = false;
    'states: for n in 1..=n_max {
        // Walk down until at least n eigenvalues lie above z_lo.
        let mut z_lo = z_hi;
        let mut count_lo;
        loop {
            z_lo /= 4.0;
            if z_lo < KAPPA_FLOOR {
                truncated = true;
                break 'states;
            }
            count_lo = count(z_lo);
            if count_lo >= n {
                break;
            }
        }
        // Bisect in log z until the bracket pins exactly the n-th
        // eigenvalue: n eigenvalues above z_lo, n-1 above z_hi.
        let mut guard = 0;
        while count_lo != n || count_hi != n - 1 {
            let mid = (z_lo * z_hi).sqrt();
            let c = count(mid);
            if c >= n {
                z_lo = mid;
                count_lo = c;
            } else {
                z_hi = mid;
                count_hi = c;
            }
            guard += 1;
            if guard > 200 {
                return Err(Error::BracketingFailed(format!(
                    "node-count bisection failed to isolate state {n}"
                )));
            }
        }
        // Exactly one eigenvalue inside: the endpoint value changes sign.
        let bracket = RootBracket::evaluate(end_value, z_lo, z_hi)?;
        let z_n = find_root(end_value, bracket, 1e-12)?;
        kappas.push(z_n / prob.r_c);
        // z_lo has exactly n eigenvalues above it: a valid upper bound for
        // the next, shallower state.
        z_hi = z_lo;
        count_hi = count_lo;
    }
    Ok(SpectrumResult::from_kappas(kappas, SpectrumMethod::Shooting, truncated))
}

/// Energy ratio of successive tower states, E_{n+1}/E_n = e^{-2 pi / s0}.
pub fn scaling_ratio(s0: f64) -> Result<f64> {
    if !(s0.is_finite() && s0 > 0.0) {
        return Err(Error::invalid(format!(
            "strength parameter s0 must be finite and > 0, got {s0}"
        )));
    }
    Ok((-2.0 * PI / s0).exp())
}

/// Length and inverse-wavenumber ratio of successive tower states,
/// e^{pi / s0}; about 22.694 at s0 = 1.00624.
pub fn geometric_factor(s0: f64) -> Result<f64> {
    if !(s0.is_finite() && s0 > 0.0) {
        return Err(Error::invalid(format!(
            "strength parameter s0 must be finite and > 0, got {s0}"
        )));
    }
    Ok((PI / s0).exp())
}

/// Estimated number of tower states between the cutoffs r0 and |a|:
/// (s0/pi) ln(|a|/r0), one state per scaling period. Real-valued; the
/// caller rounds. `a` may carry either sign; |a| >= r0 is required (equality
/// gives zero states).
pub fn count_states_formula(s0: f64, a: f64, r0: f64) -> Result<f64> {
    if !(s0.is_finite() && s0 > 0.0) {
        return Err(Error::invalid(format!(
            "strength parameter s0 must be finite and > 0, got {s0}"
        )));
    }
    if !(r0.is_finite() && r0 > 0.0) {
        return Err(Error::invalid(format!(
            "short-distance cutoff r0 must be finite and > 0, got {r0}"
        )));
    }
    if a.is_nan() || a.abs() < r0 {
        return Err(Error::invalid(format!(
            "cutoff |a| must be at least r0 = {r0}, got a = {a}"
        )));
    }
    Ok(s0 / PI * (a.abs() / r0).ln())
}

/// Number of negative-energy states of the doubly cutoff problem
/// (u(r_c) = u(r_outer) = 0), by Sturm node counting of the zero-energy
/// solution: on the log grid it solves v'' = -s0^2 v, and each interior
/// node admits exactly one bound state below it. A zero-energy solution
/// vanishing at the outer wall (to 1e-9 of its peak) is a threshold state
/// and counts.
///
/// Requires a finite r_outer; a subcritical problem has zero states.
pub fn count_states_direct(prob: &InverseSquareProblem) -> Result<usize> {
    if !prob.r_outer.is_finite() {
        return Err(Error::invalid(
            "state counting requires a finite outer cutoff r_outer".to_string(),
        ));
    }
    if !prob.supports_bound_states() {
        return Ok(0);
    }
    let s0_sq = prob.s0_sq;
    let x_end = (prob.r_outer / prob.r_c).ln();
    let shot = numerov_shot(|_| -s0_sq, x_end, shooting_step(prob.s0()));
    let mut n = shot.nodes;
    if shot.end_value.abs() < 1e-9 {
        // Threshold state at the outer wall; a sign change in the final
        // interval is that same zero straddled by the grid, not an extra
        // interior node.
        if shot.final_interval_node {
            n -= 1;
        }
        n += 1;
    }
    Ok(n)
}

/// Report of the cutoff-contraction diagnostic [`thomas_scaling_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThomasScaling {
    e1_reference: f64,
    e1_contracted: f64,
    ratio: f64,
    expected: f64,
}

impl ThomasScaling {
    /// Ground-state energy at the original inner cutoff.
    pub fn e1_reference(&self) -> f64 {
        self.e1_reference
    }

    /// Ground-state energy at the contracted cutoff r_c / scale.
    pub fn e1_contracted(&self) -> f64 {
        self.e1_contracted
    }

    /// Measured E1(r_c/scale) / E1(r_c).
    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// scale^2, the exact value the ratio must take: the spectrum has no
    /// scale of its own, so shrinking the cutoff deepens every state by
    /// scale^2 and the deepest state diverges as the cutoff vanishes.
    pub fn expected(&self) -> f64 {
        self.expected
    }
}

/// Contracts the inner cutoff by `scale` and compares ground-state
/// energies; the ratio equaling scale^2 is the collapse-without-cutoff
/// diagnostic of the inverse-square channel.
pub fn thomas_scaling_check(prob: &InverseSquareProblem, scale: f64) -> Result<ThomasScaling> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::invalid(format!("scale must be finite and > 0, got {scale}")));
    }
    let reference = spectrum_bessel(prob, 1)?;
    if reference.n_found() == 0 {
        return Err(Error::invalid(
            "cutoff-scaling check requires at least one bound state".to_string(),
        ));
    }
    let contracted_prob =
        InverseSquareProblem::with_s0_sq(prob.s0_sq, prob.r_c / scale, f64::INFINITY)?;
    let contracted = spectrum_bessel(&contracted_prob, 1)?;
    if contracted.n_found() == 0 {
        return Err(Error::invalid(
            "cutoff-scaling check lost the bound state after contraction".to_string(),
        ));
    }
    let e1_reference = reference.energies()[0];
    let e1_contracted = contracted.energies()[0];
    Ok(ThomasScaling {
        e1_reference,
        e1_contracted,
        ratio: e1_contracted / e1_reference,
        expected: scale * scale,
    })
}
