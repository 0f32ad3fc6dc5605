//! Two-body sector: a rank-one separable potential with Lorentzian form
//! factor, its bound state, and low-energy scattering helpers.
//!
//! The potential is V = -lambda |g><g| with g(p) = 1/(p^2 + beta^2) in
//! momentum space. Natural units hbar = 2m = 1 apply throughout, so momenta
//! and inverse lengths are interchangeable and a bound state at wavenumber
//! kappa0 has energy -kappa0^2.
//!
//! The bound-state condition lambda * int d^3p g^2(p)/(p^2 + kappa0^2) = 1
//! has the closed form lambda = beta (beta + kappa0)^2 / pi^2, obtained by
//! contour integration; the tests validate it against adaptive quadrature of
//! the defining integral. Everything else in the module follows from it.

use crate::error::{Error, Result};
use crate::specfun::Dd;
use num_complex::Complex64;
use std::f64::consts::PI;

// pi^2 and its inverse in double-double precision, for the coupling <->
// binding maps. At kappa0/beta = 1e-6 the inversion amplifies any rounding
// in lambda by a factor beta/kappa0 = 1e6, so the round trip holds 1e-10
// only if both maps stay within about a quarter ulp; see the round-trip
// property test.
const PI_SQUARED: Dd = Dd { hi: 9.869604401089358, lo: 6.2652955087397114e-16 };
const INV_PI_SQUARED: Dd = Dd { hi: 0.10132118364233778, lo: -3.9662898794394414e-18 };

/// Rank-one attractive separable potential V = -lambda |g><g| with
/// form factor g(p) = 1/(p^2 + beta^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YamaguchiPotential {
    lambda: f64,
    beta: f64,
}

impl YamaguchiPotential {
    /// Validates lambda > 0 (attractive) and beta > 0.
    pub fn new(lambda: f64, beta: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::invalid(format!(
                "coupling lambda must be finite and > 0, got {lambda}"
            )));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::invalid(format!(
                "range parameter beta must be finite and > 0, got {beta}"
            )));
        }
        Ok(Self { lambda, beta })
    }

    /// Coupling strength (inverse length cubed in these units).
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Form-factor range parameter (inverse length).
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Momentum-space form factor g(p) = 1/(p^2 + beta^2).
    pub fn form_factor_momentum(&self, p: f64) -> f64 {
        1.0 / (p * p + self.beta * self.beta)
    }

    /// Position-space form factor e^{-beta r}/(4 pi r), the Fourier transform
    /// of g(p) with the 1/(2 pi)^3 convention.
    pub fn form_factor_position(&self, r: f64) -> f64 {
        (-self.beta * r).exp() / (4.0 * PI * r)
    }
}

/// Coupling at which the first bound state appears for range parameter
/// `beta`: lambda_crit = beta^3 / pi^2. Scales exactly as beta^3.
pub fn critical_coupling(beta: f64) -> Result<f64> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::invalid(format!(
            "range parameter beta must be finite and > 0, got {beta}"
        )));
    }
    // Same double-double product sequence as coupling_from_binding at
    // kappa0 = 0, so the two functions agree to the last bit and a coupling
    // built exactly at threshold is never rejected by a one-ulp mismatch.
    let b = Dd::from_f64(beta);
    Ok(b.mul(b).mul(b).mul(INV_PI_SQUARED).to_f64())
}

/// Bound state of the separable potential. Produced by
/// [`binding_from_coupling`]; the fields are mutually consistent by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimerState {
    kappa0: f64,
    binding_energy: f64,
    scattering_length: f64,
    norm_const: f64,
}

impl DimerState {
    fn from_kappa0(kappa0: f64, beta: f64) -> Self {
        // Reduced normalization constant: psi(r) = norm_const *
        // (e^{-kappa0 r} - e^{-beta r}) / ((beta - kappa0) r), which keeps
        // norm_const finite and positive through the degenerate point
        // kappa0 = beta.
        let norm_const = (kappa0 * beta * (kappa0 + beta) / (2.0 * PI)).sqrt();
        Self {
            kappa0,
            binding_energy: -kappa0 * kappa0,
            scattering_length: 1.0 / kappa0,
            norm_const,
        }
    }

    /// Bound-state wavenumber (inverse length).
    pub fn kappa0(&self) -> f64 {
        self.kappa0
    }

    /// Binding energy -kappa0^2 (natural units).
    pub fn binding_energy(&self) -> f64 {
        self.binding_energy
    }

    /// Zero-range estimate of the scattering length, 1/kappa0; +infinity at
    /// threshold.
    pub fn scattering_length(&self) -> f64 {
        self.scattering_length
    }

    /// Prefactor of the normalized wave function in the stable factorization
    /// used by [`bound_wavefunction`]; zero at threshold.
    pub fn norm_const(&self) -> f64 {
        self.norm_const
    }
}

/// Solves the bound-state condition for the potential's binding wavenumber.
///
/// Inverting lambda = beta (beta + kappa0)^2 / pi^2 gives
/// kappa0 = sqrt(lambda pi^2 / beta) - beta. Couplings below
/// [`critical_coupling`] support no bound state and produce an error; a
/// coupling at threshold up to double-precision roundoff reports
/// kappa0 = 0 exactly.
pub fn binding_from_coupling(pot: &YamaguchiPotential) -> Result<DimerState> {
    let lambda_critical = critical_coupling(pot.beta)?;
    if pot.lambda < lambda_critical {
        return Err(Error::NoBoundState {
            lambda: pot.lambda,
            lambda_critical,
        });
    }
    // sqrt(lambda pi^2 / beta) - beta in double-double: the subtraction
    // cancels catastrophically near threshold, so every bit ahead of it
    // counts. The final two_sum absorbs -beta exactly.
    let root = Dd::from_f64(pot.lambda).mul(PI_SQUARED).div_f64(pot.beta).sqrt();
    let raw = root.add(Dd::from_f64(-pot.beta)).to_f64();
    let kappa0 = if raw <= 8.0 * f64::EPSILON * pot.beta { 0.0 } else { raw };
    Ok(DimerState::from_kappa0(kappa0, pot.beta))
}

/// Coupling that places the bound state at wavenumber `kappa0` for range
/// parameter `beta`: lambda = beta (beta + kappa0)^2 / pi^2.
pub fn coupling_from_binding(kappa0: f64, beta: f64) -> Result<YamaguchiPotential> {
    if !(kappa0.is_finite() && kappa0 >= 0.0) {
        return Err(Error::invalid(format!(
            "binding wavenumber kappa0 must be finite and >= 0, got {kappa0}"
        )));
    }
    // Evaluated in double-double and rounded once, for the same reason as in
    // binding_from_coupling.
    let sum = Dd::from_f64(beta).add(Dd::from_f64(kappa0));
    let lambda = sum.mul(sum).mul(Dd::from_f64(beta)).mul(INV_PI_SQUARED).to_f64();
    YamaguchiPotential::new(lambda, beta)
}

/// Normalized bound-state wave function
/// psi(r) = N (e^{-kappa0 r} - e^{-beta r}) / ((beta - kappa0) r),
/// with int |psi|^2 4 pi r^2 dr = 1.
///
/// `pot` must be the potential that produced `state`. The difference
/// quotient is evaluated through expm1, which stays fully accurate as
/// kappa0 -> beta; at kappa0 = beta exactly the limit form
/// sqrt(beta^3/pi) e^{-beta r} is returned.
pub fn bound_wavefunction(state: &DimerState, pot: &YamaguchiPotential, r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::invalid(format!("radius r must be finite and > 0, got {r}")));
    }
    if state.kappa0 <= 0.0 {
        return Err(Error::invalid(
            "wave function requires a bound state with kappa0 > 0".to_string(),
        ));
    }
    // psi = N e^{-min(kappa0,beta) r} expm1-quotient: factoring out the
    // slower exponential keeps the remaining factor in (0, 1], so neither
    // branch can overflow, and the removable singularity at w = 0 is
    // handled by expm1 itself.
    let w = (pot.beta - state.kappa0) * r;
    Ok(if w == 0.0 {
        state.norm_const * (-pot.beta * r).exp()
    } else if w > 0.0 {
        state.norm_const * (-state.kappa0 * r).exp() * (-(-w).exp_m1() / w)
    } else {
        state.norm_const * (-pot.beta * r).exp() * (w.exp_m1() / w)
    })
}

/// Scattering length / effective range pair for the low-energy expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowEnergyParams {
    a: f64,
    r0: f64,
}

impl LowEnergyParams {
    /// Validates r0 >= 0 (zero range is the contact limit) and a nonzero;
    /// `a` may be infinite with either sign (resonance).
    pub fn new(a: f64, r0: f64) -> Result<Self> {
        if a.is_nan() || a == 0.0 {
            return Err(Error::invalid(format!(
                "scattering length a must be nonzero (possibly infinite), got {a}"
            )));
        }
        if !(r0.is_finite() && r0 >= 0.0) {
            return Err(Error::invalid(format!(
                "effective range r0 must be finite and >= 0, got {r0}"
            )));
        }
        Ok(Self { a, r0 })
    }

    /// Scattering length.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Effective range.
    pub fn r0(&self) -> f64 {
        self.r0
    }
}

/// Zero-range s-wave scattering amplitude f0(k) = -1/(1/a + ik).
///
/// Satisfies the unitarity relation Im f0 = k |f0|^2 identically; at k = 0
/// it reduces to -a.
pub fn zero_range_amplitude(k: f64, a: f64) -> Result<Complex64> {
    if !(k.is_finite() && k >= 0.0) {
        return Err(Error::invalid(format!("wavenumber k must be finite and >= 0, got {k}")));
    }
    if a.is_nan() || a == 0.0 {
        return Err(Error::invalid(format!(
            "scattering length a must be nonzero (possibly infinite), got {a}"
        )));
    }
    let denom = Complex64::new(1.0 / a, k);
    Ok(-denom.inv())
}

/// Low-energy expansion of k cot(delta0): -1/a + r0 k^2 / 2, truncated at
/// the effective-range term.
pub fn effective_range_expansion(k: f64, params: &LowEnergyParams) -> Result<f64> {
    if !(k.is_finite() && k >= 0.0) {
        return Err(Error::invalid(format!("wavenumber k must be finite and >= 0, got {k}")));
    }
    Ok(-1.0 / params.a + 0.5 * params.r0 * k * k)
}

/// Magnetic-field control of the scattering length near a closed-channel
/// resonance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeshbachParams {
    a_bg: f64,
    b0: f64,
    delta_b: f64,
    delta_mu: f64,
}

impl FeshbachParams {
    /// Validates finite fields and a nonzero resonance width.
    pub fn new(a_bg: f64, b0: f64, delta_b: f64, delta_mu: f64) -> Result<Self> {
        for (name, value) in [("a_bg", a_bg), ("B0", b0), ("delta_B", delta_b), ("delta_mu", delta_mu)]
        {
            if !value.is_finite() {
                return Err(Error::invalid(format!("{name} must be finite, got {value}")));
            }
        }
        if delta_b == 0.0 {
            return Err(Error::invalid("resonance width delta_B must be nonzero".to_string()));
        }
        Ok(Self { a_bg, b0, delta_b, delta_mu })
    }

    /// Background scattering length far from resonance.
    pub fn a_bg(&self) -> f64 {
        self.a_bg
    }

    /// Resonance position.
    pub fn b0(&self) -> f64 {
        self.b0
    }

    /// Resonance width.
    pub fn delta_b(&self) -> f64 {
        self.delta_b
    }

    /// Magnetic-moment difference between the channels.
    pub fn delta_mu(&self) -> f64 {
        self.delta_mu
    }

    /// Energy detuning delta_mu * (B - B0) of the closed-channel state.
    pub fn energy_detuning(&self, b: f64) -> f64 {
        self.delta_mu * (b - self.b0)
    }
}

/// Scattering length across a magnetically tuned resonance:
/// a(B) = a_bg (1 - delta_B / (B - B0)).
///
/// At B = B0 exactly the IEEE division produces the signed infinity of the
/// limit from above. (a(B) - a_bg)(B - B0) = -a_bg delta_B is constant in B.
pub fn feshbach_scattering_length(b: f64, params: &FeshbachParams) -> Result<f64> {
    if !b.is_finite() {
        return Err(Error::invalid(format!("field B must be finite, got {b}")));
    }
    Ok(params.a_bg * (1.0 - params.delta_b / (b - params.b0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::integrate_adaptive;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Left-hand side of the defining bound-state condition,
    /// lambda int_0^inf 4 pi p^2 g^2(p) / (p^2 + kappa0^2) dp, evaluated by
    /// adaptive quadrature. Equals 1 at the true binding wavenumber.
    fn binding_condition_residual(pot: &YamaguchiPotential, kappa0: f64) -> f64 {
        let k2 = kappa0 * kappa0;
        let integral = integrate_adaptive(
            |p| {
                // Grouped as (p g)^2 so the large-p evaluation decays to zero
                // instead of forming inf * 0.
                let pg = p * pot.form_factor_momentum(p);
                4.0 * PI * pg * pg / (p * p + k2)
            },
            0.0,
            f64::INFINITY,
            1e-13,
        );
        assert!(integral.converged);
        pot.lambda() * integral.value - 1.0
    }

    #[test]
    fn critical_coupling_closed_form() {
        // beta = 1: lambda_crit = 1/pi^2 = 0.10132...; quadrature confirms
        // the condition is met with kappa0 = 0.
        let lc = critical_coupling(1.0).unwrap();
        assert_relative_eq!(lc, 0.10132118364233778, max_relative = 1e-12);
        let pot = YamaguchiPotential::new(lc, 1.0).unwrap();
        assert!(binding_condition_residual(&pot, 0.0).abs() < 1e-10);
    }

    #[test]
    fn critical_coupling_scales_as_beta_cubed() {
        let l1 = critical_coupling(0.5).unwrap();
        let l2 = critical_coupling(2.0).unwrap();
        let slope = (l2 / l1).ln() / (2.0_f64 / 0.5).ln();
        assert!((slope - 3.0).abs() < 1e-6);
    }

    #[test]
    fn threshold_coupling_binds_at_exactly_zero() {
        let pot = YamaguchiPotential::new(critical_coupling(1.0).unwrap(), 1.0).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        assert_eq!(state.kappa0(), 0.0);
        assert_eq!(state.binding_energy(), 0.0);
        assert_eq!(state.scattering_length(), f64::INFINITY);
    }

    #[test]
    fn subcritical_coupling_is_rejected() {
        let pot = YamaguchiPotential::new(0.05, 1.0).unwrap();
        match binding_from_coupling(&pot) {
            Err(crate::Error::NoBoundState { lambda, lambda_critical }) => {
                assert_eq!(lambda, 0.05);
                assert_relative_eq!(lambda_critical, 0.10132118364233778, max_relative = 1e-12);
            }
            other => panic!("expected NoBoundState, got {other:?}"),
        }
    }

    #[test]
    fn binding_satisfies_quadrature_condition() {
        // Twice the critical coupling gives kappa0 = sqrt(2) - 1.
        let pot =
            YamaguchiPotential::new(2.0 * critical_coupling(1.0).unwrap(), 1.0).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        assert_relative_eq!(state.kappa0(), 2.0_f64.sqrt() - 1.0, max_relative = 1e-12);
        assert!(binding_condition_residual(&pot, state.kappa0()).abs() < 1e-10);
    }

    #[test]
    fn coupling_at_kappa0_equal_beta() {
        // kappa0 = beta quadruples the critical coupling.
        for beta in [0.5, 1.0, 3.0] {
            let pot = coupling_from_binding(beta, beta).unwrap();
            assert_relative_eq!(
                pot.lambda(),
                4.0 * critical_coupling(beta).unwrap(),
                max_relative = 1e-12
            );
            assert!(binding_condition_residual(&pot, beta).abs() < 1e-10);
        }
    }

    #[test]
    fn wavefunction_is_normalized() {
        for (kappa0, beta) in [(0.01, 1.0), (0.4, 1.0), (1.0, 1.0), (2.5, 1.0), (0.3, 7.0)] {
            let pot = coupling_from_binding(kappa0, beta).unwrap();
            let state = binding_from_coupling(&pot).unwrap();
            let norm = integrate_adaptive(
                |r| {
                    let psi = bound_wavefunction(&state, &pot, r).unwrap();
                    if psi == 0.0 {
                        return 0.0;
                    }
                    4.0 * PI * r * r * psi * psi
                },
                0.0,
                f64::INFINITY,
                1e-12,
            );
            assert!(norm.converged);
            assert_relative_eq!(norm.value, 1.0, max_relative = 1e-8);
        }
    }

    #[test]
    fn wavefunction_finite_at_origin() {
        let pot = coupling_from_binding(0.3, 1.0).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        for r in [1e-12, 1e-9, 1e-6] {
            let psi = bound_wavefunction(&state, &pot, r).unwrap();
            assert_relative_eq!(psi, state.norm_const(), max_relative = 1e-5);
        }
    }

    #[test]
    fn wavefunction_degenerate_point_matches_neighbors() {
        // kappa0 = beta is a removable singularity of the difference
        // quotient; values vary smoothly through it.
        let beta = 1.0;
        let r = 0.7;
        let exact = {
            let pot = coupling_from_binding(beta, beta).unwrap();
            let state = binding_from_coupling(&pot).unwrap();
            bound_wavefunction(&state, &pot, r).unwrap()
        };
        let limit = (beta * beta * beta / PI).sqrt() * (-beta * r).exp();
        assert_relative_eq!(exact, limit, max_relative = 1e-10);
        for delta in [1e-6, -1e-6] {
            let kappa0 = beta + delta;
            let pot = coupling_from_binding(kappa0, beta).unwrap();
            let state = binding_from_coupling(&pot).unwrap();
            let near = bound_wavefunction(&state, &pot, r).unwrap();
            assert_relative_eq!(near, exact, max_relative = 1e-5);
        }
    }

    #[test]
    fn wavefunction_zero_range_tail() {
        // Beyond the potential range the reduced combination
        // r psi e^{kappa0 r} is flat to well under 1%: the pure e^{-kappa0 r}/r
        // tail of a zero-range state.
        let (kappa0, beta) = (0.01, 1.0);
        let pot = coupling_from_binding(kappa0, beta).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        let reduced = |r: f64| {
            bound_wavefunction(&state, &pot, r).unwrap() * r * (kappa0 * r).exp()
        };
        let plateau = reduced(50.0 / beta);
        for r in [10.0 / beta, 20.0 / beta, 100.0 / beta] {
            assert!((reduced(r) / plateau - 1.0).abs() < 1e-2);
        }

        // The plateau height itself carries a finite-range offset of order
        // kappa0/beta; at beta/kappa0 = 1000 it matches the normalized
        // zero-range constant sqrt(kappa0/(2 pi)) within 1%.
        let (kappa0, beta) = (0.001, 1.0);
        let pot = coupling_from_binding(kappa0, beta).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        let r = 10.0 / beta;
        let reduced = bound_wavefunction(&state, &pot, r).unwrap() * r * (kappa0 * r).exp();
        let zero_range = (kappa0 / (2.0 * PI)).sqrt();
        assert!((reduced / zero_range - 1.0).abs() < 1e-2);
    }

    #[test]
    fn amplitude_limits() {
        // f0(0) = -a, here with negative a.
        let f = zero_range_amplitude(0.0, -100.0).unwrap();
        assert_relative_eq!(f.re, 100.0, max_relative = 1e-14);
        assert_eq!(f.im, 0.0);
        // k = 1/a halves the peak cross-section: |f0|^2 = a^2/2.
        let a = 5.0;
        let f = zero_range_amplitude(1.0 / a, a).unwrap();
        assert_relative_eq!(f.norm_sqr(), a * a / 2.0, max_relative = 1e-12);
        // On resonance the amplitude saturates unitarity: f0 = i/k.
        let f = zero_range_amplitude(2.0, f64::INFINITY).unwrap();
        assert_relative_eq!(f.im, 0.5, max_relative = 1e-14);
        assert_eq!(f.re, -0.0);
    }

    #[test]
    fn expansion_values() {
        let params = LowEnergyParams::new(5.0, 1.0).unwrap();
        assert_relative_eq!(
            effective_range_expansion(0.0, &params).unwrap(),
            -0.2,
            max_relative = 1e-14
        );
        let resonant = LowEnergyParams::new(f64::INFINITY, 1.0).unwrap();
        assert_relative_eq!(
            effective_range_expansion(1.0, &resonant).unwrap(),
            0.5,
            max_relative = 1e-14
        );
    }

    #[test]
    fn zero_range_pole_gives_dimer_energy() {
        // With r0 = 0 the expansion is k-independent, so the bound-state
        // pole condition k cot(delta0) = -kappa pins kappa = 1/a and the
        // dimer energy -1/a^2.
        let a = 7.0;
        let params = LowEnergyParams::new(a, 0.0).unwrap();
        let kappa = -effective_range_expansion(0.3, &params).unwrap();
        assert_relative_eq!(kappa, 1.0 / a, max_relative = 1e-14);
        assert_relative_eq!(-kappa * kappa, -1.0 / (a * a), max_relative = 1e-14);
    }

    #[test]
    fn feshbach_values_and_divergence() {
        let params = FeshbachParams::new(1.0, 2.0, 1.0, 1.0).unwrap();
        // B - B0 = 2 halves the resonant term.
        assert_relative_eq!(
            feshbach_scattering_length(4.0, &params).unwrap(),
            0.5,
            max_relative = 1e-14
        );
        // Approaching from opposite sides diverges with opposite signs.
        let above = feshbach_scattering_length(2.0 + 1e-13, &params).unwrap();
        let below = feshbach_scattering_length(2.0 - 1e-13, &params).unwrap();
        assert!(above < 0.0 && below > 0.0);
        assert!(above.abs() > 1e12 && below.abs() > 1e12);
        // Exactly on resonance: signed infinity of the limit from above.
        assert_eq!(feshbach_scattering_length(2.0, &params).unwrap(), f64::NEG_INFINITY);
        // Far field recovers the background value.
        assert_relative_eq!(
            feshbach_scattering_length(1e12, &params).unwrap(),
            params.a_bg(),
            max_relative = 1e-9
        );
        assert_relative_eq!(params.energy_detuning(5.0), 3.0, max_relative = 1e-14);
    }

    #[test]
    fn constructor_validation() {
        assert!(YamaguchiPotential::new(-1.0, 1.0).is_err());
        assert!(YamaguchiPotential::new(1.0, 0.0).is_err());
        assert!(critical_coupling(-2.0).is_err());
        assert!(coupling_from_binding(-0.1, 1.0).is_err());
        assert!(LowEnergyParams::new(0.0, 1.0).is_err());
        assert!(LowEnergyParams::new(5.0, -1.0).is_err());
        assert!(FeshbachParams::new(1.0, 0.0, 0.0, 1.0).is_err());
        assert!(zero_range_amplitude(-1.0, 5.0).is_err());
        let pot = coupling_from_binding(0.5, 1.0).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        assert!(bound_wavefunction(&state, &pot, 0.0).is_err());
        let threshold = binding_from_coupling(
            &YamaguchiPotential::new(critical_coupling(1.0).unwrap(), 1.0).unwrap(),
        )
        .unwrap();
        assert!(bound_wavefunction(&threshold, &pot, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_coupling_binding(
            log_ratio in -6.0_f64..0.0,
            log_beta in -1.0_f64..1.0,
        ) {
            let beta = 10.0_f64.powf(log_beta);
            let kappa0 = beta * 10.0_f64.powf(log_ratio);
            let pot = coupling_from_binding(kappa0, beta).unwrap();
            let state = binding_from_coupling(&pot).unwrap();
            prop_assert!((state.kappa0() / kappa0 - 1.0).abs() < 1e-10);
        }

        #[test]
        fn coupling_monotone_in_binding(
            beta in 0.1_f64..10.0,
            k1 in 0.0_f64..5.0,
            dk in 1e-6_f64..1.0,
        ) {
            let l1 = coupling_from_binding(k1, beta).unwrap().lambda();
            let l2 = coupling_from_binding(k1 + dk, beta).unwrap().lambda();
            prop_assert!(l2 > l1);
        }

        #[test]
        fn optical_theorem(
            k in 1e-6_f64..100.0,
            a in prop_oneof![-1e3_f64..-1e-3, 1e-3_f64..1e3],
        ) {
            let f = zero_range_amplitude(k, a).unwrap();
            let lhs = f.im;
            let rhs = k * f.norm_sqr();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-300));
        }

        #[test]
        fn feshbach_inverse_gap_product(b in -50.0_f64..50.0) {
            let params = FeshbachParams::new(2.0, 1.5, 3.0, 1.0).unwrap();
            prop_assume!((b - params.b0()).abs() > 1e-6);
            let a = feshbach_scattering_length(b, &params).unwrap();
            let product = (a - params.a_bg()) * (b - params.b0());
            let expected = -params.a_bg() * params.delta_b();
            prop_assert!((product / expected - 1.0).abs() < 1e-9);
        }
    }
}
