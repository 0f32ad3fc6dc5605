//! Experiment-facing quantities: three-body recombination rate and
//! recombination length, in SI units.
//!
//! This is the one module that leaves natural units. Near a Feshbach
//! resonance the number of three-body recombination events per volume and
//! time in a cold gas of density n scales as
//!
//! ```text
//! nu_rec = C(a) n^3 (hbar/m) a^4
//! ```
//!
//! with a dimensionless, log-periodic coefficient C(a) that this crate
//! treats as an external input (it comes from a full three-body
//! calculation or from experiment; nothing here computes it). The length
//! scale extracted from loss measurements is the recombination length
//!
//! ```text
//! rho_3 = (2 sqrt(3) C(a))^{1/4} |a| ,
//! ```
//!
//! normalized so that measuring rho_3 = |a| corresponds to
//! C = 1/(2 sqrt(3)). Successive loss resonances on the negative-a side
//! sit at scattering lengths a geometric ladder apart
//! ([`next_resonance_position`]), the same factor e^{pi/s0} that spaces
//! the bound-state tower in [`crate::spectrum`].
//!
//! Validity caveat: the underlying rate formula assumes the gas is cold
//! enough that the collision energy does not resolve the dimer,
//! k_B T <~ hbar^2/(m a^2); that condition is documented here, not
//! enforced.

use crate::error::{Error, Result};
use crate::spectrum::geometric_factor;

/// Reduced Planck constant, J s (2018 SI exact value).
pub const HBAR: f64 = 1.054571817e-34;

/// Bohr radius, m (CODATA 2018). Scattering lengths in the cold-atom
/// literature are quoted in units of this.
pub const BOHR_RADIUS: f64 = 5.29177210903e-11;

/// State of a single-species ultracold gas, SI units throughout:
/// number density in atoms/m^3, atom mass in kg, scattering length in m.
/// The dimensionless recombination coefficient C(a) is stored alongside
/// because every observable needs it and it is always externally supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasParams {
    number_density: f64,
    atom_mass: f64,
    scattering_length: f64,
    c_of_a: f64,
}

impl GasParams {
    /// Bundles the gas state with its recombination coefficient.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidParameter`] unless number_density > 0,
    /// atom_mass > 0, scattering_length is finite (either sign), and
    /// c_of_a >= 0.
    pub fn new(
        number_density: f64,
        atom_mass: f64,
        scattering_length: f64,
        c_of_a: f64,
    ) -> Result<Self> {
        if !(number_density.is_finite() && number_density > 0.0) {
            return Err(Error::invalid(format!(
                "number density must be positive and finite, got {number_density}"
            )));
        }
        if !(atom_mass.is_finite() && atom_mass > 0.0) {
            return Err(Error::invalid(format!(
                "atom mass must be positive and finite, got {atom_mass}"
            )));
        }
        if !scattering_length.is_finite() {
            return Err(Error::invalid(format!(
                "scattering length must be finite, got {scattering_length}"
            )));
        }
        if !(c_of_a.is_finite() && c_of_a >= 0.0) {
            return Err(Error::invalid(format!(
                "recombination coefficient must be nonnegative and finite, got {c_of_a}"
            )));
        }
        Ok(Self { number_density, atom_mass, scattering_length, c_of_a })
    }

    /// Atoms per cubic meter.
    pub fn number_density(&self) -> f64 {
        self.number_density
    }

    /// Atom mass in kilograms.
    pub fn atom_mass(&self) -> f64 {
        self.atom_mass
    }

    /// s-wave scattering length in meters; negative on the no-dimer side.
    pub fn scattering_length(&self) -> f64 {
        self.scattering_length
    }

    /// Dimensionless recombination coefficient C(a).
    pub fn c_of_a(&self) -> f64 {
        self.c_of_a
    }
}

/// Three-body recombination events per volume and time,
/// nu_rec = C(a) n^3 (hbar/m) a^4, in m^-3 s^-1.
///
/// Scales as the third power of density (three atoms must meet) and the
/// fourth power of the scattering length; the sign of a drops out.
pub fn recombination_rate(gas: &GasParams) -> f64 {
    let a2 = gas.scattering_length * gas.scattering_length;
    gas.c_of_a * gas.number_density.powi(3) * (HBAR / gas.atom_mass) * a2 * a2
}

/// Recombination length rho_3 = (2 sqrt(3) C)^{1/4} |a|, in the units of
/// `a`. A measured rho_3 equal to |a| means C = 1/(2 sqrt(3)); larger C
/// means faster loss. Positive by convention regardless of the sign of a.
///
/// # Errors
///
/// [`Error::InvalidParameter`] unless c_of_a >= 0 and `a` is finite.
pub fn recombination_length(c_of_a: f64, a: f64) -> Result<f64> {
    if !(c_of_a.is_finite() && c_of_a >= 0.0) {
        return Err(Error::invalid(format!(
            "recombination coefficient must be nonnegative and finite, got {c_of_a}"
        )));
    }
    if !a.is_finite() {
        return Err(Error::invalid(format!("scattering length must be finite, got {a}")));
    }
    Ok((2.0 * 3f64.sqrt() * c_of_a).powf(0.25) * a.abs())
}

/// Scattering length of the next loss resonance deeper in the ladder:
/// a multiplied by the geometric factor e^{pi/s0}. Works in any length
/// unit and preserves the sign of `a` (resonances on the negative-a side
/// stay negative).
///
/// # Errors
///
/// [`Error::InvalidParameter`] unless s0 > 0 and `a` is finite.
pub fn next_resonance_position(a: f64, s0: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::invalid(format!("scattering length must be finite, got {a}")));
    }
    Ok(a * geometric_factor(s0)?)
}
