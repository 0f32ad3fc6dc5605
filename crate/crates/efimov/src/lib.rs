//! Numerics for Efimov physics in the heavy-heavy-light three-body problem.
//!
//! Everything in the library core works in natural units hbar = 2m = 1, so a
//! binding momentum kappa maps to the energy E = -kappa^2 and lengths are
//! inverse momenta. SI unit handling is confined to [`observables`].
//!
//! Module map:
//! - [`specfun`]: modified Bessel function of imaginary order and its zeros,
//!   adaptive quadrature, bracketed root finding, the omega constant.
//! - [`two_body`]: separable-potential dimer (binding, coupling, wave
//!   function) plus low-energy scattering helpers.
//! - [`born_oppenheimer`]: adiabatic heavy-heavy energy curve from the
//!   light-atom binding equation, its inverse-square and Yukawa limits.
//! - [`spectrum`]: geometric bound-state towers of the attractive 1/r^2
//!   problem by Bessel zeros, direct shooting, and the asymptotic formula.
//! - [`semiclassical`]: phase-space state counts, partition function, and
//!   density of states for the same channel.
//! - [`observables`]: three-body recombination rate and length in SI units.

mod error;
pub mod born_oppenheimer;
pub mod observables;
pub mod semiclassical;
pub mod specfun;
pub mod spectrum;
pub mod two_body;

pub use error::{Error, Result};
pub use num_complex::Complex64;
