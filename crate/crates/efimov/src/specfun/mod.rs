//! Special functions and numerical kernels shared by the physics modules.
//!
//! Everything here is generic numerics with no model content: the modified
//! Bessel function of imaginary order with its zero scanner, complex
//! log-gamma, Gauss-Kronrod adaptive quadrature, Brent root bracketing, and
//! the omega constant. The physics modules build on these; nothing in this
//! module depends on them.

mod bessel;
mod compensated;
mod gamma;
mod lambert;
mod quad;
mod roots;

pub use bessel::{
    bessel_k_imag, bessel_k_imag_saturates, bessel_k_imag_small_x_asymptotic,
    bessel_k_imag_zeros, BesselZeros,
};
pub use lambert::lambert_root;
pub use quad::{integrate_adaptive, QuadratureResult};
pub use roots::{find_root, RootBracket};

pub(crate) use bessel::leading_zero_estimate;
pub(crate) use compensated::Dd;
