//! Numerical laboratory for the hyperbolic analogue of the Beukers–Calabi–Kolk
//! substitution on the unit square.
//!
//! The crate is organised bottom-up:
//!
//! * [`special_functions`]: the real dilogarithm on `(-inf, 1]`, the normalised
//!   Rogers dilogarithm, `alpha = asinh(1)` and reference zeta values.
//! * [`quadrature`]: a tanh-sinh (double-exponential) engine for finite
//!   intervals, half-lines and the unit square.
//! * [`change_of_variables`]: the map `x = sinh u / cosh v`, `y = sinh v / cosh u`,
//!   its inverse and Jacobian, the boundary curves of its image region and the
//!   quarter-turn rotation of the `(u, v)` plane.
//! * [`identities`]: a registry of closed-form identities together with the
//!   numeric recipes that check them.
//!
//! The numeric core is generic over [`Scalar`] (`f32` and `f64`); the aliases
//! below fix the scalar to [`Real`] (`f64`), which is what the identity
//! registry and the command-line tool use.

mod error;
mod scalar;

pub mod change_of_variables;
pub mod identities;
pub mod quadrature;
pub mod special_functions;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// The working floating-point type of the verification harness.
pub type Real = f64;

pub type Li2Value = special_functions::Li2Value<Real>;
pub type QuadConfig = quadrature::QuadConfig<Real>;
pub type QuadResult = quadrature::QuadResult<Real>;
pub type MapPoint = change_of_variables::MapPoint<Real>;
pub type SquarePoint = change_of_variables::SquarePoint<Real>;
pub type RotatedPoint = change_of_variables::RotatedPoint<Real>;

pub type Li2Value32 = special_functions::Li2Value<f32>;
pub type QuadConfig32 = quadrature::QuadConfig<f32>;
pub type QuadResult32 = quadrature::QuadResult<f32>;
pub type MapPoint32 = change_of_variables::MapPoint<f32>;
pub type SquarePoint32 = change_of_variables::SquarePoint<f32>;
