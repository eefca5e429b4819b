//! Submanifold Dirac operator toolkit.
//!
//! The crate bundles four layers that feed each other:
//!
//! * [`clifford`] — exact Clifford algebra over `R^n`, the spin group with
//!   its double cover of `SO(n)`, and Pauli-matrix representations;
//! * [`curve`] / [`surface`] — discrete closed-curve and doubly periodic
//!   conformal-surface geometry (curvature data, functionals, spinors);
//! * [`dirac`] — dense spectral discretizations of the curve and surface
//!   Dirac operators, their spectra and zero-mode diagnostics;
//! * [`mkdv`] — pseudo-spectral MKdV evolution of the curvature profile with
//!   isospectrality tracking for the associated curve operator.
//!
//! All numerical modules are generic over the working precision through
//! [`scalar::Real`]; the aliases below pin the `f64` instantiations used by
//! the command-line front end.

pub mod clifford;
pub mod curve;
pub mod dirac;
pub mod linalg;
pub mod mkdv;
pub mod scalar;
pub mod spectral;
pub mod surface;

pub use scalar::{Real, Ring};

/// `f64` multivector with real coefficients.
pub type Mv = clifford::MultiVector<f64>;
/// `f64` multivector with complex coefficients.
pub type CMv = clifford::MultiVector<num_complex::Complex<f64>>;
/// Exact multivector over 64-bit rationals.
pub type RatMv = clifford::MultiVector<num_rational::Rational64>;
/// Working-precision complex number.
pub type C64 = num_complex::Complex<f64>;

/// `f64` closed-curve sample types.
pub type CurveSamples = curve::CurveSamples<f64>;
pub type ArclengthCurve = curve::ArclengthCurve<f64>;
pub type CurvatureData = curve::CurvatureData<f64>;

/// `f64` surface types.
pub type ConformalGrid = surface::ConformalGrid<f64>;
pub type CurvatureField = surface::CurvatureField<f64>;

/// `f64` operator and spectrum types.
pub type OperatorMatrix = dirac::OperatorMatrix<f64>;
pub type SpectrumResult = dirac::SpectrumResult<f64>;

/// `f64` MKdV state.
pub type MkdvState = mkdv::MkdvState<f64>;
