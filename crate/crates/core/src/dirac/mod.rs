//! Dense spectral discretizations of the curve and surface Dirac operators,
//! their spectra, and zero-mode/index diagnostics.
//!
//! Boundary sectors realize the two spin structures of each periodic
//! direction: integer Fourier modes for the trivial (periodic) sector,
//! half-integer modes for the antiperiodic one.

pub mod curve_ops;
pub mod diagnostics;
pub mod operator;
pub mod spectrum;
pub mod surface_ops;

pub use curve_ops::{curve_dirac, quadratic_identity, CurveForm, QuadraticIdentityReport};
pub use diagnostics::{index_diagnostics, zero_mode_residual, IndexDiagnostics};
pub use operator::{Convention, OperatorMatrix, OperatorMeta, SpinStructure, StructureTag};
pub use spectrum::{spectrum, SpectrumRequest, SpectrumResult};
pub use surface_ops::{
    intrinsic_sigma_gauge, intrinsic_sigma_gauge_conjugated, intrinsic_surface_dirac,
    mean_curvature_potential, surface_dirac,
};

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum OperatorError {
    #[error("curvature samples are not periodic; pick a consistent closed profile")]
    NonPeriodicCurvature,
    #[error("operator needs {want} sector entries, got {got}")]
    SectorCount { want: usize, got: usize },
    #[error("structure check `{tag}` failed: residual {residual:e} exceeds {bound:e}")]
    StructureCheck { tag: &'static str, residual: f64, bound: f64 },
    #[error("the intro form needs a real curvature profile (max |Im κ_C| = {imag:e})")]
    ComplexIntroPotential { imag: f64 },
    #[error("spinor length {got} does not match operator dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("missing potential: {0}")]
    MissingPotential(String),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
    #[error(transparent)]
    Curve(#[from] crate::curve::CurveError),
    #[error(transparent)]
    Surface(#[from] crate::surface::SurfaceError),
}
