//! Discrete closed-curve geometry in the plane and in space: arclength
//! resampling, Frenet-Serret data with complex curvature, topological
//! functionals, reconstruction from curvature, and the square-root-of-tangent
//! spinor.

pub mod frenet;
pub mod functionals;
pub mod reconstruct;
pub mod resample;
pub mod samples;
pub mod spinor;

pub use frenet::{complex_curvature, frenet_data, ComplexCurvature, CurvatureData, DerivativeScheme};
pub use functionals::{euler_bernoulli, rotation_number, writhe, EulerBernoulli, WritheResult};
pub use reconstruct::{reconstruct_plane, reconstruct_space};
pub use resample::{resample_arclength, ArclengthCurve};
pub use samples::{
    uniform_arclength_samples, uniform_arclength_samples_with_length, Ambient, CurveGenerator,
    CurveInput, CurveSamples,
};
pub use spinor::{weierstrass_spinor_curve, CurveSpinor};

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum CurveError {
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("consecutive points {i} and {next} coincide")]
    CoincidentPoints { i: usize, next: usize },
    #[error("operation requires a closed curve")]
    OpenCurve,
    #[error("operation requires a plane curve")]
    NotPlane,
    #[error("operation requires a space curve")]
    NotSpace,
    #[error("Frenet frame degenerates: κ = {kappa:e} below 1e-8 at sample {index}")]
    DegenerateFrame { index: usize, kappa: f64 },
    #[error("sampling too coarse: {what} (residual {residual:e})")]
    TooCoarse { what: String, residual: f64 },
    #[error("tangent phase jump {jump:e} ≥ π/2 between samples {i} and {next}")]
    PhaseJump { i: usize, next: usize, jump: f64 },
    #[error("unknown curve shape `{0}`")]
    UnknownShape(String),
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
}
