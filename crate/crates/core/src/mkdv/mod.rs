//! Pseudo-spectral evolution of the focusing MKdV equation
//! `∂_t v + 6 v² ∂ₛv + ∂ₛ³v = 0` for the half-curvature profile `v = k/2`
//! of a closed plane curve, with conserved-quantity tracking, isospectrality
//! measurement for the associated curve operator, and curve-family
//! reconstruction.

pub mod flow;
pub mod isospectral;
pub mod state;
pub mod stepper;

pub use flow::{flow_curve, CurveFlowReport, FlowSnapshot};
pub use isospectral::{isospectrality_check, IsospectralityReport};
pub use state::{conserved_quantities, Conserved, MkdvState};
pub use stepper::{stability_bound, suggested_dt, Stepper};

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum MkdvError {
    #[error("grid size must be even and at least 64, got {0}")]
    GridSize(usize),
    #[error("solution blew up at t = {time}: max |v| = {max_v:e}")]
    BlowUp { time: f64, max_v: f64 },
    #[error("time step {dt:e} exceeds the stability bound {bound:e}")]
    StepTooLarge { dt: f64, bound: f64 },
    #[error(transparent)]
    Operator(#[from] crate::dirac::OperatorError),
    #[error(transparent)]
    Curve(#[from] crate::curve::CurveError),
}
