//! Doubly periodic conformal-surface geometry: the conformal factor, mean
//! curvature (scalar in `E³`, two-component in `E⁴`), Christoffel and spin
//! connections, bending functionals, and the square-root-of-`∂Z` spinor.

pub mod connection;
pub mod curvature;
pub mod functionals;
pub mod generators;
pub mod grid;
pub mod spinor;

pub use connection::{
    anti_self_adjoint_factor, christoffel_conformal, spin_connection_conformal, ChristoffelField,
    RhoField, SpinConnectionField,
};
pub use curvature::{complex_mean_curvature, conformal_factor, mean_curvature, CurvatureField};
pub use functionals::{gauss_bonnet, willmore_area, GaussBonnet, WillmoreArea};
pub use generators::SurfaceGenerator;
pub use grid::{ConformalGrid, SurfaceAmbient, SurfaceInput};
pub use spinor::{weierstrass_spinor_surface, SurfaceSpinor};

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum SurfaceError {
    #[error("grid must be at least 16x16 with even sides, got {nu}x{nv}")]
    GridTooSmall { nu: usize, nv: usize },
    #[error("point count {got} does not match Nu*Nv = {want}")]
    PointCount { got: usize, want: usize },
    #[error("grid is not conformal: residual {residual:e} at node ({iu}, {iv})")]
    NotConformal { residual: f64, iu: usize, iv: usize },
    #[error("normal frame breaks down at node ({iu}, {iv}): {what}")]
    FrameBreakdown { iu: usize, iv: usize, what: String },
    #[error("∂Z vanishes (|∂Z| = {value:e}) at node ({iu}, {iv})")]
    BranchPoint { iu: usize, iv: usize, value: f64 },
    #[error("operation requires a doubly periodic grid")]
    NotPeriodic,
    #[error("conformal factor must be positive, got {value:e} at node ({iu}, {iv})")]
    NonPositiveRho { iu: usize, iv: usize, value: f64 },
    #[error("unknown surface shape `{0}`")]
    UnknownShape(String),
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
    #[error("Euler characteristic far from an integer: residual {residual:e}")]
    ChiResidual { residual: f64 },
}
