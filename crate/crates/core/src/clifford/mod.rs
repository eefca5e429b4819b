//! Exact Clifford algebra over `R^n` with negative-definite signature,
//! the spin group and its double cover of `SO(n)`, and complex matrix
//! representations built from Pauli matrices.

pub mod blade;
pub mod exterior;
pub mod multivector;
pub mod rep;
pub mod selfcheck;
pub mod spin;

pub use blade::Blade;
pub use exterior::{cliff_action, cliff_basis, cliff_symbol, exterior_mul, interior_mul};
pub use multivector::{MultiVector, MultiVectorJson};
pub use rep::{pauli, CMatrix, MatrixRep};
pub use spin::{
    adjoint_action, is_spin, mv_exp, so_algebra_to_clifford, spin_diagnostics, spin_to_so,
    SOMatrix, SpinDiagnostics, SpinElement,
};

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum CliffordError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("element is not in the spin group (even: {even}, |g*g - 1| = {unit_residual:e}, conjugation residual = {conjugation_residual:e})")]
    NotSpin { even: bool, unit_residual: f64, conjugation_residual: f64 },
    #[error("conjugation by e_{index} leaves the vector space, residual {residual:e}")]
    ConjugationLeavesVectors { index: u32, residual: f64 },
    #[error("matrix is not special orthogonal (orthogonality {orthogonality_residual:e}, det {det_residual:e})")]
    NotSpecialOrthogonal { orthogonality_residual: f64, det_residual: f64 },
    #[error("matrix is not antisymmetric, residual {residual:e}")]
    NotAntisymmetric { residual: f64 },
    #[error("matrix representation supports 1 <= n <= 12, got {dim}")]
    RepDimension { dim: u32 },
    #[error("generator relation failed for (γ{j}, γ{k}), residual {residual:e}")]
    RepRelation { j: u32, k: u32, residual: f64 },
}
