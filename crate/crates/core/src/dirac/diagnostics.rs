//! Zero-mode residuals and the rotation-number/kernel-sector diagnostics.

use super::curve_ops::{curve_dirac, CurveForm};
use super::operator::OperatorMatrix;
use super::spectrum::{spectrum, SpectrumRequest};
use super::OperatorError;
use crate::curve::frenet::{complex_curvature, frenet_data, DerivativeScheme};
use crate::curve::functionals::rotation_number;
use crate::curve::resample::ArclengthCurve;
use crate::linalg::cnorm2;
use crate::scalar::Real;
use crate::spectral::Sector;
use nalgebra::DVector;
use num_complex::Complex;
use serde::Serialize;

/// Relative residual `‖Dψ‖₂ / ‖ψ‖₂`.
pub fn zero_mode_residual<F: Real>(
    op: &OperatorMatrix<F>,
    psi: &[Complex<F>],
) -> Result<F, OperatorError> {
    if psi.len() != op.dim() {
        return Err(OperatorError::DimensionMismatch { got: psi.len(), want: op.dim() });
    }
    let v = DVector::from_column_slice(psi);
    let dv = op.matrix() * v;
    let denom = cnorm2(psi);
    Ok(dv.norm() / denom)
}

/// Kernel/sector diagnostics of a closed plane curve: the tangent winding
/// number, the kernel dimension of the canonical operator in each sector,
/// and whether the kernel sits in the sector of matching parity
/// (antiperiodic iff the rotation number is odd).
#[derive(Clone, Debug, Serialize)]
pub struct IndexDiagnostics<F: Real> {
    pub rotation_number: i64,
    pub kernel_dim_periodic: usize,
    pub kernel_dim_antiperiodic: usize,
    pub smallest_sv_periodic: F,
    pub smallest_sv_antiperiodic: F,
    pub parity_consistent: bool,
}

pub fn index_diagnostics<F: Real>(
    curve: &ArclengthCurve<F>,
) -> Result<IndexDiagnostics<F>, OperatorError> {
    let w = rotation_number(curve)?;
    // spectral curvature so that the exact zero modes stay at spectral depth
    let data = frenet_data(curve, DerivativeScheme::Spectral)?;
    let kc = complex_curvature(&data);
    let mut dims = [0usize; 2];
    let mut smallest = [F::zero(); 2];
    for (i, sector) in [Sector::Periodic, Sector::Antiperiodic].into_iter().enumerate() {
        let op = curve_dirac(&kc, data.length, sector, CurveForm::Canonical)?;
        let spec = spectrum(&op, SpectrumRequest::Full)?;
        dims[i] = spec.kernel_dim;
        smallest[i] = spec.singular_values[0];
    }
    let odd = w.rem_euclid(2) == 1;
    let parity_consistent = if odd {
        dims[1] >= 2 && dims[0] == 0
    } else {
        dims[0] >= 2 && dims[1] == 0
    };
    Ok(IndexDiagnostics {
        rotation_number: w,
        kernel_dim_periodic: dims[0],
        kernel_dim_antiperiodic: dims[1],
        smallest_sv_periodic: smallest[0],
        smallest_sv_antiperiodic: smallest[1],
        parity_consistent,
    })
}
