//! The dense operator container: matrix, grid metadata, spin structure,
//! sign convention, and the algebraic structure tag verified at build time.

use super::OperatorError;
use crate::linalg::CMat;
use crate::scalar::Real;
use crate::spectral::Sector;
use serde::{Deserialize, Serialize};

/// One sector per periodic grid direction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize, Hash)]
pub struct SpinStructure(pub Vec<Sector>);

impl SpinStructure {
    pub fn curve(sector: Sector) -> Self {
        SpinStructure(vec![sector])
    }

    pub fn surface(u: Sector, v: Sector) -> Self {
        SpinStructure(vec![u, v])
    }

    pub fn expect_len(&self, want: usize) -> Result<(), OperatorError> {
        if self.0.len() != want {
            Err(OperatorError::SectorCount { want, got: self.0.len() })
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Display for SpinStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Sign convention of the assembled surface operator.
///
/// `Thm44Sigma3` flips the sign of the `∂̄` block relative to the printed
/// `E³` matrix; the printed pattern makes the Fourier block determinant
/// `p² + |λ|²`, which admits no zero modes for real `p ≠ 0`, while the
/// flipped one gives `p² - |λ|²` and carries the square-root-of-`∂Z` kernel.
/// `Printed` keeps the published sign for comparison runs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Convention {
    Thm44Sigma3,
    Printed,
}

impl Convention {
    pub fn tag(self) -> &'static str {
        match self {
            Convention::Thm44Sigma3 => "thm44_sigma3",
            Convention::Printed => "thm44_printed",
        }
    }
}

/// Verified algebraic structure of the conjugated core.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum StructureTag {
    /// `D† = -D`
    AntiHermitian,
    /// `D† = D`
    Hermitian,
    /// `(S D)† = S D` for a diagonal sign matrix `S`
    SigmaHermitian,
    General,
}

impl StructureTag {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureTag::AntiHermitian => "anti-hermitian",
            StructureTag::Hermitian => "hermitian",
            StructureTag::SigmaHermitian => "sigma3-hermitian",
            StructureTag::General => "general",
        }
    }
}

/// What the operator discretizes.
#[derive(Clone, Debug)]
pub enum OperatorMeta<F: Real> {
    Curve {
        n: usize,
        length: F,
        sector: Sector,
        form: &'static str,
    },
    Surface {
        nu: usize,
        nv: usize,
        lu: F,
        lv: F,
        sectors: [Sector; 2],
        ambient_dim: usize,
        convention: Convention,
    },
}

impl<F: Real> OperatorMeta<F> {
    /// Base frequency scale, used for default kernel tolerances.
    pub fn frequency_scale(&self) -> F {
        match self {
            OperatorMeta::Curve { length, .. } => F::two_pi() / *length,
            OperatorMeta::Surface { lu, lv, .. } => F::two_pi() / lu.min(*lv),
        }
    }

    pub fn convention_tag(&self) -> &'static str {
        match self {
            OperatorMeta::Curve { .. } => "thm44_curve",
            OperatorMeta::Surface { convention, .. } => convention.tag(),
        }
    }
}

/// Dense operator with its conjugated core and structure certificate.
///
/// For surface operators over a non-constant conformal factor the full
/// matrix is `W · core · W⁻¹` with `W = diag(√ρ)` per spinor component; for
/// curve operators core and matrix coincide.
#[derive(Clone, Debug)]
pub struct OperatorMatrix<F: Real> {
    matrix: CMat<F>,
    core: CMat<F>,
    /// diagonal sign twist for `SigmaHermitian` cores
    twist: Option<Vec<F>>,
    pub structure: StructureTag,
    pub structure_residual: F,
    pub spin: SpinStructure,
    pub meta: OperatorMeta<F>,
}

pub const STRUCTURE_TOL_CURVE: f64 = 1e-12;
pub const STRUCTURE_TOL_SURFACE: f64 = 1e-10;

impl<F: Real> OperatorMatrix<F> {
    /// Wraps a matrix whose core equals the matrix itself.
    pub(crate) fn plain(
        matrix: CMat<F>,
        structure: StructureTag,
        twist: Option<Vec<F>>,
        spin: SpinStructure,
        meta: OperatorMeta<F>,
        tol: f64,
    ) -> Result<Self, OperatorError> {
        let core = matrix.clone();
        Self::build(matrix, core, twist, structure, spin, meta, tol)
    }

    pub(crate) fn conjugated(
        core: CMat<F>,
        weight_sqrt_rho: &[F],
        blocks: usize,
        structure: StructureTag,
        twist: Option<Vec<F>>,
        spin: SpinStructure,
        meta: OperatorMeta<F>,
        tol: f64,
    ) -> Result<Self, OperatorError> {
        let n = weight_sqrt_rho.len();
        assert_eq!(core.nrows(), n * blocks);
        let mut matrix = core.clone();
        // W core W⁻¹ with W acting identically on every spinor component
        for r in 0..core.nrows() {
            let wr = weight_sqrt_rho[r % n];
            for c in 0..core.ncols() {
                let wc = weight_sqrt_rho[c % n];
                matrix[(r, c)] *= num_complex::Complex::new(wr / wc, F::zero());
            }
        }
        Self::build(matrix, core, twist, structure, spin, meta, tol)
    }

    fn build(
        matrix: CMat<F>,
        core: CMat<F>,
        twist: Option<Vec<F>>,
        structure: StructureTag,
        spin: SpinStructure,
        meta: OperatorMeta<F>,
        tol: f64,
    ) -> Result<Self, OperatorError> {
        let residual = match structure {
            StructureTag::AntiHermitian => (&core + core.adjoint()).norm(),
            StructureTag::Hermitian => (&core - core.adjoint()).norm(),
            StructureTag::SigmaHermitian => {
                let t = twist.as_ref().expect("sigma tag carries a twist");
                let twisted = twist_rows(&core, t);
                (&twisted - twisted.adjoint()).norm()
            }
            StructureTag::General => F::zero(),
        };
        let scale = F::one() + core.norm();
        if residual > F::of(tol) * scale {
            return Err(OperatorError::StructureCheck {
                tag: structure.as_str(),
                residual: residual.f64(),
                bound: (F::of(tol) * scale).f64(),
            });
        }
        Ok(OperatorMatrix {
            matrix,
            core,
            twist,
            structure,
            structure_residual: residual,
            spin,
            meta,
        })
    }

    pub fn matrix(&self) -> &CMat<F> {
        &self.matrix
    }

    pub fn core(&self) -> &CMat<F> {
        &self.core
    }

    pub fn twist(&self) -> Option<&[F]> {
        self.twist.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Whether matrix and core coincide (trivial conformal weight).
    pub fn is_unweighted(&self) -> bool {
        (&self.matrix - &self.core).norm() <= F::of(1e-12) * self.core.norm()
    }
}

pub(crate) fn twist_rows<F: Real>(m: &CMat<F>, signs: &[F]) -> CMat<F> {
    let mut out = m.clone();
    for r in 0..m.nrows() {
        let s = num_complex::Complex::new(signs[r], F::zero());
        for c in 0..m.ncols() {
            out[(r, c)] *= s;
        }
    }
    out
}
