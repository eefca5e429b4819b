//! Surface Dirac operators on doubly periodic conformal grids.
//!
//! The `E³` operator is `2 √ρ [[p, ∂], [-∂̄, p]] (1/√ρ)` in the calibrated
//! convention (`Printed` keeps `+∂̄`), with `p = √ρ H / 2`. The `E⁴`
//! operator is the 4x4 block form with `p_c = √ρ H_c / 2`:
//!
//! ```text
//!       ⎡  0    0    p_c   ∂  ⎤
//! 2√ρ · ⎢  0    0    ∂̄   -p̄_c ⎥ · ρ^{-1/2}
//!       ⎢  p̄_c  ∂    0    0  ⎥
//!       ⎣  ∂̄   -p_c  0    0  ⎦
//! ```
//!
//! whose row-sign twist `diag(1,-1,1,-1)` makes the core hermitian. The
//! splitting `full = intrinsic + potential` is exact at the matrix level:
//! the potential is a pointwise multiplication operator, so the conformal
//! conjugation acts trivially on it.

use super::operator::{
    Convention, OperatorMatrix, OperatorMeta, SpinStructure, StructureTag,
    STRUCTURE_TOL_SURFACE,
};
use super::OperatorError;
use crate::linalg::CMat;
use crate::scalar::Real;
use crate::spectral::Sector;
use crate::surface::connection::{grid_derivative_matrix, RhoField};
use crate::surface::curvature::CurvatureField;
use num_complex::Complex;

fn holomorphic_pair<F: Real>(
    nu: usize,
    nv: usize,
    lu: F,
    lv: F,
    sectors: [Sector; 2],
) -> (CMat<F>, CMat<F>) {
    let du = grid_derivative_matrix::<F>(nu, nv, lu, lv, 0, sectors[0]);
    let dv = grid_derivative_matrix::<F>(nu, nv, lu, lv, 1, sectors[1]);
    let half = Complex::new(F::of(0.5), F::zero());
    let i = F::i();
    let n = nu * nv;
    let mut del = CMat::<F>::zeros(n, n);
    let mut delbar = CMat::<F>::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            del[(r, c)] = (du[(r, c)] - i * dv[(r, c)]) * half;
            delbar[(r, c)] = (du[(r, c)] + i * dv[(r, c)]) * half;
        }
    }
    (del, delbar)
}

struct SurfaceDims<F: Real> {
    nu: usize,
    nv: usize,
    lu: F,
    lv: F,
}

fn dims_of<F: Real>(field: &CurvatureField<F>, lu: F, lv: F) -> SurfaceDims<F> {
    SurfaceDims { nu: field.nu, nv: field.nv, lu, lv }
}

/// `E³` core `[[p, ∂], [s·∂̄, p]]`, `s = -1` calibrated / `+1` printed.
fn e3_core<F: Real>(
    p: &[F],
    dims: &SurfaceDims<F>,
    sectors: [Sector; 2],
    convention: Convention,
) -> CMat<F> {
    let n = dims.nu * dims.nv;
    let (del, delbar) = holomorphic_pair(dims.nu, dims.nv, dims.lu, dims.lv, sectors);
    let sign = match convention {
        Convention::Thm44Sigma3 => -F::one(),
        Convention::Printed => F::one(),
    };
    let mut m = CMat::<F>::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            m[(r, n + c)] = del[(r, c)];
            m[(n + r, c)] = delbar[(r, c)] * Complex::new(sign, F::zero());
        }
        let pv = Complex::new(p[r], F::zero());
        m[(r, r)] = pv;
        m[(n + r, n + r)] = pv;
    }
    m
}

/// `E⁴` core in the block form above.
fn e4_core<F: Real>(
    p_c: &[Complex<F>],
    dims: &SurfaceDims<F>,
    sectors: [Sector; 2],
) -> CMat<F> {
    let n = dims.nu * dims.nv;
    let (del, delbar) = holomorphic_pair(dims.nu, dims.nv, dims.lu, dims.lv, sectors);
    let mut m = CMat::<F>::zeros(4 * n, 4 * n);
    let at = |b: usize, node: usize| b * n + node;
    for r in 0..n {
        for c in 0..n {
            m[(at(0, r), at(3, c))] = del[(r, c)];
            m[(at(1, r), at(2, c))] = delbar[(r, c)];
            m[(at(2, r), at(1, c))] = del[(r, c)];
            m[(at(3, r), at(0, c))] = delbar[(r, c)];
        }
        m[(at(0, r), at(2, r))] = p_c[r];
        m[(at(1, r), at(3, r))] = -p_c[r].conj();
        m[(at(2, r), at(0, r))] = p_c[r].conj();
        m[(at(3, r), at(1, r))] = -p_c[r];
    }
    m
}

fn meta<F: Real>(
    dims: &SurfaceDims<F>,
    sectors: [Sector; 2],
    ambient_dim: usize,
    convention: Convention,
) -> OperatorMeta<F> {
    OperatorMeta::Surface {
        nu: dims.nu,
        nv: dims.nv,
        lu: dims.lu,
        lv: dims.lv,
        sectors,
        ambient_dim,
        convention,
    }
}

/// Full surface operator `2 √ρ · core · ρ^{-1/2}` from a curvature field.
pub fn surface_dirac<F: Real>(
    field: &CurvatureField<F>,
    lu: F,
    lv: F,
    sectors: [Sector; 2],
    convention: Convention,
) -> Result<OperatorMatrix<F>, OperatorError> {
    let dims = dims_of(field, lu, lv);
    let sqrt_rho: Vec<F> = field.rho.iter().map(|r| r.sqrt()).collect();
    let two = Complex::new(F::of(2.0), F::zero());
    if let Some(p) = field.potential() {
        let core = e3_core(&p, &dims, sectors, convention).map(|x| x * two);
        let (tag, twist) = match convention {
            // [[p, ∂], [-∂̄, p]] is plainly hermitian for real p
            Convention::Thm44Sigma3 => (StructureTag::Hermitian, None),
            // the printed sign needs the σ₃ row twist
            Convention::Printed => {
                let n = field.nu * field.nv;
                let mut t = vec![F::one(); 2 * n];
                for s in t.iter_mut().skip(n) {
                    *s = -F::one();
                }
                (StructureTag::SigmaHermitian, Some(t))
            }
        };
        OperatorMatrix::conjugated(
            core,
            &sqrt_rho,
            2,
            tag,
            twist,
            SpinStructure::surface(sectors[0], sectors[1]),
            meta(&dims, sectors, 3, convention),
            STRUCTURE_TOL_SURFACE,
        )
    } else if let Some(p_c) = field.complex_potential() {
        let core = e4_core(&p_c, &dims, sectors).map(|x| x * two);
        let n = field.nu * field.nv;
        let mut t = vec![F::one(); 4 * n];
        for b in [1usize, 3] {
            for s in t.iter_mut().skip(b * n).take(n) {
                *s = -F::one();
            }
        }
        OperatorMatrix::conjugated(
            core,
            &sqrt_rho,
            4,
            StructureTag::SigmaHermitian,
            Some(t),
            SpinStructure::surface(sectors[0], sectors[1]),
            meta(&dims, sectors, 4, convention),
            STRUCTURE_TOL_SURFACE,
        )
    } else {
        Err(OperatorError::MissingPotential("curvature field carries no H data".into()))
    }
}

/// Intrinsic part of the surface operator: the full operator with the
/// mean-curvature potential set to zero, in the same gauge and convention.
pub fn intrinsic_surface_dirac<F: Real>(
    field: &CurvatureField<F>,
    lu: F,
    lv: F,
    sectors: [Sector; 2],
    convention: Convention,
    ambient_dim: usize,
) -> Result<OperatorMatrix<F>, OperatorError> {
    let dims = dims_of(field, lu, lv);
    let sqrt_rho: Vec<F> = field.rho.iter().map(|r| r.sqrt()).collect();
    let two = Complex::new(F::of(2.0), F::zero());
    let n = field.nu * field.nv;
    match ambient_dim {
        3 => {
            let zero = vec![F::zero(); n];
            let core = e3_core(&zero, &dims, sectors, convention).map(|x| x * two);
            OperatorMatrix::conjugated(
                core,
                &sqrt_rho,
                2,
                StructureTag::Hermitian,
                None,
                SpinStructure::surface(sectors[0], sectors[1]),
                meta(&dims, sectors, 3, convention),
                STRUCTURE_TOL_SURFACE,
            )
        }
        4 => {
            let zero = vec![Complex::new(F::zero(), F::zero()); n];
            let core = e4_core(&zero, &dims, sectors).map(|x| x * two);
            let mut t = vec![F::one(); 4 * n];
            for b in [1usize, 3] {
                for s in t.iter_mut().skip(b * n).take(n) {
                    *s = -F::one();
                }
            }
            OperatorMatrix::conjugated(
                core,
                &sqrt_rho,
                4,
                StructureTag::SigmaHermitian,
                Some(t),
                SpinStructure::surface(sectors[0], sectors[1]),
                meta(&dims, sectors, 4, convention),
                STRUCTURE_TOL_SURFACE,
            )
        }
        other => panic!("ambient dimension {other} unsupported"),
    }
}

/// The mean-curvature potential as a pointwise multiplication operator:
/// `diag(2p)` on both components in `E³`; in `E⁴` the `2p_c` block pattern,
/// which equals `√ρ [H₁ σ¹⊗σ³ + H₂ σ²⊗σ⁰]` in the fixed Clifford dictionary
/// of this gauge.
pub fn mean_curvature_potential<F: Real>(
    field: &CurvatureField<F>,
    lu: F,
    lv: F,
    sectors: [Sector; 2],
    convention: Convention,
) -> Result<OperatorMatrix<F>, OperatorError> {
    let dims = dims_of(field, lu, lv);
    let n = field.nu * field.nv;
    let two = F::of(2.0);
    if let Some(p) = field.potential() {
        let mut m = CMat::<F>::zeros(2 * n, 2 * n);
        for r in 0..n {
            let v = Complex::new(two * p[r], F::zero());
            m[(r, r)] = v;
            m[(n + r, n + r)] = v;
        }
        OperatorMatrix::plain(
            m,
            StructureTag::Hermitian,
            None,
            SpinStructure::surface(sectors[0], sectors[1]),
            meta(&dims, sectors, 3, convention),
            STRUCTURE_TOL_SURFACE,
        )
    } else if let Some(p_c) = field.complex_potential() {
        let mut m = CMat::<F>::zeros(4 * n, 4 * n);
        let at = |b: usize, node: usize| b * n + node;
        let twoc = Complex::new(two, F::zero());
        for r in 0..n {
            m[(at(0, r), at(2, r))] = p_c[r] * twoc;
            m[(at(1, r), at(3, r))] = -p_c[r].conj() * twoc;
            m[(at(2, r), at(0, r))] = p_c[r].conj() * twoc;
            m[(at(3, r), at(1, r))] = -p_c[r] * twoc;
        }
        let mut t = vec![F::one(); 4 * n];
        for b in [1usize, 3] {
            for s in t.iter_mut().skip(b * n).take(n) {
                *s = -F::one();
            }
        }
        OperatorMatrix::plain(
            m,
            StructureTag::SigmaHermitian,
            Some(t),
            SpinStructure::surface(sectors[0], sectors[1]),
            meta(&dims, sectors, 4, convention),
            STRUCTURE_TOL_SURFACE,
        )
    } else {
        Err(OperatorError::MissingPotential("curvature field carries no H data".into()))
    }
}

/// The intrinsic operator in the σ-matrix gauge of the connection formulas,
/// `σ^a [ρ^{-1/2} ∂_a + ½ ρ^{-3/2} (∂_a ρ)]`, assembled literally: the
/// connection enters as a pointwise diagonal term, which makes the
/// `½ ρ^{-3/2} ∂_α ρ` pattern directly readable off the matrix entries.
pub fn intrinsic_sigma_gauge<F: Real>(
    rho_field: &RhoField<F>,
    sectors: [Sector; 2],
) -> CMat<F> {
    let n = rho_field.node_count();
    let (del, delbar) = holomorphic_pair(
        rho_field.nu,
        rho_field.nv,
        rho_field.lu,
        rho_field.lv,
        sectors,
    );
    // σ¹A₁ + σ²A₂ = [[0, A₁ - iA₂], [A₁ + iA₂, 0]] with
    // A_α = ρ^{-1/2} D_α + ½ ρ^{-3/2} (∂_α ρ)
    let mut m = CMat::<F>::zeros(2 * n, 2 * n);
    let half = F::of(0.5);
    let two = Complex::new(F::of(2.0), F::zero());
    for r in 0..n {
        let w = Complex::new(F::one() / rho_field.rho[r].sqrt(), F::zero());
        let w3 = half / (rho_field.rho[r] * rho_field.rho[r].sqrt());
        let conn = Complex::new(w3 * rho_field.rho_u[r], -w3 * rho_field.rho_v[r]);
        for c in 0..n {
            m[(r, n + c)] = w * del[(r, c)] * two;
            m[(n + r, c)] = w * delbar[(r, c)] * two;
        }
        m[(r, n + r)] += conn;
        m[(n + r, r)] += conn.conj();
    }
    m
}

/// The same operator through the exact conjugation `A_α = ρ^{-1} ∂_α ρ^{1/2}`
/// (equal to the two-term form in the continuum). This assembly is exactly
/// anti-self-adjoint in the `ρ^{3/2}`-weighted inner product — the measure
/// of half-form sections — at the matrix level.
pub fn intrinsic_sigma_gauge_conjugated<F: Real>(
    rho_field: &RhoField<F>,
    sectors: [Sector; 2],
) -> CMat<F> {
    let n = rho_field.node_count();
    let (del, delbar) = holomorphic_pair(
        rho_field.nu,
        rho_field.nv,
        rho_field.lu,
        rho_field.lv,
        sectors,
    );
    let mut m = CMat::<F>::zeros(2 * n, 2 * n);
    let two = Complex::new(F::of(2.0), F::zero());
    for r in 0..n {
        let wr = F::one() / rho_field.rho[r];
        for c in 0..n {
            let wc = rho_field.rho[c].sqrt();
            let weight = Complex::new(wr * wc, F::zero()) * two;
            m[(r, n + c)] = weight * del[(r, c)];
            m[(n + r, c)] = weight * delbar[(r, c)];
        }
    }
    m
}
