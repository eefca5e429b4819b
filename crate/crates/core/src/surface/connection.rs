//! Connection data of a conformal metric `ρ (du² + dv²)`: Christoffel
//! symbols, the spin connection in the σ-matrix representation, and the
//! measure-conjugated derivative `ρ^{-1/2} ∂_α ρ^{1/2}` that is exactly
//! anti-self-adjoint in the ρ-weighted inner product.

use super::grid::ConformalGrid;
use super::SurfaceError;
use crate::clifford::pauli;
use crate::scalar::Real;
use crate::spectral::{diff_matrix_full, Sector};
use nalgebra::DMatrix;
use num_complex::Complex;

/// Conformal factor samples with their grid derivatives.
///
/// Built either spectrally from a grid or from analytic closures (tests).
#[derive(Clone, Debug)]
pub struct RhoField<F: Real> {
    pub nu: usize,
    pub nv: usize,
    pub lu: F,
    pub lv: F,
    pub rho: Vec<F>,
    pub rho_u: Vec<F>,
    pub rho_v: Vec<F>,
}

impl<F: Real> RhoField<F> {
    pub fn from_grid(grid: &ConformalGrid<F>, rho: Vec<F>) -> Result<Self, SurfaceError> {
        for (i, &r) in rho.iter().enumerate() {
            if r <= F::zero() {
                return Err(SurfaceError::NonPositiveRho {
                    iu: i % grid.nu,
                    iv: i / grid.nu,
                    value: r.f64(),
                });
            }
        }
        let rho_u = grid.derivative(&rho, 0);
        let rho_v = grid.derivative(&rho, 1);
        Ok(RhoField { nu: grid.nu, nv: grid.nv, lu: grid.lu, lv: grid.lv, rho, rho_u, rho_v })
    }

    /// Field from closures of `(u, v)`, with analytic derivatives.
    pub fn analytic(
        nu: usize,
        nv: usize,
        lu: F,
        lv: F,
        rho: impl Fn(F, F) -> F,
        rho_u: impl Fn(F, F) -> F,
        rho_v: impl Fn(F, F) -> F,
    ) -> Self {
        let mut r = Vec::with_capacity(nu * nv);
        let mut ru = Vec::with_capacity(nu * nv);
        let mut rv = Vec::with_capacity(nu * nv);
        for iv in 0..nv {
            for iu in 0..nu {
                let u = lu * F::of(iu as f64) / F::of(nu as f64);
                let v = lv * F::of(iv as f64) / F::of(nv as f64);
                r.push(rho(u, v));
                ru.push(rho_u(u, v));
                rv.push(rho_v(u, v));
            }
        }
        RhoField { nu, nv, lu, lv, rho: r, rho_u: ru, rho_v: rv }
    }

    pub fn node_count(&self) -> usize {
        self.nu * self.nv
    }

    fn deriv(&self, alpha: usize, i: usize) -> F {
        if alpha == 0 {
            self.rho_u[i]
        } else {
            self.rho_v[i]
        }
    }
}

/// Christoffel symbols `γ^α_{βγ}` per node, indexed `[α][β][γ]`.
#[derive(Clone, Debug)]
pub struct ChristoffelField<F: Real> {
    pub gamma: Vec<[[[F; 2]; 2]; 2]>,
}

/// `γ^α_{βγ} = ½ ρ^{-1} (δ^α_β ∂_γ ρ + δ^α_γ ∂_β ρ - δ_{βγ} ∂_α ρ)`.
pub fn christoffel_conformal<F: Real>(field: &RhoField<F>) -> ChristoffelField<F> {
    let half = F::of(0.5);
    let gamma = (0..field.node_count())
        .map(|i| {
            let inv = F::one() / field.rho[i];
            let mut g = [[[F::zero(); 2]; 2]; 2];
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        let mut val = F::zero();
                        if a == b {
                            val += field.deriv(c, i);
                        }
                        if a == c {
                            val += field.deriv(b, i);
                        }
                        if b == c {
                            val -= field.deriv(a, i);
                        }
                        g[a][b][c] = half * inv * val;
                    }
                }
            }
            g
        })
        .collect();
    ChristoffelField { gamma }
}

/// Spin connection per node: `ω_α = -¼ ρ^{-1} σ^{ab} (∂_a ρ δ_{αb} - ∂_b ρ δ_{αa})`
/// with `σ^{ab} = [σ^a, σ^b]/2`, evaluated in the 2x2 representation
/// (or `1 ⊗ σ^{ab}` in the 4x4 one). Reduces to
/// `ω_u = ½ ρ^{-1} (∂_v ρ) σ^{12}`, `ω_v = -½ ρ^{-1} (∂_u ρ) σ^{12}`.
#[derive(Clone, Debug)]
pub struct SpinConnectionField<F: Real> {
    /// coefficient of σ^{12} in (ω_u, ω_v) per node
    pub coeff: Vec<[F; 2]>,
    /// the matrix σ^{12} = [σ¹,σ²]/2 = i σ³ in the requested block size
    pub sigma12: DMatrix<Complex<F>>,
}

pub fn spin_connection_conformal<F: Real>(
    field: &RhoField<F>,
    block: usize,
) -> SpinConnectionField<F> {
    assert!(block == 2 || block == 4, "spinor block is 2 (E3) or 4 (E4)");
    let half = F::of(0.5);
    let coeff = (0..field.node_count())
        .map(|i| {
            let inv = F::one() / field.rho[i];
            [half * inv * field.rho_v[i], -half * inv * field.rho_u[i]]
        })
        .collect();
    let s12 = pauli::<F>(3).map(|x| x * F::i()); // [σ¹,σ²]/2 = iσ³
    let sigma12 = if block == 2 {
        s12
    } else {
        DMatrix::identity(2, 2).kronecker(&s12)
    };
    SpinConnectionField { coeff, sigma12 }
}

impl<F: Real> SpinConnectionField<F> {
    /// Full matrix `ω_α` at one node.
    pub fn omega(&self, node: usize, alpha: usize) -> DMatrix<Complex<F>> {
        self.sigma12
            .map(|x| x * Complex::new(self.coeff[node][alpha], F::zero()))
    }
}

/// Grid operator `ρ^{-1/2} ∘ ∂_α ∘ ρ^{1/2}` as a dense matrix over the
/// nodes; exactly anti-self-adjoint for `⟨f, g⟩ = Σ ρ f̄ g`.
pub fn anti_self_adjoint_factor<F: Real>(
    field: &RhoField<F>,
    axis: usize,
    sector: Sector,
) -> DMatrix<Complex<F>> {
    let n_nodes = field.node_count();
    let d = grid_derivative_matrix(field.nu, field.nv, field.lu, field.lv, axis, sector);
    let mut out = DMatrix::<Complex<F>>::zeros(n_nodes, n_nodes);
    for r in 0..n_nodes {
        let wr = F::one() / field.rho[r].sqrt();
        for c in 0..n_nodes {
            let wc = field.rho[c].sqrt();
            out[(r, c)] = d[(r, c)] * Complex::new(wr * wc, F::zero());
        }
    }
    out
}

/// Dense derivative matrix along one axis over all grid nodes
/// (`index = iv * nu + iu`), with the requested boundary sector. Uses the
/// full-symbol spectral matrix, so no grid mode is artificially annihilated.
pub fn grid_derivative_matrix<F: Real>(
    nu: usize,
    nv: usize,
    lu: F,
    lv: F,
    axis: usize,
    sector: Sector,
) -> DMatrix<Complex<F>> {
    let n_nodes = nu * nv;
    let mut out = DMatrix::<Complex<F>>::zeros(n_nodes, n_nodes);
    if axis == 0 {
        let d = diff_matrix_full::<F>(nu, lu, sector);
        for iv in 0..nv {
            for r in 0..nu {
                for c in 0..nu {
                    out[(iv * nu + r, iv * nu + c)] = d[(r, c)];
                }
            }
        }
    } else {
        let d = diff_matrix_full::<F>(nv, lv, sector);
        for iu in 0..nu {
            for r in 0..nv {
                for c in 0..nv {
                    out[(r * nu + iu, c * nu + iu)] = d[(r, c)];
                }
            }
        }
    }
    out
}
