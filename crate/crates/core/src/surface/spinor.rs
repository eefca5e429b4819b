//! The square-root spinor of a conformal `E³` immersion: componentwise
//! continuous branches of `√(∂Z)` and `√(-∂Z)` for `Z = X₁ + √-1 X₂`,
//! with per-direction boundary sectors read from the phase winding of `∂Z`.

use super::grid::{ConformalGrid, SurfaceAmbient};
use super::SurfaceError;
use crate::scalar::Real;
use crate::spectral::Sector;
use num_complex::Complex;

/// Spinor field with per-direction sectors.
#[derive(Clone, Debug)]
pub struct SurfaceSpinor<F: Real> {
    pub psi1: Vec<Complex<F>>,
    pub psi2: Vec<Complex<F>>,
    /// sector in (u, v)
    pub sectors: [Sector; 2],
    /// phase winding of ∂Z around each direction
    pub windings: [i64; 2],
}

/// Componentwise square roots of `∂Z` with branch continuity over the grid.
///
/// The relative branch of the second component is pinned to `ψ₂ = -i ψ₁`
/// (a continuous branch of `√(-∂Z)`), the pairing under which the pair spans
/// the kernel of the assembled surface operator.
pub fn weierstrass_spinor_surface<F: Real>(
    grid: &ConformalGrid<F>,
) -> Result<SurfaceSpinor<F>, SurfaceError> {
    assert_eq!(grid.ambient, SurfaceAmbient::E3, "spinor extraction is for E3 surfaces");
    let n_nodes = grid.node_count();
    let xu = grid.position_derivative(0);
    let xv = grid.position_derivative(1);
    // ∂Z = (∂_u - i ∂_v)(X₁ + i X₂) / 2
    let mut dz = Vec::with_capacity(n_nodes);
    let half = F::of(0.5);
    for i in 0..n_nodes {
        let re = (xu[i][0] + xv[i][1]) * half;
        let im = (xu[i][1] - xv[i][0]) * half;
        dz.push(Complex::new(re, im));
    }
    // scale for the branch-point guard
    let max_mod = dz.iter().map(|z| z.norm_sqr()).fold(F::zero(), |a, b| a.max(b)).sqrt();
    for (i, z) in dz.iter().enumerate() {
        let m = z.norm_sqr().sqrt();
        if m < F::of(1e-9) * max_mod {
            return Err(SurfaceError::BranchPoint {
                iu: i % grid.nu,
                iv: i / grid.nu,
                value: m.f64(),
            });
        }
    }

    let arg = |z: Complex<F>| -> F { z.im.atan2(z.re) };
    let wrap = |mut d: F| -> F {
        while d > F::pi() {
            d -= F::two_pi();
        }
        while d < -F::pi() {
            d += F::two_pi();
        }
        d
    };

    // unwrapped phase: along the first row in u, then along columns in v
    let mut phase = vec![F::zero(); n_nodes];
    phase[0] = arg(dz[0]);
    for iu in 1..grid.nu {
        let i = grid.index(iu, 0);
        let p = grid.index(iu - 1, 0);
        phase[i] = phase[p] + wrap(arg(dz[i]) - arg(dz[p]));
    }
    for iu in 0..grid.nu {
        for iv in 1..grid.nv {
            let i = grid.index(iu, iv);
            let p = grid.index(iu, iv - 1);
            phase[i] = phase[p] + wrap(arg(dz[i]) - arg(dz[p]));
        }
    }
    // windings around each periodic direction (measured on the first row/column)
    let wind_u = {
        let last = grid.index(grid.nu - 1, 0);
        let total =
            phase[last] + wrap(arg(dz[grid.index(0, 0)]) - arg(dz[last])) - phase[grid.index(0, 0)];
        (total / F::two_pi()).round().f64() as i64
    };
    let wind_v = {
        let last = grid.index(0, grid.nv - 1);
        let total =
            phase[last] + wrap(arg(dz[grid.index(0, 0)]) - arg(dz[last])) - phase[grid.index(0, 0)];
        (total / F::two_pi()).round().f64() as i64
    };
    let sector = |w: i64| {
        if w.rem_euclid(2) == 1 {
            Sector::Antiperiodic
        } else {
            Sector::Periodic
        }
    };

    let minus_i = Complex::new(F::zero(), -F::one());
    let mut psi1 = Vec::with_capacity(n_nodes);
    let mut psi2 = Vec::with_capacity(n_nodes);
    for i in 0..n_nodes {
        let r = dz[i].norm_sqr().sqrt().sqrt();
        let hp = phase[i] * half;
        let p1 = Complex::new(r * hp.cos(), r * hp.sin());
        psi1.push(p1);
        psi2.push(minus_i * p1);
    }
    Ok(SurfaceSpinor {
        psi1,
        psi2,
        sectors: [sector(wind_u), sector(wind_v)],
        windings: [wind_u, wind_v],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::curvature::conformal_factor;
    use crate::surface::generators::SurfaceGenerator;
    use std::collections::BTreeMap;

    fn gen(shape: &str, nu: usize, nv: usize) -> ConformalGrid<f64> {
        SurfaceGenerator { shape: shape.into(), params: BTreeMap::new(), nu, nv }
            .build()
            .unwrap()
    }

    #[test]
    fn cylinder_spinor_components_and_sector() {
        let g = gen("cylinder", 16, 16);
        let sp = weierstrass_spinor_surface(&g).unwrap();
        assert_eq!(sp.sectors, [Sector::Antiperiodic, Sector::Periodic]);
        // X = (sin u, cos u, v): Z = sin u + i cos u = i e^{-iu},
        // ∂Z = e^{-iu}/2, so ψ₁ ∝ e^{-iu/2} with |ψ₁| = 1/√2
        for iv in 0..16 {
            for iu in 0..16 {
                let i = g.index(iu, iv);
                let u = std::f64::consts::TAU * iu as f64 / 16.0;
                let want_mod = 0.5f64.sqrt();
                assert!((sp.psi1[i].norm() - want_mod).abs() < 1e-10);
                let want_phase = -u / 2.0;
                let diff = (sp.psi1[i].arg() - want_phase + std::f64::consts::PI)
                    .rem_euclid(std::f64::consts::TAU)
                    - std::f64::consts::PI;
                assert!(diff.abs() < 1e-10, "phase at ({iu},{iv})");
            }
        }
    }

    #[test]
    fn modulus_bounded_by_conformal_factor() {
        // |∂Z|² ≤ ρ/2 pointwise, so |ψ₁|² ≤ √(ρ/2)
        let g = gen("cylinder", 16, 16);
        let (rho, _) = conformal_factor(&g).unwrap();
        let sp = weierstrass_spinor_surface(&g).unwrap();
        for (i, p) in sp.psi1.iter().enumerate() {
            assert!(p.norm_sqr() <= (rho[i] / 2.0).sqrt() * (1.0 + 1e-9));
        }
    }

    #[test]
    fn torus_of_revolution_has_branch_points() {
        // ∂Z ∝ (R + r cos φ)(1 + sin φ) vanishes on the φ = 3π/2 circle;
        // the extraction must refuse rather than pick a branch across it
        let g = gen("torus_of_revolution", 16, 64);
        assert!(matches!(
            weierstrass_spinor_surface(&g),
            Err(SurfaceError::BranchPoint { .. })
        ));
    }

    #[test]
    fn non_conformal_grid_is_caught_upstream() {
        let g = gen("sheared_plane", 16, 16);
        // the spinor extraction itself works on any grid with ∂Z ≠ 0; the
        // conformality error belongs to the curvature pipeline
        assert!(conformal_factor(&g).is_err());
    }
}
