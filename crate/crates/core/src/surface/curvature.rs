//! Conformal factor and mean curvature of immersion grids, with the
//! continuously propagated normal frame for `E⁴` surfaces and the complex
//! mean curvature potential.

use super::grid::{ConformalGrid, SurfaceAmbient};
use super::SurfaceError;
use crate::scalar::Real;
use num_complex::Complex;

pub const CONFORMAL_TOL: f64 = 1e-6;

/// Curvature data of a conformal grid.
///
/// The potential normalization is `p = √ρ H / 2` and `p_c = √ρ H_c / 2`
/// with `H_c = H₁ + √-1 H₂`; the common factor of one half makes the `E⁴`
/// potential collapse exactly onto the real `E³` one when `H₂ ≡ 0`.
#[derive(Clone, Debug)]
pub struct CurvatureField<F: Real> {
    pub nu: usize,
    pub nv: usize,
    /// conformal factor, `dvol = ρ du dv`
    pub rho: Vec<F>,
    /// worst conformality residual of the grid
    pub conformality_residual: F,
    /// scalar mean curvature against the grid normal (`E³` only)
    pub h_scalar: Option<Vec<F>>,
    /// normal components `(H₁, H₂)` in the propagated frame (`E⁴` only)
    pub h_components: Option<(Vec<F>, Vec<F>)>,
    /// ‖H⃗‖ per node
    pub h_norm: Vec<F>,
}

impl<F: Real> CurvatureField<F> {
    /// Real potential `p = √ρ H / 2` (`E³`).
    pub fn potential(&self) -> Option<Vec<F>> {
        self.h_scalar
            .as_ref()
            .map(|h| {
                self.rho
                    .iter()
                    .zip(h)
                    .map(|(&r, &h)| r.sqrt() * h * F::of(0.5))
                    .collect()
            })
    }

    /// Complex potential `p_c = √ρ H_c / 2` (`E⁴`), or the real potential
    /// lifted to complex for `E³` fields.
    pub fn complex_potential(&self) -> Option<Vec<Complex<F>>> {
        if let Some((h1, h2)) = &self.h_components {
            Some(
                self.rho
                    .iter()
                    .zip(h1.iter().zip(h2))
                    .map(|(&r, (&a, &b))| {
                        let w = r.sqrt() * F::of(0.5);
                        Complex::new(w * a, w * b)
                    })
                    .collect(),
            )
        } else {
            self.potential()
                .map(|p| p.into_iter().map(|x| Complex::new(x, F::zero())).collect())
        }
    }
}

/// Complex mean curvature `H_c = H₁ + √-1 H₂` and its potential.
#[derive(Clone, Debug)]
pub struct ComplexMeanCurvature<F: Real> {
    pub h_c: Vec<Complex<F>>,
    pub p_c: Vec<Complex<F>>,
}

fn dot4<F: Real>(a: &[F; 4], b: &[F; 4]) -> F {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

fn norm4<F: Real>(a: &[F; 4]) -> F {
    dot4(a, a).sqrt()
}

fn axpy4<F: Real>(y: &mut [F; 4], alpha: F, x: &[F; 4]) {
    for c in 0..4 {
        y[c] += alpha * x[c];
    }
}

fn scale4<F: Real>(a: &[F; 4], s: F) -> [F; 4] {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

/// Conformal factor `ρ = ‖X_u‖²` with the conformality residual
/// `max(|‖X_u‖² - ‖X_v‖²|, |X_u·X_v|) / ‖X_u‖²`; errors above `1e-6`.
pub fn conformal_factor<F: Real>(
    grid: &ConformalGrid<F>,
) -> Result<(Vec<F>, F), SurfaceError> {
    let xu = grid.position_derivative(0);
    let xv = grid.position_derivative(1);
    let mut rho = Vec::with_capacity(grid.node_count());
    let mut worst = F::zero();
    let mut worst_node = (0usize, 0usize);
    for iv in 0..grid.nv {
        for iu in 0..grid.nu {
            let i = grid.index(iu, iv);
            let guu = dot4(&xu[i], &xu[i]);
            let gvv = dot4(&xv[i], &xv[i]);
            let guv = dot4(&xu[i], &xv[i]);
            let res = ((guu - gvv).abs().max(guv.abs())) / guu;
            if res > worst {
                worst = res;
                worst_node = (iu, iv);
            }
            rho.push(guu);
        }
    }
    if worst.f64() >= CONFORMAL_TOL {
        return Err(SurfaceError::NotConformal {
            residual: worst.f64(),
            iu: worst_node.0,
            iv: worst_node.1,
        });
    }
    Ok((rho, worst))
}

/// Mean curvature via `H⃗ = Δ_flat X / (2ρ)` projected onto the normal
/// space; scalar `H = H⃗·n` with `n = X_u × X_v / ‖·‖` in `E³`, components
/// in the continuity-propagated orthonormal normal frame in `E⁴`.
pub fn mean_curvature<F: Real>(grid: &ConformalGrid<F>) -> Result<CurvatureField<F>, SurfaceError> {
    let (rho, residual) = conformal_factor(grid)?;
    let xu = grid.position_derivative(0);
    let xv = grid.position_derivative(1);
    let lap = grid.position_laplacian();
    let n_nodes = grid.node_count();

    // orthonormal tangent pair
    let mut tu = Vec::with_capacity(n_nodes);
    let mut tv = Vec::with_capacity(n_nodes);
    for i in 0..n_nodes {
        let a = scale4(&xu[i], F::one() / norm4(&xu[i]));
        let mut b = xv[i];
        let proj = dot4(&b, &a);
        axpy4(&mut b, -proj, &a);
        let b = scale4(&b, F::one() / norm4(&b));
        tu.push(a);
        tv.push(b);
    }

    // mean curvature vector, projected to the normal space
    let mut hvec = Vec::with_capacity(n_nodes);
    for i in 0..n_nodes {
        let mut h = scale4(&lap[i], F::one() / (F::of(2.0) * rho[i]));
        let pu = dot4(&h, &tu[i]);
        axpy4(&mut h, -pu, &tu[i]);
        let pv = dot4(&h, &tv[i]);
        axpy4(&mut h, -pv, &tv[i]);
        hvec.push(h);
    }
    let h_norm: Vec<F> = hvec.iter().map(norm4).collect();

    match grid.ambient {
        SurfaceAmbient::E3 => {
            let mut h = Vec::with_capacity(n_nodes);
            for i in 0..n_nodes {
                let n = [
                    tu[i][1] * tv[i][2] - tu[i][2] * tv[i][1],
                    tu[i][2] * tv[i][0] - tu[i][0] * tv[i][2],
                    tu[i][0] * tv[i][1] - tu[i][1] * tv[i][0],
                    F::zero(),
                ];
                h.push(dot4(&hvec[i], &n));
            }
            Ok(CurvatureField {
                nu: grid.nu,
                nv: grid.nv,
                rho,
                conformality_residual: residual,
                h_scalar: Some(h),
                h_components: None,
                h_norm,
            })
        }
        SurfaceAmbient::E4 => {
            let (n1, n2) = propagate_normal_frame(grid, &tu, &tv)?;
            let h1: Vec<F> = (0..n_nodes).map(|i| dot4(&hvec[i], &n1[i])).collect();
            let h2: Vec<F> = (0..n_nodes).map(|i| dot4(&hvec[i], &n2[i])).collect();
            Ok(CurvatureField {
                nu: grid.nu,
                nv: grid.nv,
                rho,
                conformality_residual: residual,
                h_scalar: None,
                h_components: Some((h1, h2)),
                h_norm,
            })
        }
    }
}

/// Builds an orthonormal normal frame on an `E⁴` grid by Gram-Schmidt from
/// coordinate seeds at the first node and nearest-neighbor continuation in a
/// serpentine sweep; errors if the projection degenerates or the frame flips.
fn propagate_normal_frame<F: Real>(
    grid: &ConformalGrid<F>,
    tu: &[[F; 4]],
    tv: &[[F; 4]],
) -> Result<(Vec<[F; 4]>, Vec<[F; 4]>), SurfaceError> {
    let n_nodes = grid.node_count();
    let mut n1 = vec![[F::zero(); 4]; n_nodes];
    let mut n2 = vec![[F::zero(); 4]; n_nodes];

    let project_normal = |v: &[F; 4], i: usize| -> [F; 4] {
        let mut w = *v;
        let pu = dot4(&w, &tu[i]);
        axpy4(&mut w, -pu, &tu[i]);
        let pv = dot4(&w, &tv[i]);
        axpy4(&mut w, -pv, &tv[i]);
        w
    };

    // seed frame at node (0,0). The first normal prefers the e₃ axis, the
    // second prefers e₄, so a surface lifted from E³ (x₄ ≡ const) keeps its
    // second normal globally along x₄ and H₂ ≡ 0.
    let e = |c: usize| -> [F; 4] {
        let mut v = [F::zero(); 4];
        v[c] = F::one();
        v
    };
    let first_seeds = [e(2), e(0), e(1), e(3)];
    let second_seeds = [e(3), e(2), e(0), e(1)];
    let mut first: Option<[F; 4]> = None;
    for seed in &first_seeds {
        let w = project_normal(seed, 0);
        let norm = norm4(&w);
        if norm.f64() > 1e-6 {
            first = Some(scale4(&w, F::one() / norm));
            break;
        }
    }
    let mut second: Option<[F; 4]> = None;
    if let Some(f) = &first {
        for seed in &second_seeds {
            let mut w = project_normal(seed, 0);
            let pf = dot4(&w, f);
            axpy4(&mut w, -pf, f);
            let norm = norm4(&w);
            if norm.f64() > 1e-6 {
                second = Some(scale4(&w, F::one() / norm));
                break;
            }
        }
    }
    let (Some(f0), Some(s0)) = (first, second) else {
        return Err(SurfaceError::FrameBreakdown {
            iu: 0,
            iv: 0,
            what: "no independent normal seeds".into(),
        });
    };
    n1[0] = f0;
    n2[0] = s0;

    // serpentine order with a known processed neighbor
    let mut order = Vec::with_capacity(n_nodes);
    for iv in 0..grid.nv {
        if iv % 2 == 0 {
            for iu in 0..grid.nu {
                order.push((iu, iv));
            }
        } else {
            for iu in (0..grid.nu).rev() {
                order.push((iu, iv));
            }
        }
    }
    for w in 1..order.len() {
        let (iu, iv) = order[w];
        let (pu, pv) = order[w - 1];
        let i = grid.index(iu, iv);
        let prev = grid.index(pu, pv);
        let mut a = project_normal(&n1[prev], i);
        let na = norm4(&a);
        if na.f64() < 1e-6 {
            return Err(SurfaceError::FrameBreakdown {
                iu,
                iv,
                what: format!("first normal projects to {:e}", na.f64()),
            });
        }
        a = scale4(&a, F::one() / na);
        let mut b = project_normal(&n2[prev], i);
        let pa = dot4(&b, &a);
        axpy4(&mut b, -pa, &a);
        let nb = norm4(&b);
        if nb.f64() < 1e-6 {
            return Err(SurfaceError::FrameBreakdown {
                iu,
                iv,
                what: format!("second normal projects to {:e}", nb.f64()),
            });
        }
        b = scale4(&b, F::one() / nb);
        if dot4(&a, &n1[prev]).f64() < 0.5 || dot4(&b, &n2[prev]).f64() < 0.5 {
            return Err(SurfaceError::FrameBreakdown {
                iu,
                iv,
                what: "frame flips between adjacent nodes".into(),
            });
        }
        n1[i] = a;
        n2[i] = b;
    }
    Ok((n1, n2))
}

/// `H_c := H₁ + √-1 H₂` with the potential `p_c = √ρ H_c / 2`.
pub fn complex_mean_curvature<F: Real>(
    field: &CurvatureField<F>,
) -> Result<ComplexMeanCurvature<F>, SurfaceError> {
    let (h1, h2) = field.h_components.as_ref().ok_or(SurfaceError::BadParams(
        "complex mean curvature needs an E4 curvature field".into(),
    ))?;
    let h_c: Vec<Complex<F>> = h1.iter().zip(h2).map(|(&a, &b)| Complex::new(a, b)).collect();
    let p_c = field.complex_potential().expect("E4 field has h components");
    Ok(ComplexMeanCurvature { h_c, p_c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::generators::SurfaceGenerator;
    use std::collections::BTreeMap;

    fn gen(shape: &str, nu: usize, nv: usize) -> ConformalGrid<f64> {
        SurfaceGenerator { shape: shape.into(), params: BTreeMap::new(), nu, nv }
            .build()
            .unwrap()
    }

    #[test]
    fn cylinder_rho_is_one_and_h_is_half() {
        let g = gen("cylinder", 16, 16);
        let (rho, res) = conformal_factor(&g).unwrap();
        assert!(res < 1e-10);
        for r in &rho {
            assert!((r - 1.0).abs() < 1e-10);
        }
        let field = mean_curvature(&g).unwrap();
        for h in field.h_scalar.as_ref().unwrap() {
            assert!((h - 0.5).abs() < 1e-9, "H = {h}");
        }
        let p = field.potential().unwrap();
        for x in &p {
            assert!((x - 0.25).abs() < 1e-9);
        }
    }

    #[test]
    fn clifford_torus_rho_and_h() {
        let g = gen("clifford_torus", 16, 16);
        let (rho, res) = conformal_factor(&g).unwrap();
        assert!(res < 1e-10);
        for r in &rho {
            assert!((r - 0.5).abs() < 1e-10);
        }
        let field = mean_curvature(&g).unwrap();
        for h in &field.h_norm {
            assert!((h - 1.0).abs() < 1e-9, "‖H‖ = {h}");
        }
        let cm = complex_mean_curvature(&field).unwrap();
        for z in &cm.h_c {
            assert!((z.norm() - 1.0).abs() < 1e-9, "|H_c| = {}", z.norm());
        }
        // |p_c| = √ρ |H_c| / 2
        let want = 0.5f64.sqrt() * 0.5;
        for z in &cm.p_c {
            assert!((z.norm() - want).abs() < 1e-9);
        }
    }

    #[test]
    fn sheared_plane_is_rejected() {
        let g = gen("sheared_plane", 16, 16);
        match conformal_factor(&g) {
            Err(SurfaceError::NotConformal { residual, .. }) => {
                assert!(residual > 1e-2);
            }
            other => panic!("expected NotConformal, got {other:?}"),
        }
    }

    #[test]
    fn torus_of_revolution_is_conformal_with_correct_h() {
        let g = gen("torus_of_revolution", 24, 64);
        let (rho, res) = conformal_factor(&g).unwrap();
        assert!(res < 1e-9, "residual {res:e}");
        let field = mean_curvature(&g).unwrap();
        // analytic check: ρ = (R + r cos φ)² and |H| = |R + 2r cos φ| / (2r(R + r cos φ))
        let (big_r, r) = (std::f64::consts::SQRT_2, 1.0);
        for iv in 0..64 {
            for iu in 0..24 {
                let i = g.index(iu, iv);
                let p = g.point(iu, iv);
                let rad = (p[0] * p[0] + p[1] * p[1]).sqrt();
                let cosphi = (rad - big_r) / r;
                let want_rho = (big_r + r * cosphi).powi(2);
                assert!((rho[i] - want_rho).abs() < 1e-7 * want_rho, "ρ at ({iu},{iv})");
                let want_h = (big_r + 2.0 * r * cosphi).abs() / (2.0 * r * (big_r + r * cosphi));
                assert!(
                    (field.h_norm[i] - want_h).abs() < 1e-6,
                    "‖H‖ at ({iu},{iv}): {} vs {want_h}",
                    field.h_norm[i]
                );
            }
        }
    }

    #[test]
    fn e3_surface_embedded_in_e4_has_real_potential() {
        // lift the torus of revolution into E⁴ with x₄ ≡ 0
        let g3 = gen("torus_of_revolution", 16, 64);
        let pts: Vec<[f64; 4]> = g3.points().to_vec();
        let g4 = ConformalGrid::new(
            SurfaceAmbient::E4,
            g3.nu,
            g3.nv,
            g3.lu,
            g3.lv,
            [true, true],
            pts,
        )
        .unwrap();
        let f4 = mean_curvature(&g4).unwrap();
        let (h1, h2) = f4.h_components.as_ref().unwrap();
        for x in h2 {
            assert!(x.abs() < 1e-9, "H₂ = {x}");
        }
        // p_c equals the real potential of the E³ field
        let f3 = mean_curvature(&g3).unwrap();
        let p3 = f3.potential().unwrap();
        let cm = complex_mean_curvature(&f4).unwrap();
        for (i, z) in cm.p_c.iter().enumerate() {
            assert!(z.im.abs() < 1e-9);
            assert!((z.re.abs() - p3[i].abs()).abs() < 1e-8, "p_c vs p at {i}");
        }
        let _ = h1;
    }

    #[test]
    fn mean_curvature_converges_spectrally() {
        // torus of revolution against the closed-form profile: the error
        // must fall by far more than the ×4 of a second-order scheme
        let (big_r, r) = (std::f64::consts::SQRT_2, 1.0);
        let err_at = |nv: usize| -> f64 {
            let g = SurfaceGenerator {
                shape: "torus_of_revolution".into(),
                params: BTreeMap::new(),
                nu: 16,
                nv,
            }
            .build::<f64>()
            .unwrap();
            let f = mean_curvature(&g).unwrap();
            let mut err = 0.0f64;
            for (i, p) in g.points().iter().enumerate() {
                let rad = (p[0] * p[0] + p[1] * p[1]).sqrt();
                let cosphi = (rad - big_r) / r;
                let want = (big_r + 2.0 * r * cosphi).abs() / (2.0 * r * (big_r + r * cosphi));
                err = err.max((f.h_norm[i] - want).abs());
            }
            err
        };
        let e48 = err_at(48);
        let e96 = err_at(96);
        assert!(e96 < 1e-9, "fine error {e96:e}");
        assert!(e48 / e96 > 16.0, "spectral convergence ratio {}", e48 / e96);
    }

    #[test]
    fn rigid_motion_invariance_of_rho_and_h() {
        let g = gen("torus_of_revolution", 16, 64);
        let f0 = mean_curvature(&g).unwrap();
        // rotation about two axes plus a shift
        let th = 0.7f64;
        let rot = nalgebra::DMatrix::from_row_slice(
            3,
            3,
            &[
                th.cos(), -th.sin(), 0.0,
                th.sin(), th.cos(), 0.0,
                0.0, 0.0, 1.0,
            ],
        );
        let g2 = g.transformed(&rot, &[0.3, -0.8, 2.0]);
        let f1 = mean_curvature(&g2).unwrap();
        for i in 0..g.node_count() {
            assert!((f0.rho[i] - f1.rho[i]).abs() < 1e-10);
            assert!((f0.h_norm[i] - f1.h_norm[i]).abs() < 1e-10);
        }
    }
}
