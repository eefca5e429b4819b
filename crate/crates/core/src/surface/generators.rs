//! Analytic conformal test surfaces: the unit cylinder, the Clifford torus
//! in `E⁴`, and the conformally reparametrized torus of revolution.

use super::grid::{ConformalGrid, SurfaceAmbient};
use super::SurfaceError;
use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Named surface with grid sizes; `params` supplies shape constants.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct SurfaceGenerator {
    pub shape: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    #[serde(rename = "Nu", default = "default_n")]
    pub nu: usize,
    #[serde(rename = "Nv", default = "default_n")]
    pub nv: usize,
}

fn default_n() -> usize {
    16
}

impl SurfaceGenerator {
    pub fn build<F: Real>(&self) -> Result<ConformalGrid<F>, SurfaceError> {
        let p = |key: &str, default: f64| -> f64 { *self.params.get(key).unwrap_or(&default) };
        let (nu, nv) = (self.nu, self.nv);
        let tau = std::f64::consts::TAU;
        match self.shape.as_str() {
            // Unit cylinder, oriented so that the mean curvature against the
            // grid normal X_u × X_v is +1/2 (p = 1/4).
            "cylinder" => {
                let lv = p("Lv", tau);
                let mut pts = Vec::with_capacity(nu * nv);
                for iv in 0..nv {
                    for iu in 0..nu {
                        let u = tau * iu as f64 / nu as f64;
                        let v = lv * iv as f64 / nv as f64;
                        pts.push([F::of(u.sin()), F::of(u.cos()), F::of(v), F::zero()]);
                    }
                }
                ConformalGrid::new(
                    SurfaceAmbient::E3,
                    nu,
                    nv,
                    F::of(tau),
                    F::of(lv),
                    // the immersion is linear in v, so only u is a periodic
                    // function; spinor sectors are chosen independently
                    [true, false],
                    pts,
                )
            }
            // X = (cos u, sin u, cos v, sin v)/√2: ρ = 1/2, ‖H‖ = 1.
            "clifford_torus" => {
                let s = 1.0 / 2.0f64.sqrt();
                let mut pts = Vec::with_capacity(nu * nv);
                for iv in 0..nv {
                    for iu in 0..nu {
                        let u = tau * iu as f64 / nu as f64;
                        let v = tau * iv as f64 / nv as f64;
                        pts.push([
                            F::of(s * u.cos()),
                            F::of(s * u.sin()),
                            F::of(s * v.cos()),
                            F::of(s * v.sin()),
                        ]);
                    }
                }
                ConformalGrid::new(
                    SurfaceAmbient::E4,
                    nu,
                    nv,
                    F::of(tau),
                    F::of(tau),
                    [true, true],
                    pts,
                )
            }
            // Torus of revolution with radii R > r, reparametrized so the
            // induced metric is conformal: dφ/dv = (R + r cos φ)/r, solved in
            // closed form; v-period is 2πr/√(R²-r²).
            "torus_of_revolution" => {
                let big_r = p("R", std::f64::consts::SQRT_2);
                let r = p("r", 1.0);
                if big_r <= r || r <= 0.0 {
                    return Err(SurfaceError::BadParams(
                        "torus of revolution needs R > r > 0".into(),
                    ));
                }
                let c = (big_r * big_r - r * r).sqrt();
                let lv = tau * r / c;
                let ratio = ((big_r + r) / (big_r - r)).sqrt();
                let mut pts = Vec::with_capacity(nu * nv);
                for iv in 0..nv {
                    for iu in 0..nu {
                        let u = tau * iu as f64 / nu as f64;
                        let v = lv * iv as f64 / nv as f64;
                        // φ(v) = 2 atan2(ratio · sin ψ, cos ψ), ψ = c v / (2r)
                        let psi = c * v / (2.0 * r);
                        let phi = 2.0 * (ratio * psi.sin()).atan2(psi.cos());
                        let rad = big_r + r * phi.cos();
                        pts.push([
                            F::of(rad * u.cos()),
                            F::of(rad * u.sin()),
                            F::of(r * phi.sin()),
                            F::zero(),
                        ]);
                    }
                }
                ConformalGrid::new(
                    SurfaceAmbient::E3,
                    nu,
                    nv,
                    F::of(tau),
                    F::of(lv),
                    [true, true],
                    pts,
                )
            }
            // Flat sheared patch; intentionally non-conformal, for error-path
            // exercises.
            "sheared_plane" => {
                let shear = p("shear", 0.3);
                let mut pts = Vec::with_capacity(nu * nv);
                for iv in 0..nv {
                    for iu in 0..nu {
                        let u = iu as f64 / nu as f64;
                        let v = iv as f64 / nv as f64;
                        pts.push([F::of(u), F::of(v + shear * u), F::zero(), F::zero()]);
                    }
                }
                ConformalGrid::new(SurfaceAmbient::E3, nu, nv, F::one(), F::one(), [true, true], pts)
            }
            other => Err(SurfaceError::UnknownShape(other.to_string())),
        }
    }
}
