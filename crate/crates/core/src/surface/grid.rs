//! Doubly periodic immersion grids over `[0, Lu) × [0, Lv)` with spectral
//! derivative application along each axis.
//!
//! Nodes are stored row-major with the `u` index fastest:
//! `index = iv * nu + iu`. `E³` points keep their fourth component zero.

use super::{generators::SurfaceGenerator, SurfaceError};
use crate::scalar::Real;
use crate::spectral::{diff_matrix, Sector};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurfaceAmbient {
    E3,
    E4,
}

impl SurfaceAmbient {
    pub fn dim(self) -> usize {
        match self {
            SurfaceAmbient::E3 => 3,
            SurfaceAmbient::E4 => 4,
        }
    }
}

/// Immersion samples on a uniform doubly periodic grid.
#[derive(Clone, Debug)]
pub struct ConformalGrid<F: Real> {
    pub ambient: SurfaceAmbient,
    pub nu: usize,
    pub nv: usize,
    pub lu: F,
    pub lv: F,
    pub periodic: [bool; 2],
    points: Vec<[F; 4]>,
}

impl<F: Real> ConformalGrid<F> {
    pub fn new(
        ambient: SurfaceAmbient,
        nu: usize,
        nv: usize,
        lu: F,
        lv: F,
        periodic: [bool; 2],
        points: Vec<[F; 4]>,
    ) -> Result<Self, SurfaceError> {
        if nu < 16 || nv < 16 || nu % 2 != 0 || nv % 2 != 0 {
            return Err(SurfaceError::GridTooSmall { nu, nv });
        }
        if points.len() != nu * nv {
            return Err(SurfaceError::PointCount { got: points.len(), want: nu * nv });
        }
        Ok(ConformalGrid { ambient, nu, nv, lu, lv, periodic, points })
    }

    pub fn node_count(&self) -> usize {
        self.nu * self.nv
    }

    pub fn index(&self, iu: usize, iv: usize) -> usize {
        iv * self.nu + iu
    }

    pub fn points(&self) -> &[[F; 4]] {
        &self.points
    }

    pub fn point(&self, iu: usize, iv: usize) -> [F; 4] {
        self.points[self.index(iu, iv)]
    }

    /// One coordinate as a flat field.
    pub fn component(&self, c: usize) -> Vec<F> {
        self.points.iter().map(|p| p[c]).collect()
    }

    pub fn is_doubly_periodic(&self) -> bool {
        self.periodic[0] && self.periodic[1]
    }

    /// Derivative of a scalar field along `u` (axis 0) or `v` (axis 1):
    /// spectral on periodic axes, second-order one-sided/-centered
    /// differences otherwise.
    pub fn derivative(&self, field: &[F], axis: usize) -> Vec<F> {
        assert_eq!(field.len(), self.node_count());
        let (n, len) = if axis == 0 { (self.nu, self.lu) } else { (self.nv, self.lv) };
        if self.periodic[axis] {
            let d = diff_matrix::<F>(n, len, 1, Sector::Periodic);
            self.apply_axis_matrix(field, &d, axis)
        } else {
            self.fd_derivative(field, axis, len)
        }
    }

    /// Flat Laplacian `∂²_u + ∂²_v` of a scalar field.
    pub fn laplacian(&self, field: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); field.len()];
        for axis in 0..2 {
            let (n, len) = if axis == 0 { (self.nu, self.lu) } else { (self.nv, self.lv) };
            let second = if self.periodic[axis] {
                let d2 = diff_matrix::<F>(n, len, 2, Sector::Periodic);
                self.apply_axis_matrix(field, &d2, axis)
            } else {
                let once = self.fd_derivative(field, axis, len);
                self.fd_derivative(&once, axis, len)
            };
            for (o, s) in out.iter_mut().zip(second) {
                *o += s;
            }
        }
        out
    }

    fn apply_axis_matrix(&self, field: &[F], d: &DMatrix<F>, axis: usize) -> Vec<F> {
        let mut out = vec![F::zero(); field.len()];
        if axis == 0 {
            for iv in 0..self.nv {
                for r in 0..self.nu {
                    let mut acc = F::zero();
                    for c in 0..self.nu {
                        acc += d[(r, c)] * field[self.index(c, iv)];
                    }
                    out[self.index(r, iv)] = acc;
                }
            }
        } else {
            for iu in 0..self.nu {
                for r in 0..self.nv {
                    let mut acc = F::zero();
                    for c in 0..self.nv {
                        acc += d[(r, c)] * field[self.index(iu, c)];
                    }
                    out[self.index(iu, r)] = acc;
                }
            }
        }
        out
    }

    fn fd_derivative(&self, field: &[F], axis: usize, len: F) -> Vec<F> {
        let n = if axis == 0 { self.nu } else { self.nv };
        let h = len / F::of(n as f64);
        let two_h = F::of(2.0) * h;
        let mut out = vec![F::zero(); field.len()];
        let get = |i: usize, j: usize| -> F {
            if axis == 0 {
                field[self.index(i, j)]
            } else {
                field[self.index(j, i)]
            }
        };
        let m = if axis == 0 { self.nv } else { self.nu };
        for j in 0..m {
            for i in 0..n {
                let v = if i == 0 {
                    (-F::of(3.0) * get(0, j) + F::of(4.0) * get(1, j) - get(2, j)) / two_h
                } else if i == n - 1 {
                    (F::of(3.0) * get(n - 1, j) - F::of(4.0) * get(n - 2, j) + get(n - 3, j))
                        / two_h
                } else {
                    (get(i + 1, j) - get(i - 1, j)) / two_h
                };
                let idx = if axis == 0 { self.index(i, j) } else { self.index(j, i) };
                out[idx] = v;
            }
        }
        out
    }

    /// Componentwise first derivatives of the immersion along an axis.
    pub fn position_derivative(&self, axis: usize) -> Vec<[F; 4]> {
        let mut out = vec![[F::zero(); 4]; self.node_count()];
        for c in 0..self.ambient.dim() {
            let d = self.derivative(&self.component(c), axis);
            for (o, v) in out.iter_mut().zip(d) {
                o[c] = v;
            }
        }
        out
    }

    /// Componentwise flat Laplacian of the immersion.
    pub fn position_laplacian(&self) -> Vec<[F; 4]> {
        let mut out = vec![[F::zero(); 4]; self.node_count()];
        for c in 0..self.ambient.dim() {
            let d = self.laplacian(&self.component(c));
            for (o, v) in out.iter_mut().zip(d) {
                o[c] = v;
            }
        }
        out
    }

    /// Applies an isometry of the ambient space (for invariance tests).
    pub fn transformed(&self, rot: &DMatrix<F>, shift: &[F]) -> Self {
        let dim = self.ambient.dim();
        assert_eq!(rot.nrows(), dim);
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = [F::zero(); 4];
                for r in 0..dim {
                    let mut acc = shift[r];
                    for c in 0..dim {
                        acc += rot[(r, c)] * p[c];
                    }
                    q[r] = acc;
                }
                q
            })
            .collect();
        ConformalGrid { points, ..self.clone() }
    }

    /// Uniformly rescales the immersion: `X ↦ λX`.
    pub fn scaled(&self, lambda: F) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| [p[0] * lambda, p[1] * lambda, p[2] * lambda, p[3] * lambda])
            .collect();
        ConformalGrid { points, ..self.clone() }
    }
}

/// JSON form of a surface: explicit samples or a named generator.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum SurfaceInput {
    Explicit {
        ambient: u8,
        #[serde(rename = "Nu")]
        nu: usize,
        #[serde(rename = "Nv")]
        nv: usize,
        #[serde(rename = "Lu")]
        lu: f64,
        #[serde(rename = "Lv")]
        lv: f64,
        periodic: [bool; 2],
        points: Vec<Vec<f64>>,
    },
    Generator(SurfaceGenerator),
}

impl SurfaceInput {
    pub fn build<F: Real>(&self) -> Result<ConformalGrid<F>, SurfaceError> {
        match self {
            SurfaceInput::Explicit { ambient, nu, nv, lu, lv, periodic, points } => {
                let amb = match ambient {
                    3 => SurfaceAmbient::E3,
                    4 => SurfaceAmbient::E4,
                    other => {
                        return Err(SurfaceError::BadParams(format!(
                            "ambient must be 3 or 4, got {other}"
                        )))
                    }
                };
                let pts: Result<Vec<[F; 4]>, SurfaceError> = points
                    .iter()
                    .map(|p| {
                        if p.len() != amb.dim() {
                            return Err(SurfaceError::BadParams(format!(
                                "point has {} coordinates, ambient is {}",
                                p.len(),
                                amb.dim()
                            )));
                        }
                        let mut q = [F::zero(); 4];
                        for (c, &x) in p.iter().enumerate() {
                            q[c] = F::of(x);
                        }
                        Ok(q)
                    })
                    .collect();
                ConformalGrid::new(amb, *nu, *nv, F::of(*lu), F::of(*lv), *periodic, pts?)
            }
            SurfaceInput::Generator(g) => g.build(),
        }
    }
}
