//! Raw curve samples, their JSON form, and analytic generators that emit
//! exact uniform-arclength samples.

use super::CurveError;
use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Ambient dimension of a curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ambient {
    Plane,
    Space,
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::Plane => 2,
            Ambient::Space => 3,
        }
    }
}

/// An ordered list of curve points; plane curves store `z = 0`.
#[derive(Clone, Debug)]
pub struct CurveSamples<F: Real> {
    pub ambient: Ambient,
    pub closed: bool,
    points: Vec<[F; 3]>,
}

impl<F: Real> CurveSamples<F> {
    pub fn new(ambient: Ambient, closed: bool, points: Vec<[F; 3]>) -> Result<Self, CurveError> {
        if points.len() < 8 {
            return Err(CurveError::TooFewSamples { min: 8, got: points.len() });
        }
        let n = points.len();
        let last = if closed { n } else { n - 1 };
        for i in 0..last {
            let j = (i + 1) % n;
            let d = dist(&points[i], &points[j]);
            if d == F::zero() {
                return Err(CurveError::CoincidentPoints { i, next: j });
            }
        }
        Ok(CurveSamples { ambient, closed, points })
    }

    pub fn plane(points: Vec<[F; 2]>, closed: bool) -> Result<Self, CurveError> {
        Self::new(
            Ambient::Plane,
            closed,
            points.into_iter().map(|p| [p[0], p[1], F::zero()]).collect(),
        )
    }

    pub fn space(points: Vec<[F; 3]>, closed: bool) -> Result<Self, CurveError> {
        Self::new(Ambient::Space, closed, points)
    }

    pub fn points(&self) -> &[[F; 3]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub(crate) fn dist<F: Real>(a: &[F; 3], b: &[F; 3]) -> F {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// JSON form: explicit points or a named generator.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum CurveInput {
    Explicit {
        ambient: u8,
        closed: bool,
        points: Vec<Vec<f64>>,
    },
    Generator(CurveGenerator),
}

/// Named analytic curve with exact uniform-arclength sampling.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct CurveGenerator {
    pub shape: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub samples: usize,
}

impl CurveInput {
    pub fn build<F: Real>(&self) -> Result<CurveSamples<F>, CurveError> {
        match self {
            CurveInput::Explicit { ambient, closed, points } => {
                let amb = match ambient {
                    2 => Ambient::Plane,
                    3 => Ambient::Space,
                    other => {
                        return Err(CurveError::BadParams(format!("ambient must be 2 or 3, got {other}")))
                    }
                };
                let pts: Result<Vec<[F; 3]>, CurveError> = points
                    .iter()
                    .map(|p| {
                        if p.len() != amb.dim() {
                            return Err(CurveError::BadParams(format!(
                                "point has {} coordinates, ambient is {}",
                                p.len(),
                                amb.dim()
                            )));
                        }
                        Ok([
                            F::of(p[0]),
                            F::of(p[1]),
                            if amb == Ambient::Space { F::of(p[2]) } else { F::zero() },
                        ])
                    })
                    .collect();
                CurveSamples::new(amb, *closed, pts?)
            }
            CurveInput::Generator(g) => g.build(),
        }
    }
}

impl CurveGenerator {
    pub fn build<F: Real>(&self) -> Result<CurveSamples<F>, CurveError> {
        self.generate().map(|(c, _)| c)
    }

    /// Builds the exact uniform-arclength curve directly: the samples are
    /// uniform by construction and the total length comes from the analytic
    /// parametrization, so downstream operators are not limited by spline
    /// length estimates.
    pub fn build_arclength<F: Real>(&self) -> Result<super::resample::ArclengthCurve<F>, CurveError> {
        let (c, length) = self.generate::<F>()?;
        Ok(super::resample::ArclengthCurve::from_uniform(
            c.ambient,
            c.closed,
            c.points().to_vec(),
            length,
        ))
    }

    fn generate<F: Real>(&self) -> Result<(CurveSamples<F>, F), CurveError> {
        let p = |key: &str, default: f64| -> f64 { *self.params.get(key).unwrap_or(&default) };
        let n = self.samples;
        if n < 8 {
            return Err(CurveError::TooFewSamples { min: 8, got: n });
        }
        let two_pi = std::f64::consts::TAU;
        match self.shape.as_str() {
            "circle" => {
                let r = p("radius", 1.0);
                if r <= 0.0 {
                    return Err(CurveError::BadParams("circle radius must be positive".into()));
                }
                // uniform angle is uniform arclength
                let pts: Vec<[F; 3]> = (0..n)
                    .map(|j| {
                        let t = two_pi * j as f64 / n as f64;
                        [F::of(r * t.cos()), F::of(r * t.sin()), F::zero()]
                    })
                    .collect();
                Ok((CurveSamples::new(Ambient::Plane, true, pts)?, F::of(two_pi * r)))
            }
            "ellipse" => {
                let a = p("a", 2.0);
                let b = p("b", 1.0);
                if a <= 0.0 || b <= 0.0 {
                    return Err(CurveError::BadParams("ellipse semi-axes must be positive".into()));
                }
                let f = |t: f64| [a * t.cos(), b * t.sin(), 0.0];
                let df = |t: f64| [-a * t.sin(), b * t.cos(), 0.0];
                let (pts, len) = uniform_arclength_samples_with_length(&f, &df, two_pi, n);
                Ok((CurveSamples::new(Ambient::Plane, true, to_f(&pts))?, F::of(len)))
            }
            "figure_eight" => {
                let a = p("scale", 1.0);
                // lemniscate-like curve with tangent winding number zero
                let f = move |t: f64| [a * t.sin(), a * t.sin() * t.cos(), 0.0];
                let df = move |t: f64| [a * t.cos(), a * (2.0 * t).cos(), 0.0];
                let (pts, len) = uniform_arclength_samples_with_length(&f, &df, two_pi, n);
                Ok((CurveSamples::new(Ambient::Plane, true, to_f(&pts))?, F::of(len)))
            }
            "double_circle" => {
                // doubly traversed circle: two full turns over the parameter period
                let r = p("radius", 1.0);
                let pts: Vec<[F; 3]> = (0..n)
                    .map(|j| {
                        let t = 2.0 * two_pi * j as f64 / n as f64;
                        [F::of(r * t.cos()), F::of(r * t.sin()), F::zero()]
                    })
                    .collect();
                Ok((CurveSamples::new(Ambient::Plane, true, pts)?, F::of(2.0 * two_pi * r)))
            }
            "helix" => {
                // open helical arc: (a cos t, a sin t, b t) over `turns` turns
                let a = p("radius", 1.0);
                let b = p("pitch", 0.25);
                let turns = p("turns", 2.0);
                let f = move |t: f64| [a * t.cos(), a * t.sin(), b * t];
                let df = move |t: f64| [-a * t.sin(), a * t.cos(), b];
                let (pts, len) =
                    uniform_arclength_samples_with_length(&f, &df, turns * two_pi, n);
                Ok((CurveSamples::new(Ambient::Space, false, to_f(&pts))?, F::of(len)))
            }
            "torus_knot" => {
                let q = p("p", 2.0) as i32; // longitude windings
                let w = p("q", 3.0) as i32; // meridian windings
                let big_r = p("R", 2.0);
                let r = p("r", 1.0);
                let (qa, wa) = (q as f64, w as f64);
                let f = move |t: f64| {
                    let rad = big_r + r * (wa * t).cos();
                    [rad * (qa * t).cos(), rad * (qa * t).sin(), r * (wa * t).sin()]
                };
                let df = move |t: f64| {
                    let rad = big_r + r * (wa * t).cos();
                    let drad = -r * wa * (wa * t).sin();
                    [
                        drad * (qa * t).cos() - rad * qa * (qa * t).sin(),
                        drad * (qa * t).sin() + rad * qa * (qa * t).cos(),
                        r * wa * (wa * t).cos(),
                    ]
                };
                let (pts, len) = uniform_arclength_samples_with_length(&f, &df, two_pi, n);
                Ok((CurveSamples::new(Ambient::Space, true, to_f(&pts))?, F::of(len)))
            }
            other => Err(CurveError::UnknownShape(other.to_string())),
        }
    }
}

fn to_f<F: Real>(pts: &[[f64; 3]]) -> Vec<[F; 3]> {
    pts.iter().map(|p| [F::of(p[0]), F::of(p[1]), F::of(p[2])]).collect()
}

/// Samples `f` at `n` uniformly spaced arclength stations over one parameter
/// period, using composite Gauss-Legendre quadrature of the speed and Newton
/// inversion; accurate to near machine precision for analytic curves.
pub fn uniform_arclength_samples(
    f: &dyn Fn(f64) -> [f64; 3],
    df: &dyn Fn(f64) -> [f64; 3],
    period: f64,
    n: usize,
) -> Vec<[f64; 3]> {
    uniform_arclength_samples_with_length(f, df, period, n).0
}

/// Like [`uniform_arclength_samples`], also returning the total arclength.
pub fn uniform_arclength_samples_with_length(
    f: &dyn Fn(f64) -> [f64; 3],
    df: &dyn Fn(f64) -> [f64; 3],
    period: f64,
    n: usize,
) -> (Vec<[f64; 3]>, f64) {
    let speed = |t: f64| {
        let d = df(t);
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    };
    // cumulative arclength at a fine set of breakpoints
    let segments = (8 * n).max(512);
    let mut cum = Vec::with_capacity(segments + 1);
    cum.push(0.0);
    let ht = period / segments as f64;
    for seg in 0..segments {
        let a = seg as f64 * ht;
        cum.push(cum[seg] + gauss20(&speed, a, a + ht));
    }
    let total = cum[segments];

    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let target = total * k as f64 / n as f64;
        // bracketing breakpoint
        let mut lo = match cum.binary_search_by(|s| s.partial_cmp(&target).unwrap()) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        };
        if lo >= segments {
            lo = segments - 1;
        }
        let mut t = lo as f64 * ht;
        let mut s_here = cum[lo];
        // Newton on s(t) - target
        for _ in 0..60 {
            let err = s_here - target;
            let sp = speed(t).max(1e-300);
            let step = err / sp;
            t -= step;
            let base = lo as f64 * ht;
            s_here = cum[lo] + gauss20(&speed, base, t);
            if step.abs() < 1e-15 * period {
                break;
            }
        }
        out.push(f(t));
    }
    (out, total)
}

/// 20-point Gauss-Legendre quadrature on `[a, b]`.
fn gauss20(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    // nodes/weights for [-1, 1], symmetric halves
    const X: [f64; 10] = [
        0.076526521133497333755,
        0.227785851141645078080,
        0.373706088715419560673,
        0.510867001950827098004,
        0.636053680726515025453,
        0.746331906460150792614,
        0.839116971822218823395,
        0.912234428251325905868,
        0.963971927277913791268,
        0.993128599185094924786,
    ];
    const W: [f64; 10] = [
        0.152753387130725850698,
        0.149172986472603746788,
        0.142096109318382051329,
        0.131688638449176626898,
        0.118194531961518417312,
        0.101930119817240435037,
        0.083276741576704748725,
        0.062672048334109063570,
        0.040601429800386941331,
        0.017614007139152118312,
    ];
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..10 {
        acc += W[i] * (f(mid + half * X[i]) + f(mid - half * X[i]));
    }
    acc * half
}
