//! Resampling a sampled curve at uniform arclength via componentwise cubic
//! spline interpolation in the chord parameter.
//!
//! The reported length is the spline arclength. Uniform-in-arclength inputs
//! are fixed points of the procedure: their resampling targets land exactly
//! on the knots, so the spline evaluates back to the input points.

use super::samples::{dist, Ambient, CurveSamples};
use super::CurveError;
use crate::scalar::Real;

/// A curve resampled at uniform arclength step `h = L / N` (closed) or
/// `h = L / (N - 1)` (open).
#[derive(Clone, Debug)]
pub struct ArclengthCurve<F: Real> {
    pub ambient: Ambient,
    pub closed: bool,
    points: Vec<[F; 3]>,
    length: F,
}

impl<F: Real> ArclengthCurve<F> {
    pub fn points(&self) -> &[[F; 3]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn length(&self) -> F {
        self.length
    }

    /// Arclength step between consecutive samples.
    pub fn step(&self) -> F {
        if self.closed {
            self.length / F::of(self.len() as f64)
        } else {
            self.length / F::of((self.len() - 1) as f64)
        }
    }

    /// Neighbor with periodic wrap for closed curves.
    pub fn point(&self, i: isize) -> [F; 3] {
        let n = self.points.len() as isize;
        let j = if self.closed { i.rem_euclid(n) } else { i.clamp(0, n - 1) };
        self.points[j as usize]
    }

    /// Applies an isometry `x ↦ R x + t` (for invariance tests).
    pub fn transformed(&self, rot: &nalgebra::Matrix3<F>, shift: [F; 3]) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| {
                let v = rot * nalgebra::Vector3::new(p[0], p[1], p[2]);
                [v[0] + shift[0], v[1] + shift[1], v[2] + shift[2]]
            })
            .collect();
        ArclengthCurve { ambient: self.ambient, closed: self.closed, points, length: self.length }
    }

    /// Wraps points known to be uniform (used by reconstruction).
    pub(crate) fn from_uniform(
        ambient: Ambient,
        closed: bool,
        points: Vec<[F; 3]>,
        length: F,
    ) -> Self {
        ArclengthCurve { ambient, closed, points, length }
    }
}

/// Cubic spline data for one coordinate over knots `t_i` (cyclic when closed).
struct Spline<F: Real> {
    t: Vec<F>,
    y: Vec<F>,
    m: Vec<F>, // second derivatives at knots
}

impl<F: Real> Spline<F> {
    /// Natural spline: `m_0 = m_{n-1} = 0`.
    fn build_natural(t: &[F], y: &[F]) -> Self {
        let n = t.len();
        assert!(n >= 3);
        let mut diag = vec![F::one(); n];
        let mut lower = vec![F::zero(); n];
        let mut upper = vec![F::zero(); n];
        let mut rhs = vec![F::zero(); n];
        for i in 1..n - 1 {
            let h0 = t[i] - t[i - 1];
            let h1 = t[i + 1] - t[i];
            lower[i] = h0;
            diag[i] = F::of(2.0) * (h0 + h1);
            upper[i] = h1;
            rhs[i] = F::of(6.0) * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
        }
        let m = tridiagonal(&lower, &diag, &upper, &rhs);
        Spline { t: t.to_vec(), y: y.to_vec(), m }
    }

    /// Value at parameter u within segment `seg`, u in [0, h_seg].
    fn eval_in_segment(&self, seg: usize, h: F, u: F) -> F {
        let n = self.t.len();
        let j = (seg + 1) % n;
        let tau = u / h;
        let omt = F::one() - tau;
        let y0 = self.y[seg];
        let y1 = self.y[j];
        let m0 = self.m[seg];
        let m1 = self.m[j];
        y0 * omt
            + y1 * tau
            + (omt * omt * omt - omt) * h * h * m0 / F::of(6.0)
            + (tau * tau * tau - tau) * h * h * m1 / F::of(6.0)
    }

    fn deriv_in_segment(&self, seg: usize, h: F, u: F) -> F {
        let n = self.t.len();
        let j = (seg + 1) % n;
        let tau = u / h;
        let omt = F::one() - tau;
        let y0 = self.y[seg];
        let y1 = self.y[j];
        let m0 = self.m[seg];
        let m1 = self.m[j];
        (y1 - y0) / h - (F::of(3.0) * omt * omt - F::one()) * h * m0 / F::of(6.0)
            + (F::of(3.0) * tau * tau - F::one()) * h * m1 / F::of(6.0)
    }
}

fn tridiagonal<F: Real>(lower: &[F], diag: &[F], upper: &[F], rhs: &[F]) -> Vec<F> {
    let n = diag.len();
    let mut c = vec![F::zero(); n];
    let mut d = vec![F::zero(); n];
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let denom = diag[i] - lower[i] * c[i - 1];
        c[i] = upper[i] / denom;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
    }
    let mut x = vec![F::zero(); n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}

/// Sherman-Morrison solve of a cyclic tridiagonal system.
fn cyclic_tridiagonal<F: Real>(lower: &[F], diag: &[F], upper: &[F], rhs: &[F]) -> Vec<F> {
    let n = diag.len();
    let alpha = lower[0]; // corner (0, n-1)
    let beta = upper[n - 1]; // corner (n-1, 0)
    let gamma = -diag[0];
    let mut dmod = diag.to_vec();
    dmod[0] = diag[0] - gamma;
    dmod[n - 1] = diag[n - 1] - alpha * beta / gamma;
    let mut low = lower.to_vec();
    let mut up = upper.to_vec();
    low[0] = F::zero();
    up[n - 1] = F::zero();
    let x = tridiagonal(&low, &dmod, &up, rhs);
    let mut u = vec![F::zero(); n];
    u[0] = gamma;
    u[n - 1] = beta;
    let z = tridiagonal(&low, &dmod, &up, &u);
    let fact = (x[0] + alpha * x[n - 1] / gamma) / (F::one() + z[0] + alpha * z[n - 1] / gamma);
    (0..n).map(|i| x[i] - fact * z[i]).collect()
}

/// Componentwise spline through the points in the chord parameter, with
/// per-segment arclengths by Gauss-Legendre quadrature.
struct CurveSpline<F: Real> {
    splines: [Spline<F>; 3],
    seg_h: Vec<F>,
    /// cumulative arclength at each knot; last entry is the total length
    cum_s: Vec<F>,
}

const GAUSS_X: [f64; 5] = [
    0.148874338981631210885,
    0.433395394129247190799,
    0.679409568299024406234,
    0.865063366688984510732,
    0.973906528517171720078,
];
const GAUSS_W: [f64; 5] = [
    0.295524224714752870174,
    0.269266719309996355091,
    0.219086362515982043996,
    0.149451349150580593146,
    0.066671344308688137594,
];

impl<F: Real> CurveSpline<F> {
    fn build(samples: &CurveSamples<F>) -> Self {
        let pts = samples.points();
        let n = pts.len();
        // chord-length parameter
        let mut t = vec![F::zero(); n];
        for i in 1..n {
            t[i] = t[i - 1] + dist(&pts[i - 1], &pts[i]);
        }
        let closing = if samples.closed { dist(&pts[n - 1], &pts[0]) } else { F::zero() };
        let splines = [0, 1, 2].map(|c| {
            let y: Vec<F> = pts.iter().map(|p| p[c]).collect();
            if samples.closed {
                Spline::build_periodic(&t, &y, t[n - 1] + closing)
            } else {
                Spline::build_natural(&t, &y)
            }
        });
        let seg_count = if samples.closed { n } else { n - 1 };
        let mut seg_h = Vec::with_capacity(seg_count);
        for i in 0..seg_count {
            let h = if i + 1 < n { t[i + 1] - t[i] } else { closing };
            seg_h.push(h);
        }
        let mut cum_s = Vec::with_capacity(seg_count + 1);
        cum_s.push(F::zero());
        for seg in 0..seg_count {
            let len = gauss_speed(&splines, seg, seg_h[seg], F::zero(), seg_h[seg]);
            let prev = cum_s[seg];
            cum_s.push(prev + len);
        }
        CurveSpline { splines, seg_h, cum_s }
    }

    fn total_length(&self) -> F {
        *self.cum_s.last().unwrap()
    }

    fn eval(&self, seg: usize, u: F) -> [F; 3] {
        [
            self.splines[0].eval_in_segment(seg, self.seg_h[seg], u),
            self.splines[1].eval_in_segment(seg, self.seg_h[seg], u),
            self.splines[2].eval_in_segment(seg, self.seg_h[seg], u),
        ]
    }

    /// Finds the point at arclength `s` from the start.
    fn at_arclength(&self, s: F) -> [F; 3] {
        let segs = self.seg_h.len();
        // locate segment by cumulative arclength
        let mut lo = 0usize;
        let mut hi = segs;
        while lo + 1 < hi {
            let mid = (lo + hi) / 2;
            if self.cum_s[mid] <= s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let seg = lo.min(segs - 1);
        let h = self.seg_h[seg];
        let goal = s - self.cum_s[seg];
        // Newton in the local parameter
        let mut u = (goal / (self.cum_s[seg + 1] - self.cum_s[seg])) * h;
        for _ in 0..40 {
            let s_here = gauss_speed(&self.splines, seg, h, F::zero(), u);
            let sp = speed_at(&self.splines, seg, h, u).max(F::of(1e-300));
            let step = (s_here - goal) / sp;
            u -= step;
            if step.abs() < F::of(1e-15) * h.max(F::one()) {
                break;
            }
        }
        self.eval(seg, u)
    }
}

impl<F: Real> Spline<F> {
    /// Periodic spline; the wrap interval is `period - t_{n-1}`.
    fn build_periodic(t: &[F], y: &[F], period: F) -> Self {
        let n = t.len();
        let mut h = vec![F::zero(); n];
        for i in 0..n - 1 {
            h[i] = t[i + 1] - t[i];
        }
        h[n - 1] = period - t[n - 1];
        let mut diag = vec![F::zero(); n];
        let mut lower = vec![F::zero(); n];
        let mut upper = vec![F::zero(); n];
        let mut rhs = vec![F::zero(); n];
        for i in 0..n {
            let im = (i + n - 1) % n;
            let ip = (i + 1) % n;
            lower[i] = h[im];
            diag[i] = F::of(2.0) * (h[im] + h[i]);
            upper[i] = h[i];
            let d1 = (y[ip] - y[i]) / h[i];
            let d0 = (y[i] - y[im]) / h[im];
            rhs[i] = F::of(6.0) * (d1 - d0);
        }
        let m = cyclic_tridiagonal(&lower, &diag, &upper, &rhs);
        Spline { t: t.to_vec(), y: y.to_vec(), m }
    }
}

fn speed_at<F: Real>(splines: &[Spline<F>; 3], seg: usize, h: F, u: F) -> F {
    let dx = splines[0].deriv_in_segment(seg, h, u);
    let dy = splines[1].deriv_in_segment(seg, h, u);
    let dz = splines[2].deriv_in_segment(seg, h, u);
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Gauss-Legendre arclength of a spline segment between local parameters.
fn gauss_speed<F: Real>(splines: &[Spline<F>; 3], seg: usize, h: F, a: F, b: F) -> F {
    let mid = (a + b) * F::of(0.5);
    let half = (b - a) * F::of(0.5);
    let mut acc = F::zero();
    for i in 0..5 {
        let x = F::of(GAUSS_X[i]);
        let w = F::of(GAUSS_W[i]);
        acc += w
            * (speed_at(splines, seg, h, mid + half * x) + speed_at(splines, seg, h, mid - half * x));
    }
    acc * half
}

/// Resamples at `n >= 16` uniform arclength stations.
pub fn resample_arclength<F: Real>(
    samples: &CurveSamples<F>,
    n: usize,
) -> Result<ArclengthCurve<F>, CurveError> {
    if n < 16 {
        return Err(CurveError::TooFewSamples { min: 16, got: n });
    }
    let spline = CurveSpline::build(samples);
    let total = spline.total_length();
    let mut points = Vec::with_capacity(n);
    let denom = if samples.closed { n as f64 } else { (n - 1) as f64 };
    for k in 0..n {
        let s = total * F::of(k as f64 / denom);
        points.push(spline.at_arclength(s));
    }
    Ok(ArclengthCurve { ambient: samples.ambient, closed: samples.closed, points, length: total })
}
