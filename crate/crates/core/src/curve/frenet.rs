//! Frenet-Serret data on a uniform arclength grid: curvature, torsion,
//! plane signed curvature and the complex curvature
//! `κ_C = κ exp(√-1 ∫ τ ds)`.

use super::resample::ArclengthCurve;
use super::samples::Ambient;
use super::CurveError;
use crate::scalar::Real;
use crate::spectral::FftDifferentiator;
use num_complex::Complex;

/// Differentiation scheme for the sample derivatives.
///
/// Centered differences are the default (second order, identical on open and
/// closed grids); the spectral scheme is available for closed curves where
/// exponential accuracy is wanted, e.g. zero-mode residual studies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DerivativeScheme {
    #[default]
    CenteredFd,
    Spectral,
}

/// Per-sample curvature data of an arclength-parametrized curve.
#[derive(Clone, Debug)]
pub struct CurvatureData<F: Real> {
    pub ambient: Ambient,
    pub closed: bool,
    pub length: F,
    pub step: F,
    /// κ ≥ 0
    pub kappa: Vec<F>,
    /// torsion; identically zero for plane curves
    pub tau: Vec<F>,
    /// signed plane curvature, plane curves only
    pub signed_k: Option<Vec<F>>,
    pub scheme: DerivativeScheme,
}

impl<F: Real> CurvatureData<F> {
    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }

    /// The half profile `v = k/2` that drives the flow equations.
    pub fn half_signed_k(&self) -> Option<Vec<F>> {
        self.signed_k
            .as_ref()
            .map(|k| k.iter().map(|&x| x * F::of(0.5)).collect())
    }
}

/// Complex curvature samples with the accumulated torsion phase.
#[derive(Clone, Debug)]
pub struct ComplexCurvature<F: Real> {
    pub samples: Vec<Complex<F>>,
    /// ∮ τ ds
    pub total_phase: F,
    /// whether the samples close up periodically (total phase in 2πZ)
    pub periodic: bool,
}

fn derivatives<F: Real>(
    curve: &ArclengthCurve<F>,
    scheme: DerivativeScheme,
) -> (Vec<[F; 3]>, Vec<[F; 3]>, Vec<[F; 3]>) {
    let n = curve.len();
    let h = curve.step();
    match scheme {
        DerivativeScheme::CenteredFd => {
            let mut d1 = vec![[F::zero(); 3]; n];
            let mut d2 = vec![[F::zero(); 3]; n];
            let mut d3 = vec![[F::zero(); 3]; n];
            let two_h = F::of(2.0) * h;
            let h2 = h * h;
            let two_h3 = F::of(2.0) * h * h * h;
            let interior =
                |i: usize| -> bool { curve.closed || (i >= 2 && i + 2 < n) };
            for i in 0..n {
                if !interior(i) {
                    continue;
                }
                let i = i as isize;
                let pm2 = curve.point(i - 2);
                let pm1 = curve.point(i - 1);
                let p0 = curve.point(i);
                let pp1 = curve.point(i + 1);
                let pp2 = curve.point(i + 2);
                for c in 0..3 {
                    d1[i as usize][c] = (pp1[c] - pm1[c]) / two_h;
                    d2[i as usize][c] = (pp1[c] - F::of(2.0) * p0[c] + pm1[c]) / h2;
                    d3[i as usize][c] =
                        (pp2[c] - F::of(2.0) * pp1[c] + F::of(2.0) * pm1[c] - pm2[c]) / two_h3;
                }
            }
            if !curve.closed {
                // replicate nearest interior values at the ends
                for i in [0usize, 1] {
                    d1[i] = d1[2];
                    d2[i] = d2[2];
                    d3[i] = d3[2];
                }
                for i in [n - 2, n - 1] {
                    d1[i] = d1[n - 3];
                    d2[i] = d2[n - 3];
                    d3[i] = d3[n - 3];
                }
            }
            (d1, d2, d3)
        }
        DerivativeScheme::Spectral => {
            assert!(curve.closed, "spectral derivatives need a closed curve");
            let fft = FftDifferentiator::new(n, curve.length());
            let mut d1 = vec![[F::zero(); 3]; n];
            let mut d2 = vec![[F::zero(); 3]; n];
            let mut d3 = vec![[F::zero(); 3]; n];
            for c in 0..3 {
                let values: Vec<F> = curve.points().iter().map(|p| p[c]).collect();
                let v1 = fft.derivative(&values, 1);
                let v2 = fft.derivative(&values, 2);
                let v3 = fft.derivative(&values, 3);
                for i in 0..n {
                    d1[i][c] = v1[i];
                    d2[i][c] = v2[i];
                    d3[i][c] = v3[i];
                }
            }
            (d1, d2, d3)
        }
    }
}

pub(crate) fn cross<F: Real>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm3<F: Real>(a: &[F; 3]) -> F {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

pub(crate) fn dot3<F: Real>(a: &[F; 3], b: &[F; 3]) -> F {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub const FRAME_TOL: f64 = 1e-8;

/// Curvature and torsion by the speed-corrected difference formulas
/// `κ = ‖X'×X''‖ / ‖X'‖³`, `τ = det(X', X'', X''') / ‖X'×X''‖²`,
/// and plane signed `k = (X'×X'')_z / ‖X'‖³`; second-order accurate on the
/// default scheme, spectrally accurate on the spectral one.
pub fn frenet_data<F: Real>(
    curve: &ArclengthCurve<F>,
    scheme: DerivativeScheme,
) -> Result<CurvatureData<F>, CurveError> {
    let n = curve.len();
    let (d1, d2, d3) = derivatives(curve, scheme);
    let mut kappa = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(n);
    let mut signed = Vec::with_capacity(n);
    let plane = curve.ambient == Ambient::Plane;
    for i in 0..n {
        let speed = norm3(&d1[i]);
        let speed3 = speed * speed * speed;
        let c = cross(&d1[i], &d2[i]);
        let cn = norm3(&c);
        if plane {
            let k = c[2] / speed3;
            signed.push(k);
            kappa.push(k.abs());
            tau.push(F::zero());
        } else {
            let k = cn / speed3;
            kappa.push(k);
            if k.f64() < FRAME_TOL {
                return Err(CurveError::DegenerateFrame { index: i, kappa: k.f64() });
            }
            tau.push(dot3(&c, &d3[i]) / (cn * cn));
        }
    }
    Ok(CurvatureData {
        ambient: curve.ambient,
        closed: curve.closed,
        length: curve.length(),
        step: curve.step(),
        kappa,
        tau,
        signed_k: plane.then_some(signed),
        scheme,
    })
}

/// Complex curvature by cumulative trapezoid of the torsion phase.
///
/// Plane curves return the signed curvature as a real sequence, which is the
/// `κ exp(i∫τ)` limit where inflections flip the phase by π.
pub fn complex_curvature<F: Real>(data: &CurvatureData<F>) -> ComplexCurvature<F> {
    let n = data.len();
    if let Some(k) = &data.signed_k {
        let samples = k.iter().map(|&x| Complex::new(x, F::zero())).collect();
        return ComplexCurvature { samples, total_phase: F::zero(), periodic: true };
    }
    let h = data.step;
    let mut phase = Vec::with_capacity(n);
    let mut acc = F::zero();
    phase.push(F::zero());
    for i in 1..n {
        acc += (data.tau[i - 1] + data.tau[i]) * h * F::of(0.5);
        phase.push(acc);
    }
    let total = acc + (data.tau[n - 1] + data.tau[0]) * h * F::of(0.5);
    let samples = (0..n)
        .map(|i| Complex::new(data.kappa[i] * phase[i].cos(), data.kappa[i] * phase[i].sin()))
        .collect();
    let wrapped = total - (total / F::two_pi()).round() * F::two_pi();
    ComplexCurvature {
        samples,
        total_phase: total,
        periodic: wrapped.abs().f64() < 1e-6,
    }
}
