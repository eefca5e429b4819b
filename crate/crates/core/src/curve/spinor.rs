//! The square-root-of-tangent spinor of a closed plane curve: with
//! `X = X₁ + √-1 X₂`, the pair `(√(∂ₛX), √(-∂ₛX))` with branches continued
//! along the loop. Its boundary sector is read off from the total tangent
//! phase: antiperiodic iff the rotation number is odd.

use super::frenet::DerivativeScheme;
use super::resample::ArclengthCurve;
use super::samples::Ambient;
use super::CurveError;
use crate::scalar::Real;
use crate::spectral::{FftDifferentiator, Sector};
use num_complex::Complex;

/// Spinor samples with the detected boundary sector.
#[derive(Clone, Debug)]
pub struct CurveSpinor<F: Real> {
    pub psi1: Vec<Complex<F>>,
    pub psi2: Vec<Complex<F>>,
    pub sector: Sector,
    /// total tangent phase over the loop, in units of 2π (= rotation number)
    pub tangent_turns: F,
}

/// Continuous-branch square roots of `±∂ₛX` for a closed plane curve.
///
/// `ψ₁` starts on the principal branch at sample 0 and is continued by
/// nearest phase; the relative branch of `ψ₂` is fixed to `-i ψ₁`, which is
/// the continuation of `√(-∂ₛX)` that spans the kernel of the curve Dirac
/// operator (both are zero-mode components of the same operator, so their
/// relative sign is not free).
pub fn weierstrass_spinor_curve<F: Real>(
    curve: &ArclengthCurve<F>,
    scheme: DerivativeScheme,
) -> Result<CurveSpinor<F>, CurveError> {
    if curve.ambient != Ambient::Plane {
        return Err(CurveError::NotPlane);
    }
    if !curve.closed {
        return Err(CurveError::OpenCurve);
    }
    let n = curve.len();
    // tangent as a complex number
    let dz: Vec<Complex<F>> = match scheme {
        DerivativeScheme::CenteredFd => {
            let two_h = F::of(2.0) * curve.step();
            (0..n as isize)
                .map(|i| {
                    let a = curve.point(i - 1);
                    let b = curve.point(i + 1);
                    Complex::new((b[0] - a[0]) / two_h, (b[1] - a[1]) / two_h)
                })
                .collect()
        }
        DerivativeScheme::Spectral => {
            let fft = FftDifferentiator::new(n, curve.length());
            let xs: Vec<F> = curve.points().iter().map(|p| p[0]).collect();
            let ys: Vec<F> = curve.points().iter().map(|p| p[1]).collect();
            let dx = fft.derivative(&xs, 1);
            let dy = fft.derivative(&ys, 1);
            (0..n).map(|i| Complex::new(dx[i], dy[i])).collect()
        }
    };
    // continued phase of the tangent
    let mut phase = Vec::with_capacity(n);
    let mut acc = dz[0].im.atan2(dz[0].re);
    phase.push(acc);
    for i in 1..n {
        let raw = dz[i].im.atan2(dz[i].re);
        let prev = dz[i - 1].im.atan2(dz[i - 1].re);
        let mut d = raw - prev;
        while d > F::pi() {
            d -= F::two_pi();
        }
        while d < -F::pi() {
            d += F::two_pi();
        }
        if d.abs() >= F::frac_pi_2() {
            return Err(CurveError::PhaseJump { i: i - 1, next: i, jump: d.abs().f64() });
        }
        acc += d;
        phase.push(acc);
    }
    // total turn including the closing step
    let raw0 = dz[0].im.atan2(dz[0].re);
    let prev = dz[n - 1].im.atan2(dz[n - 1].re);
    let mut d = raw0 - prev;
    while d > F::pi() {
        d -= F::two_pi();
    }
    while d < -F::pi() {
        d += F::two_pi();
    }
    let total = acc + d - phase[0];
    let turns = total / F::two_pi();
    let rotation = turns.round().f64() as i64;
    let sector = if rotation.rem_euclid(2) == 1 { Sector::Antiperiodic } else { Sector::Periodic };

    let minus_i = Complex::new(F::zero(), -F::one());
    let mut psi1 = Vec::with_capacity(n);
    let mut psi2 = Vec::with_capacity(n);
    for i in 0..n {
        let r = dz[i].norm_sqr().sqrt().sqrt(); // |∂ₛX|^{1/2}
        let half = phase[i] * F::of(0.5);
        let p1 = Complex::new(r * half.cos(), r * half.sin());
        psi1.push(p1);
        psi2.push(minus_i * p1);
    }
    Ok(CurveSpinor { psi1, psi2, sector, tangent_turns: turns })
}
