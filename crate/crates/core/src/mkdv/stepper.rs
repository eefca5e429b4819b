//! Integrating-factor RK4 stepping of the MKdV equation in Fourier space.
//!
//! The dispersive part `-∂ₛ³` is diagonal in Fourier space and propagated
//! exactly through the integrating factor; the conservative nonlinear term
//! `-6v²∂ₛv = -2∂ₛ(v³)` is evaluated pseudo-spectrally with 2/3-rule
//! dealiasing.

use super::state::MkdvState;
use super::MkdvError;
use crate::scalar::Real;
use num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Conservative default step `safety · (L/N)³` (the classical fully explicit
/// dispersive bound; far below what the integrating factor requires).
pub fn suggested_dt<F: Real>(length: F, n: usize, safety: F) -> F {
    let h = length / F::of(n as f64);
    safety * h * h * h
}

/// Stability bound of the explicit (advective) part under RK4: the
/// dispersion is integrated exactly, so the step is limited by
/// `2.8 / (6 max|v|² k_cut)` with `k_cut` the dealiased cutoff wavenumber.
pub fn stability_bound<F: Real>(state: &MkdvState<F>) -> F {
    let n = state.len();
    let k_cut = F::of((n / 3) as f64) * F::two_pi() / state.length;
    let vmax2 = state.max_abs().powi(2).max(F::of(1e-12));
    F::of(2.8) / (F::of(6.0) * vmax2 * k_cut)
}

pub struct Stepper<F: Real> {
    n: usize,
    length: F,
    forward: Arc<dyn Fft<F>>,
    inverse: Arc<dyn Fft<F>>,
    /// i k per mode
    ik: Vec<Complex<F>>,
    /// i k³ per mode (the linear symbol of -∂ₛ³)
    ik3: Vec<Complex<F>>,
    /// 2/3-rule mask
    mask: Vec<F>,
}

impl<F: Real> Stepper<F> {
    pub fn new(n: usize, length: F) -> Self {
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        let mut ik = Vec::with_capacity(n);
        let mut ik3 = Vec::with_capacity(n);
        let mut mask = Vec::with_capacity(n);
        let cutoff = n / 3;
        for j in 0..n {
            let m = if j <= n / 2 { j as i64 } else { j as i64 - n as i64 };
            // the unpaired mode gets no odd-derivative weight
            let m_odd = if j == n / 2 { 0 } else { m };
            let k = F::of(m_odd as f64) * F::two_pi() / length;
            ik.push(Complex::new(F::zero(), k));
            ik3.push(Complex::new(F::zero(), k * k * k));
            mask.push(if m.unsigned_abs() as usize <= cutoff { F::one() } else { F::zero() });
        }
        Stepper { n, length, forward, inverse, ik, ik3, mask }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn to_spectral(&self, v: &[F]) -> Vec<Complex<F>> {
        let mut buf: Vec<Complex<F>> = v.iter().map(|&x| Complex::new(x, F::zero())).collect();
        self.forward.process(&mut buf);
        buf
    }

    fn to_physical(&self, vhat: &[Complex<F>]) -> Vec<F> {
        let mut buf = vhat.to_vec();
        self.inverse.process(&mut buf);
        let inv = F::one() / F::of(self.n as f64);
        buf.into_iter().map(|z| z.re * inv).collect()
    }

    /// `N̂(v̂) = -2 ik F[v³]`, dealiased.
    fn nonlinear(&self, vhat: &[Complex<F>]) -> Vec<Complex<F>> {
        let v = self.to_physical(vhat);
        let mut cubed: Vec<Complex<F>> =
            v.iter().map(|&x| Complex::new(x * x * x, F::zero())).collect();
        self.forward.process(&mut cubed);
        let minus_two = F::of(-2.0);
        (0..self.n)
            .map(|j| cubed[j] * self.ik[j] * Complex::new(minus_two * self.mask[j], F::zero()))
            .collect()
    }

    /// One integrating-factor RK4 step of size `dt` (may be negative).
    pub fn step(&self, state: &MkdvState<F>, dt: F) -> Result<MkdvState<F>, MkdvError> {
        assert_eq!(state.len(), self.n);
        let bound = stability_bound(state);
        if dt.abs() > bound {
            return Err(MkdvError::StepTooLarge { dt: dt.abs().f64(), bound: bound.f64() });
        }
        let half_dt = dt * F::of(0.5);
        // the symbol is purely imaginary, so the integrating factor is a
        // plain rotation e^{i k³ dt/2}
        let e: Vec<Complex<F>> = self
            .ik3
            .iter()
            .map(|l| {
                let theta = l.im * half_dt;
                Complex::new(theta.cos(), theta.sin())
            })
            .collect();
        let e2: Vec<Complex<F>> = e.iter().map(|x| x * x).collect();

        let vhat = self.to_spectral(&state.v);
        let a = self.nonlinear(&vhat);
        let stage_b: Vec<Complex<F>> = (0..self.n)
            .map(|j| e[j] * (vhat[j] + a[j] * Complex::new(half_dt, F::zero())))
            .collect();
        let b = self.nonlinear(&stage_b);
        let stage_c: Vec<Complex<F>> = (0..self.n)
            .map(|j| e[j] * vhat[j] + b[j] * Complex::new(half_dt, F::zero()))
            .collect();
        let c = self.nonlinear(&stage_c);
        let stage_d: Vec<Complex<F>> = (0..self.n)
            .map(|j| e2[j] * vhat[j] + e[j] * c[j] * Complex::new(dt, F::zero()))
            .collect();
        let d = self.nonlinear(&stage_d);

        let sixth = Complex::new(dt / F::of(6.0), F::zero());
        let two = Complex::new(F::of(2.0), F::zero());
        let out_hat: Vec<Complex<F>> = (0..self.n)
            .map(|j| {
                e2[j] * vhat[j] + sixth * (e2[j] * a[j] + two * e[j] * (b[j] + c[j]) + d[j])
            })
            .collect();
        let v = self.to_physical(&out_hat);
        let max_v = v.iter().map(|x| x.abs()).fold(F::zero(), |m, x| m.max(x));
        let time = state.time + dt;
        if !(max_v < F::of(1e6)) {
            return Err(MkdvError::BlowUp { time: time.f64(), max_v: max_v.f64() });
        }
        Ok(MkdvState { v, length: state.length, time, steps_taken: state.steps_taken + 1 })
    }

    /// Advances to `state.time + horizon` using steps of at most `dt`.
    pub fn run(
        &self,
        state: &MkdvState<F>,
        horizon: F,
        dt: F,
    ) -> Result<MkdvState<F>, MkdvError> {
        let mut s = state.clone();
        let target = state.time + horizon;
        let sign = if horizon >= F::zero() { F::one() } else { -F::one() };
        let dt = dt.abs() * sign;
        loop {
            let remaining = target - s.time;
            if remaining.abs() <= F::of(1e-15) * (F::one() + target.abs()) {
                break;
            }
            let step = if remaining.abs() < dt.abs() { remaining } else { dt };
            s = self.step(&s, step)?;
        }
        s.time = target;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mkdv::state::conserved_quantities;

    #[test]
    fn constants_are_fixed_points() {
        for c in [0.0f64, 0.7] {
            let s = MkdvState::new(vec![c; 64], 2.0 * std::f64::consts::PI).unwrap();
            let stepper = Stepper::new(64, s.length);
            let dt = suggested_dt(s.length, 64, 0.25);
            let s1 = stepper.run(&s, 0.05, dt).unwrap();
            for x in &s1.v {
                assert!((x - c).abs() < 1e-13, "constant profile drifted: {x} vs {c}");
            }
        }
    }

    #[test]
    fn soliton_translates_at_alpha_squared() {
        // v = α sech(α(s - s₀ - α²t)) solves v_t + 6v²v_s + v_sss = 0
        let n = 1024;
        let l = 80.0;
        let alpha = 1.0f64;
        let s0 = MkdvState::soliton(n, l, alpha).unwrap();
        let stepper = Stepper::new(n, l);
        let dt = suggested_dt(l, n, 0.25);
        let t_final = 1.0 / (alpha * alpha);
        let s1 = stepper.run(&s0, t_final, dt).unwrap();
        let mut sup = 0.0f64;
        for j in 0..n {
            let s = l * j as f64 / n as f64;
            let want = alpha / (alpha * (s - l / 2.0 - alpha * alpha * t_final)).cosh();
            sup = sup.max((s1.v[j] - want).abs());
        }
        assert!(sup < 1e-6, "soliton shape error {sup:e}");
    }

    #[test]
    fn conservation_over_unit_time() {
        let n = 256;
        let l = 2.0 * std::f64::consts::PI;
        let s0 = MkdvState::cosine(n, l, 0.5, 0.3, 1).unwrap();
        let c0 = conserved_quantities(&s0);
        let stepper = Stepper::new(n, l);
        let dt = suggested_dt(l, n, 0.25);
        let s1 = stepper.run(&s0, 1.0, dt).unwrap();
        let c1 = conserved_quantities(&s1);
        let drift_v = (c1.int_v - c0.int_v).abs() / c0.int_v.abs();
        let drift_v2 = (c1.int_v2 - c0.int_v2).abs() / c0.int_v2;
        assert!(drift_v < 1e-8, "∫v drift {drift_v:e}");
        assert!(drift_v2 < 1e-8, "∫v² drift {drift_v2:e}");
    }

    #[test]
    fn reversibility() {
        let n = 256;
        let l = 2.0 * std::f64::consts::PI;
        let s0 = MkdvState::cosine(n, l, 0.4, 0.2, 2).unwrap();
        let stepper = Stepper::new(n, l);
        let dt = suggested_dt(l, n, 0.25);
        let fwd = stepper.run(&s0, 0.2, dt).unwrap();
        let back = stepper.run(&fwd, -0.2, dt).unwrap();
        let mut sup = 0.0f64;
        for j in 0..n {
            sup = sup.max((back.v[j] - s0.v[j]).abs());
        }
        assert!(sup < 1e-7, "round-trip error {sup:e}");
    }

    #[test]
    fn fourth_order_convergence_in_dt() {
        let n = 256;
        let l = 2.0 * std::f64::consts::PI;
        let s0 = MkdvState::<f64>::cosine(n, l, 0.5, 0.3, 1).unwrap();
        let stepper = Stepper::new(n, l);
        let t = 0.5;
        let reference = stepper.run(&s0, t, 2.5e-4 / 8.0).unwrap();
        let sup_err = |dt: f64| -> f64 {
            let s1 = stepper.run(&s0, t, dt).unwrap();
            s1.v.iter().zip(&reference.v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
        };
        let e0 = sup_err(4e-3);
        let e1 = sup_err(2e-3);
        let e2 = sup_err(1e-3);
        assert!(e0 / e1 > 10.0 && e0 / e1 < 24.0, "first halving ratio {}", e0 / e1);
        assert!(e1 / e2 > 10.0 && e1 / e2 < 24.0, "second halving ratio {}", e1 / e2);
    }

    #[test]
    fn oversized_step_rejected() {
        let s = MkdvState::new(vec![2.0f64; 64], 1.0).unwrap();
        let stepper = Stepper::new(64, 1.0);
        let bound = stability_bound(&s);
        assert!(matches!(
            stepper.step(&s, bound * 2.0),
            Err(MkdvError::StepTooLarge { .. })
        ));
    }
}
