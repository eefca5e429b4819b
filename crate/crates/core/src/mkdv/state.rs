//! The evolving curvature profile and its conserved functionals.

use super::MkdvError;
use crate::scalar::Real;
use crate::spectral::periodic_quadrature;

/// Periodic profile `v = k/2` on a uniform grid with its time stamp.
#[derive(Clone, Debug)]
pub struct MkdvState<F: Real> {
    pub v: Vec<F>,
    pub length: F,
    pub time: F,
    pub steps_taken: usize,
}

impl<F: Real> MkdvState<F> {
    pub fn new(v: Vec<F>, length: F) -> Result<Self, MkdvError> {
        if v.len() < 64 || v.len() % 2 != 0 {
            return Err(MkdvError::GridSize(v.len()));
        }
        Ok(MkdvState { v, length, time: F::zero(), steps_taken: 0 })
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn max_abs(&self) -> F {
        self.v.iter().map(|x| x.abs()).fold(F::zero(), |a, b| a.max(b))
    }

    /// Cosine profile `mean + amp·cos(2π m s / L)`.
    pub fn cosine(n: usize, length: F, mean: F, amp: F, mode: usize) -> Result<Self, MkdvError> {
        let v = (0..n)
            .map(|j| {
                let s = length * F::of(j as f64) / F::of(n as f64);
                mean + amp * (F::two_pi() * F::of(mode as f64) * s / length).cos()
            })
            .collect();
        Self::new(v, length)
    }

    /// Soliton `α sech(α (s - s₀))` centered on the grid.
    pub fn soliton(n: usize, length: F, alpha: F) -> Result<Self, MkdvError> {
        let center = length * F::of(0.5);
        let v = (0..n)
            .map(|j| {
                let s = length * F::of(j as f64) / F::of(n as f64);
                alpha / ((alpha * (s - center)).cosh())
            })
            .collect();
        Self::new(v, length)
    }
}

/// The tracked invariants `∫v ds` and `∫v² ds`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Conserved<F: Real> {
    pub int_v: F,
    pub int_v2: F,
}

pub fn conserved_quantities<F: Real>(state: &MkdvState<F>) -> Conserved<F> {
    let int_v = periodic_quadrature(&state.v, state.length);
    let sq: Vec<F> = state.v.iter().map(|&x| x * x).collect();
    let int_v2 = periodic_quadrature(&sq, state.length);
    Conserved { int_v, int_v2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_profile_conserved_quantities() {
        let s = MkdvState::new(vec![0.0f64; 64], 1.0).unwrap();
        let c = conserved_quantities(&s);
        assert_eq!(c.int_v, 0.0);
        assert_eq!(c.int_v2, 0.0);
    }

    #[test]
    fn soliton_integrals() {
        // ∫ sech = π, ∫ sech² = 2 on a large domain
        let s = MkdvState::<f64>::soliton(1024, 80.0, 1.0).unwrap();
        let c = conserved_quantities(&s);
        assert!((c.int_v - std::f64::consts::PI).abs() < 1e-12, "∫v = {}", c.int_v);
        assert!((c.int_v2 - 2.0).abs() < 1e-12, "∫v² = {}", c.int_v2);
    }

    #[test]
    fn grid_validation() {
        assert!(MkdvState::new(vec![0.0f64; 32], 1.0).is_err());
        assert!(MkdvState::new(vec![0.0f64; 65], 1.0).is_err());
    }
}
