//! Fourier spectral machinery on uniform periodic grids: differentiation
//! matrices with periodic or antiperiodic boundary sectors, FFT-based
//! derivative application, and trapezoid quadrature.
//!
//! Antiperiodic sectors use half-integer wavenumbers `m + 1/2`, which realize
//! the nontrivial spin structure of the discretized circle; the resulting
//! matrices are real and exactly antisymmetric like their periodic cousins.

use crate::scalar::Real;
use nalgebra::DMatrix;
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Boundary sector of a periodic direction for spinor fields.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, Hash)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Periodic,
    Antiperiodic,
}

impl Sector {
    /// Wavenumber offset: 0 or 1/2.
    pub fn offset(self) -> f64 {
        match self {
            Sector::Periodic => 0.0,
            Sector::Antiperiodic => 0.5,
        }
    }
}

impl std::fmt::Display for Sector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sector::Periodic => write!(f, "periodic"),
            Sector::Antiperiodic => write!(f, "antiperiodic"),
        }
    }
}

impl std::str::FromStr for Sector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "periodic" | "per" | "p" => Ok(Sector::Periodic),
            "antiperiodic" | "anti" | "a" => Ok(Sector::Antiperiodic),
            other => Err(format!("unknown sector `{other}`")),
        }
    }
}

/// Wavenumbers `2π(m + offset)/length` for `m = -n/2 .. n/2 - 1`.
///
/// For the periodic sector the unpaired Nyquist mode gets multiplier zero in
/// odd-order derivatives (the standard symmetric convention); half-integer
/// sectors are symmetric and keep every mode.
pub fn wavenumbers<F: Real>(n: usize, length: F, sector: Sector) -> Vec<F> {
    assert!(n >= 2 && n % 2 == 0, "grid size must be even");
    let scale = F::two_pi() / length;
    (0..n)
        .map(|j| {
            let m = if j <= n / 2 { j as i64 } else { j as i64 - n as i64 };
            (F::of(m as f64) + F::of(sector.offset())) * scale
        })
        .collect()
}

fn fft_index_mode(j: usize, n: usize) -> i64 {
    if j <= n / 2 {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

/// Dense spectral differentiation matrix of the given order on `n` nodes
/// covering `[0, length)` in the given sector.
///
/// Built by unitary synthesis `E diag((i k)^order) E†`; for odd orders in
/// the periodic sector the Nyquist multiplier is zeroed, keeping the matrix
/// real and exactly antisymmetric. Even orders keep the full symbol.
pub fn diff_matrix<F: Real>(n: usize, length: F, order: u32, sector: Sector) -> DMatrix<F> {
    assert!(n >= 2 && n % 2 == 0, "grid size must be even");
    let nf = F::of(n as f64);
    let mut symbol: Vec<Complex<F>> = Vec::with_capacity(n);
    for j in 0..n {
        let m = fft_index_mode(j, n);
        let nyquist = sector == Sector::Periodic && m == (n as i64) / 2;
        // j = n/2 corresponds to the unpaired mode
        let m = if j == n / 2 { -(n as i64) / 2 } else { m };
        let k = (F::of(m as f64) + F::of(sector.offset())) * F::two_pi() / length;
        let ik = Complex::new(F::zero(), k);
        let mut s = Complex::new(F::one(), F::zero());
        for _ in 0..order {
            s *= ik;
        }
        if nyquist && order % 2 == 1 {
            s = Complex::new(F::zero(), F::zero());
        }
        symbol.push(s);
    }
    // D_{jl} = (1/n) Σ_m s_m e^{i 2π (m+σ)(j-l)/n }. Half-integer sectors
    // are negacyclic: wrapping the signed distance j-l by n flips the sign,
    // so the kernel is tabulated over signed distances.
    let kernel = |d: i64| -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for j in 0..n {
            let m = if j == n / 2 { -(n as i64) / 2 } else { fft_index_mode(j, n) };
            let phase = (F::of(m as f64) + F::of(sector.offset()))
                * F::two_pi()
                * F::of(d as f64)
                / nf;
            acc += symbol[j] * Complex::new(phase.cos(), phase.sin());
        }
        acc / Complex::new(nf, F::zero())
    };
    let kernels: Vec<Complex<F>> =
        (-(n as i64 - 1)..=(n as i64 - 1)).map(kernel).collect();
    let mut out = DMatrix::<F>::zeros(n, n);
    let mut max_imag = F::zero();
    for r in 0..n {
        for c in 0..n {
            let d = r as i64 - c as i64;
            let v = kernels[(d + n as i64 - 1) as usize];
            max_imag = max_imag.max(v.im.abs());
            out[(r, c)] = v.re;
        }
    }
    debug_assert!(max_imag.f64() < 1e-10, "spectral matrix should be real");
    // enforce the exact parity the symbol guarantees
    let half = F::of(0.5);
    let parity = if order % 2 == 1 { -F::one() } else { F::one() };
    for r in 0..n {
        for c in r..n {
            let a = out[(r, c)];
            let b = out[(c, r)];
            let v = (a + parity * b) * half;
            out[(r, c)] = v;
            out[(c, r)] = parity * v;
        }
    }
    out
}

/// First-derivative matrix with the full mode set: the unpaired mode keeps
/// its frequency `-n/2` instead of being zeroed, which makes the matrix
/// complex but exactly anti-hermitian and leaves no spurious zero modes.
/// Used for operator assembly; plain field differentiation keeps the real
/// symmetric convention of [`diff_matrix`].
pub fn diff_matrix_full<F: Real>(
    n: usize,
    length: F,
    sector: Sector,
) -> DMatrix<Complex<F>> {
    assert!(n >= 2 && n % 2 == 0, "grid size must be even");
    let nf = F::of(n as f64);
    let kernel = |d: i64| -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for j in 0..n {
            let m = if j == n / 2 { -(n as i64) / 2 } else { fft_index_mode(j, n) };
            let k = (F::of(m as f64) + F::of(sector.offset())) * F::two_pi() / length;
            let phase =
                (F::of(m as f64) + F::of(sector.offset())) * F::two_pi() * F::of(d as f64) / nf;
            acc += Complex::new(F::zero(), k) * Complex::new(phase.cos(), phase.sin());
        }
        acc / Complex::new(nf, F::zero())
    };
    let kernels: Vec<Complex<F>> = (-(n as i64 - 1)..=(n as i64 - 1)).map(kernel).collect();
    let mut out = DMatrix::<Complex<F>>::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let d = r as i64 - c as i64;
            out[(r, c)] = kernels[(d + n as i64 - 1) as usize];
        }
    }
    // enforce exact anti-hermiticity
    let half = Complex::new(F::of(0.5), F::zero());
    for r in 0..n {
        for c in r..n {
            let v = (out[(r, c)] - out[(c, r)].conj()) * half;
            out[(r, c)] = v;
            out[(c, r)] = -v.conj();
        }
    }
    out
}

/// Uniform grid nodes `j * length / n`.
pub fn grid_nodes<F: Real>(n: usize, length: F) -> Vec<F> {
    (0..n).map(|j| F::of(j as f64) * length / F::of(n as f64)).collect()
}

/// Trapezoid quadrature on a uniform periodic grid (exact rectangle sum).
pub fn periodic_quadrature<F: Real>(values: &[F], length: F) -> F {
    let h = length / F::of(values.len() as f64);
    values.iter().copied().sum::<F>() * h
}

/// FFT-based periodic differentiation workspace for 1-D real or complex data.
pub struct FftDifferentiator<F: Real> {
    n: usize,
    length: F,
    forward: Arc<dyn rustfft::Fft<F>>,
    inverse: Arc<dyn rustfft::Fft<F>>,
}

impl<F: Real> FftDifferentiator<F> {
    pub fn new(n: usize, length: F) -> Self {
        assert!(n >= 2 && n % 2 == 0);
        let mut planner = rustfft::FftPlanner::new();
        FftDifferentiator {
            n,
            length,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn forward(&self, data: &mut [Complex<F>]) {
        self.forward.process(data);
    }

    pub fn inverse_normalized(&self, data: &mut [Complex<F>]) {
        self.inverse.process(data);
        let inv = Complex::new(F::one() / F::of(self.n as f64), F::zero());
        for z in data.iter_mut() {
            *z *= inv;
        }
    }

    /// Spectral derivative of given order of periodic samples.
    pub fn derivative(&self, values: &[F], order: u32) -> Vec<F> {
        let mut buf: Vec<Complex<F>> =
            values.iter().map(|&v| Complex::new(v, F::zero())).collect();
        self.forward.process(&mut buf);
        for (j, z) in buf.iter_mut().enumerate() {
            let m = if j == self.n / 2 {
                // unpaired mode: zero for odd orders, full symbol for even
                if order % 2 == 1 {
                    *z = Complex::new(F::zero(), F::zero());
                    continue;
                }
                -(self.n as i64) / 2
            } else {
                fft_index_mode(j, self.n)
            };
            let k = F::of(m as f64) * F::two_pi() / self.length;
            let ik = Complex::new(F::zero(), k);
            for _ in 0..order {
                *z *= ik;
            }
        }
        let mut out = buf;
        self.inverse_normalized(&mut out);
        out.into_iter().map(|z| z.re).collect()
    }
}
