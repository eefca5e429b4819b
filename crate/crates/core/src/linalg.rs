//! Dense linear algebra support: hermitian eigensolves, smallest singular
//! values, fixed-seed inverse iteration and a plain matrix exponential.
//!
//! Everything here is deterministic: single-threaded nalgebra kernels and a
//! seeded generator for iteration starting vectors.

use crate::scalar::{cmod, Real};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

pub type CMat<F> = DMatrix<Complex<F>>;
pub type CVec<F> = DVector<Complex<F>>;

#[derive(Error, Debug, Clone)]
pub enum LinalgError {
    #[error("matrix dimension {dim} exceeds the dense-solve guard {limit}")]
    DimensionGuard { dim: usize, limit: usize },
    #[error("inverse iteration did not converge after {iterations} steps (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

pub const DENSE_DIM_LIMIT: usize = 6000;

/// Hermiticity defect `‖M - M†‖`.
pub fn hermiticity_residual<F: Real>(m: &CMat<F>) -> F {
    (m - m.adjoint()).norm()
}

/// Anti-hermiticity defect `‖M + M†‖`.
pub fn anti_hermiticity_residual<F: Real>(m: &CMat<F>) -> F {
    (m + m.adjoint()).norm()
}

/// Eigenvalues of a hermitian matrix, ascending; the hermitian part is
/// symmetrized first so rounding noise cannot leak into the solver.
pub fn eigvalsh<F: Real>(m: &CMat<F>) -> Result<Vec<F>, LinalgError> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    if m.nrows() > DENSE_DIM_LIMIT {
        return Err(LinalgError::DimensionGuard { dim: m.nrows(), limit: DENSE_DIM_LIMIT });
    }
    let half = Complex::new(F::of(0.5), F::zero());
    let sym = (m + m.adjoint()).map(|x| x * half);
    let mut eigs: Vec<F> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok(eigs)
}

/// Hermitian eigendecomposition, eigenvalues ascending with matching columns.
pub fn eighs<F: Real>(m: &CMat<F>) -> Result<(Vec<F>, CMat<F>), LinalgError> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    if m.nrows() > DENSE_DIM_LIMIT {
        return Err(LinalgError::DimensionGuard { dim: m.nrows(), limit: DENSE_DIM_LIMIT });
    }
    let half = Complex::new(F::of(0.5), F::zero());
    let sym = (m + m.adjoint()).map(|x| x * half);
    let se = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).expect("finite eigenvalues")
    });
    let vals: Vec<F> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMat::<F>::zeros(m.nrows(), m.ncols());
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(i));
    }
    Ok((vals, vecs))
}

/// All singular values, ascending.
pub fn singular_values<F: Real>(m: &CMat<F>) -> Result<Vec<F>, LinalgError> {
    if m.nrows() > DENSE_DIM_LIMIT {
        return Err(LinalgError::DimensionGuard { dim: m.nrows(), limit: DENSE_DIM_LIMIT });
    }
    let svd = m.clone().svd(false, false);
    let mut svs: Vec<F> = svd.singular_values.iter().copied().collect();
    svs.sort_by(|a, b| a.partial_cmp(b).expect("finite singular values"));
    Ok(svs)
}

/// The `k` smallest singular values by inverse iteration on the right
/// singular subspace, deflating converged directions; deterministic via the
/// fixed seed.
///
/// Each step solves `M w₁ = v` and `M† w = w₁` through LU factorizations of
/// lightly regularized copies; the reported value is `‖M v‖` on the
/// converged unit vector, so the precision is not limited by the squared
/// conditioning of the normal equations.
pub fn smallest_singular_values<F: Real>(
    m: &CMat<F>,
    k: usize,
    seed: u64,
) -> Result<Vec<F>, LinalgError> {
    let n = m.ncols();
    let k = k.min(n);
    let scale = m.norm().max(F::one());
    let delta = Complex::new(scale * F::of(1e-14), F::zero());
    let mut m_sh = m.clone();
    let mut ma_sh = m.adjoint();
    for i in 0..n {
        m_sh[(i, i)] += delta;
        ma_sh[(i, i)] += delta;
    }
    let lu_m = m_sh.lu();
    let lu_ma = ma_sh.lu();

    let mut rng = StdRng::seed_from_u64(seed);
    let mut basis: Vec<CVec<F>> = Vec::with_capacity(k);
    let mut values = Vec::with_capacity(k);
    for _ in 0..k {
        let mut v: CVec<F> = CVec::from_fn(n, |_, _| {
            Complex::new(F::of(rng.gen_range(-1.0..1.0)), F::of(rng.gen_range(-1.0..1.0)))
        });
        orthogonalize(&mut v, &basis);
        normalize(&mut v);
        let mut sigma = F::zero();
        let mut converged = false;
        for _ in 0..500 {
            let w1 = lu_ma.solve(&v).expect("regularized adjoint is invertible");
            let mut w = lu_m.solve(&w1).expect("regularized matrix is invertible");
            orthogonalize(&mut w, &basis);
            normalize(&mut w);
            let new_sigma = (m * &w).norm();
            let moved = (&w - &v).norm().min((&w + &v).norm());
            let settled = (new_sigma - sigma).abs()
                <= F::of(1e-12) * (scale * F::of(1e-3) + new_sigma);
            v = w;
            sigma = new_sigma;
            if moved < F::of(1e-12) || settled {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(LinalgError::NoConvergence { iterations: 500, residual: sigma.f64() });
        }
        values.push(sigma);
        basis.push(v);
    }
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    Ok(values)
}

fn orthogonalize<F: Real>(v: &mut CVec<F>, basis: &[CVec<F>]) {
    for _ in 0..2 {
        for b in basis {
            let c = b.dotc(v);
            *v -= b.map(|x| x * c);
        }
    }
}

fn normalize<F: Real>(v: &mut CVec<F>) {
    let n = v.norm();
    if n > F::zero() {
        let inv = Complex::new(F::one() / n, F::zero());
        *v = v.map(|x| x * inv);
    }
}

/// Matrix exponential of a real matrix by scaling and squaring with a plain
/// power series; adequate for the small rotation generators used here.
pub fn matrix_exp_real<F: Real>(a: &DMatrix<F>) -> DMatrix<F> {
    let n = a.nrows();
    let norm = a.norm();
    let squarings = if norm > F::of(0.5) {
        (norm.f64() / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let x = a.map(|e| e * F::of(0.5f64.powi(squarings)));
    let mut sum = DMatrix::<F>::identity(n, n);
    let mut term = DMatrix::<F>::identity(n, n);
    for k in 1..40 {
        term = (&term * &x).map(|e| e / F::of(k as f64));
        sum += &term;
        if term.norm().f64() < 1e-18 {
            break;
        }
    }
    let mut out = sum;
    for _ in 0..squarings {
        out = &out * &out;
    }
    out
}

/// Frobenius distance between complex matrices, for structure checks.
pub fn frob_distance<F: Real>(a: &CMat<F>, b: &CMat<F>) -> F {
    (a - b).norm()
}

/// ‖v‖₂ for complex slices.
pub fn cnorm2<F: Real>(v: &[Complex<F>]) -> F {
    v.iter().map(|z| z.norm_sqr()).fold(F::zero(), |a, b| a + b).sqrt()
}

/// max |v_i|.
pub fn cnorm_inf<F: Real>(v: &[Complex<F>]) -> F {
    v.iter().map(|z| cmod(*z)).fold(F::zero(), |a, b| a.max(b))
}
