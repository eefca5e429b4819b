//! The spin group inside the even Clifford algebra, its double cover of
//! `SO(n)`, and the grade-2 realization of the rotation Lie algebra.

use super::multivector::MultiVector;
use super::CliffordError;
use crate::scalar::Real;
use nalgebra::DMatrix;

pub const SPIN_TOL: f64 = 1e-12;
pub const SO_TOL: f64 = 1e-10;

/// Why a membership test failed, with the offending residuals.
#[derive(Clone, Debug)]
pub struct SpinDiagnostics {
    pub even: bool,
    pub unit_residual: f64,
    pub conjugation_residual: f64,
}

impl SpinDiagnostics {
    pub fn accepted(&self) -> bool {
        self.even && self.unit_residual < SPIN_TOL && self.conjugation_residual < SPIN_TOL
    }
}

/// Membership test for the spin group: even grade, `g* g = 1`, and
/// conjugation `g* e_i g` stays in the span of the basis vectors.
///
/// The input is normalized by `sqrt(<g* g>_0)` first when that scalar is
/// positive, so the unit condition is tested on unit-norm representatives.
pub fn spin_diagnostics<F: Real>(g: &MultiVector<F>) -> SpinDiagnostics {
    let (_, odd) = g.grade_split();
    let even = odd.is_zero() && !g.is_zero();

    let g = normalize_even(g);
    let n = g.dim();
    let gs = g.reverse();
    let prod = &gs * &g;
    let unit_residual = prod.distance(&MultiVector::one(n));

    let mut conjugation_residual = 0.0f64;
    for i in 1..=n {
        let ei = MultiVector::basis(n, i);
        let conj = &(&gs * &ei) * &g;
        let non_vector = conj.clone() - conj.grade_part(1);
        conjugation_residual = conjugation_residual.max(non_vector.norm());
    }
    SpinDiagnostics { even, unit_residual, conjugation_residual }
}

fn normalize_even<F: Real>(g: &MultiVector<F>) -> MultiVector<F> {
    let q = (&g.reverse() * g).scalar_part();
    if q > F::zero() {
        let inv = F::one() / q.sqrt();
        g.scale(inv)
    } else {
        g.clone()
    }
}

pub fn is_spin<F: Real>(g: &MultiVector<F>) -> bool {
    spin_diagnostics(g).accepted()
}

/// A validated spin-group element.
#[derive(Clone, Debug)]
pub struct SpinElement<F: Real>(MultiVector<F>);

impl<F: Real> SpinElement<F> {
    pub fn new(g: MultiVector<F>) -> Result<Self, CliffordError> {
        let d = spin_diagnostics(&g);
        if d.accepted() {
            Ok(SpinElement(normalize_even(&g)))
        } else {
            Err(CliffordError::NotSpin {
                even: d.even,
                unit_residual: d.unit_residual,
                conjugation_residual: d.conjugation_residual,
            })
        }
    }

    pub fn value(&self) -> &MultiVector<F> {
        &self.0
    }

    /// Planar rotor `cos θ + sin θ e_i e_j`, the basic spin element.
    pub fn rotor(dim: u32, i: u32, j: u32, theta: F) -> Self {
        assert!(i != j);
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let g = MultiVector::scalar(dim, theta.cos())
            + MultiVector::blade(dim, &[i, j], theta.sin());
        SpinElement(g)
    }
}

/// A validated special-orthogonal matrix.
#[derive(Clone, Debug)]
pub struct SOMatrix<F: Real>(DMatrix<F>);

impl<F: Real> SOMatrix<F> {
    pub fn new(m: DMatrix<F>) -> Result<Self, CliffordError> {
        let n = m.nrows();
        assert_eq!(n, m.ncols());
        let gram = m.transpose() * &m;
        let mut ortho = F::zero();
        for r in 0..n {
            for c in 0..n {
                let want = if r == c { F::one() } else { F::zero() };
                ortho = ortho.max((gram[(r, c)] - want).abs());
            }
        }
        let det = m.determinant();
        let det_res = (det - F::one()).abs();
        if ortho.f64() < SO_TOL && det_res.f64() < SO_TOL {
            Ok(SOMatrix(m))
        } else {
            Err(CliffordError::NotSpecialOrthogonal {
                orthogonality_residual: ortho.f64(),
                det_residual: det_res.f64(),
            })
        }
    }

    pub fn matrix(&self) -> &DMatrix<F> {
        &self.0
    }
}

/// The covering map `τ(g) v = g v g*`, returned as the matrix whose column
/// `j` holds the coefficients of `g e_j g*` in the `e_i` basis.
pub fn spin_to_so<F: Real>(g: &SpinElement<F>) -> Result<SOMatrix<F>, CliffordError> {
    let n = g.value().dim();
    let gs = g.value().reverse();
    let mut m = DMatrix::<F>::zeros(n as usize, n as usize);
    for j in 1..=n {
        let ej = MultiVector::basis(n, j);
        let image = &(g.value() * &ej) * &gs;
        let non_vector = image.clone() - image.grade_part(1);
        if non_vector.norm() >= SPIN_TOL {
            return Err(CliffordError::ConjugationLeavesVectors {
                index: j,
                residual: non_vector.norm(),
            });
        }
        for i in 1..=n {
            m[((i - 1) as usize, (j - 1) as usize)] =
                image.coeff(super::blade::Blade::basis(i));
        }
    }
    SOMatrix::new(m)
}

/// Grade-2 element whose adjoint action `[a, v] = av - va` on vectors equals
/// the antisymmetric matrix `A`.
///
/// Since `[e_k e_l, e_k] = 2 e_l`, the coefficient is fixed by the adjoint
/// check as `a = ¼ Σ_{i,j} (A e_i, e_j) e_i e_j`.
pub fn so_algebra_to_clifford<F: Real>(a: &DMatrix<F>) -> Result<MultiVector<F>, CliffordError> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let mut skew = F::zero();
    for r in 0..n {
        for c in 0..n {
            skew = skew.max((a[(r, c)] + a[(c, r)]).abs());
        }
    }
    if skew.f64() >= SPIN_TOL {
        return Err(CliffordError::NotAntisymmetric { residual: skew.f64() });
    }
    let quarter = F::of(0.25);
    let mut out = MultiVector::zero(n as u32);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            // (A e_i, e_j) = A_{ji}
            let c = a[(j - 1, i - 1)] * quarter;
            let (lo, hi, sign) = if i < j { (i, j, F::one()) } else { (j, i, -F::one()) };
            out.add_term(
                super::blade::Blade::from_indices(&[lo as u32, hi as u32]),
                c * sign,
            );
        }
    }
    Ok(out)
}

/// Adjoint action `[a, v] = av - va` of a grade-2 element on a vector.
pub fn adjoint_action<F: Real>(a: &MultiVector<F>, v: &MultiVector<F>) -> MultiVector<F> {
    (a * v) - (v * a)
}

/// Exponential of a multivector by scaled-and-squared power series.
pub fn mv_exp<F: Real>(a: &MultiVector<F>) -> MultiVector<F> {
    let n = a.dim();
    let norm = a.norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scale = F::of(0.5f64.powi(squarings));
    let x = a.scale(scale);

    let mut sum = MultiVector::one(n);
    let mut term = MultiVector::one(n);
    for k in 1..64 {
        term = (&term * &x).scale(F::one() / F::of(k as f64));
        let t_norm = term.norm();
        sum = sum + term.clone();
        if t_norm < 1e-17 * (1.0 + sum.norm()) {
            break;
        }
    }
    let mut result = sum;
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix_exp_real;

    #[test]
    fn rotor_is_spin() {
        let g = MultiVector::scalar(3, 0.6f64.cos()) + MultiVector::blade(3, &[1, 2], 0.6f64.sin());
        assert!(is_spin(&g));
    }

    #[test]
    fn odd_and_non_unit_rejected() {
        let e1 = MultiVector::<f64>::basis(3, 1);
        let d = spin_diagnostics(&e1);
        assert!(!d.even);
        assert!(!d.accepted());

        // g = 2 normalizes to 1, but a genuinely non-unit even element fails:
        // 1 + e1 e2 has g* g = 2 - ... check through diagnostics on the raw test
        let two = MultiVector::<f64>::scalar(3, 2.0);
        // normalization makes this a valid scalar spin element (τ = identity)
        assert!(spin_diagnostics(&two).accepted());
        // but a non-normalizable even element is rejected
        let bad = MultiVector::<f64>::one(4) + MultiVector::blade(4, &[1, 2, 3, 4], 1.0);
        // (1 + e1234)* (1 + e1234) = 2 + 2 e1234 after normalization is not 1
        assert!(!spin_diagnostics(&bad).accepted());
    }

    #[test]
    fn tau_of_rotor_is_double_angle_rotation() {
        let theta = 0.37f64;
        let g = SpinElement::rotor(3, 1, 2, theta);
        let so = spin_to_so(&g).unwrap();
        let m = so.matrix();
        let (c, s) = ((2.0 * theta).cos(), (2.0 * theta).sin());
        let expect = [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]];
        for r in 0..3 {
            for col in 0..3 {
                assert!((m[(r, col)] - expect[r][col]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn tau_kernel_is_plus_minus_one() {
        let plus = SpinElement::new(MultiVector::<f64>::one(3)).unwrap();
        let minus = SpinElement::new(-MultiVector::<f64>::one(3)).unwrap();
        for g in [plus, minus] {
            let m = spin_to_so(&g).unwrap();
            for r in 0..3 {
                for c in 0..3 {
                    let want = if r == c { 1.0 } else { 0.0 };
                    assert!((m.matrix()[(r, c)] - want).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn algebra_map_fixed_by_adjoint_check() {
        // A e1 = e2, A e2 = -e1
        let mut a = DMatrix::<f64>::zeros(3, 3);
        a[(1, 0)] = 1.0;
        a[(0, 1)] = -1.0;
        let x = so_algebra_to_clifford(&a).unwrap();
        // adjoint action must reproduce A on every basis vector
        for j in 1..=3u32 {
            let v = MultiVector::basis(3, j);
            let got = adjoint_action(&x, &v);
            let mut want = MultiVector::zero(3);
            for i in 1..=3u32 {
                want.add_term(
                    crate::clifford::blade::Blade::basis(i),
                    a[((i - 1) as usize, (j - 1) as usize)],
                );
            }
            assert!(got.distance(&want) < 1e-14, "j={}", j);
        }
        // zero matrix maps to zero
        let z = so_algebra_to_clifford(&DMatrix::<f64>::zeros(4, 4)).unwrap();
        assert!(z.is_zero());
        // non-antisymmetric input is rejected
        let mut bad = DMatrix::<f64>::zeros(3, 3);
        bad[(0, 0)] = 1.0;
        assert!(so_algebra_to_clifford(&bad).is_err());
    }

    #[test]
    fn exp_of_algebra_element_covers_matrix_exp() {
        let mut a = DMatrix::<f64>::zeros(4, 4);
        // a generic antisymmetric matrix
        let entries = [(0, 1, 0.7), (0, 2, -0.3), (1, 3, 0.45), (2, 3, 0.2), (0, 3, -0.11)];
        for &(r, c, v) in &entries {
            a[(r, c)] = v;
            a[(c, r)] = -v;
        }
        let x = so_algebra_to_clifford(&a).unwrap();
        let g = SpinElement::new(mv_exp(&x)).expect("exp of grade-2 is spin");
        let tau = spin_to_so(&g).unwrap();
        let expm = matrix_exp_real(&a);
        let mut err = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                err = err.max((tau.matrix()[(r, c)] - expm[(r, c)]).abs());
            }
        }
        assert!(err < 1e-8, "tau(exp a) vs exp(A): {err:e}");
    }
}
