//! Curve Dirac operators on a uniform arclength grid and the exact
//! block-trace identity of the squared hermitian form.

use super::operator::{
    OperatorMatrix, OperatorMeta, SpinStructure, StructureTag, STRUCTURE_TOL_CURVE,
};
use super::OperatorError;
use crate::curve::frenet::ComplexCurvature;
use crate::linalg::CMat;
use crate::scalar::Real;
use crate::spectral::{diff_matrix, Sector};
use num_complex::Complex;

/// Which presentation of the curve operator to assemble.
///
/// The canonical (anti-hermitian) form is
/// `[[∂ₛ, κ_C/2], [-κ̄_C/2, ∂ₛ]]`; the hermitian plane form is
/// `[[v, -i∂ₛ], [-i∂ₛ, v]]` with `v = k/2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurveForm {
    Canonical,
    Intro,
}

impl CurveForm {
    pub fn name(self) -> &'static str {
        match self {
            CurveForm::Canonical => "canonical",
            CurveForm::Intro => "intro",
        }
    }
}

/// Assembles the curve operator from complex curvature samples over a loop
/// of the given length, in the requested boundary sector.
pub fn curve_dirac<F: Real>(
    kappa_c: &ComplexCurvature<F>,
    length: F,
    sector: Sector,
    form: CurveForm,
) -> Result<OperatorMatrix<F>, OperatorError> {
    if !kappa_c.periodic {
        return Err(OperatorError::NonPeriodicCurvature);
    }
    let n = kappa_c.samples.len();
    let ds = diff_matrix::<F>(n, length, 1, sector);
    let half = F::of(0.5);
    let mut m = CMat::<F>::zeros(2 * n, 2 * n);
    match form {
        CurveForm::Canonical => {
            for r in 0..n {
                for c in 0..n {
                    let d = Complex::new(ds[(r, c)], F::zero());
                    m[(r, c)] = d;
                    m[(n + r, n + c)] = d;
                }
                let k = kappa_c.samples[r] * Complex::new(half, F::zero());
                m[(r, n + r)] = k;
                m[(n + r, r)] = -k.conj();
            }
            OperatorMatrix::plain(
                m,
                StructureTag::AntiHermitian,
                None,
                SpinStructure::curve(sector),
                OperatorMeta::Curve { n, length, sector, form: form.name() },
                STRUCTURE_TOL_CURVE,
            )
        }
        CurveForm::Intro => {
            let max_imag =
                kappa_c.samples.iter().map(|z| z.im.abs()).fold(F::zero(), |a, b| a.max(b));
            if max_imag.f64() > 1e-12 {
                return Err(OperatorError::ComplexIntroPotential { imag: max_imag.f64() });
            }
            let minus_i = Complex::new(F::zero(), -F::one());
            for r in 0..n {
                for c in 0..n {
                    let d = minus_i * Complex::new(ds[(r, c)], F::zero());
                    m[(r, n + c)] = d;
                    m[(n + r, c)] = d;
                }
                let v = Complex::new(kappa_c.samples[r].re * half, F::zero());
                m[(r, r)] = v;
                m[(n + r, n + r)] = v;
            }
            OperatorMatrix::plain(
                m,
                StructureTag::Hermitian,
                None,
                SpinStructure::curve(sector),
                OperatorMeta::Curve { n, length, sector, form: form.name() },
                STRUCTURE_TOL_CURVE,
            )
        }
    }
}

/// Result of the exact block-trace identity
/// `½ tr₂(D²) = V² - P²` for the hermitian plane form, where `V = diag(k/2)`
/// and `P` is the spectral derivative.
#[derive(Clone, Debug)]
pub struct QuadraticIdentityReport<F: Real> {
    pub residual: F,
    pub operator_norm_sq: F,
    /// `residual ≤ 1e-12 · ‖D‖²`
    pub passes: bool,
    /// the identity holds with the `(k/2)²` potential; the published
    /// second-order operator carries `k²/2`, a normalization that the
    /// discretization does not reproduce and which is reported, not asserted
    pub potential_note: &'static str,
}

pub fn quadratic_identity<F: Real>(
    k: &[F],
    length: F,
    sector: Sector,
) -> Result<QuadraticIdentityReport<F>, OperatorError> {
    let n = k.len();
    let kc = ComplexCurvature {
        samples: k.iter().map(|&x| Complex::new(x, F::zero())).collect(),
        total_phase: F::zero(),
        periodic: true,
    };
    let op = curve_dirac(&kc, length, sector, CurveForm::Intro)?;
    let d = op.matrix();
    let d2 = d * d;
    // ½ (top-left + bottom-right) blocks
    let mut half_trace = CMat::<F>::zeros(n, n);
    let half = Complex::new(F::of(0.5), F::zero());
    for r in 0..n {
        for c in 0..n {
            half_trace[(r, c)] = (d2[(r, c)] + d2[(n + r, n + c)]) * half;
        }
    }
    // V² - P² with V = diag(k/2), P = ∂ₛ
    let ds = diff_matrix::<F>(n, length, 1, sector);
    let p2 = &ds * &ds;
    let mut want = CMat::<F>::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let v2 = if r == c {
                k[r] * k[r] * F::of(0.25)
            } else {
                F::zero()
            };
            want[(r, c)] = Complex::new(v2 - p2[(r, c)], F::zero());
        }
    }
    let residual = (&half_trace - &want).norm();
    let norm_sq = d.norm() * d.norm();
    Ok(QuadraticIdentityReport {
        residual,
        operator_norm_sq: norm_sq,
        passes: residual <= F::of(1e-12) * norm_sq,
        potential_note: "discrete identity holds with potential (k/2)²; k²/2 appears in the published second-order operator",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigvalsh;
    use nalgebra::DVector;

    fn unit_circle_kc(n: usize) -> ComplexCurvature<f64> {
        ComplexCurvature {
            samples: vec![Complex::new(1.0, 0.0); n],
            total_phase: 0.0,
            periodic: true,
        }
    }

    fn i_d_eigs(op: &OperatorMatrix<f64>) -> Vec<f64> {
        let i = Complex::new(0.0, 1.0);
        eigvalsh(&op.matrix().map(|x| x * i)).unwrap()
    }

    #[test]
    fn circle_canonical_antiperiodic_spectrum_is_integers() {
        let n = 64;
        let op = curve_dirac(
            &unit_circle_kc(n),
            std::f64::consts::TAU,
            Sector::Antiperiodic,
            CurveForm::Canonical,
        )
        .unwrap();
        assert_eq!(op.structure, StructureTag::AntiHermitian);
        assert_eq!(op.structure_residual, 0.0);
        let eigs = i_d_eigs(&op);
        // every resolved eigenvalue is an integer; each appears twice
        let mut kernel = 0;
        for (idx, e) in eigs.iter().enumerate() {
            assert!(
                (e - e.round()).abs() < 1e-10,
                "eig {idx} = {e} is not an integer"
            );
            if e.abs() < 1e-10 {
                kernel += 1;
            }
        }
        assert_eq!(kernel, 2, "kernel dimension");
        // the Fourier-block oracle: mode m + 1/2 contributes -m-1 and -m
        let mut want: Vec<f64> = Vec::new();
        for m in -(n as i64) / 2..(n as i64) / 2 {
            want.push((-m - 1) as f64);
            want.push(-m as f64);
        }
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in eigs.iter().zip(&want) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn circle_canonical_periodic_spectrum_is_half_integers() {
        let op = curve_dirac(
            &unit_circle_kc(64),
            std::f64::consts::TAU,
            Sector::Periodic,
            CurveForm::Canonical,
        )
        .unwrap();
        let eigs = i_d_eigs(&op);
        for e in &eigs {
            let frac = e - e.floor();
            assert!(
                (frac - 0.5).abs() < 1e-10,
                "eig {e} is not a half-integer"
            );
            assert!(e.abs() > 0.4, "no kernel in the periodic sector");
        }
    }

    #[test]
    fn circle_intro_form_spectrum() {
        let op = curve_dirac(
            &unit_circle_kc(64),
            std::f64::consts::TAU,
            Sector::Periodic,
            CurveForm::Intro,
        )
        .unwrap();
        assert_eq!(op.structure, StructureTag::Hermitian);
        let eigs = eigvalsh(op.matrix()).unwrap();
        // ½ ± m for integer m
        for e in &eigs {
            let shifted = e - 0.5;
            assert!(
                (shifted - shifted.round()).abs() < 1e-10,
                "eig {e} is not in ½ + Z"
            );
        }
    }

    #[test]
    fn zero_curvature_decouples_into_derivative_blocks() {
        let n = 32;
        let kc = ComplexCurvature {
            samples: vec![Complex::new(0.0, 0.0); n],
            total_phase: 0.0,
            periodic: true,
        };
        let op =
            curve_dirac(&kc, std::f64::consts::TAU, Sector::Periodic, CurveForm::Canonical)
                .unwrap();
        let eigs = i_d_eigs(&op);
        // doubled symbol values of the spectral derivative: integers, each
        // appearing at least twice (Nyquist zeroed, so 0 appears 4 times)
        let mut count_zero = 0;
        for e in &eigs {
            assert!((e - e.round()).abs() < 1e-10);
            if e.abs() < 1e-10 {
                count_zero += 1;
            }
        }
        assert_eq!(count_zero, 4);
        // chiral symmetry: spectrum symmetric under λ → -λ
        let mut neg: Vec<f64> = eigs.iter().map(|e| -e).collect();
        neg.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in eigs.iter().zip(&neg) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn non_periodic_curvature_rejected() {
        let kc = ComplexCurvature {
            samples: vec![Complex::new(1.0, 0.0); 32],
            total_phase: 1.0,
            periodic: false,
        };
        assert!(matches!(
            curve_dirac(&kc, 1.0, Sector::Periodic, CurveForm::Canonical),
            Err(OperatorError::NonPeriodicCurvature)
        ));
    }

    #[test]
    fn intro_form_rejects_complex_curvature() {
        let kc = ComplexCurvature {
            samples: vec![Complex::new(1.0, 0.5); 32],
            total_phase: 0.0,
            periodic: true,
        };
        assert!(matches!(
            curve_dirac(&kc, 1.0, Sector::Periodic, CurveForm::Intro),
            Err(OperatorError::ComplexIntroPotential { .. })
        ));
    }

    #[test]
    fn quadratic_identity_is_algebraically_exact() {
        let n = 64;
        let l = std::f64::consts::TAU;
        let k: Vec<f64> = (0..n)
            .map(|i| {
                let s = l * i as f64 / n as f64;
                1.0 + 0.4 * (3.0 * s).sin() + 0.2 * s.cos()
            })
            .collect();
        let rep = quadratic_identity(&k, l, Sector::Periodic).unwrap();
        assert!(rep.passes, "residual {:e} vs ‖D‖² {:e}", rep.residual, rep.operator_norm_sq);
        assert!(rep.residual < 1e-12 * rep.operator_norm_sq);
        // k ≡ 0: ½tr₂(D²) = -P² exactly (already covered by residual = 0)
        let rep0 = quadratic_identity(&vec![0.0; n], l, Sector::Periodic).unwrap();
        assert!(rep0.residual < 1e-13 * rep0.operator_norm_sq.max(1.0));
    }

    #[test]
    fn sector_shift_conjugation_identity() {
        // diag(e^{is/2}) D_per diag(e^{-is/2}) + iω/2 = D_anti away from the
        // unresolved Nyquist mode (the discrete double cover)
        let n = 32;
        let l = 3.0;
        let omega = std::f64::consts::TAU / l;
        let k: Vec<Complex<f64>> = (0..n)
            .map(|i| {
                let s = l * i as f64 / n as f64;
                Complex::new(0.7 + 0.3 * (std::f64::consts::TAU * s / l).cos(), 0.0)
            })
            .collect();
        let kc = ComplexCurvature { samples: k, total_phase: 0.0, periodic: true };
        let per = curve_dirac(&kc, l, Sector::Periodic, CurveForm::Canonical).unwrap();
        let anti = curve_dirac(&kc, l, Sector::Antiperiodic, CurveForm::Canonical).unwrap();
        let dim = 2 * n;
        // U = diag over both spinor components of e^{i ω s_j / 2}
        let mut u = CMat::<f64>::zeros(dim, dim);
        for j in 0..n {
            let s = l * j as f64 / n as f64;
            let phase = Complex::new(0.0, omega * s / 2.0).exp();
            u[(j, j)] = phase;
            u[(n + j, n + j)] = phase;
        }
        let shifted = &u * per.matrix() * u.adjoint()
            + CMat::<f64>::identity(dim, dim).map(|x| x * Complex::new(0.0, omega / 2.0));
        let diff = anti.matrix() - shifted;
        // project out the Nyquist mode in both components
        let mut q = DVector::<Complex<f64>>::zeros(dim);
        for j in 0..n {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            q[j] = Complex::new(sign / (n as f64).sqrt(), 0.0);
        }
        let mut q2 = DVector::<Complex<f64>>::zeros(dim);
        for j in 0..n {
            q2[n + j] = q[j];
        }
        // the defect lives on the U-image of the Nyquist line; project it out
        let uq = &u * &q;
        let uq2 = &u * &q2;
        let proj = CMat::<f64>::identity(dim, dim)
            - &uq * uq.adjoint()
            - &uq2 * uq2.adjoint();
        let residual = (&diff * &proj).norm();
        assert!(residual < 1e-10, "double-cover shift identity residual {residual:e}");
    }
}
