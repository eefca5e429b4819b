//! Complex matrix representations of the Clifford algebra, built by the
//! two-step tensor recursion over Pauli matrices.
//!
//! The bare recursion `e_j ↦ γ_j ⊗ σ3`, `e_{n+1} ↦ 1 ⊗ σ2`,
//! `e_{n+2} ↦ 1 ⊗ σ1` produces generators squaring to `+I`; a factor of
//! `√-1` is inserted per appended generator so that `γ_j² = -I` holds and
//! the negative-definite relation is preserved. The twist is a choice of
//! scalar gauge in the complexified algebra; the anticommutation contract is
//! what the tests pin down.
//!
//! Even `n` yields the faithful representation on `C^{2^{n/2}}`. Odd `n`
//! yields the action on a single irreducible summand of half that total
//! space, flagged as such; it is still a ring homomorphism.

use super::multivector::MultiVector;
use super::CliffordError;
use crate::scalar::{Real, Ring};
use nalgebra::DMatrix;
use num_complex::Complex;

pub type CMatrix<F> = DMatrix<Complex<F>>;

/// Pauli matrices `σ0..σ3` as 2x2 complex matrices.
pub fn pauli<F: Real>(a: usize) -> CMatrix<F> {
    let o = Complex::new(F::zero(), F::zero());
    let l = Complex::new(F::one(), F::zero());
    let i = F::i();
    match a {
        0 => CMatrix::from_row_slice(2, 2, &[l, o, o, l]),
        1 => CMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        2 => CMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        3 => CMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
        _ => panic!("pauli index out of range"),
    }
}

fn kron<F: Real>(a: &CMatrix<F>, b: &CMatrix<F>) -> CMatrix<F> {
    a.kronecker(b)
}

/// Generator images `γ_1..γ_n` of the basis vectors.
#[derive(Clone, Debug)]
pub struct MatrixRep<F: Real> {
    dim: u32,
    gammas: Vec<CMatrix<F>>,
    /// Odd dimensions are represented on one of the two irreducible
    /// summands; the representation is then not faithful on the center.
    half_summand: bool,
}

pub const REP_DIM_LIMIT: u32 = 12;

impl<F: Real> MatrixRep<F> {
    /// Builds the representation for `CLIFF(R^n)`, `1 <= n <= 12`.
    pub fn new(n: u32) -> Result<Self, CliffordError> {
        if n < 1 || n > REP_DIM_LIMIT {
            return Err(CliffordError::RepDimension { dim: n });
        }
        let i = F::i();
        let mut gammas: Vec<CMatrix<F>>;
        let odd = n % 2 == 1;
        if odd {
            // base n=1 on one chiral summand: e1 ↦ (i)
            gammas = vec![CMatrix::from_row_slice(1, 1, &[i])];
        } else {
            // base n=2: {i σ1, i σ2}
            gammas = vec![pauli::<F>(1).map(|x| x * i), pauli::<F>(2).map(|x| x * i)];
        }
        while (gammas.len() as u32) < n {
            let size = gammas[0].nrows();
            let s1 = pauli::<F>(1);
            let s2 = pauli::<F>(2);
            let s3 = pauli::<F>(3);
            let id = CMatrix::identity(size, size);
            let mut next: Vec<CMatrix<F>> =
                gammas.iter().map(|g| kron(g, &s3)).collect();
            next.push(kron(&id, &s2).map(|x| x * i));
            next.push(kron(&id, &s1).map(|x| x * i));
            gammas = next;
        }
        let rep = MatrixRep { dim: n, gammas, half_summand: odd };
        rep.verify()?;
        Ok(rep)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn half_summand(&self) -> bool {
        self.half_summand
    }

    /// Matrix size: `2^{n/2}` for even `n`, `2^{(n-1)/2}` for odd.
    pub fn size(&self) -> usize {
        self.gammas[0].nrows()
    }

    /// Image of `e_j`, 1-based.
    pub fn gamma(&self, j: u32) -> &CMatrix<F> {
        &self.gammas[(j - 1) as usize]
    }

    /// Verifies `γ_j γ_k + γ_k γ_j = -2 δ_{jk} I` to machine precision.
    pub fn verify(&self) -> Result<(), CliffordError> {
        let size = self.size();
        let id = CMatrix::<F>::identity(size, size);
        for j in 0..self.gammas.len() {
            for k in j..self.gammas.len() {
                let anti = &self.gammas[j] * &self.gammas[k]
                    + &self.gammas[k] * &self.gammas[j];
                let want = if j == k {
                    id.map(|x| x * Complex::new(-F::of(2.0), F::zero()))
                } else {
                    CMatrix::zeros(size, size)
                };
                let residual = (&anti - &want).norm().f64();
                if residual > 1e-12 {
                    return Err(CliffordError::RepRelation {
                        j: j as u32 + 1,
                        k: k as u32 + 1,
                        residual,
                    });
                }
            }
        }
        Ok(())
    }

    /// Extends multiplicatively to the whole algebra; a ring homomorphism.
    pub fn apply<T>(&self, a: &MultiVector<T>) -> CMatrix<F>
    where
        T: Ring + IntoComplex<F>,
    {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let size = self.size();
        let mut out = CMatrix::<F>::zeros(size, size);
        for (b, c) in a.terms() {
            let mut m = CMatrix::<F>::identity(size, size);
            for i in b.indices() {
                m = m * self.gamma(i);
            }
            out += m.map(|x| x * c.clone().into_complex());
        }
        out
    }
}

/// Coefficients that embed into the complex matrix entries.
pub trait IntoComplex<F: Real> {
    fn into_complex(self) -> Complex<F>;
}

impl<F: Real> IntoComplex<F> for Complex<F> {
    fn into_complex(self) -> Complex<F> {
        self
    }
}

impl<F: Real> IntoComplex<F> for f64 {
    fn into_complex(self) -> Complex<F> {
        Complex::new(F::of(self), F::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    type Mv = MultiVector<f64>;

    fn random_mv(rng: &mut StdRng, n: u32) -> Mv {
        let mut mv = Mv::zero(n);
        for _ in 0..6 {
            let bits = rng.gen_range(0..(1u32 << n));
            let c = rng.gen_range(-2.0..2.0);
            mv.add_term(crate::clifford::blade::Blade(bits), c);
        }
        mv
    }

    #[test]
    fn sizes_match_the_recursion() {
        assert_eq!(MatrixRep::<f64>::new(1).unwrap().size(), 1);
        assert_eq!(MatrixRep::<f64>::new(2).unwrap().size(), 2);
        assert_eq!(MatrixRep::<f64>::new(3).unwrap().size(), 2);
        assert_eq!(MatrixRep::<f64>::new(4).unwrap().size(), 4);
        assert_eq!(MatrixRep::<f64>::new(5).unwrap().size(), 4);
        assert_eq!(MatrixRep::<f64>::new(8).unwrap().size(), 16);
        assert!(MatrixRep::<f64>::new(3).unwrap().half_summand());
        assert!(!MatrixRep::<f64>::new(4).unwrap().half_summand());
    }

    #[test]
    fn relations_hold_to_machine_precision() {
        for n in 1..=8u32 {
            MatrixRep::<f64>::new(n).unwrap().verify().unwrap();
        }
        assert!(MatrixRep::<f64>::new(0).is_err());
        assert!(MatrixRep::<f64>::new(13).is_err());
    }

    #[test]
    fn n2_relations_explicit() {
        let rep = MatrixRep::<f64>::new(2).unwrap();
        let g1 = rep.gamma(1);
        let g2 = rep.gamma(2);
        let anti = g1 * g2 + g2 * g1;
        assert!(anti.norm() < 1e-15);
        let sq = g1 * g1 + CMatrix::<f64>::identity(2, 2);
        assert!(sq.norm() < 1e-15);
    }

    #[test]
    fn rep_is_ring_homomorphism() {
        let mut rng = StdRng::seed_from_u64(42);
        for n in 1..=6u32 {
            let rep = MatrixRep::<f64>::new(n).unwrap();
            for _ in 0..20 {
                let a = random_mv(&mut rng, n);
                let b = random_mv(&mut rng, n);
                let ab = a.try_mul(&b).unwrap();
                let lhs = rep.apply(&ab);
                let rhs = rep.apply(&a) * rep.apply(&b);
                let scale = 1.0 + lhs.norm();
                assert!(
                    ((&lhs - &rhs).norm() / scale) < 1e-12,
                    "homomorphism failed for n={}",
                    n
                );
            }
        }
    }

    #[test]
    fn chiral_image_commutation() {
        for n in 2..=7u32 {
            let rep = MatrixRep::<f64>::new(n).unwrap();
            let gamma_mv = Mv::chiral(n);
            let g = rep.apply(&gamma_mv);
            let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            for j in 1..=n {
                let ej = rep.gamma(j);
                let resid = (&g * ej - (ej * &g).map(|x| x * Complex::new(sign, 0.0))).norm();
                assert!(resid < 1e-12, "n={} j={}", n, j);
            }
        }
    }
}
