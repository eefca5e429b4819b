//! Scalar abstractions: a floating-point trait for the numerical modules and a
//! ring trait for exact multivector coefficients.

use num_complex::Complex;
use num_traits::{FromPrimitive, Num, NumAssign, ToPrimitive};
use std::fmt::Debug;
use std::iter::Sum;
use std::ops::Neg;

/// Floating-point scalar: `f32` or `f64`.
///
/// Collects everything the geometry, operator and flow modules need from a
/// float so the numerical core stays generic over the working precision;
/// concrete aliases at the crate root pin `f64`.
pub trait Real:
    nalgebra::RealField
    + Copy
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + rustfft::FftNum
    + Sum
    + for<'a> Sum<&'a Self>
    + Ring
    + Magnitude
{
    /// Conversion from the `f64` literals that appear in formulas.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn f64(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }

    /// The imaginary unit over this scalar.
    fn i() -> Complex<Self> {
        Complex::new(Self::zero(), Self::one())
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Modulus of a complex number without requiring `num_traits::Float`.
pub fn cmod<F: Real>(z: Complex<F>) -> F {
    z.norm_sqr().sqrt()
}

/// Commutative coefficient ring for multivectors.
///
/// Implemented by floats, complex floats and exact rationals; the Clifford
/// kernel only performs ring operations, so the sign bookkeeping stays exact
/// for any of them.
pub trait Ring: Num + Neg<Output = Self> + Clone + PartialEq + Debug {
    fn from_i64(n: i64) -> Self;
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Ring for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
}

impl<F: Real> Ring for Complex<F> {
    fn from_i64(n: i64) -> Self {
        Complex::new(F::of(n as f64), F::zero())
    }
}

impl Ring for num_rational::Rational64 {
    fn from_i64(n: i64) -> Self {
        num_rational::Rational64::from_integer(n)
    }
}

/// Coefficient size, used by tolerance checks and float-noise pruning.
pub trait Magnitude {
    fn magnitude(&self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Magnitude for f32 {
    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

impl<F: Real> Magnitude for Complex<F> {
    fn magnitude(&self) -> f64 {
        cmod(*self).f64()
    }
}

impl Magnitude for num_rational::Rational64 {
    fn magnitude(&self) -> f64 {
        (*self.numer() as f64 / *self.denom() as f64).abs()
    }
}
