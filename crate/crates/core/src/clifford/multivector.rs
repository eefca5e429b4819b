//! Multivectors: finitely supported blade-to-coefficient maps over a fixed
//! dimension, with the exact geometric product.

use super::blade::{blade_product, reversal_sign, Blade};
use super::CliffordError;
use crate::scalar::{Magnitude, Ring};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the Clifford algebra over `R^n` with coefficients in a ring.
///
/// Terms are kept in a sorted map keyed by blade bitmask; zero coefficients
/// are never stored, so equality of maps is equality of elements.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiVector<T: Ring> {
    dim: u32,
    terms: BTreeMap<Blade, T>,
}

impl<T: Ring> MultiVector<T> {
    pub fn zero(dim: u32) -> Self {
        assert!(dim <= 32, "dimension out of range");
        MultiVector { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: u32, value: T) -> Self {
        let mut mv = Self::zero(dim);
        mv.add_term(Blade::SCALAR, value);
        mv
    }

    pub fn one(dim: u32) -> Self {
        Self::scalar(dim, T::one())
    }

    /// Basis vector `e_i`, 1-based.
    pub fn basis(dim: u32, i: u32) -> Self {
        assert!(i >= 1 && i <= dim, "basis index out of range");
        let mut mv = Self::zero(dim);
        mv.add_term(Blade::basis(i), T::one());
        mv
    }

    /// Basis blade from 1-based indices (need not be sorted; sorting sign
    /// is the caller's business, so we require already-increasing input).
    pub fn blade(dim: u32, indices: &[u32], coeff: T) -> Self {
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must increase");
        let b = Blade::from_indices(indices);
        assert!(b.max_index() <= dim, "blade exceeds dimension");
        let mut mv = Self::zero(dim);
        mv.add_term(b, coeff);
        mv
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &T)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> T {
        self.terms.get(&b).cloned().unwrap_or_else(T::zero)
    }

    pub fn scalar_part(&self) -> T {
        self.coeff(Blade::SCALAR)
    }

    pub fn add_term(&mut self, b: Blade, c: T) {
        debug_assert!(b.max_index() <= self.dim);
        if c == T::zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum == T::zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn map_coeffs<U: Ring>(&self, f: impl Fn(&T) -> U) -> MultiVector<U> {
        let mut out = MultiVector::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub fn scale(&self, s: T) -> Self {
        self.map_coeffs(|c| c.clone() * s.clone())
    }

    /// Geometric product. Errors on dimension mismatch.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, CliffordError> {
        if self.dim != rhs.dim {
            return Err(CliffordError::DimensionMismatch { left: self.dim, right: rhs.dim });
        }
        let mut out = Self::zero(self.dim);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &rhs.terms {
                let (sign, b) = blade_product(*ba, *bb);
                let c = ca.clone() * cb.clone() * T::from_i64(sign);
                out.add_term(b, c);
            }
        }
        Ok(out)
    }

    /// Reversal involution `*`: grade-`p` blades pick up `(-1)^{p(p-1)/2}`.
    pub fn reverse(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, c.clone() * T::from_i64(reversal_sign(*b)));
        }
        out
    }

    /// Splits into (even, odd) grade parts.
    pub fn grade_split(&self) -> (Self, Self) {
        let mut even = Self::zero(self.dim);
        let mut odd = Self::zero(self.dim);
        for (b, c) in &self.terms {
            if b.grade() % 2 == 0 {
                even.add_term(*b, c.clone());
            } else {
                odd.add_term(*b, c.clone());
            }
        }
        (even, odd)
    }

    /// Projection onto a single grade.
    pub fn grade_part(&self, grade: u32) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            if b.grade() == grade {
                out.add_term(*b, c.clone());
            }
        }
        out
    }

    pub fn max_grade(&self) -> u32 {
        self.terms.keys().map(|b| b.grade()).max().unwrap_or(0)
    }

    /// Chiral element `Γ = e_1 e_2 ... e_n`.
    pub fn chiral(dim: u32) -> Self {
        assert!(dim >= 1);
        let mut mv = Self::zero(dim);
        mv.add_term(Blade((1u64 << dim) as u32 - 1), T::one());
        mv
    }
}

impl<T: Ring + Magnitude> MultiVector<T> {
    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude().powi(2)).sum::<f64>().sqrt()
    }

    /// Distance to another element in the coefficient norm.
    pub fn distance(&self, other: &Self) -> f64 {
        (self.clone() - other.clone()).norm()
    }

    /// Drops terms with magnitude below `tol` (for float coefficient noise).
    pub fn prune(&self, tol: f64) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            if c.magnitude() > tol {
                out.add_term(*b, c.clone());
            }
        }
        out
    }
}

impl<T: Ring> Add for MultiVector<T> {
    type Output = MultiVector<T>;
    fn add(self, rhs: Self) -> Self::Output {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self;
        for (b, c) in rhs.terms {
            out.add_term(b, c);
        }
        out
    }
}

impl<T: Ring> Sub for MultiVector<T> {
    type Output = MultiVector<T>;
    fn sub(self, rhs: Self) -> Self::Output {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for MultiVector<T> {
    type Output = MultiVector<T>;
    fn neg(self) -> Self::Output {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<T: Ring> Mul for &MultiVector<T> {
    type Output = MultiVector<T>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl<T: Ring + fmt::Display> fmt::Display for MultiVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *b == Blade::SCALAR {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})e", c)?;
                for i in b.indices() {
                    write!(f, "{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Serialized term of the debug JSON dump.
#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub blades: Vec<u32>,
    pub re: f64,
    pub im: f64,
}

/// Debug dump `{"dim": n, "terms": [{"blades":[..], "re":.., "im":..}]}`.
#[derive(Serialize, Deserialize)]
pub struct MultiVectorJson {
    pub dim: u32,
    pub terms: Vec<TermJson>,
}

impl MultiVector<num_complex::Complex<f64>> {
    pub fn to_json(&self) -> MultiVectorJson {
        MultiVectorJson {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| TermJson { blades: b.indices(), re: c.re, im: c.im })
                .collect(),
        }
    }
}

impl MultiVector<f64> {
    pub fn to_json(&self) -> MultiVectorJson {
        MultiVectorJson {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| TermJson { blades: b.indices(), re: *c, im: 0.0 })
                .collect(),
        }
    }
}
