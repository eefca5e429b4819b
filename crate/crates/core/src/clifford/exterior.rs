//! The Clifford algebra acting on the exterior algebra: exterior and interior
//! multiplication and their difference, which represents the algebra on
//! `Λ(R^n)`. Exterior-algebra elements reuse the blade storage of
//! [`MultiVector`] with wedge semantics.

use super::blade::{blade_contract, blade_wedge, Blade};
use super::multivector::MultiVector;
use super::CliffordError;
use crate::scalar::Ring;

/// `ext(e_i) w = e_i ∧ w` extended linearly.
pub fn exterior_mul<T: Ring>(i: u32, w: &MultiVector<T>) -> MultiVector<T> {
    let mut out = MultiVector::zero(w.dim());
    for (b, c) in w.terms() {
        if let Some((sign, nb)) = blade_wedge(Blade::basis(i), b) {
            out.add_term(nb, c.clone() * T::from_i64(sign));
        }
    }
    out
}

/// `int(e_i) w`: contraction dual to exterior multiplication.
pub fn interior_mul<T: Ring>(i: u32, w: &MultiVector<T>) -> MultiVector<T> {
    let mut out = MultiVector::zero(w.dim());
    for (b, c) in w.terms() {
        if let Some((sign, nb)) = blade_contract(i, b) {
            out.add_term(nb, c.clone() * T::from_i64(sign));
        }
    }
    out
}

/// `cliff(e_i) = ext(e_i) - int(e_i)` on an exterior-algebra element.
pub fn cliff_basis<T: Ring>(i: u32, w: &MultiVector<T>) -> MultiVector<T> {
    exterior_mul(i, w) - interior_mul(i, w)
}

/// Action of an arbitrary algebra element on `ΛV`, extending `cliff` as a
/// ring homomorphism: a blade acts as the composition of its basis factors.
pub fn cliff_action<T: Ring>(
    a: &MultiVector<T>,
    w: &MultiVector<T>,
) -> Result<MultiVector<T>, CliffordError> {
    if a.dim() != w.dim() {
        return Err(CliffordError::DimensionMismatch { left: a.dim(), right: w.dim() });
    }
    let mut out = MultiVector::zero(w.dim());
    for (b, c) in a.terms() {
        let mut acc = w.clone();
        // rightmost factor acts first
        for &i in b.indices().iter().rev() {
            acc = cliff_basis(i, &acc);
        }
        out = out + acc.scale(c.clone());
    }
    Ok(out)
}

/// The symbol map `a ↦ cliff(a)(1)`; with this storage it is the identity on
/// blades, so it mainly serves as a consistency check.
pub fn cliff_symbol<T: Ring>(a: &MultiVector<T>) -> Result<MultiVector<T>, CliffordError> {
    cliff_action(a, &MultiVector::one(a.dim()))
}
