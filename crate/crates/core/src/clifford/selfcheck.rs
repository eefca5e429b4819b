//! Self-check suites over the algebra kernel: anticommutation, associativity,
//! involution, covering map, representation and chirality, each reporting the
//! first counterexample it finds.
//!
//! The multiplication under test is injected so that a corrupted product can
//! be exercised by tests without touching the real kernel.

use super::blade::Blade;
use super::multivector::MultiVector;
use super::rep::MatrixRep;
use super::spin::{mv_exp, so_algebra_to_clifford, spin_to_so, SpinElement};
use nalgebra::DMatrix;
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

pub type RatMv = MultiVector<Rational64>;
pub type Mult = dyn Fn(&RatMv, &RatMv) -> RatMv;

#[derive(Serialize, Clone, Debug)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct SelfcheckReport {
    pub dim: u32,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

fn rational_mv(rng: &mut StdRng, n: u32) -> RatMv {
    let mut mv = RatMv::zero(n);
    for _ in 0..6 {
        let bits = rng.gen_range(0..(1u64 << n)) as u32;
        let num = rng.gen_range(-4i64..=4);
        let den = rng.gen_range(1i64..=4);
        mv.add_term(Blade(bits), Rational64::new(num, den));
    }
    mv
}

/// Exhaustive `e_i e_j + e_j e_i = -2 δ_ij` over the injected product.
pub fn suite_anticommutation(n: u32, mul: &Mult) -> SuiteResult {
    let mut cases = 0;
    for i in 1..=n {
        for j in 1..=n {
            cases += 1;
            let ei = RatMv::basis(n, i);
            let ej = RatMv::basis(n, j);
            let sum = mul(&ei, &ej) + mul(&ej, &ei);
            let want = if i == j {
                RatMv::scalar(n, Rational64::from_integer(-2))
            } else {
                RatMv::zero(n)
            };
            if sum != want {
                return SuiteResult {
                    name: "anticommutation".into(),
                    passed: false,
                    cases,
                    detail: Some(format!("e{i} e{j} + e{j} e{i} = {sum}, expected {want}")),
                };
            }
        }
    }
    SuiteResult { name: "anticommutation".into(), passed: true, cases, detail: None }
}

/// `(ab)c = a(bc)` on random rational triples, exact equality.
pub fn suite_associativity(n: u32, triples: usize, seed: u64, mul: &Mult) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..triples {
        let a = rational_mv(&mut rng, n);
        let b = rational_mv(&mut rng, n);
        let c = rational_mv(&mut rng, n);
        let lhs = mul(&mul(&a, &b), &c);
        let rhs = mul(&a, &mul(&b, &c));
        if lhs != rhs {
            return SuiteResult {
                name: "associativity".into(),
                passed: false,
                cases: k + 1,
                detail: Some(format!("triple #{k}: (ab)c != a(bc); a = {a}, b = {b}, c = {c}")),
            };
        }
    }
    SuiteResult { name: "associativity".into(), passed: true, cases: triples, detail: None }
}

/// `(ab)* = b* a*` on random rational pairs, exact equality.
pub fn suite_reversal(n: u32, pairs: usize, seed: u64, mul: &Mult) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..pairs {
        let a = rational_mv(&mut rng, n);
        let b = rational_mv(&mut rng, n);
        let lhs = mul(&a, &b).reverse();
        let rhs = mul(&b.reverse(), &a.reverse());
        if lhs != rhs {
            return SuiteResult {
                name: "reversal".into(),
                passed: false,
                cases: k + 1,
                detail: Some(format!("pair #{k}: (ab)* != b* a*")),
            };
        }
    }
    SuiteResult { name: "reversal".into(), passed: true, cases: pairs, detail: None }
}

fn random_spin(rng: &mut StdRng, n: u32) -> SpinElement<f64> {
    let mut a = DMatrix::<f64>::zeros(n as usize, n as usize);
    for r in 0..n as usize {
        for c in (r + 1)..n as usize {
            let v = rng.gen_range(-1.0..1.0);
            a[(r, c)] = v;
            a[(c, r)] = -v;
        }
    }
    let x = so_algebra_to_clifford(&a).expect("antisymmetric by construction");
    SpinElement::new(mv_exp(&x)).expect("exponential of grade-2 is spin")
}

/// Covering-map laws: `τ(gh) = τ(g)τ(h)` and `τ(-g) = τ(g)` on random pairs.
pub fn suite_covering(n: u32, pairs: usize, seed: u64) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..pairs {
        let g = random_spin(&mut rng, n);
        let h = random_spin(&mut rng, n);
        let gh = SpinElement::new(g.value() * h.value()).expect("product of spins");
        let tg = spin_to_so(&g).unwrap();
        let th = spin_to_so(&h).unwrap();
        let tgh = spin_to_so(&gh).unwrap();
        let hom = (tgh.matrix() - tg.matrix() * th.matrix()).norm();
        let neg = SpinElement::new(-g.value().clone()).unwrap();
        let tneg = spin_to_so(&neg).unwrap();
        let cover = (tneg.matrix() - tg.matrix()).norm();
        if hom > 1e-12 || cover > 1e-12 {
            return SuiteResult {
                name: "double-cover".into(),
                passed: false,
                cases: k + 1,
                detail: Some(format!("pair #{k}: hom residual {hom:e}, ±g residual {cover:e}")),
            };
        }
    }
    SuiteResult { name: "double-cover".into(), passed: true, cases: pairs, detail: None }
}

/// Representation relations and multiplicativity on random pairs.
pub fn suite_representation(n: u32, pairs: usize, seed: u64) -> SuiteResult {
    let rep = match MatrixRep::<f64>::new(n) {
        Ok(r) => r,
        Err(e) => {
            return SuiteResult {
                name: "representation".into(),
                passed: false,
                cases: 0,
                detail: Some(e.to_string()),
            }
        }
    };
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..pairs {
        let a = rational_mv(&mut rng, n).map_coeffs(|c| *c.numer() as f64 / *c.denom() as f64);
        let b = rational_mv(&mut rng, n).map_coeffs(|c| *c.numer() as f64 / *c.denom() as f64);
        let ab = a.try_mul(&b).unwrap();
        let lhs = rep.apply(&ab);
        let rhs = rep.apply(&a) * rep.apply(&b);
        let resid = (&lhs - &rhs).norm() / (1.0 + lhs.norm());
        if resid > 1e-12 {
            return SuiteResult {
                name: "representation".into(),
                passed: false,
                cases: k + 1,
                detail: Some(format!("pair #{k}: rep(ab) vs rep(a)rep(b) residual {resid:e}")),
            };
        }
    }
    SuiteResult { name: "representation".into(), passed: true, cases: pairs, detail: None }
}

/// Chiral element (anti)commutation through the representation.
pub fn suite_chirality(n: u32) -> SuiteResult {
    let rep = MatrixRep::<f64>::new(n).unwrap();
    let gamma = rep.apply(&MultiVector::<f64>::chiral(n));
    let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
    for j in 1..=n {
        let ej = rep.gamma(j);
        let resid = (&gamma * ej - (ej * &gamma).map(|x| x * num_complex::Complex::new(sign, 0.0)))
            .norm();
        if resid > 1e-12 {
            return SuiteResult {
                name: "chirality".into(),
                passed: false,
                cases: j as usize,
                detail: Some(format!("Γ e{j} sign violated, residual {resid:e}")),
            };
        }
    }
    SuiteResult { name: "chirality".into(), passed: true, cases: n as usize, detail: None }
}

/// Full suite with the real kernel product.
pub fn run(n: u32) -> SelfcheckReport {
    run_with_product(n, &|a, b| a.try_mul(b).expect("same dimension"))
}

/// Full suite over an injected product (for mutation testing).
pub fn run_with_product(n: u32, mul: &Mult) -> SelfcheckReport {
    let suites = vec![
        suite_anticommutation(n, mul),
        suite_associativity(n, 500, 0x5eed_0001, mul),
        suite_reversal(n, 200, 0x5eed_0002, mul),
        suite_covering(n.max(2), 40, 0x5eed_0003),
        suite_representation(n, 100, 0x5eed_0004),
        suite_chirality(n),
    ];
    let passed = suites.iter().all(|s| s.passed);
    SelfcheckReport { dim: n, suites, passed }
}
