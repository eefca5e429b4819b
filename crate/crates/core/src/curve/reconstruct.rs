//! Curve reconstruction from curvature data by fourth-order integration of
//! the frame equations, starting from the origin with the canonical frame.

use super::resample::ArclengthCurve;
use super::samples::Ambient;
use super::CurveError;
use crate::scalar::Real;

/// Fourth-order midpoint interpolation of a periodic profile.
fn midpoint<F: Real>(profile: &[F], i: usize) -> F {
    let n = profile.len();
    let v = |j: isize| profile[j.rem_euclid(n as isize) as usize];
    let i = i as isize;
    (F::of(9.0) * (v(i) + v(i + 1)) - (v(i - 1) + v(i + 2))) / F::of(16.0)
}

/// Reconstructed curve with its closure diagnostic.
#[derive(Clone, Debug)]
pub struct Reconstruction<F: Real> {
    pub curve: ArclengthCurve<F>,
    /// distance between the end of the integrated loop and the start
    pub closure_gap: F,
}

/// Plane curve from a periodic signed-curvature profile `k` on `n` uniform
/// nodes of a length-`L` loop: integrates `θ' = k`, `X' = (cos θ, sin θ)`
/// with RK4, sampling `k` at half steps by fourth-order interpolation.
pub fn reconstruct_plane<F: Real>(k: &[F], length: F) -> Result<Reconstruction<F>, CurveError> {
    let n = k.len();
    if n < 16 {
        return Err(CurveError::TooFewSamples { min: 16, got: n });
    }
    let h = length / F::of(n as f64);
    let mut theta = F::zero();
    let mut x = F::zero();
    let mut y = F::zero();
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        points.push([x, y, F::zero()]);
        let k0 = k[i];
        let km = midpoint(k, i);
        let k1 = k[(i + 1) % n];
        // RK4 for (θ, x, y)
        let (t1, x1, y1) = (k0, theta.cos(), theta.sin());
        let th2 = theta + h * t1 * F::of(0.5);
        let (t2, x2, y2) = (km, th2.cos(), th2.sin());
        let th3 = theta + h * t2 * F::of(0.5);
        let (t3, x3, y3) = (km, th3.cos(), th3.sin());
        let th4 = theta + h * t3;
        let (t4, x4, y4) = (k1, th4.cos(), th4.sin());
        let sixth = h / F::of(6.0);
        theta += sixth * (t1 + F::of(2.0) * (t2 + t3) + t4);
        x += sixth * (x1 + F::of(2.0) * (x2 + x3) + x4);
        y += sixth * (y1 + F::of(2.0) * (y2 + y3) + y4);
    }
    let closure_gap = (x * x + y * y).sqrt();
    let curve = ArclengthCurve::from_uniform(Ambient::Plane, true, points, length);
    Ok(Reconstruction { curve, closure_gap })
}

/// Space curve from periodic `κ, τ` profiles: RK4 on the Frenet system
/// `T' = κN`, `N' = -κT + τB`, `B' = -τN`, `X' = T`.
pub fn reconstruct_space<F: Real>(
    kappa: &[F],
    tau: &[F],
    length: F,
) -> Result<Reconstruction<F>, CurveError> {
    let n = kappa.len();
    if n < 16 {
        return Err(CurveError::TooFewSamples { min: 16, got: n });
    }
    assert_eq!(n, tau.len());
    let h = length / F::of(n as f64);

    type State<F> = [[F; 3]; 4]; // T, N, B, X
    let rhs = |s: &State<F>, k: F, t: F| -> State<F> {
        let mut d = [[F::zero(); 3]; 4];
        for c in 0..3 {
            d[0][c] = k * s[1][c];
            d[1][c] = -k * s[0][c] + t * s[2][c];
            d[2][c] = -t * s[1][c];
            d[3][c] = s[0][c];
        }
        d
    };
    let add = |a: &State<F>, b: &State<F>, w: F| -> State<F> {
        let mut out = *a;
        for r in 0..4 {
            for c in 0..3 {
                out[r][c] += w * b[r][c];
            }
        }
        out
    };

    let mut state: State<F> = [
        [F::one(), F::zero(), F::zero()],
        [F::zero(), F::one(), F::zero()],
        [F::zero(), F::zero(), F::one()],
        [F::zero(), F::zero(), F::zero()],
    ];
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        points.push(state[3]);
        let (k0, t0) = (kappa[i], tau[i]);
        let (km, tm) = (midpoint(kappa, i), midpoint(tau, i));
        let (k1, t1) = (kappa[(i + 1) % n], tau[(i + 1) % n]);
        let d1 = rhs(&state, k0, t0);
        let s2 = add(&state, &d1, h * F::of(0.5));
        let d2 = rhs(&s2, km, tm);
        let s3 = add(&state, &d2, h * F::of(0.5));
        let d3 = rhs(&s3, km, tm);
        let s4 = add(&state, &d3, h);
        let d4 = rhs(&s4, k1, t1);
        let sixth = h / F::of(6.0);
        for r in 0..4 {
            for c in 0..3 {
                state[r][c] += sixth
                    * (d1[r][c] + F::of(2.0) * (d2[r][c] + d3[r][c]) + d4[r][c]);
            }
        }
    }
    let gap = state[3];
    let closure_gap = (gap[0] * gap[0] + gap[1] * gap[1] + gap[2] * gap[2]).sqrt();
    let curve = ArclengthCurve::from_uniform(Ambient::Space, true, points, length);
    Ok(Reconstruction { curve, closure_gap })
}
