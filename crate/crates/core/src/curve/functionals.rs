//! Topological and variational functionals of closed curves: tangent winding
//! number, the Gauss self-linking (writhe) double integral, and the bending
//! energy `∫ κ² ds`.

use super::frenet::{cross, dot3, norm3, CurvatureData};
use super::resample::ArclengthCurve;
use super::samples::Ambient;
use super::CurveError;
use crate::scalar::Real;
use rayon::prelude::*;

/// Winding of the unit tangent of a closed plane curve.
///
/// The wrapped angle increments of a closed discrete tangent sequence sum to
/// an exact multiple of 2π, so the residual reported here is rounding-level;
/// coarse sampling is instead detected through large single increments.
pub fn rotation_number<F: Real>(curve: &ArclengthCurve<F>) -> Result<i64, CurveError> {
    if curve.ambient != Ambient::Plane {
        return Err(CurveError::NotPlane);
    }
    if !curve.closed {
        return Err(CurveError::OpenCurve);
    }
    let n = curve.len() as isize;
    let mut angles = Vec::with_capacity(n as usize);
    for i in 0..n {
        let a = curve.point(i - 1);
        let b = curve.point(i + 1);
        angles.push((b[1] - a[1]).atan2(b[0] - a[0]));
    }
    let mut total = F::zero();
    let mut max_jump = F::zero();
    for i in 0..angles.len() {
        let next = angles[(i + 1) % angles.len()];
        let mut d = next - angles[i];
        while d > F::pi() {
            d -= F::two_pi();
        }
        while d < -F::pi() {
            d += F::two_pi();
        }
        max_jump = max_jump.max(d.abs());
        total += d;
    }
    if max_jump > F::frac_pi_2() {
        return Err(CurveError::TooCoarse {
            what: "tangent turns more than π/2 between samples".into(),
            residual: max_jump.f64(),
        });
    }
    let turns = total / F::two_pi();
    let rounded = turns.round();
    let residual = (turns - rounded).abs().f64();
    if residual >= 0.05 {
        return Err(CurveError::TooCoarse {
            what: "tangent winding far from an integer".into(),
            residual,
        });
    }
    Ok(rounded.f64() as i64)
}

/// Result of the writhe quadrature with its diagnostics.
#[derive(Clone, Debug)]
pub struct WritheResult<F: Real> {
    pub writhe: F,
    /// smallest pairwise distance outside the diagonal band
    pub min_distance: F,
    /// set when the curve approaches itself closer than 10 h
    pub near_self_intersection: bool,
}

/// Gauss double integral
/// `Wr = (1/4π) ∮∮ (T(s)×T(s')) · (X(s)-X(s')) / ‖X(s)-X(s')‖³ ds ds'`
/// by the trapezoid rule with a two-sample diagonal band excluded.
///
/// Work is split over row chunks whose partial sums are reduced in index
/// order, so the result is bitwise independent of the thread count.
pub fn writhe<F: Real>(curve: &ArclengthCurve<F>) -> Result<WritheResult<F>, CurveError> {
    if curve.ambient != Ambient::Space {
        return Err(CurveError::NotSpace);
    }
    if !curve.closed {
        return Err(CurveError::OpenCurve);
    }
    let n = curve.len();
    let h = curve.step();
    let two_h = F::of(2.0) * h;
    let pts: Vec<[F; 3]> = curve.points().to_vec();
    let tangents: Vec<[F; 3]> = (0..n as isize)
        .map(|i| {
            let a = curve.point(i - 1);
            let b = curve.point(i + 1);
            let mut t = [F::zero(); 3];
            for c in 0..3 {
                t[c] = (b[c] - a[c]) / two_h;
            }
            t
        })
        .collect();

    const BAND: usize = 2;
    let chunk = 32usize;
    let rows: Vec<usize> = (0..n).collect();
    let partials: Vec<(F, F)> = rows
        .par_chunks(chunk)
        .map(|rows| {
            let mut acc = F::zero();
            let mut min_d = F::max_value().unwrap();
            for &i in rows {
                for j in 0..n {
                    let sep = i.abs_diff(j).min(n - i.abs_diff(j));
                    if sep <= BAND {
                        continue;
                    }
                    let mut dx = [F::zero(); 3];
                    for c in 0..3 {
                        dx[c] = pts[i][c] - pts[j][c];
                    }
                    let r = norm3(&dx);
                    min_d = min_d.min(r);
                    let num = dot3(&cross(&tangents[i], &tangents[j]), &dx);
                    acc += num / (r * r * r);
                }
            }
            (acc, min_d)
        })
        .collect();
    let mut total = F::zero();
    let mut min_distance = F::max_value().unwrap();
    for (acc, min_d) in partials {
        total += acc;
        min_distance = min_distance.min(min_d);
    }
    let writhe = total * h * h / (F::of(4.0) * F::pi());
    Ok(WritheResult {
        writhe,
        min_distance,
        near_self_intersection: min_distance < F::of(10.0) * h,
    })
}

/// Bending energy: raw `∫ κ² ds` and the normalized `(1/2π) ∫ κ² ds`.
#[derive(Clone, Copy, Debug)]
pub struct EulerBernoulli<F: Real> {
    pub raw: F,
    pub normalized: F,
}

pub fn euler_bernoulli<F: Real>(data: &CurvatureData<F>) -> EulerBernoulli<F> {
    let n = data.len();
    let h = data.step;
    let raw = if data.closed {
        data.kappa.iter().map(|&k| k * k).sum::<F>() * h
    } else {
        // trapezoid with endpoint weights on open curves
        let mut acc = F::zero();
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { F::of(0.5) } else { F::one() };
            acc += w * data.kappa[i] * data.kappa[i];
        }
        acc * h
    };
    EulerBernoulli { raw, normalized: raw / F::two_pi() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::frenet::{frenet_data, DerivativeScheme};
    use crate::curve::resample::resample_arclength;
    use crate::curve::samples::{CurveGenerator, CurveSamples};

    fn arclength(shape: &str, params: &[(&str, f64)], n: usize) -> ArclengthCurve<f64> {
        let c = CurveGenerator {
            shape: shape.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            samples: n,
        }
        .build()
        .unwrap();
        resample_arclength(&c, n).unwrap()
    }

    #[test]
    fn rotation_numbers_of_test_curves() {
        assert_eq!(rotation_number(&arclength("circle", &[], 64)).unwrap(), 1);
        assert_eq!(rotation_number(&arclength("figure_eight", &[], 256)).unwrap(), 0);
        assert_eq!(rotation_number(&arclength("double_circle", &[], 128)).unwrap(), 2);
    }

    #[test]
    fn reflection_negates_rotation_number() {
        let c = arclength("circle", &[], 64);
        let mirrored: Vec<[f64; 3]> =
            c.points().iter().map(|p| [p[0], -p[1], p[2]]).collect();
        let cs = CurveSamples::new(Ambient::Plane, true, mirrored).unwrap();
        let m = resample_arclength(&cs, 64).unwrap();
        assert_eq!(rotation_number(&m).unwrap(), -1);
    }

    #[test]
    fn planar_curve_in_space_has_zero_writhe() {
        // circle embedded in E³
        let pts: Vec<[f64; 3]> = (0..64)
            .map(|j| {
                let t = std::f64::consts::TAU * j as f64 / 64.0;
                [t.cos(), t.sin(), 0.0]
            })
            .collect();
        let c = CurveSamples::space(pts, true).unwrap();
        let a = resample_arclength(&c, 64).unwrap();
        let w = writhe(&a).unwrap();
        assert!(w.writhe.abs() < 1e-12, "planar writhe {}", w.writhe);
    }

    #[test]
    fn mirror_negates_writhe() {
        let a = arclength("torus_knot", &[], 256);
        let w1 = writhe(&a).unwrap().writhe;
        let mirrored: Vec<[f64; 3]> = a.points().iter().map(|p| [p[0], p[1], -p[2]]).collect();
        let cm = CurveSamples::space(mirrored, true).unwrap();
        let am = resample_arclength(&cm, 256).unwrap();
        let w2 = writhe(&am).unwrap().writhe;
        assert!((w1 + w2).abs() < 1e-6, "w1 = {w1}, w2 = {w2}");
    }

    #[test]
    fn trefoil_writhe_quadrature_is_second_order() {
        let w1 = writhe(&arclength("torus_knot", &[], 256)).unwrap().writhe;
        let w2 = writhe(&arclength("torus_knot", &[], 512)).unwrap().writhe;
        let w4 = writhe(&arclength("torus_knot", &[], 1024)).unwrap().writhe;
        let ratio = (w1 - w2).abs() / (w2 - w4).abs();
        assert!(ratio > 3.0 && ratio < 7.0, "convergence ratio {ratio}");
    }

    #[test]
    fn writhe_is_deterministic_across_thread_counts() {
        let a = arclength("torus_knot", &[], 200);
        let pool1 = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let pool4 = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let w1 = pool1.install(|| writhe(&a).unwrap().writhe);
        let w4 = pool4.install(|| writhe(&a).unwrap().writhe);
        assert_eq!(w1.to_bits(), w4.to_bits());
    }

    #[test]
    fn bending_energy_of_circle() {
        for r in [1.0, 2.0] {
            let a = arclength("circle", &[("radius", r)], 256);
            let d = frenet_data(&a, DerivativeScheme::Spectral).unwrap();
            let eb = euler_bernoulli(&d);
            let want = std::f64::consts::TAU / r;
            assert!((eb.raw - want).abs() < 1e-7, "∫κ² = {}, want {want}", eb.raw);
            assert!((eb.normalized - 1.0 / r).abs() < 1e-7);
        }
    }

    #[test]
    fn bending_energy_scales_inversely() {
        let a = arclength("ellipse", &[("a", 2.0), ("b", 1.0)], 256);
        let d = frenet_data(&a, DerivativeScheme::Spectral).unwrap();
        let e1 = euler_bernoulli(&d).raw;
        let scaled: Vec<[f64; 3]> =
            a.points().iter().map(|p| [3.0 * p[0], 3.0 * p[1], 0.0]).collect();
        let cs = CurveSamples::new(Ambient::Plane, true, scaled).unwrap();
        let a3 = resample_arclength(&cs, 256).unwrap();
        let d3 = frenet_data(&a3, DerivativeScheme::Spectral).unwrap();
        let e3 = euler_bernoulli(&d3).raw;
        assert!((e3 - e1 / 3.0).abs() < 1e-6 * e1, "{e3} vs {}", e1 / 3.0);
    }
}
