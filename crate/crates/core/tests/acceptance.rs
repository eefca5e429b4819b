//! Acceptance suite: one test per contract criterion, each printing a
//! PASS line with the measured numbers (run with `--nocapture` to see them).

use num_complex::Complex;
use std::time::Instant;

use subdirac::clifford::{
    mv_exp, selfcheck, so_algebra_to_clifford, spin_to_so, MatrixRep, MultiVector, SpinElement,
};
use subdirac::curve::{complex_curvature, euler_bernoulli, frenet_data};
use subdirac::dirac::{
    curve_dirac, index_diagnostics, intrinsic_surface_dirac, mean_curvature_potential,
    quadratic_identity, spectrum, surface_dirac, zero_mode_residual, Convention, CurveForm,
    SpectrumRequest,
};
use subdirac::mkdv::{
    conserved_quantities, isospectrality_check, suggested_dt, MkdvState, Stepper,
};
use subdirac::spectral::Sector;
use subdirac::surface::{gauss_bonnet, mean_curvature, willmore_area, SurfaceGenerator};

fn pass(criterion: u32, detail: &str) {
    println!("acceptance criterion {criterion}: PASS — {detail}");
}

fn curve_gen(shape: &str, params: &[(&str, f64)], n: usize) -> subdirac::ArclengthCurve {
    subdirac::curve::CurveGenerator {
        shape: shape.into(),
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        samples: n,
    }
    .build_arclength()
    .unwrap()
}

fn surf_gen(shape: &str, params: &[(&str, f64)], nu: usize, nv: usize) -> subdirac::ConformalGrid {
    SurfaceGenerator {
        shape: shape.into(),
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        nu,
        nv,
    }
    .build()
    .unwrap()
}

#[test]
fn criterion_01_clifford_kernel() {
    let start = Instant::now();
    for n in 1..=6u32 {
        let anti = selfcheck::suite_anticommutation(n, &|a, b| a.try_mul(b).unwrap());
        assert!(anti.passed, "anticommutation failed at n = {n}: {:?}", anti.detail);
    }
    let assoc = selfcheck::suite_associativity(6, 500, 0xacce_0001, &|a, b| {
        a.try_mul(b).unwrap()
    });
    assert!(assoc.passed, "associativity fuzz: {:?}", assoc.detail);
    assert_eq!(assoc.cases, 500);
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "runtime {elapsed:.2}s exceeds 10s");
    pass(1, &format!("exhaustive anticommutation n ≤ 6 and 500 exact rational triples in {elapsed:.2}s"));
}

#[test]
fn criterion_02_matrix_representation() {
    use rand::{Rng, SeedableRng};
    let mut worst_rel = 0.0f64;
    for n in 1..=8u32 {
        let rep = MatrixRep::<f64>::new(n).unwrap();
        rep.verify().unwrap(); // γ relations to 1e-12

        // multiplicativity on 100 random pairs
        let mut rng = rand::rngs::StdRng::seed_from_u64(0xacce_0002 + n as u64);
        for _ in 0..100 {
            let mut a = MultiVector::<f64>::zero(n);
            let mut b = MultiVector::<f64>::zero(n);
            for _ in 0..6 {
                a.add_term(
                    subdirac::clifford::Blade(rng.gen_range(0..(1u64 << n)) as u32),
                    rng.gen_range(-2.0..2.0),
                );
                b.add_term(
                    subdirac::clifford::Blade(rng.gen_range(0..(1u64 << n)) as u32),
                    rng.gen_range(-2.0..2.0),
                );
            }
            let lhs = rep.apply(&a.try_mul(&b).unwrap());
            let rhs = rep.apply(&a) * rep.apply(&b);
            let rel = (&lhs - &rhs).norm() / (1.0 + lhs.norm());
            assert!(rel < 1e-12, "rep(ab) ≠ rep(a)rep(b) at n = {n}: {rel:e}");
            worst_rel = worst_rel.max(rel);
        }

        // chiral (anti)commutation sign (-1)^{n-1}
        let gamma = rep.apply(&MultiVector::<f64>::chiral(n));
        let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
        for j in 1..=n {
            let ej = rep.gamma(j);
            let resid =
                (&gamma * ej - (ej * &gamma).map(|x| x * Complex::new(sign, 0.0))).norm();
            assert!(resid < 1e-12, "Γ sign at n = {n}, j = {j}");
        }
    }
    pass(2, &format!("γ relations and homomorphism to 1e-12 for n ≤ 8 (worst {worst_rel:.1e}), Γ signs match (-1)^(n-1)"));
}

#[test]
fn criterion_03_double_cover() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xacce_0003);
    let mut worst = 0.0f64;
    for n in [3usize, 4, 5] {
        for _ in 0..20 {
            let mut a = nalgebra::DMatrix::<f64>::zeros(n, n);
            let mut b = nalgebra::DMatrix::<f64>::zeros(n, n);
            for r in 0..n {
                for c in (r + 1)..n {
                    let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    a[(r, c)] = x;
                    a[(c, r)] = -x;
                    b[(r, c)] = y;
                    b[(c, r)] = -y;
                }
            }
            let g = SpinElement::new(mv_exp(&so_algebra_to_clifford(&a).unwrap())).unwrap();
            let h = SpinElement::new(mv_exp(&so_algebra_to_clifford(&b).unwrap())).unwrap();
            let gh = SpinElement::new(g.value() * h.value()).unwrap();
            let hom =
                (spin_to_so(&gh).unwrap().matrix() - spin_to_so(&g).unwrap().matrix() * spin_to_so(&h).unwrap().matrix()).norm();
            let minus = SpinElement::new(-g.value().clone()).unwrap();
            let cover = (spin_to_so(&minus).unwrap().matrix() - spin_to_so(&g).unwrap().matrix()).norm();
            assert!(hom < 1e-12, "τ(gh) ≠ τ(g)τ(h): {hom:e}");
            assert!(cover < 1e-12, "τ(-g) ≠ τ(g): {cover:e}");
            worst = worst.max(hom).max(cover);
        }
    }
    // rotor rotation by 2θ
    let theta = 0.8137f64;
    let rotor = SpinElement::rotor(4, 1, 2, theta);
    let m = spin_to_so(&rotor).unwrap();
    let (c2, s2) = ((2.0 * theta).cos(), (2.0 * theta).sin());
    let mut rot_err = 0.0f64;
    for r in 0..4 {
        for c in 0..4 {
            let want = match (r, c) {
                (0, 0) | (1, 1) => c2,
                (0, 1) => -s2,
                (1, 0) => s2,
                (2, 2) | (3, 3) => 1.0,
                _ => 0.0,
            };
            rot_err = rot_err.max((m.matrix()[(r, c)] - want).abs());
        }
    }
    assert!(rot_err < 1e-10, "rotor rotation error {rot_err:e}");
    pass(3, &format!("homomorphism/cover laws to 1e-12 (worst {worst:.1e}), rotor → rotation by 2θ to {rot_err:.1e}"));
}

#[test]
fn criterion_04_circle_spectra() {
    let start = Instant::now();
    let n = 128;
    let circle = curve_gen("circle", &[], n);
    let data = frenet_data(&circle, subdirac::curve::DerivativeScheme::Spectral).unwrap();
    let kc = complex_curvature(&data);

    // canonical, antiperiodic: i·D eigenvalues are integers, kernel dim 2
    let anti = curve_dirac(&kc, data.length, Sector::Antiperiodic, CurveForm::Canonical).unwrap();
    let spec_a = spectrum(&anti, SpectrumRequest::Full).unwrap();
    let eigs = spec_a.i_d_eigenvalues();
    let mut worst_int = 0.0f64;
    for e in &eigs {
        worst_int = worst_int.max((e - e.round()).abs());
    }
    assert!(worst_int < 1e-10, "antiperiodic spectrum integer deviation {worst_int:e}");
    assert_eq!(spec_a.kernel_dim, 2, "antiperiodic kernel dimension");

    // canonical, periodic: half-integers, no kernel
    let per = curve_dirac(&kc, data.length, Sector::Periodic, CurveForm::Canonical).unwrap();
    let spec_p = spectrum(&per, SpectrumRequest::Full).unwrap();
    let mut worst_half = 0.0f64;
    for e in &spec_p.i_d_eigenvalues() {
        worst_half = worst_half.max((e - e.round() - (e - e.round()).signum() * 0.5).abs().min((e.fract().abs() - 0.5).abs()));
        let frac = (e - e.floor() - 0.5).abs();
        assert!(frac < 1e-10, "periodic eigenvalue {e} not half-integer");
    }
    assert_eq!(spec_p.kernel_dim, 0, "periodic kernel dimension");

    // intro form, periodic: eigenvalues ½ ± m
    let intro = curve_dirac(&kc, data.length, Sector::Periodic, CurveForm::Intro).unwrap();
    let spec_i = spectrum(&intro, SpectrumRequest::Full).unwrap();
    for e in &spec_i.real_eigenvalues() {
        let shifted = e - 0.5;
        assert!((shifted - shifted.round()).abs() < 1e-10, "intro eigenvalue {e} not in ½+Z");
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "runtime {elapsed:.2}s exceeds 5s");
    pass(4, &format!("N=128 circle: integers (dev {worst_int:.1e}, kernel 2), half-integers (kernel 0), intro ½±m, in {elapsed:.2}s"));
}

#[test]
fn criterion_05_frenet_weierstrass_zero_mode() {
    // circle residual < 1e-10
    let circle = curve_gen("circle", &[], 128);
    let circle_resid = curve_zero_mode_residual(&circle);
    assert!(circle_resid < 1e-10, "circle residual {circle_resid:e}");

    // ellipse residual decreases at spectral rate under grid doubling
    let mut resids = Vec::new();
    for n in [32usize, 64, 128] {
        let e = curve_gen("ellipse", &[("a", 1.5), ("b", 1.0)], n);
        resids.push(curve_zero_mode_residual(&e));
    }
    let r1 = resids[0] / resids[1];
    let r2 = resids[1] / resids[2].max(1e-15);
    assert!(
        r1 > 16.0 && r2 > 16.0,
        "spectral rate: residuals {resids:?}, ratios {r1:.1} and {r2:.1}"
    );
    pass(5, &format!(
        "circle residual {circle_resid:.1e}; ellipse residuals {:?} (ratios {r1:.0}×, {r2:.0}× per doubling)",
        resids.iter().map(|r| format!("{r:.1e}")).collect::<Vec<_>>()
    ));
}

fn curve_zero_mode_residual(curve: &subdirac::ArclengthCurve) -> f64 {
    use subdirac::curve::{weierstrass_spinor_curve, DerivativeScheme};
    let data = frenet_data(curve, DerivativeScheme::Spectral).unwrap();
    let kc = complex_curvature(&data);
    let sp = weierstrass_spinor_curve(curve, DerivativeScheme::Spectral).unwrap();
    let op = curve_dirac(&kc, data.length, sp.sector, CurveForm::Canonical).unwrap();
    let psi: Vec<Complex<f64>> = sp.psi1.iter().chain(sp.psi2.iter()).copied().collect();
    zero_mode_residual(&op, &psi).unwrap()
}

#[test]
fn criterion_06_quadratic_identity() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xacce_0006);
    let n = 64;
    let l = std::f64::consts::TAU;
    let mut worst = 0.0f64;
    for _ in 0..5 {
        // random smooth periodic profile
        let (a1, a2, a3) = (
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.2..0.2),
        );
        let k: Vec<f64> = (0..n)
            .map(|i| {
                let s = l * i as f64 / n as f64;
                1.0 + a1 * s.sin() + a2 * (2.0 * s).cos() + a3 * (3.0 * s).sin()
            })
            .collect();
        let rep = quadratic_identity(&k, l, Sector::Periodic).unwrap();
        assert!(
            rep.residual <= 1e-12 * rep.operator_norm_sq,
            "residual {:e} vs 1e-12·‖D‖² = {:e}",
            rep.residual,
            1e-12 * rep.operator_norm_sq
        );
        worst = worst.max(rep.residual / rep.operator_norm_sq);
    }
    pass(6, &format!("½tr₂(D²) = V²−P² exactly: worst residual/‖D‖² = {worst:.1e} (≤ 1e-12)"));
}

#[test]
fn criterion_07_surface_zero_modes_and_splitting() {
    // cylinder, calibrated convention, sector (antiperiodic, periodic)
    let g = surf_gen("cylinder", &[], 16, 16);
    let field = mean_curvature(&g).unwrap();
    let sectors = [Sector::Antiperiodic, Sector::Periodic];
    let op = surface_dirac(&field, g.lu, g.lv, sectors, Convention::Thm44Sigma3).unwrap();
    let spec = spectrum(&op, SpectrumRequest::Full).unwrap();
    assert!(
        spec.singular_values[0] < 1e-8,
        "cylinder smallest singular value {:e}",
        spec.singular_values[0]
    );
    assert_eq!(spec.kernel_dim, 2, "cylinder kernel dimension");

    // the explicit square-root-of-∂Z spinor is a zero mode
    let sp = subdirac::surface::weierstrass_spinor_surface(&g).unwrap();
    assert_eq!(sp.sectors, sectors);
    let psi: Vec<Complex<f64>> = sp.psi1.iter().chain(sp.psi2.iter()).copied().collect();
    let resid = zero_mode_residual(&op, &psi).unwrap();
    assert!(resid < 1e-8, "cylinder spinor residual {resid:e}");

    // splitting identity: full = intrinsic + potential, on all generators
    let mut worst_split = 0.0f64;
    for (shape, nu, nv, dim) in [
        ("cylinder", 16, 16, 3usize),
        ("torus_of_revolution", 16, 64, 3),
        ("clifford_torus", 16, 16, 4),
    ] {
        let g = surf_gen(shape, &[], nu, nv);
        let f = mean_curvature(&g).unwrap();
        let full = surface_dirac(&f, g.lu, g.lv, sectors, Convention::Thm44Sigma3).unwrap();
        let intr =
            intrinsic_surface_dirac(&f, g.lu, g.lv, sectors, Convention::Thm44Sigma3, dim)
                .unwrap();
        let pot =
            mean_curvature_potential(&f, g.lu, g.lv, sectors, Convention::Thm44Sigma3).unwrap();
        let resid = (full.matrix() - (intr.matrix() + pot.matrix())).norm();
        assert!(resid < 1e-10, "{shape}: splitting residual {resid:e}");
        worst_split = worst_split.max(resid);
    }
    pass(7, &format!(
        "cylinder kernel dim 2 (sv {:.1e}), spinor residual {resid:.1e}, splitting residual ≤ {worst_split:.1e} on all generators",
        spec.singular_values[0]
    ));
}

#[test]
fn criterion_08_functionals() {
    let want = 2.0 * std::f64::consts::PI.powi(2);

    let g = surf_gen("clifford_torus", &[], 16, 16);
    let f = mean_curvature(&g).unwrap();
    let wa = willmore_area(&g, &f);
    assert!((wa.area - want).abs() < 1e-3 * want, "Clifford torus area {}", wa.area);
    assert!((wa.willmore - want).abs() < 1e-3 * want, "Clifford torus Willmore {}", wa.willmore);

    let g2 = surf_gen("torus_of_revolution", &[("R", std::f64::consts::SQRT_2), ("r", 1.0)], 24, 64);
    let f2 = mean_curvature(&g2).unwrap();
    let wa2 = willmore_area(&g2, &f2);
    assert!(
        (wa2.willmore - want).abs() < 1e-3 * want,
        "torus of revolution Willmore {} vs {want}",
        wa2.willmore
    );

    // circles: ∫k² ds = 2π/R within 1e-6
    let mut worst_circle = 0.0f64;
    for r in [1.0, 2.5] {
        let c = curve_gen("circle", &[("radius", r)], 256);
        let d = frenet_data(&c, subdirac::curve::DerivativeScheme::Spectral).unwrap();
        let eb = euler_bernoulli(&d);
        let err = (eb.raw - std::f64::consts::TAU / r).abs();
        assert!(err < 1e-6, "circle R={r}: ∫k²ds error {err:e}");
        worst_circle = worst_circle.max(err);
    }

    // Gauss-Bonnet χ = 0 with residual < 1e-8 on tori
    let mut worst_chi = 0.0f64;
    for (shape, nu, nv) in
        [("cylinder", 16, 16), ("clifford_torus", 16, 16), ("torus_of_revolution", 16, 64)]
    {
        let g = surf_gen(shape, &[], nu, nv);
        let f = mean_curvature(&g).unwrap();
        let gb = gauss_bonnet(&g, &f).unwrap();
        assert_eq!(gb.chi, 0, "{shape}");
        assert!(gb.residual < 1e-8, "{shape}: χ residual {:e}", gb.residual);
        worst_chi = worst_chi.max(gb.residual);
    }
    pass(8, &format!(
        "Clifford torus 𝒜 = {:.6} and 𝒲 = {:.6} (2π² = {want:.6}), revolution 𝒲 = {:.6}, circle ∫k²ds error ≤ {worst_circle:.1e}, χ residual ≤ {worst_chi:.1e}",
        wa.area, wa.willmore, wa2.willmore
    ));
}

#[test]
fn criterion_09_topological_integers() {
    use subdirac::curve::{rotation_number, writhe};
    // rotation numbers, exact
    assert_eq!(rotation_number(&curve_gen("circle", &[], 128)).unwrap(), 1);
    assert_eq!(rotation_number(&curve_gen("figure_eight", &[], 256)).unwrap(), 0);
    assert_eq!(rotation_number(&curve_gen("double_circle", &[], 256)).unwrap(), 2);

    // planar writhe
    let pts: Vec<[f64; 3]> = (0..128)
        .map(|j| {
            let t = std::f64::consts::TAU * j as f64 / 128.0;
            [t.cos(), t.sin(), 0.0]
        })
        .collect();
    let planar = subdirac::curve::CurveSamples::space(pts, true).unwrap();
    let planar = subdirac::curve::resample_arclength(&planar, 128).unwrap();
    let wr0 = writhe(&planar).unwrap().writhe;
    assert!(wr0.abs() < 1e-8, "planar writhe {wr0:e}");

    // trefoil writhe against the 4x-resolution quadrature
    let coarse = writhe(&curve_gen("torus_knot", &[], 1024)).unwrap().writhe;
    let fine = writhe(&curve_gen("torus_knot", &[], 4096)).unwrap().writhe;
    let diff = (coarse - fine).abs();
    assert!(diff < 1e-3, "trefoil writhe {coarse} vs oracle {fine}: diff {diff:e}");

    // kernel-sector parity via the operator diagnostics
    for (shape, n, want_rot) in
        [("circle", 128, 1i64), ("figure_eight", 256, 0), ("double_circle", 256, 2)]
    {
        let diag = index_diagnostics(&curve_gen(shape, &[], n)).unwrap();
        assert_eq!(diag.rotation_number, want_rot, "{shape}");
        assert!(diag.parity_consistent, "{shape}: {diag:?}");
    }
    pass(9, &format!(
        "rotations (1, 0, 2) exact; planar writhe {wr0:.1e}; trefoil writhe {coarse:.5} vs 4× oracle {fine:.5} (diff {diff:.1e}); kernel parity consistent on all three"
    ));
}

#[test]
fn criterion_10_mkdv() {
    let start = Instant::now();

    // soliton translation
    let n = 1024;
    let l = 80.0;
    let alpha = 1.0f64;
    let s0 = MkdvState::soliton(n, l, alpha).unwrap();
    let stepper = Stepper::new(n, l);
    let dt = suggested_dt(l, n, 0.25);
    let t_final = 1.0 / (alpha * alpha);
    let s1 = stepper.run(&s0, t_final, dt).unwrap();
    let mut soliton_err = 0.0f64;
    for j in 0..n {
        let s = l * j as f64 / n as f64;
        let want = alpha / (alpha * (s - l / 2.0 - alpha * alpha * t_final)).cosh();
        soliton_err = soliton_err.max((s1.v[j] - want).abs());
    }
    assert!(soliton_err < 1e-6, "soliton sup error {soliton_err:e}");

    // conservation over T = 1 at N = 256
    let n2 = 256;
    let l2 = std::f64::consts::TAU;
    let c0 = MkdvState::cosine(n2, l2, 0.5, 0.3, 1).unwrap();
    let st2 = Stepper::new(n2, l2);
    let base = conserved_quantities(&c0);
    let evolved = st2.run(&c0, 1.0, 1e-3).unwrap();
    let after = conserved_quantities(&evolved);
    let drift_v = (after.int_v - base.int_v).abs() / base.int_v.abs();
    let drift_v2 = (after.int_v2 - base.int_v2).abs() / base.int_v2;
    assert!(drift_v < 1e-8 && drift_v2 < 1e-8, "conservation drift {drift_v:e}, {drift_v2:e}");

    // isospectrality: 10 lowest levels over T = 0.5
    let rep = isospectrality_check(&c0, 0.5, 5, 10, Sector::Antiperiodic, 1e-3).unwrap();
    assert!(rep.max_drift < 1e-4, "spectral drift {:e}", rep.max_drift);

    // RK4 order: the drift already sits at the machine floor (tangency of
    // the one-step error to the isospectral set), so the ×16-per-two-halvings
    // gain is certified on the solution sup-error against a refined run
    let reference = st2.run(&c0, 0.5, 2.5e-4 / 8.0).unwrap();
    let sup_err = |dt: f64| -> f64 {
        let s = st2.run(&c0, 0.5, dt).unwrap();
        s.v.iter().zip(&reference.v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    };
    let e0 = sup_err(4e-3);
    let e2 = sup_err(1e-3);
    let gain = e0 / e2;
    assert!(gain > 16.0, "RK4 gain under dt/2 twice: {gain}");

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "runtime {elapsed:.1}s exceeds 60s");
    pass(10, &format!(
        "soliton sup {soliton_err:.1e}; drifts ∫v {drift_v:.1e}, ∫v² {drift_v2:.1e}; spectral drift {:.1e} (floor); RK4 gain ×{gain:.0} per two halvings; {elapsed:.1}s",
        rep.max_drift
    ));
}
