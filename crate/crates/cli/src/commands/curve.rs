//! `curve analyze|spectrum|flow`: curvature reports, operator spectra per
//! sector, and the MKdV-driven curve family.

use crate::config;
use crate::exit::{CliError, CliResult};
use crate::output::{Csv, CsvCell, OutDir};
use serde::{Deserialize, Serialize};
use std::path::Path;
use subdirac::curve::{
    complex_curvature, euler_bernoulli, frenet_data, resample_arclength,
    weierstrass_spinor_curve, Ambient, CurveInput, DerivativeScheme,
};
use subdirac::dirac::{
    curve_dirac, index_diagnostics, spectrum, zero_mode_residual, CurveForm, SpectrumRequest,
};
use subdirac::mkdv::{flow_curve, suggested_dt};
use subdirac::ArclengthCurve;

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct CurveConfig {
    pub input: CurveInput,
    /// resample to this many uniform-arclength nodes (explicit inputs)
    #[serde(default)]
    pub resample: Option<usize>,
    /// "fd" or "spectral" derivatives for the curvature data
    #[serde(default = "default_scheme")]
    pub scheme: String,
    /// sectors for spectrum runs
    #[serde(default = "default_sectors")]
    pub sectors: Vec<String>,
    /// "canonical" or "intro"
    #[serde(default = "default_form")]
    pub form: String,
    #[serde(default)]
    pub flow: Option<FlowConfig>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct FlowConfig {
    #[serde(rename = "T")]
    pub t: f64,
    pub snapshots: usize,
    #[serde(default)]
    pub dt: Option<f64>,
}

fn default_scheme() -> String {
    "spectral".into()
}

fn default_sectors() -> Vec<String> {
    vec!["antiperiodic".into(), "periodic".into()]
}

fn default_form() -> String {
    "canonical".into()
}

fn build_curve(cfg: &CurveConfig) -> CliResult<ArclengthCurve> {
    match &cfg.input {
        CurveInput::Generator(g) if cfg.resample.is_none() => g
            .build_arclength()
            .map_err(|e| CliError::numerical(e.to_string())),
        input => {
            let samples = input.build().map_err(|e| CliError::usage(e.to_string()))?;
            let n = cfg.resample.unwrap_or_else(|| samples.len());
            resample_arclength(&samples, n).map_err(|e| CliError::numerical(e.to_string()))
        }
    }
}

fn scheme_of(cfg: &CurveConfig) -> CliResult<DerivativeScheme> {
    match cfg.scheme.as_str() {
        "fd" => Ok(DerivativeScheme::CenteredFd),
        "spectral" => Ok(DerivativeScheme::Spectral),
        other => Err(CliError::usage(format!("scheme must be fd|spectral, got `{other}`"))),
    }
}

pub fn run(mode: &str, cfg_path: Option<&Path>, sets: &[String], out: &Path) -> CliResult<()> {
    let cfg: CurveConfig = config::load(cfg_path, sets)?;
    let curve = build_curve(&cfg)?;
    let scheme = scheme_of(&cfg)?;
    let mut dir = OutDir::new(out)?;
    match mode {
        "analyze" => analyze(&cfg, &curve, scheme, &mut dir)?,
        "spectrum" => spectra(&cfg, &curve, scheme, &mut dir)?,
        "flow" => flow(&cfg, &curve, &mut dir)?,
        other => return Err(CliError::usage(format!("unknown curve mode `{other}`"))),
    }
    let canonical = config::canonical(&cfg);
    dir.finish(&format!("curve {mode}"), &canonical, "thm44_sigma3")?;
    Ok(())
}

fn analyze(
    _cfg: &CurveConfig,
    curve: &ArclengthCurve,
    scheme: DerivativeScheme,
    dir: &mut OutDir,
) -> CliResult<()> {
    let data = frenet_data(curve, scheme).map_err(|e| CliError::numerical(e.to_string()))?;
    let kc = complex_curvature(&data);
    let mut csv = Csv::new("s,kappa,tau,re_kappa_c,im_kappa_c");
    for i in 0..data.len() {
        let s = data.step * i as f64;
        csv.row(&[
            CsvCell::Float(s),
            CsvCell::Float(data.kappa[i]),
            CsvCell::Float(data.tau[i]),
            CsvCell::Float(kc.samples[i].re),
            CsvCell::Float(kc.samples[i].im),
        ]);
    }
    dir.write("curvature.csv", &csv.into_string())?;

    let eb = euler_bernoulli(&data);
    let mut report = serde_json::Map::new();
    report.insert("length".into(), curve.length().into());
    report.insert("euler_bernoulli".into(), eb.raw.into());
    report.insert("euler_bernoulli_normalized".into(), eb.normalized.into());
    report.insert("kappa_c_periodic".into(), kc.periodic.into());
    if curve.ambient == Ambient::Plane {
        let diag = index_diagnostics(curve).map_err(|e| CliError::numerical(e.to_string()))?;
        report.insert("rotation_number".into(), diag.rotation_number.into());
        report.insert("kernel_dim_periodic".into(), diag.kernel_dim_periodic.into());
        report
            .insert("kernel_dim_antiperiodic".into(), diag.kernel_dim_antiperiodic.into());
        report.insert("parity_consistent".into(), diag.parity_consistent.into());
    } else {
        let w = subdirac::curve::writhe(curve).map_err(|e| CliError::numerical(e.to_string()))?;
        report.insert("writhe".into(), w.writhe.into());
        report.insert("min_distance".into(), w.min_distance.into());
        report.insert("near_self_intersection".into(), w.near_self_intersection.into());
    }
    dir.write_json("functionals.json", &report)?;
    println!("curve analyze: {} samples over length {}", data.len(), curve.length());
    Ok(())
}

fn spectra(
    cfg: &CurveConfig,
    curve: &ArclengthCurve,
    scheme: DerivativeScheme,
    dir: &mut OutDir,
) -> CliResult<()> {
    let data = frenet_data(curve, scheme).map_err(|e| CliError::numerical(e.to_string()))?;
    let kc = complex_curvature(&data);
    let form = match cfg.form.as_str() {
        "canonical" => CurveForm::Canonical,
        "intro" => CurveForm::Intro,
        other => return Err(CliError::usage(format!("form must be canonical|intro, got `{other}`"))),
    };
    for sector_name in &cfg.sectors {
        let sector = super::parse_sector(sector_name)?;
        let op = curve_dirac(&kc, data.length, sector, form)
            .map_err(|e| CliError::numerical(e.to_string()))?;
        let spec = spectrum(&op, SpectrumRequest::Full)
            .map_err(|e| CliError::numerical(e.to_string()))?;
        let mut csv = Csv::new("index,re_lambda,im_lambda");
        for (i, (re, im)) in spec.eigenvalues.iter().enumerate() {
            csv.row(&[CsvCell::Int(i as i64), CsvCell::Float(*re), CsvCell::Float(*im)]);
        }
        dir.write(&format!("spectrum_{sector_name}.csv"), &csv.into_string())?;

        // zero-mode residual of the square-root spinor when the sector matches
        let mut residuals = serde_json::Map::new();
        residuals.insert("structure".into(), op.structure_residual.into());
        if curve.ambient == Ambient::Plane && form == CurveForm::Canonical {
            if let Ok(sp) = weierstrass_spinor_curve(curve, scheme) {
                if sp.sector == sector {
                    let psi: Vec<num_complex::Complex<f64>> =
                        sp.psi1.iter().chain(sp.psi2.iter()).copied().collect();
                    if let Ok(r) = zero_mode_residual(&op, &psi) {
                        residuals.insert("zero_mode".into(), r.into());
                    }
                }
            }
        }
        let report = serde_json::json!({
            "sector": sector_name,
            "kernel_dim": spec.kernel_dim,
            "smallest_sv": spec.singular_values.iter().take(6).collect::<Vec<_>>(),
            "residuals": residuals,
            "convention": "thm44_sigma3",
            "form": cfg.form,
            "solver": spec.solver,
        });
        dir.write_json(&format!("spectrum_{sector_name}.json"), &report)?;
        println!(
            "curve spectrum [{sector_name}]: kernel dim {}, smallest sv {:.3e}",
            spec.kernel_dim, spec.singular_values[0]
        );
    }
    Ok(())
}

fn flow(cfg: &CurveConfig, curve: &ArclengthCurve, dir: &mut OutDir) -> CliResult<()> {
    let fc = cfg
        .flow
        .as_ref()
        .ok_or_else(|| CliError::usage("curve flow needs a `flow` config section"))?;
    let n = curve.len();
    let dt = fc.dt.unwrap_or_else(|| suggested_dt(curve.length(), n, 0.25));
    let rep = flow_curve(curve, fc.t, fc.snapshots, dt)
        .map_err(|e| CliError::numerical(e.to_string()))?;

    let mut csv = Csv::new("t,bending_energy,closure_gap,rotation_number");
    for snap in &rep.snapshots {
        csv.row(&[
            CsvCell::Float(snap.time),
            CsvCell::Float(snap.bending_energy),
            CsvCell::Float(snap.closure_gap),
            CsvCell::Int(snap.rotation_number),
        ]);
    }
    dir.write("flow_series.csv", &csv.into_string())?;

    let family: Vec<serde_json::Value> = rep
        .snapshots
        .iter()
        .map(|snap| {
            serde_json::json!({
                "t": snap.time,
                "points": snap.curve.points().iter().map(|p| vec![p[0], p[1]]).collect::<Vec<_>>(),
            })
        })
        .collect();
    dir.write_json(
        "flow_curves.json",
        &serde_json::json!({ "closure_warning": rep.closure_warning, "snapshots": family }),
    )?;
    if rep.closure_warning {
        eprintln!("warning: closure gap exceeded 1e-2·L during the flow");
    }
    println!("curve flow: {} snapshots to t = {}", rep.snapshots.len() - 1, fc.t);
    Ok(())
}
