//! `surface analyze|spectrum`: conformal fields, functionals, and the
//! operator's singular values with zero-mode residuals.

use crate::config;
use crate::exit::{CliError, CliResult};
use crate::output::{Csv, CsvCell, OutDir};
use serde::{Deserialize, Serialize};
use std::path::Path;
use subdirac::dirac::{spectrum, surface_dirac, zero_mode_residual, Convention, SpectrumRequest};
use subdirac::surface::{
    gauss_bonnet, mean_curvature, weierstrass_spinor_surface, willmore_area, SurfaceAmbient,
    SurfaceInput,
};

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SurfaceConfig {
    pub input: SurfaceInput,
    /// sectors in (u, v)
    #[serde(default = "default_sectors")]
    pub sectors: [String; 2],
    #[serde(default = "default_convention")]
    pub convention: String,
    /// when set, only this many smallest singular values via inverse iteration
    #[serde(default)]
    pub smallest: Option<usize>,
}

fn default_sectors() -> [String; 2] {
    ["antiperiodic".into(), "periodic".into()]
}

fn default_convention() -> String {
    "thm44_sigma3".into()
}

pub fn run(mode: &str, cfg_path: Option<&Path>, sets: &[String], out: &Path) -> CliResult<()> {
    let cfg: SurfaceConfig = config::load(cfg_path, sets)?;
    let grid = cfg.input.build::<f64>().map_err(|e| CliError::usage(e.to_string()))?;
    let field = mean_curvature(&grid).map_err(|e| CliError::numerical(e.to_string()))?;
    let mut dir = OutDir::new(out)?;
    let convention = match cfg.convention.as_str() {
        "thm44_sigma3" => Convention::Thm44Sigma3,
        "thm44_printed" => Convention::Printed,
        other => {
            return Err(CliError::usage(format!(
                "convention must be thm44_sigma3|thm44_printed, got `{other}`"
            )))
        }
    };
    match mode {
        "analyze" => {
            let mut csv = if grid.ambient == SurfaceAmbient::E3 {
                Csv::new("u,v,rho,H")
            } else {
                Csv::new("u,v,rho,H1,H2")
            };
            for iv in 0..grid.nv {
                for iu in 0..grid.nu {
                    let i = grid.index(iu, iv);
                    let u = grid.lu * iu as f64 / grid.nu as f64;
                    let v = grid.lv * iv as f64 / grid.nv as f64;
                    match (&field.h_scalar, &field.h_components) {
                        (Some(h), _) => csv.row(&[
                            CsvCell::Float(u),
                            CsvCell::Float(v),
                            CsvCell::Float(field.rho[i]),
                            CsvCell::Float(h[i]),
                        ]),
                        (_, Some((h1, h2))) => csv.row(&[
                            CsvCell::Float(u),
                            CsvCell::Float(v),
                            CsvCell::Float(field.rho[i]),
                            CsvCell::Float(h1[i]),
                            CsvCell::Float(h2[i]),
                        ]),
                        _ => unreachable!("curvature field carries H data"),
                    }
                }
            }
            dir.write("fields.csv", &csv.into_string())?;
            let wa = willmore_area(&grid, &field);
            let gb = gauss_bonnet(&grid, &field)
                .map_err(|e| CliError::numerical(e.to_string()))?;
            dir.write_json(
                "functionals.json",
                &serde_json::json!({
                    "willmore": wa.willmore,
                    "area": wa.area,
                    "chi": gb.chi,
                    "chi_residual": gb.residual,
                    "conformality_residual": field.conformality_residual,
                }),
            )?;
            println!(
                "surface analyze: willmore {:.9}, area {:.9}, chi {}",
                wa.willmore, wa.area, gb.chi
            );
        }
        "spectrum" => {
            let sectors = [
                super::parse_sector(&cfg.sectors[0])?,
                super::parse_sector(&cfg.sectors[1])?,
            ];
            let op = surface_dirac(&field, grid.lu, grid.lv, sectors, convention)
                .map_err(|e| CliError::numerical(e.to_string()))?;
            let request = match cfg.smallest {
                Some(k) => SpectrumRequest::SmallestSingular(k),
                None => SpectrumRequest::Full,
            };
            let spec =
                spectrum(&op, request).map_err(|e| CliError::numerical(e.to_string()))?;
            let mut csv = Csv::new("index,singular_value");
            for (i, sv) in spec.singular_values.iter().enumerate() {
                csv.row(&[CsvCell::Int(i as i64), CsvCell::Float(*sv)]);
            }
            dir.write("singular_values.csv", &csv.into_string())?;

            let mut residuals = serde_json::Map::new();
            residuals.insert("structure".into(), op.structure_residual.into());
            if grid.ambient == SurfaceAmbient::E3 {
                if let Ok(sp) = weierstrass_spinor_surface(&grid) {
                    if sp.sectors == sectors {
                        let psi: Vec<num_complex::Complex<f64>> =
                            sp.psi1.iter().chain(sp.psi2.iter()).copied().collect();
                        if let Ok(r) = zero_mode_residual(&op, &psi) {
                            residuals.insert("zero_mode".into(), r.into());
                        }
                    }
                }
            }
            dir.write_json(
                "spectrum_report.json",
                &serde_json::json!({
                    "sector": format!("{},{}", cfg.sectors[0], cfg.sectors[1]),
                    "kernel_dim": spec.kernel_dim,
                    "smallest_sv": spec.singular_values.iter().take(8).collect::<Vec<_>>(),
                    "residuals": residuals,
                    "convention": convention.tag(),
                    "solver": spec.solver,
                }),
            )?;
            println!(
                "surface spectrum [{},{}]: kernel dim {}, smallest sv {:.3e}",
                cfg.sectors[0], cfg.sectors[1], spec.kernel_dim, spec.singular_values[0]
            );
        }
        other => return Err(CliError::usage(format!("unknown surface mode `{other}`"))),
    }
    let canonical = config::canonical(&cfg);
    dir.finish(&format!("surface {mode}"), &canonical, &cfg.convention)?;
    Ok(())
}
