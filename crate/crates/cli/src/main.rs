//! Command-line front end: generators, analysis orchestration, report
//! emission, and the self-check suite.

mod commands;
mod config;
mod exit;
mod output;

use clap::{Parser, Subcommand};
use exit::{CliResult, Exit};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "subdirac",
    version,
    about = "Clifford algebra, discrete curve/surface geometry, submanifold Dirac operators and MKdV flow"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// JSON configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// dot-path config overrides, e.g. --set input.samples=128
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    /// boundary sector per periodic axis (repeatable: u first, then v)
    #[arg(long = "sector", value_name = "SECTOR")]
    sectors: Vec<String>,
}

impl Common {
    /// Folds --sector sugar into config overrides.
    fn all_sets(&self, curve_style: bool) -> Vec<String> {
        let mut sets = self.sets.clone();
        if curve_style {
            if !self.sectors.is_empty() {
                let quoted: Vec<String> =
                    self.sectors.iter().map(|s| format!("\"{s}\"")).collect();
                sets.push(format!("sectors=[{}]", quoted.join(",")));
            }
        } else if self.sectors.len() == 2 {
            sets.push(format!("sectors=[\"{}\",\"{}\"]", self.sectors[0], self.sectors[1]));
        } else if self.sectors.len() == 1 {
            sets.push(format!("sector=\"{}\"", self.sectors[0]));
        }
        sets
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the Clifford algebra self-check suites
    #[command(name = "clifford-selfcheck")]
    CliffordSelfcheck {
        #[command(flatten)]
        common: Common,
        /// algebra dimension (shorthand for --set dim=N)
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Closed-curve analyses: analyze | spectrum | flow
    Curve {
        mode: String,
        #[command(flatten)]
        common: Common,
    },
    /// Conformal-surface analyses: analyze | spectrum
    Surface {
        mode: String,
        #[command(flatten)]
        common: Common,
    },
    /// MKdV evolution with isospectrality tracking
    Mkdv {
        #[command(flatten)]
        common: Common,
    },
    /// Merge run manifests into one verified record
    Report {
        /// run directories containing run.json
        dirs: Vec<PathBuf>,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::CliffordSelfcheck { common, dim } => {
            let mut sets = common.all_sets(false);
            if let Some(d) = dim {
                sets.push(format!("dim={d}"));
            }
            commands::clifford::run(common.config.as_deref(), &sets, &common.out)
        }
        Command::Curve { mode, common } => {
            let sets = common.all_sets(true);
            commands::curve::run(&mode, common.config.as_deref(), &sets, &common.out)
        }
        Command::Surface { mode, common } => {
            let sets = common.all_sets(false);
            commands::surface::run(&mode, common.config.as_deref(), &sets, &common.out)
        }
        Command::Mkdv { common } => {
            let sets = common.all_sets(false);
            commands::mkdv::run(common.config.as_deref(), &sets, &common.out)
        }
        Command::Report { dirs, out } => commands::report::run(&dirs, &out),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's help/version on stdout with code 0
            if e.kind() == clap::error::ErrorKind::DisplayHelp
                || e.kind() == clap::error::ErrorKind::DisplayVersion
            {
                print!("{e}");
                std::process::exit(0);
            }
            eprintln!("{e}");
            std::process::exit(Exit::Usage as i32);
        }
    };

    // DWL_THREADS caps parallelism; computations run inside this pool
    let threads = std::env::var("DWL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1);
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        builder.build().expect("thread pool")
    };

    match pool.install(|| dispatch(cli)) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit as i32);
        }
    }
}
