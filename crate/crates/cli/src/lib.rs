//! Batch driver: runs verification suites over a `(q, m)` grid and emits
//! JSON or CSV reports.

pub mod config;
pub mod report;
pub mod suites;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

pub use config::{ConfigError, InvalidPair, RunConfig, Suite};
pub use report::{render, render_csv, render_json, Format, Record};

/// Environment variable naming the default directory for report files.
pub const OUT_DIR_ENV: &str = "CURVESYM_OUT_DIR";

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

#[derive(Debug)]
pub struct RunOutcome {
    pub records: Vec<Record>,
    pub invalid: Vec<InvalidPair>,
}

impl RunOutcome {
    pub fn all_match(&self) -> bool {
        self.records.iter().all(|r| r.matched)
    }

    pub fn exit_code(&self) -> u8 {
        if self.all_match() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }
}

/// Runs every selected suite on every valid grid point. Grid points run on
/// the rayon pool; records come back in `(q, m, n)` order regardless.
pub fn run(config: &RunConfig) -> Result<RunOutcome, ConfigError> {
    config.validate()?;
    let (grid, invalid) = config.grid();
    let suites = config.selected_suites();
    let per_point: Vec<Vec<Record>> = grid
        .par_iter()
        .map(|params| {
            let curve = curvesym_core::make_curve(params.q(), params.m())
                .expect("grid contains only valid parameters");
            suites
                .iter()
                .flat_map(|&s| suites::run_suite(&curve, s, config))
                .collect()
        })
        .collect();
    let mut records: Vec<Record> = per_point.into_iter().flatten().collect();
    // Stable: per-curve records (no n) first, then by n in suite order.
    records.sort_by_key(|r| (r.q, r.m, r.n));
    Ok(RunOutcome { records, invalid })
}

#[derive(Debug, Parser)]
#[command(
    name = "curvesym",
    version,
    about = "Verify symbolic-power invariants of monomial space curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the selected suites (default: all) and report every check.
    Verify(GridArgs),
    /// Initial degrees, Waldschmidt constant, rho_n and the containments.
    Invariants(GridArgs),
    /// Regularity closed forms and the plane-reduction lemmas.
    Regularity(GridArgs),
    /// Like `verify`, defaulting to CSV and writing a report file when an
    /// output directory is configured.
    Report(GridArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Comma-separated values of q.
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<u32>,
    /// Comma-separated values of m.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<u32>,
    #[arg(long, default_value_t = 6)]
    pub n_max: u32,
    /// Comma-separated suites; defaults depend on the subcommand.
    #[arg(long, value_delimiter = ',', value_enum)]
    pub suites: Vec<Suite>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Include the saturation cross-check when running `all`.
    #[arg(long)]
    pub oracle: bool,
    /// Largest r tried when scanning for rho_n.
    #[arg(long, default_value_t = 64)]
    pub rho_cap: u32,
    /// Output file, or directory for `report-<command>.<ext>`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Default output directory when --out is absent.
    #[arg(long, env = OUT_DIR_ENV, hide_env_values = true)]
    pub out_dir: Option<PathBuf>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify(_) => "verify",
            Command::Invariants(_) => "invariants",
            Command::Regularity(_) => "regularity",
            Command::Report(_) => "report",
        }
    }

    pub fn args(&self) -> &GridArgs {
        match self {
            Command::Verify(a)
            | Command::Invariants(a)
            | Command::Regularity(a)
            | Command::Report(a) => a,
        }
    }

    fn default_suites(&self) -> Vec<Suite> {
        match self {
            Command::Verify(_) | Command::Report(_) => vec![Suite::All],
            Command::Invariants(_) => vec![
                Suite::AlphaGamma,
                Suite::Rho,
                Suite::Hh,
                Suite::Chudnovsky,
                Suite::Bh,
            ],
            Command::Regularity(_) => vec![Suite::Regularity, Suite::Section5],
        }
    }

    pub fn config(&self) -> RunConfig {
        let a = self.args();
        let suites = if a.suites.is_empty() {
            self.default_suites()
        } else {
            a.suites.clone()
        };
        let default_format = match self {
            Command::Report(_) => Format::Csv,
            _ => Format::Json,
        };
        RunConfig {
            q_list: a.q.clone(),
            m_list: a.m.clone(),
            n_max: a.n_max,
            suites: suites.into_iter().collect(),
            format: a.format.unwrap_or(default_format),
            oracle: a.oracle,
            rho_cap: a.rho_cap,
        }
    }

    /// Where to write the report, or `None` for stdout.
    pub fn destination(&self, format: Format) -> Option<PathBuf> {
        let a = self.args();
        let file = format!("report-{}.{}", self.name(), format.extension());
        match (&a.out, &a.out_dir) {
            (Some(p), _) if p.is_dir() => Some(p.join(file)),
            (Some(p), _) => Some(p.clone()),
            (None, Some(dir)) => Some(dir.join(file)),
            (None, None) => None,
        }
    }
}

/// Writes `text` to `dest`, creating parent directories.
pub fn write_report(dest: &Path, text: &str) -> std::io::Result<()> {
    if let Some(parent) = dest.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(dest, text)
}
