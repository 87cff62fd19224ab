//! `pcd`: density tests for spatial patterns based on proportional-edge
//! proximity catch digraphs.

mod commands;
mod doc;
mod input;
mod plot;
mod reference;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcd_density::geom2d::ProximityParam;

use crate::input::{parse_number, parse_r};

#[derive(Debug, Parser)]
#[command(name = "pcd", version, about = "Edge density tests for proximity catch digraphs")]
pub struct Cli {
    /// Master seed for every random stream.
    #[arg(long, global = true, env = "PCD_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Print a readable outline instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write two-column plot data (KDEs, frequencies, curves) into DIR.
    #[arg(long, global = true, value_name = "DIR")]
    pub emit_plot_data: Option<PathBuf>,
    /// Worker threads for Monte Carlo runs (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GeometryArgs {
    /// Support triangle as `x1,y1;x2,y2;x3,y3` (default: the equilateral
    /// triangle with vertices (0,0), (1,0), (1/2, sqrt3/2)).
    #[arg(long, conflicts_with = "markers")]
    pub triangle: Option<String>,
    /// Point file of markers; the data are then tested on their Delaunay
    /// triangulation.
    #[arg(long)]
    pub markers: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    And,
    Or,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    #[value(alias = "segregation")]
    Seg,
    #[value(alias = "association")]
    Assoc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PatternArg {
    Null,
    #[value(alias = "segregation")]
    Seg,
    #[value(alias = "association")]
    Assoc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    #[value(alias = "asymptotic")]
    Asym,
    #[value(alias = "monte-carlo")]
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    /// Null mean of the edge density.
    Mu,
    /// Null variance of the edge indicator.
    #[value(name = "var-h")]
    VarH,
    /// Null covariance of two edge indicators sharing a point.
    Nu,
    /// Asymptotic variance `4 nu` of `sqrt(n) rho`.
    #[value(name = "four-nu")]
    FourNu,
    /// Mean under the segregation or association alternative.
    #[value(name = "mu-alt")]
    MuAlt,
    /// Pitman asymptotic efficiency.
    Pae,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate points under the null or an alternative.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "null")]
        pattern: PatternArg,
        /// Pattern parameter, e.g. `sqrt3/8`.
        #[arg(long, value_parser = parse_number)]
        eps: Option<f64>,
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Also write the points to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Arc and edge densities of a point set.
    Density {
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        geometry: GeometryArgs,
        /// One or more values: decimals, `4/3`, `sqrt2`, `inf`.
        #[arg(long, value_parser = parse_r, value_delimiter = ',', required = true)]
        r: Vec<ProximityParam>,
        /// Fail unless the file holds exactly this many points.
        #[arg(long)]
        n: Option<usize>,
        /// Also report exact domination numbers (single triangle, n <= 16).
        #[arg(long)]
        domination: bool,
    },
    /// Exact asymptotic quantities.
    Asym {
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_parser = parse_r)]
        r: ProximityParam,
        #[arg(long, value_enum)]
        alt: Option<DirectionArg>,
        #[arg(long, value_parser = parse_number)]
        eps: Option<f64>,
    },
    /// Test a point set against complete spatial randomness.
    Test {
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        geometry: GeometryArgs,
        #[arg(long, value_parser = parse_r)]
        r: ProximityParam,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "asym")]
        critical: SourceArg,
        /// Null replicates for Monte Carlo critical values.
        #[arg(long, default_value_t = 1000)]
        n_mc: u64,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Empirical size and power over a grid of r.
    Power {
        #[arg(long, value_parser = parse_r, value_delimiter = ',', required = true)]
        r: Vec<ProximityParam>,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        n_mc: u64,
        /// Alternatives as `seg:EPS` or `assoc:EPS`; repeatable.
        #[arg(long = "alt", required = true)]
        alts: Vec<String>,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "mc")]
        critical: SourceArg,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Recompute a published power table (T1 to T4) next to its printed values.
    Reproduce {
        #[arg(long)]
        table: String,
        /// Override the table's replicate count, for quick looks.
        #[arg(long)]
        n_mc: Option<u64>,
    },
    /// Delaunay triangulation of a marker file.
    Delaunay {
        #[arg(long)]
        markers: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(doc) => {
            let text = if cli.pretty { doc.to_text() } else { doc.to_json() + "\n" };
            // a closed pipe (`pcd ... | head`) is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
