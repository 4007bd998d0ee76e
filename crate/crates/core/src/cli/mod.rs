//! Command-line front end: the condition-number table, the 1D benchmark profiles and metrics,
//! and a 2D extension demo. Every command produces an [`Artifact`].

mod artifact;
mod commands;
mod parse;

pub use artifact::{format_float, Artifact, Cell, Format, Table};
pub use commands::{cmd_chunks, cmd_extend1d, cmd_extend2d, cmd_shrink_table, cmd_spectrum, cmd_table1};
pub use parse::{
    parse_real, BoxSpec, CurveSpec, Fn1Spec, Fn2Spec, GridSpec, IntRange, Poly2, RealRange, WindowArg,
};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] crate::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// Process exit status: 2 for bad arguments, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cnext", version, about = "Stable C^n function extension: tables, profiles and diagnostics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: FormatArg,

    /// Output file (standard output when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Leave out the generation-time header so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_header_timestamp: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Condition numbers T_n(1 + 2/a) over a grid of orders and reaches.
    Table1(Table1Args),
    /// Benchmark extension: G-profile, kappa, chunk count and F-profile spectrum.
    Extend1d(Extend1dArgs),
    /// F-profile samples and their one-sided magnitude spectrum.
    Spectrum(Extend1dArgs),
    /// Adaptive Chebyshev panels of the G-profile.
    Chunks(ChunksArgs),
    /// Extension across a closed curve on a grid, with a continuity report.
    Extend2d(Extend2dArgs),
    /// Tabulated inverse shrinking map checked against the root finder.
    ShrinkTable(ShrinkTableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Table1Args {
    /// Orders, `lo..hi[:step]`.
    #[arg(long, default_value = "2..9")]
    pub n: IntRange,
    /// Reaches, `lo..hi[:step]`.
    #[arg(long, default_value = "2..16:2")]
    pub a: RealRange,
}

#[derive(Debug, Clone, Args)]
pub struct Extend1dArgs {
    /// `f1`..`f5` or a polynomial in x such as `1-2x^3`.
    #[arg(long = "fn", default_value = "f1")]
    pub func: Fn1Spec,
    #[arg(long, default_value_t = 9)]
    pub n: usize,
    #[arg(long, default_value = "2", value_parser = parse_real)]
    pub a: f64,
    /// Shrinking parameter delta in (0, 1]; accepts fractions like 1/40.
    #[arg(long, value_parser = parse_real)]
    pub shrink_delta: Option<f64>,
    /// F-profile sample count for the spectrum.
    #[arg(long, default_value_t = 4000)]
    pub samples: usize,
    /// G-profile sample count on [-0.25, 0.5].
    #[arg(long, default_value_t = 751)]
    pub profile_points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ChunksArgs {
    #[arg(long = "fn", default_value = "f1")]
    pub func: Fn1Spec,
    #[arg(long, default_value_t = 9)]
    pub n: usize,
    #[arg(long, default_value = "2", value_parser = parse_real)]
    pub a: f64,
    #[arg(long, value_parser = parse_real)]
    pub shrink_delta: Option<f64>,
    /// Chebyshev coefficients per panel.
    #[arg(long, default_value_t = crate::diagnostics::CHUNK_COEFFS)]
    pub k: usize,
    /// Tail tolerance relative to max |G|.
    #[arg(long, default_value_t = crate::diagnostics::CHUNK_TOL, value_parser = parse_real)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct Extend2dArgs {
    /// `circle[:r]`, `ellipse[:a,b]`, `star[:R,eps,k]` or `samples:<file>`
    /// (one `x y` pair per line, a power-of-two count, uniform in parameter).
    #[arg(long, default_value = "circle")]
    pub curve: CurveSpec,
    /// `one`, `sin-exp` or a polynomial in x, y such as `x+2y`.
    #[arg(long = "fn", default_value = "one")]
    pub func: Fn2Spec,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value = "2", value_parser = parse_real)]
    pub a: f64,
    /// Grid size, `NXxNY`.
    #[arg(long, default_value = "64x64")]
    pub grid: GridSpec,
    /// Grid box, `lo,hi` or `x0,x1,y0,y1`; defaults to the curve's bounding box grown by half.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: Option<BoxSpec>,
    /// Tube half-width; defaults to 0.5 / max curvature.
    #[arg(long, value_parser = parse_real)]
    pub reach: Option<f64>,
    /// Roll-off window on the normal distance, `r0,r1`.
    #[arg(long)]
    pub window: Option<WindowArg>,
    /// Boundary points used by the continuity report.
    #[arg(long, default_value_t = 32)]
    pub probes: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ShrinkTableArgs {
    #[arg(long, default_value = "1/40", value_parser = parse_real)]
    pub shrink_delta: f64,
    #[arg(long, default_value_t = 9)]
    pub n: usize,
    /// Uniform accuracy of the table.
    #[arg(long, default_value = "1e-10", value_parser = parse_real)]
    pub tol: f64,
    /// Uniform check points on [0, 1].
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
}

impl Command {
    pub fn execute(&self) -> Result<Artifact, CliError> {
        match self {
            Self::Table1(a) => cmd_table1(a),
            Self::Extend1d(a) => cmd_extend1d(a),
            Self::Spectrum(a) => cmd_spectrum(a),
            Self::Chunks(a) => cmd_chunks(a),
            Self::Extend2d(a) => cmd_extend2d(a),
            Self::ShrinkTable(a) => cmd_shrink_table(a),
        }
    }
}

/// Runs a parsed command line and writes its artifact.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let artifact = cli.command.execute()?;
    let stamp = if cli.no_header_timestamp {
        None
    } else {
        Some(SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()))
    };
    let format = cli.format.into();
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            artifact.write_to(&mut w, format, stamp)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            artifact.write_to(&mut lock, format, stamp)?;
            lock.flush()?;
        }
    }
    Ok(())
}
