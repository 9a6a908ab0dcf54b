//! `hypmetric`: command-line access to distances, geodesics, isometry fitting,
//! the parallel construction, dilation rigidity and metric gauges.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hypmetric", version, about = "Real hyperbolic space and related metrics")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricTag {
    Hyperbolic,
    Euclidean,
    Sphere,
    Projective,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Base metric
    #[arg(long, global = true, value_enum, default_value_t = MetricTag::Hyperbolic)]
    pub metric: MetricTag,
    /// Expected dimension of every point (ambient dimension for sphere and projective points;
    /// `n` of the counterexample)
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    /// Tolerance for hypothesis checks; each subcommand has its own default
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for any random sampling
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample count: CSV rows for `geodesic`, held-out points for `fit`
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Print 17 significant digits instead of 15
    #[arg(long, global = true)]
    pub exact: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two points, e.g. `dist [1,0] [0,1]`
    Dist { x: String, y: String },
    /// CSV samples of the segment from A to B at equal arc length, with Poincaré-ball coordinates
    Geodesic { a: String, b: String },
    /// Extend a finite partial isometry read from a JSON file `{"pairs": [[src, tgt], ...]}`
    Fit { file: PathBuf },
    /// Lines through the origin that miss {sinh(t)·A + cosh(t)·B}
    Parallel {
        a: String,
        b: String,
        /// Comma-separated values of mu, each with |mu| > 1
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1.5,-1.5,2,-2,3,-3")]
        mus: Vec<f64>,
    },
    /// Residual table |cosh(c·arcosh t²) − cosh(c·arcosh t)²|
    Rigidity {
        #[arg(long = "c", value_delimiter = ',', default_value = "0.5,0.9,1,1.1,2")]
        c_values: Vec<f64>,
        #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true, default_value = "1.01,1.1,2,5,10")]
        t_grid: Vec<f64>,
    },
    /// Check a gauge (identity, sqrt, square, saturating, or a JSON table file of [x, y] knots)
    Omega {
        gauge: String,
        /// Grid points
        #[arg(long, default_value_t = 200)]
        grid: usize,
        /// Upper end of the sampled range for gauges on [0, ∞)
        #[arg(long, default_value_t = hypmetric::homogeneity::RAY_SAMPLING_CAP)]
        cap: f64,
    },
    /// The projective triples with equal distances that no isometry matches
    Counterexample,
    /// Euclidean radius sinh(r) of the hyperbolic sphere of radius r about the origin
    SphereRadius {
        #[arg(allow_hyphen_values = true)]
        r: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Dist { x, y } => commands::dist(g, x, y),
        Command::Geodesic { a, b } => commands::geodesic(g, a, b),
        Command::Fit { file } => commands::fit(g, file),
        Command::Parallel { a, b, mus } => commands::parallel(g, a, b, mus),
        Command::Rigidity { c_values, t_grid } => commands::rigidity(g, c_values, t_grid),
        Command::Omega { gauge, grid, cap } => commands::omega(g, gauge, *grid, *cap),
        Command::Counterexample => commands::counterexample(g),
        Command::SphereRadius { r } => commands::sphere_radius(g, *r),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
