//! `randnet`: data generation, fitting, grid search, repeated trials, method
//! comparison and figure data for randomized sigmoid networks.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use randnet::data::{Sampling, TargetFunction};
use randnet::experiments::Method;
use randnet::{Error, GenConfig, Placement};

#[derive(Debug, Parser)]
#[command(name = "randnet", version, about = "Randomized sigmoid networks with slope-angle hidden layers")]
struct Cli {
    /// Base seed for every random draw.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Worker threads for grid search and trials (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Print only results, no informational lines.
    #[arg(long, global = true)]
    quiet: bool,

    /// Store measured wall time in reports; without it the field is 0 so
    /// reruns give byte-identical files.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a synthetic dataset as CSV.
    Gendata(GendataArgs),
    /// Fit once and report the test RMSE.
    Fit(FitArgs),
    /// Cross-validated grid search over m and the angle bounds.
    Gridsearch(GridArgs),
    /// Repeated generate/fit/test runs.
    Trials(TrialsArgs),
    /// Repeated trials of the proposed and standard methods on the same data.
    Compare(CompareArgs),
    /// Curve or surface data for a saved model.
    Plotdata(PlotArgs),
}

#[derive(Debug, Args)]
struct GendataArgs {
    #[arg(long = "tf", value_parser = parse_from_str::<TargetFunction>)]
    target: TargetFunction,
    #[arg(long)]
    n_samples: usize,
    #[arg(long, default_value = "uniform", value_parser = parse_from_str::<Sampling>)]
    sampling: Sampling,
    /// Half-width of the uniform noise added to targets.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long)]
    out: PathBuf,
}

/// Rescaling fitted on the training set and applied to every other set.
#[derive(Debug, Clone, Args)]
struct NormArgs {
    /// Rescale each input column to LO,HI.
    #[arg(long, value_name = "LO,HI", value_parser = parse_range, allow_hyphen_values = true)]
    normalize_inputs: Option<(f64, f64)>,
    /// Rescale targets to LO,HI; RMSE is then reported on that scale.
    #[arg(long, value_name = "LO,HI", value_parser = parse_range, allow_hyphen_values = true)]
    normalize_output: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Args)]
struct NetArgs {
    /// Hidden nodes.
    #[arg(long, default_value_t = 100)]
    m: usize,
    /// Lower slope-angle bound, degrees.
    #[arg(long, default_value_t = 0.0)]
    alpha_min: f64,
    /// Upper slope-angle bound, degrees.
    #[arg(long, default_value_t = 90.0)]
    alpha_max: f64,
    #[arg(long, default_value = "hypercube", value_parser = parse_from_str::<Placement>)]
    placement: Placement,
    /// Weights and biases of the standard method are drawn from [-s, s].
    #[arg(long, default_value_t = 1.0)]
    standard_bound: f64,
}

impl NetArgs {
    fn config(&self, n: usize, seed: u64) -> GenConfig {
        GenConfig {
            m: self.m,
            n,
            alpha_min: self.alpha_min,
            alpha_max: self.alpha_max,
            placement: self.placement,
            rotation_bound: 1.0,
            standard_bound: self.standard_bound,
            seed,
        }
    }
}

#[derive(Debug, Args)]
struct FitArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    test: PathBuf,
    #[arg(long, default_value = "proposed", value_parser = parse_from_str::<Method>)]
    method: Method,
    #[command(flatten)]
    net: NetArgs,
    #[command(flatten)]
    norm: NormArgs,
    /// JSON report path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Save the fitted network (and its normalization) as JSON.
    #[arg(long)]
    model: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long, default_value = "proposed", value_parser = parse_from_str::<Method>)]
    method: Method,
    #[arg(long, value_delimiter = ',')]
    m_list: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    alpha_min_list: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    alpha_max_list: Option<Vec<f64>>,
    #[arg(long, default_value_t = 10)]
    folds: usize,
    #[arg(long, default_value = "hypercube", value_parser = parse_from_str::<Placement>)]
    placement: Placement,
    #[arg(long, default_value_t = 1.0)]
    standard_bound: f64,
    #[command(flatten)]
    norm: NormArgs,
    /// Report path; `.csv` gives one row per cell, anything else JSON.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TrialsArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    test: PathBuf,
    #[arg(long, default_value = "proposed", value_parser = parse_from_str::<Method>)]
    method: Method,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[command(flatten)]
    net: NetArgs,
    #[command(flatten)]
    norm: NormArgs,
    /// Report path; `.csv` gives one row per trial, anything else JSON.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    test: PathBuf,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Settings of the proposed method.
    #[command(flatten)]
    net: NetArgs,
    /// Hidden nodes of the standard method (default: same as --m).
    #[arg(long)]
    standard_m: Option<usize>,
    #[command(flatten)]
    norm: NormArgs,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlotArgs {
    /// Network saved by `fit --model`.
    #[arg(long)]
    model: PathBuf,
    /// Dataset whose input range the grid spans.
    #[arg(long)]
    data: PathBuf,
    /// Grid points per input dimension.
    #[arg(long, default_value_t = 200)]
    grid_size: usize,
    #[arg(long)]
    out: PathBuf,
}

fn parse_from_str<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| format!("expected LO,HI, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad number `{lo}`"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad number `{hi}`"))?;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(format!("range needs finite LO < HI, got {lo},{hi}"));
    }
    Ok((lo, hi))
}

/// 1 for environment and I/O failures, 2 for anything the caller can fix by
/// changing arguments.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } | Error::Data(_) => 1,
        Error::Usage(_) | Error::Config(_) | Error::Domain(_) | Error::Unsupported(_) | Error::NotFitted => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    }
    let ctx = commands::Ctx {
        seed: cli.seed,
        quiet: cli.quiet,
        timing: cli.timing,
    };
    let result = match &cli.command {
        Command::Gendata(a) => commands::gendata(&ctx, a),
        Command::Fit(a) => commands::fit(&ctx, a),
        Command::Gridsearch(a) => commands::gridsearch(&ctx, a),
        Command::Trials(a) => commands::trials(&ctx, a),
        Command::Compare(a) => commands::compare(&ctx, a),
        Command::Plotdata(a) => commands::plotdata(&ctx, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
