use std::fs;
use std::path::Path;
use std::time::Instant;

use randnet::data::{load_table, make_synthetic, write_csv, Normalizer, TableFormat};
use randnet::experiments::{
    compare_methods, emit_fit_trace, export_report, fit_and_score, grid_search, repeated_trials, ConfigEcho, Method,
    Report, ReportFormat, TrialRecord, DEFAULT_ALPHA_MIN, DEFAULT_M,
};
use randnet::{Dataset, Error, GridSpec, Network, Result, TrialReport};
use serde::{Deserialize, Serialize};

use crate::{CompareArgs, FitArgs, GendataArgs, GridArgs, NormArgs, PlotArgs, TrialsArgs};

pub struct Ctx {
    pub seed: u64,
    pub quiet: bool,
    pub timing: bool,
}

impl Ctx {
    fn info(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            println!("{}", msg.as_ref());
        }
    }

    fn wall(&self, start: Instant) -> f64 {
        if self.timing {
            start.elapsed().as_secs_f64()
        } else {
            0.0
        }
    }
}

/// A fitted network with the rescaling its training data went through.
#[derive(Debug, Serialize, Deserialize)]
struct SavedModel {
    network: Network,
    normalizer: Option<Normalizer>,
}

/// Six significant digits, as a plain decimal.
fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

fn load(path: &Path) -> Result<Dataset> {
    load_table(path, TableFormat::from_path(path))
}

/// Loads `train` and `others`, fitting the requested rescaling on `train`.
fn load_sets(train: &Path, others: &[&Path], norm: &NormArgs) -> Result<(Dataset, Vec<Dataset>, Option<Normalizer>)> {
    let train = load(train)?;
    let others = others.iter().map(|p| load(p)).collect::<Result<Vec<_>>>()?;
    if norm.normalize_inputs.is_none() && norm.normalize_output.is_none() {
        return Ok((train, others, None));
    }
    let n = Normalizer::fit(&train, norm.normalize_inputs, norm.normalize_output);
    let others = others.iter().map(|d| n.apply(d)).collect();
    Ok((n.apply(&train), others, Some(n)))
}

fn write_text(path: &Path, text: String) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Data(format!("JSON encoding: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn check_dims(train: &Dataset, test: &Dataset) -> Result<()> {
    if train.dim() != test.dim() {
        return Err(Error::Usage(format!(
            "training data has {} inputs, test data has {}",
            train.dim(),
            test.dim()
        )));
    }
    Ok(())
}

pub fn gendata(ctx: &Ctx, a: &GendataArgs) -> Result<()> {
    let ds = make_synthetic(a.target, a.n_samples, a.sampling, a.noise, ctx.seed)?;
    write_csv(&ds, &a.out)?;
    ctx.info(format!("wrote {} ({} rows)", a.out.display(), ds.len()));
    Ok(())
}

pub fn fit(ctx: &Ctx, a: &FitArgs) -> Result<()> {
    a.net.config(1, ctx.seed).validate()?;
    let start = Instant::now();
    let (train, rest, normalizer) = load_sets(&a.train, &[&a.test], &a.norm)?;
    let test = &rest[0];
    check_dims(&train, test)?;
    let cfg = a.net.config(train.dim(), ctx.seed);
    let (network, rmse) = fit_and_score(&train, test, &cfg, a.method)?;

    println!("test_rmse={}", sig6(rmse));
    if let Some(path) = &a.report {
        let record = TrialRecord {
            trial: 0,
            seed: ctx.seed,
            rmse,
        };
        let report = TrialReport::from_trials(
            train.name.clone(),
            a.method,
            ConfigEcho::from_config(&cfg),
            vec![record],
            ctx.wall(start),
        )?;
        export_report(&report.into(), path, ReportFormat::Json)?;
        ctx.info(format!("wrote {}", path.display()));
    }
    if let Some(path) = &a.model {
        write_text(path, to_json(&SavedModel { network, normalizer })?)?;
        ctx.info(format!("wrote {}", path.display()));
    }
    Ok(())
}

pub fn gridsearch(ctx: &Ctx, a: &GridArgs) -> Result<()> {
    let spec = GridSpec {
        m_values: a.m_list.clone().unwrap_or_else(|| DEFAULT_M.to_vec()),
        alpha_min_values: a.alpha_min_list.clone().unwrap_or_else(|| DEFAULT_ALPHA_MIN.to_vec()),
        alpha_max_values: a.alpha_max_list.clone().unwrap_or_else(|| vec![90.0]),
        folds: a.folds,
        seed: ctx.seed,
        placement: a.placement,
        standard_bound: a.standard_bound,
    };
    spec.validate()?;
    let (train, _, _) = load_sets(&a.train, &[], &a.norm)?;
    let mut report = grid_search(&train, &spec, a.method)?;
    if !ctx.timing {
        report = report.without_timing();
    }

    let b = &report.best;
    println!(
        "m={} alpha_min={} alpha_max={} cv_rmse={}",
        b.m,
        b.alpha_min_deg,
        b.alpha_max_deg,
        sig6(b.rmse_mean)
    );
    if let Some(path) = &a.report {
        export_report(&report.into(), path, ReportFormat::from_path(path))?;
        ctx.info(format!("wrote {}", path.display()));
    }
    Ok(())
}

fn finish(report: TrialReport, ctx: &Ctx) -> TrialReport {
    if ctx.timing {
        report
    } else {
        report.without_timing()
    }
}

pub fn trials(ctx: &Ctx, a: &TrialsArgs) -> Result<()> {
    a.net.config(1, ctx.seed).validate()?;
    let (train, rest, _) = load_sets(&a.train, &[&a.test], &a.norm)?;
    let test = &rest[0];
    check_dims(&train, test)?;
    let cfg = a.net.config(train.dim(), ctx.seed);
    let report = finish(repeated_trials(&train, test, &cfg, a.method, a.trials)?, ctx);

    println!(
        "trials={} mean_rmse={} std_rmse={}",
        report.trials.len(),
        sig6(report.rmse_mean),
        sig6(report.rmse_std)
    );
    if let Some(path) = &a.report {
        export_report(&report.into(), path, ReportFormat::from_path(path))?;
        ctx.info(format!("wrote {}", path.display()));
    }
    Ok(())
}

pub fn compare(ctx: &Ctx, a: &CompareArgs) -> Result<()> {
    a.net.config(1, ctx.seed).validate()?;
    let (train, rest, _) = load_sets(&a.train, &[&a.test], &a.norm)?;
    let test = &rest[0];
    check_dims(&train, test)?;
    let proposed = a.net.config(train.dim(), ctx.seed);
    let mut standard = proposed.clone();
    standard.m = a.standard_m.unwrap_or(a.net.m);
    let mut cmp = compare_methods(
        &train,
        test,
        (&proposed, Method::Proposed),
        (&standard, Method::Standard),
        a.trials,
    )?;
    cmp.proposed = finish(cmp.proposed, ctx);
    cmp.standard = finish(cmp.standard, ctx);

    println!(
        "proposed_rmse={} standard_rmse={} ratio={}",
        sig6(cmp.proposed.rmse_mean),
        sig6(cmp.standard.rmse_mean),
        sig6(cmp.ratio)
    );
    if let Some(path) = &a.report {
        export_report(&Report::from(cmp), path, ReportFormat::from_path(path))?;
        ctx.info(format!("wrote {}", path.display()));
    }
    Ok(())
}

pub fn plotdata(ctx: &Ctx, a: &PlotArgs) -> Result<()> {
    let text = fs::read_to_string(&a.model).map_err(|source| Error::Io {
        path: a.model.clone(),
        source,
    })?;
    let model: SavedModel =
        serde_json::from_str(&text).map_err(|e| Error::Data(format!("{}: {e}", a.model.display())))?;
    let mut data = load(&a.data)?;
    if let Some(n) = &model.normalizer {
        data.x = n.apply_inputs(&data.x);
    }
    let trace = emit_fit_trace(&model.network, &data, a.grid_size)?;
    write_text(&a.out, to_json(&trace)?)?;
    ctx.info(format!("wrote {}", a.out.display()));
    Ok(())
}
