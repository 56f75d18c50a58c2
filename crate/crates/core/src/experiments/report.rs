use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Comparison, GridCell, GridReport, TrialRecord, TrialReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    /// One row per grid cell or trial, preceded by a `# {json}` line holding
    /// the remaining report fields.
    Csv,
}

impl ReportFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => ReportFormat::Csv,
            _ => ReportFormat::Json,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Comparison(Comparison),
    Grid(GridReport),
    Trials(TrialReport),
}

impl From<GridReport> for Report {
    fn from(r: GridReport) -> Self {
        Report::Grid(r)
    }
}

impl From<TrialReport> for Report {
    fn from(r: TrialReport) -> Self {
        Report::Trials(r)
    }
}

impl From<Comparison> for Report {
    fn from(r: Comparison) -> Self {
        Report::Comparison(r)
    }
}

const GRID_HEADER: &str = "m,alpha_min_deg,alpha_max_deg,rmse_mean,fold_rmses";
const TRIAL_HEADER: &str = "trial,seed,rmse";

fn json_err(e: serde_json::Error) -> Error {
    Error::data(format!("report JSON: {e}"))
}

fn join(v: &[f64]) -> String {
    v.iter().map(f64::to_string).collect::<Vec<_>>().join(";")
}

pub fn export_report(report: &Report, path: impl AsRef<Path>, format: ReportFormat) -> Result<()> {
    let path = path.as_ref();
    if let Report::Trials(t) = report {
        if t.trials.is_empty() {
            return Err(Error::usage("cannot export a report with no trials"));
        }
    }
    let text = match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(json_err)?;
            s.push('\n');
            s
        }
        ReportFormat::Csv => to_csv(report)?,
    };
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn to_csv(report: &Report) -> Result<String> {
    let mut meta = serde_json::to_value(report).map_err(json_err)?;
    let obj = meta.as_object_mut().expect("reports serialize as objects");
    let mut out = String::new();
    match report {
        Report::Grid(g) => {
            obj.remove("cells");
            out.push_str(&format!("# {meta}\n{GRID_HEADER}\n"));
            for c in &g.cells {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.m,
                    c.alpha_min_deg,
                    c.alpha_max_deg,
                    c.rmse_mean,
                    join(&c.fold_rmses)
                ));
            }
        }
        Report::Trials(t) => {
            obj.remove("trials");
            out.push_str(&format!("# {meta}\n{TRIAL_HEADER}\n"));
            for r in &t.trials {
                out.push_str(&format!("{},{},{}\n", r.trial, r.seed, r.rmse));
            }
        }
        Report::Comparison(_) => {
            return Err(Error::Unsupported("comparison reports are JSON only".into()));
        }
    }
    Ok(out)
}

pub fn import_report(path: impl AsRef<Path>, format: ReportFormat) -> Result<Report> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    match format {
        ReportFormat::Json => serde_json::from_str(&text).map_err(json_err),
        ReportFormat::Csv => from_csv(&text),
    }
}

fn parse<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::data(format!("report line {line}: cannot parse `{s}`")))
}

fn from_csv(text: &str) -> Result<Report> {
    let mut lines = text.lines().enumerate();
    let meta_line = lines
        .next()
        .and_then(|(_, l)| l.strip_prefix("# "))
        .ok_or_else(|| Error::data("report CSV lacks its metadata line"))?;
    let mut meta: Value = serde_json::from_str(meta_line).map_err(json_err)?;
    let header = lines.next().map(|(_, l)| l).unwrap_or_default();
    let rows: Vec<(usize, Vec<&str>)> = lines
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.split(',').collect()))
        .collect();
    let obj = meta
        .as_object_mut()
        .ok_or_else(|| Error::data("report metadata is not an object"))?;

    match header {
        GRID_HEADER => {
            let mut cells = Vec::with_capacity(rows.len());
            for (line, f) in rows {
                if f.len() != 5 {
                    return Err(Error::data(format!("report line {line}: expected 5 fields")));
                }
                let fold_rmses = f[4]
                    .split(';')
                    .filter(|s| !s.is_empty())
                    .map(|s| parse(s, line))
                    .collect::<Result<Vec<f64>>>()?;
                cells.push(GridCell {
                    m: parse(f[0], line)?,
                    alpha_min_deg: parse(f[1], line)?,
                    alpha_max_deg: parse(f[2], line)?,
                    rmse_mean: parse(f[3], line)?,
                    fold_rmses,
                });
            }
            obj.insert("cells".into(), serde_json::to_value(cells).map_err(json_err)?);
            Ok(Report::Grid(serde_json::from_value(meta).map_err(json_err)?))
        }
        TRIAL_HEADER => {
            let mut trials = Vec::with_capacity(rows.len());
            for (line, f) in rows {
                if f.len() != 3 {
                    return Err(Error::data(format!("report line {line}: expected 3 fields")));
                }
                trials.push(TrialRecord {
                    trial: parse(f[0], line)?,
                    seed: parse(f[1], line)?,
                    rmse: parse(f[2], line)?,
                });
            }
            obj.insert("trials".into(), serde_json::to_value(trials).map_err(json_err)?);
            Ok(Report::Trials(serde_json::from_value(meta).map_err(json_err)?))
        }
        other => Err(Error::data(format!("unrecognized report CSV header `{other}`"))),
    }
}
