use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Dataset;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFormat {
    /// Comma-separated numbers with an optional header line.
    Csv,
    /// KEEL `.dat`: `@`-prefixed metadata lines followed by comma-separated rows.
    KeelDat,
}

impl TableFormat {
    /// `.dat` files are read as KEEL, anything else as CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("dat") => TableFormat::KeelDat,
            _ => TableFormat::Csv,
        }
    }
}

/// Reads a numeric table whose last column is the target.
pub fn load_table(path: impl AsRef<Path>, format: TableFormat) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut builder = csv::ReaderBuilder::new();
    builder
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All);
    if format == TableFormat::KeelDat {
        builder.comment(Some(b'@'));
    }
    let mut reader = builder.from_reader(file);

    let mut values = Vec::new();
    let mut width = None;
    let mut rows = 0usize;
    for (k, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::data(format!("{}: {e}", path.display())))?;
        let line = record.position().map_or(k as u64 + 1, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> =
            record.iter().map(|f| f.parse::<f64>()).collect();
        let parsed = match parsed {
            Ok(v) => v,
            // a non-numeric first row of a CSV is its header
            Err(_) if format == TableFormat::Csv && rows == 0 && width.is_none() => {
                width = Some(record.len());
                continue;
            }
            Err(_) => {
                return Err(Error::data(format!(
                    "{}: line {line}: non-numeric value",
                    path.display()
                )))
            }
        };
        let w = *width.get_or_insert(parsed.len());
        if parsed.len() != w || w < 2 {
            return Err(Error::data(format!(
                "{}: line {line}: expected {} columns, found {}",
                path.display(),
                w.max(2),
                parsed.len()
            )));
        }
        if let Some(bad) = parsed.iter().position(|v| !v.is_finite()) {
            return Err(Error::data(format!(
                "{}: line {line}: column {} is not finite",
                path.display(),
                bad + 1
            )));
        }
        values.extend(parsed);
        rows += 1;
    }

    let w = width.unwrap_or(0);
    if rows == 0 {
        return Err(Error::data(format!("{}: no data rows", path.display())));
    }
    let mut x = Vec::with_capacity(rows * (w - 1));
    let mut y = Vec::with_capacity(rows);
    for row in values.chunks_exact(w) {
        x.extend_from_slice(&row[..w - 1]);
        y.push(row[w - 1]);
    }
    let name = path
        .file_stem()
        .map_or_else(|| "table".to_string(), |s| s.to_string_lossy().into_owned());
    Dataset::new(name, Matrix::from_vec(rows, w - 1, x)?, y)
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `ds` as CSV with header `x1,…,xn,y` and 17 significant digits, so
/// that [`load_table`] reads back identical values.
pub fn write_csv(ds: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io = |e| Error::io(path, e);
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    let mut header: Vec<String> = (1..=ds.dim()).map(|j| format!("x{j}")).collect();
    header.push("y".into());
    writeln!(w, "{}", header.join(",")).map_err(io)?;
    for (row, y) in ds.x.row_iter().zip(&ds.y) {
        let mut line: Vec<String> = row.iter().map(|&v| fmt17(v)).collect();
        line.push(fmt17(*y));
        writeln!(w, "{}", line.join(",")).map_err(io)?;
    }
    w.flush().map_err(io)
}
