//! Matrix ingestion from CSV or JSON files.
//!
//! CSV: one row per line, comma-separated decimals; blank lines and lines
//! starting with `#` are skipped. JSON: `{"n": 3, "rows": [[...], ...]}`.

use std::fs;
use std::path::Path;

use genosc_core::Matrix;
use serde::Deserialize;

use crate::CliError;

pub fn parse_matrix(path: &Path) -> Result<Matrix, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
        || text.trim_start().starts_with('{');
    if is_json {
        parse_json(&text)
    } else {
        parse_csv(&text)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    n: usize,
    rows: Vec<Vec<f64>>,
}

pub fn parse_json(text: &str) -> Result<Matrix, CliError> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.n == 0 {
        return Err(CliError::Shape("\"n\" must be positive".into()));
    }
    if file.rows.len() != file.n {
        return Err(CliError::Shape(format!(
            "\"n\" is {} but {} rows were given",
            file.n,
            file.rows.len()
        )));
    }
    check_rows(&file.rows)?;
    Matrix::from_rows(&file.rows).map_err(|e| CliError::Shape(e.to_string()))
}

pub fn parse_csv(text: &str) -> Result<Matrix, CliError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut offset = 0;
        for field in line.split(',') {
            let lead = field.len() - field.trim_start().len();
            let value = field.trim();
            let column = offset + lead + 1;
            let x: f64 = value.parse().map_err(|_| CliError::Parse {
                line: lineno + 1,
                column,
                message: format!("{value:?} is not a decimal number"),
            })?;
            if !x.is_finite() {
                return Err(CliError::Parse {
                    line: lineno + 1,
                    column,
                    message: format!("{value:?} is not finite"),
                });
            }
            row.push(x);
            offset += field.len() + 1;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Shape("no matrix rows found".into()));
    }
    check_rows(&rows)?;
    Matrix::from_rows(&rows).map_err(|e| CliError::Shape(e.to_string()))
}

fn check_rows(rows: &[Vec<f64>]) -> Result<(), CliError> {
    let width = rows[0].len();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
        return Err(CliError::Shape(format!(
            "ragged input: row 1 has {width} entries, row {} has {}",
            i + 1,
            r.len()
        )));
    }
    if width != rows.len() {
        return Err(CliError::Shape(format!(
            "matrix is {}x{width}, not square",
            rows.len()
        )));
    }
    Ok(())
}
