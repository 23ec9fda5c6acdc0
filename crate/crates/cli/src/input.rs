use std::fs;
use std::path::{Path, PathBuf};

use fracroot_core::{Complex64, Polynomial};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Polynomial(#[from] fracroot_core::Error),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffFile {
    coeffs: Vec<f64>,
}

/// Reads a polynomial file: either a JSON object `{"coeffs": [c0, c1, ...]}`
/// or plain text with one coefficient per line, ascending by power, where
/// `#` starts a comment.
pub fn parse_polynomial_file(path: impl AsRef<Path>) -> Result<Polynomial, InputError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_polynomial_text(&text)
}

pub fn parse_polynomial_text(text: &str) -> Result<Polynomial, InputError> {
    if text.trim_start().starts_with('{') {
        let file: CoeffFile = serde_json::from_str(text).map_err(|e| InputError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        return Ok(Polynomial::new(file.coeffs)?);
    }

    let mut coeffs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let c = line.parse::<f64>().map_err(|e| InputError::Parse {
            line: i + 1,
            message: format!("'{line}' is not a number ({e})"),
        })?;
        coeffs.push(c);
    }
    if coeffs.is_empty() {
        return Err(InputError::Parse {
            line: text.lines().count().max(1),
            message: "no coefficients found".into(),
        });
    }
    Ok(Polynomial::new(coeffs)?)
}

/// Parses a comma-separated list of reals, e.g. `"-2,0,1"`.
pub fn parse_coeff_list(list: &str) -> Result<Vec<f64>, String> {
    list.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<f64>()
                .map_err(|_| format!("'{s}' is not a number"))
        })
        .collect()
}

/// Parses `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts = parse_coeff_list(s)?;
    match parts.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err(format!("expected 're' or 're,im', got '{s}'")),
    }
}
