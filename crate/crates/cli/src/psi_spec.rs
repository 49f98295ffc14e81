//! The ψ specifier mini-grammar: `janowski:D,E`, `alpha:A`, `power:ETA`,
//! `exp:A`, `sqrt:A`, `sigmoid`, `crescent`, `root:A,B` and
//! `custom:@file.csv` (rows `exponent,re,im`).

use std::path::Path;

use bohr_core::{PsiFamily, TruncatedSeries};
use num_complex::Complex64;

use crate::error::CliError;

fn numbers(flag: &'static str, body: &str, count: usize, spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(CliError::flag(flag, format!("`{spec}` expects {count} parameter(s)")));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::flag(flag, format!("`{p}` in `{spec}` is not a number")))
        })
        .collect()
}

pub fn parse_psi(flag: &'static str, spec: &str) -> Result<PsiFamily, CliError> {
    let spec = spec.trim();
    let (name, body) = spec.split_once(':').unwrap_or((spec, ""));
    let family = match name {
        "janowski" => {
            let v = numbers(flag, body, 2, spec)?;
            PsiFamily::Janowski { d: v[0], e: v[1] }
        }
        "alpha" => PsiFamily::OrderAlpha {
            alpha: numbers(flag, body, 1, spec)?[0],
        },
        "power" => PsiFamily::Power {
            eta: numbers(flag, body, 1, spec)?[0],
        },
        "exp" => PsiFamily::ExpAlpha {
            alpha: numbers(flag, body, 1, spec)?[0],
        },
        "sqrt" => PsiFamily::SqrtAlpha {
            alpha: numbers(flag, body, 1, spec)?[0],
        },
        "root" => {
            let v = numbers(flag, body, 2, spec)?;
            PsiFamily::RootAb { a: v[0], b: v[1] }
        }
        "sigmoid" | "crescent" if !body.is_empty() => {
            return Err(CliError::flag(flag, format!("`{name}` takes no parameters")));
        }
        "sigmoid" => PsiFamily::Sigmoid,
        "crescent" => PsiFamily::Crescent,
        "custom" => {
            let path = body
                .strip_prefix('@')
                .ok_or_else(|| CliError::flag(flag, "custom series are given as custom:@file.csv"))?;
            PsiFamily::Custom {
                series: read_series(Path::new(path))?,
            }
        }
        _ => return Err(CliError::flag(flag, format!("unknown family `{name}`"))),
    };
    family
        .validate()
        .map_err(|e| CliError::flag(flag, e.to_string()))?;
    Ok(family)
}

/// Reads `exponent,re,im` rows (an optional header is skipped); missing
/// exponents are zero.
pub fn read_series(path: &Path) -> Result<TruncatedSeries, CliError> {
    let file_err = |msg: String| CliError::File {
        path: path.display().to_string(),
        msg,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| file_err(e.to_string()))?;
    let mut terms = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row.map_err(|e| file_err(e.to_string()))?;
        if i == 0 && row.get(0).is_some_and(|f| f.parse::<usize>().is_err()) {
            continue;
        }
        if row.len() < 2 || row.len() > 3 {
            return Err(file_err(format!("line {}: expected exponent,re[,im]", i + 1)));
        }
        let bad = |what: &str| file_err(format!("line {}: bad {what}", i + 1));
        let m: usize = row[0].parse().map_err(|_| bad("exponent"))?;
        let re: f64 = row[1].parse().map_err(|_| bad("real part"))?;
        let im: f64 = if row.len() == 3 { row[2].parse().map_err(|_| bad("imaginary part"))? } else { 0.0 };
        terms.push((m, Complex64::new(re, im)));
    }
    let order = terms.iter().map(|t| t.0).max().ok_or_else(|| file_err("no coefficients".into()))?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    for (m, c) in terms {
        coeffs[m] += c;
    }
    Ok(TruncatedSeries::new(coeffs))
}
