//! Parsers for the textual inputs the CLI accepts: `key=value` config files
//! and comma-separated number lists.

use crate::error::{Error, Result};

/// Settings a config file may override. Command-line flags win over these.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverrides {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub budget: Option<usize>,
    pub n: Option<usize>,
    pub grid: Option<usize>,
    pub samples: Option<usize>,
    pub compare_tol: Option<f64>,
}

pub const CONFIG_KEYS: [&str; 7] = [
    "abs_tol",
    "rel_tol",
    "budget",
    "n",
    "grid",
    "samples",
    "compare_tol",
];

fn positive_real(key: &str, value: &str) -> Result<f64> {
    match value.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(Error::Parse(format!(
            "`{key}` needs a positive number, got `{value}`"
        ))),
    }
}

fn count(key: &str, value: &str) -> Result<usize> {
    match value.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::Parse(format!(
            "`{key}` needs a positive integer, got `{value}`"
        ))),
    }
}

/// Parses `key = value` lines. Blank lines and lines starting with `#` are
/// skipped; unknown keys are rejected; a repeated key keeps its last value.
pub fn parse_config(text: &str) -> Result<ConfigOverrides> {
    let mut out = ConfigOverrides::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse(format!(
                "config line {}: expected key=value, got `{line}`",
                lineno + 1
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "abs_tol" => out.abs_tol = Some(positive_real(key, value)?),
            "rel_tol" => out.rel_tol = Some(positive_real(key, value)?),
            "compare_tol" => out.compare_tol = Some(positive_real(key, value)?),
            "budget" => out.budget = Some(count(key, value)?),
            "n" => out.n = Some(count(key, value)?),
            "grid" => out.grid = Some(count(key, value)?),
            "samples" => out.samples = Some(count(key, value)?),
            _ => {
                return Err(Error::Parse(format!(
                    "config line {}: unknown key `{key}` (expected one of {})",
                    lineno + 1,
                    CONFIG_KEYS.join(", ")
                )))
            }
        }
    }
    Ok(out)
}

/// Parses `0.2,0.4, 1` into finite reals.
pub fn parse_number_list(text: &str) -> Result<Vec<f64>> {
    let values = text
        .split(',')
        .map(|item| {
            let item = item.trim();
            match item.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(v),
                _ => Err(Error::Parse(format!("`{item}` is not a finite number"))),
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let cfg = parse_config("# tolerances\nabs_tol = 1e-8\n\nrel_tol=1e-9\nbudget=5000\nn = 2000\n  grid=128\nsamples=10\ncompare_tol=0.01\nn=3000\n").unwrap();
        assert_eq!(cfg.abs_tol, Some(1e-8));
        assert_eq!(cfg.rel_tol, Some(1e-9));
        assert_eq!(cfg.budget, Some(5000));
        assert_eq!(cfg.n, Some(3000));
        assert_eq!(cfg.grid, Some(128));
        assert_eq!(cfg.samples, Some(10));
        assert_eq!(cfg.compare_tol, Some(0.01));
        assert_eq!(parse_config("").unwrap(), ConfigOverrides::default());
    }

    #[test]
    fn rejects_bad_config() {
        for bad in [
            "verbose=1",
            "abs_tol",
            "abs_tol=-1",
            "budget=1.5",
            "n=0",
            "rel_tol=nan",
            "=3",
        ] {
            assert!(parse_config(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn number_lists() {
        assert_eq!(
            parse_number_list("0.2, 0.4,1").unwrap(),
            vec![0.2, 0.4, 1.0]
        );
        assert_eq!(parse_number_list("-3").unwrap(), vec![-3.0]);
        for bad in ["", "1,,2", "a", "1,inf", "NaN"] {
            assert!(parse_number_list(bad).is_err(), "{bad}");
        }
    }
}
