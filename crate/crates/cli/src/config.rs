//! Optional `key=value` run configuration; command-line flags take precedence.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};

pub const KEYS: [&str; 7] = ["truncation", "emax", "b", "range", "prec", "output", "suite"];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub truncation: Option<usize>,
    pub e_max: Option<i64>,
    pub b_bound: Option<u64>,
    pub range: Option<i64>,
    pub precision: Option<u32>,
    pub output: Option<PathBuf>,
    pub suite: Option<String>,
}

fn positive<T: std::str::FromStr + PartialOrd + Default>(key: &str, value: &str) -> Result<T> {
    let v: T = value.parse().map_err(|_| anyhow!("{key}: expected a positive integer, got {value:?}"))?;
    if v <= T::default() {
        bail!("{key}: must be positive, got {value}");
    }
    Ok(v)
}

impl RunConfig {
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| anyhow!("line {}: expected key=value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "truncation" => cfg.truncation = Some(positive(key, value)?),
                "emax" => cfg.e_max = Some(positive(key, value)?),
                "b" => cfg.b_bound = Some(positive(key, value)?),
                "range" => cfg.range = Some(positive(key, value)?),
                "prec" => cfg.precision = Some(positive(key, value)?),
                "output" => cfg.output = Some(PathBuf::from(value)),
                "suite" => cfg.suite = Some(value.to_string()),
                _ => bail!("line {}: unknown key {key:?} (known: {})", i + 1, KEYS.join(", ")),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let c = RunConfig::parse("# run\ntruncation = 300\nemax=8\nb=2\n\nprec=512\nsuite=rp\noutput=out.json\n").unwrap();
        assert_eq!(c.truncation, Some(300));
        assert_eq!(c.e_max, Some(8));
        assert_eq!(c.b_bound, Some(2));
        assert_eq!(c.precision, Some(512));
        assert_eq!(c.suite.as_deref(), Some("rp"));
        assert_eq!(c.output, Some(PathBuf::from("out.json")));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunConfig::parse("colour=blue").is_err());
        assert!(RunConfig::parse("emax=0").is_err());
        assert!(RunConfig::parse("range=-3").is_err());
        assert!(RunConfig::parse("truncation").is_err());
    }
}
