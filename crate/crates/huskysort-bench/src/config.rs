//! Flat `key=value` configuration files mirroring the CLI flags.
//!
//! ```text
//! # benchmark setup
//! algorithms = husky_intro,dual_pivot,adaptive_merge
//! coder      = ascii
//! sizes      = 1000,4000,16000
//! runs       = 5
//! seed       = 42
//! ```
//!
//! Values here are the *strings* of the corresponding flags; resolution into
//! typed configuration happens alongside the CLI flags so that a flag given
//! on the command line always wins over the file.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

/// One parsed config file; `None` means "key absent".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub algorithms: Option<Vec<String>>,
    pub coder: Option<String>,
    pub sizes: Option<Vec<usize>>,
    pub runs: Option<usize>,
    pub warmups: Option<usize>,
    pub seed: Option<u64>,
    pub cleanup: Option<String>,
    pub threshold: Option<usize>,
    pub normalize: Option<String>,
    pub corpus: Option<PathBuf>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
}

pub fn parse_config(text: &str) -> Result<FileConfig> {
    let mut cfg = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("line {}: expected key=value, got '{line}'", idx + 1);
        };
        let (key, value) = (key.trim(), value.trim());
        let parse_list = |v: &str| -> Vec<String> {
            v.split(',')
                .map(|s| s.trim().to_owned())
                .filter(|s| !s.is_empty())
                .collect()
        };
        match key {
            "algorithms" => cfg.algorithms = Some(parse_list(value)),
            "coder" => cfg.coder = Some(value.to_owned()),
            "sizes" => {
                let sizes = parse_list(value)
                    .iter()
                    .map(|s| {
                        s.parse::<usize>()
                            .with_context(|| format!("line {}: bad size '{s}'", idx + 1))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cfg.sizes = Some(sizes);
            }
            "runs" => cfg.runs = Some(parse_num(value, idx)?),
            "warmups" => cfg.warmups = Some(parse_num(value, idx)?),
            "seed" => cfg.seed = Some(parse_num(value, idx)?),
            "threshold" => cfg.threshold = Some(parse_num(value, idx)?),
            "cleanup" => cfg.cleanup = Some(value.to_owned()),
            "normalize" => cfg.normalize = Some(value.to_owned()),
            "corpus" => cfg.corpus = Some(PathBuf::from(value)),
            "format" => cfg.format = Some(value.to_owned()),
            "output" => cfg.output = Some(PathBuf::from(value)),
            _ => bail!("line {}: unknown key '{key}'", idx + 1),
        }
    }
    Ok(cfg)
}

fn parse_num<T: std::str::FromStr>(value: &str, idx: usize) -> Result<T>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    value
        .parse::<T>()
        .with_context(|| format!("line {}: bad number '{value}'", idx + 1))
}

pub fn load_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    parse_config(&text).with_context(|| format!("parsing config {}", path.display()))
}
