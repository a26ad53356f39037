//! Flat `key = value` config files.
//!
//! Keys are the long flag names without the leading dashes, e.g.
//! `min-overlap = 2`. Blank lines and lines starting with `#` are ignored.
//! A flag given on the command line always wins over the file.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

pub const KNOWN_KEYS: &[&str] = &[
    "seed",
    "deterministic",
    "top-k",
    "min-overlap",
    "lmi",
    "min-edge-weight",
    "method",
    "dim",
    "walks",
    "walk-length",
    "p",
    "q",
    "unweighted",
    "window",
    "negatives",
    "epochs",
    "learning-rate",
    "min-learning-rate",
    "line-order",
    "samples-per-edge",
    "target-dim",
    "normalize-parts",
    "standardize",
    "iterations",
    "alpha",
    "grid",
    "normalize",
    "strict",
    "nouns",
];

#[derive(Debug, Default, Clone)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Settings::default());
        };
        let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("{source}:{}: expected key = value", i + 1))?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                bail!("{source}:{}: unknown key {key:?}", i + 1);
            }
            values.insert(key.to_owned(), value.trim().to_owned());
        }
        Ok(Settings { values })
    }

    fn file_value<T>(&self, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.values
            .get(key)
            .map(|raw| {
                raw.parse::<T>()
                    .map_err(|e| anyhow!("config key {key}: invalid value {raw:?}: {e}"))
            })
            .transpose()
    }

    pub fn get<T>(&self, cli: Option<T>, key: &str, default: T) -> Result<T>
    where
        T: FromStr,
        T::Err: Display,
    {
        Ok(self.optional(cli, key)?.unwrap_or(default))
    }

    pub fn optional<T>(&self, cli: Option<T>, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        match cli {
            Some(v) => Ok(Some(v)),
            None => self.file_value(key),
        }
    }

    pub fn required<T>(&self, cli: Option<T>, key: &str) -> Result<T>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.optional(cli, key)?
            .ok_or_else(|| anyhow!("--{key} is required (flag or config file)"))
    }

    /// Boolean switch: set on the command line, or `true`/`false` in the file.
    pub fn flag(&self, cli: bool, key: &str) -> Result<bool> {
        if cli {
            return Ok(true);
        }
        Ok(self.file_value::<bool>(key)?.unwrap_or(false))
    }
}
