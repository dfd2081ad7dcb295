//! Run configuration: flags > environment > config file > defaults.
//!
//! Flags and `HSUMSET_*` variables are merged by clap before this module sees
//! them, so a value present here as `Some` already won over the file.

use std::fs;
use std::path::{Path, PathBuf};

use hsumset_core::{EngineConfig, Error, Format, Result, SearchOptions};

/// Settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub threads: usize,
    pub naive_cap: u64,
    pub bitwindow_cap: u64,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let engine = EngineConfig::default();
        Self { threads: 0, naive_cap: engine.naive_cap, bitwindow_cap: engine.window_cap, format: None, output: None }
    }
}

/// Values given on the command line or through the environment.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub threads: Option<usize>,
    pub naive_cap: Option<u64>,
    pub bitwindow_cap: Option<u64>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

fn positive(key: &str, raw: &str) -> Result<u64> {
    match raw.trim().parse::<u64>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::Parse(format!("`{key}` must be a positive integer (got `{}`)", raw.trim()))),
    }
}

impl RunConfig {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_file_text(&mut self, text: &str, origin: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("{origin}:{}: expected `key = value`", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "threads" => self.threads = positive(key, value)? as usize,
                "naive_cap" => self.naive_cap = positive(key, value)?,
                "bitwindow_cap" => self.bitwindow_cap = positive(key, value)?,
                "format" => self.format = Some(value.parse()?),
                "output" => self.output = Some(PathBuf::from(value)),
                _ => return Err(Error::Parse(format!("{origin}:{}: unknown key `{key}`", n + 1))),
            }
        }
        Ok(())
    }

    pub fn resolve(file: Option<&Path>, over: Overrides) -> Result<Self> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read config file {}: {e}", path.display())))?;
            cfg.apply_file_text(&text, &path.display().to_string())?;
        }
        if let Some(t) = over.threads {
            if t == 0 {
                return Err(Error::Parse("`threads` must be a positive integer (got `0`)".into()));
            }
            cfg.threads = t;
        }
        if let Some(v) = over.naive_cap {
            cfg.naive_cap = positive("naive-cap", &v.to_string())?;
        }
        if let Some(v) = over.bitwindow_cap {
            cfg.bitwindow_cap = positive("bitwindow-cap", &v.to_string())?;
        }
        cfg.format = over.format.or(cfg.format);
        cfg.output = over.output.or(cfg.output);
        Ok(cfg)
    }

    pub fn engine(&self) -> EngineConfig {
        EngineConfig { naive_cap: self.naive_cap, window_cap: self.bitwindow_cap }
    }

    pub fn search(&self, prune: bool) -> SearchOptions {
        SearchOptions { engine: self.engine(), threads: self.threads, prune }
    }
}
