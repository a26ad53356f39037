use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use dtembed::{DtGraph, EmbeddingMatrix};
use serde_json::{json, Map, Value};

use crate::settings::Settings;
use crate::Common;

pub const TOOL: &str = "dtembed";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Settings shared by every subcommand after merging flags and config file.
pub struct RunContext {
    pub settings: Settings,
    pub seed: u64,
    pub deterministic: bool,
    pub report: Option<PathBuf>,
}

impl RunContext {
    pub fn new(common: &Common) -> Result<Self> {
        let settings = Settings::load(common.config.as_deref())?;
        let seed = settings.get(common.seed, "seed", 0)?;
        let deterministic = settings.flag(common.deterministic, "deterministic")?;
        if let Some(report) = &common.report {
            check_output(report)?;
        }
        Ok(RunContext {
            settings,
            seed,
            deterministic,
            report: common.report.clone(),
        })
    }

    /// Wraps `body` in the standard envelope and writes it.
    pub fn emit(&self, command: &str, config: Value, body: Value) -> Result<()> {
        let mut doc = Map::new();
        doc.insert("tool".into(), json!(TOOL));
        doc.insert("version".into(), json!(VERSION));
        doc.insert("command".into(), json!(command));
        doc.insert("seed".into(), json!(self.seed));
        doc.insert("deterministic".into(), json!(self.deterministic));
        doc.insert("config".into(), config);
        if let Value::Object(body) = body {
            doc.extend(body);
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(doc))?;
        text.push('\n');
        match &self.report {
            Some(path) => fs::write(path, text).with_context(|| format!("writing report {}", path.display())),
            None => io::stdout().write_all(text.as_bytes()).context("writing report"),
        }
    }
}

pub fn check_input(path: &Path) -> Result<()> {
    if !path.is_file() {
        bail!("input file {} does not exist", path.display());
    }
    Ok(())
}

pub fn check_output(path: &Path) -> Result<()> {
    let parent = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = parent {
        if !dir.is_dir() {
            bail!("output directory {} does not exist", dir.display());
        }
    }
    Ok(())
}

pub fn open(path: &Path) -> Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(BufReader::new(file))
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

pub fn read_vectors(path: &Path) -> Result<EmbeddingMatrix> {
    Ok(EmbeddingMatrix::read_text(open(path)?, &path.display().to_string())?)
}

pub fn write_vectors(path: &Path, e: &EmbeddingMatrix) -> Result<()> {
    e.write_text(create(path)?)
        .with_context(|| format!("writing {}", path.display()))
}

pub fn read_graph(path: &Path) -> Result<DtGraph> {
    Ok(DtGraph::read_edge_list(open(path)?, &path.display().to_string())?)
}

pub fn path_value(path: &Path) -> Value {
    json!(path.display().to_string())
}
