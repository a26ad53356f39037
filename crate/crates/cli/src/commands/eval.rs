use std::collections::HashSet;
use std::io::BufRead;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use dtembed::eval::{
    default_grid, eval_analogy, eval_similarity, eval_synonym, weight_grid, AnalogyDataset, AnalogyWeights, McqDataset,
    SimilarityDataset,
};
use dtembed::{EmbeddingMatrix, EvalOptions, EvalReport};
use serde_json::json;

use crate::report::{check_input, open, path_value, read_vectors, RunContext};
use crate::Common;

#[derive(Args, Debug)]
pub struct EvalArgs {
    vectors: PathBuf,
    /// Dataset files; each is scored independently.
    #[arg(required = true)]
    datasets: Vec<PathBuf>,
    /// Weight grid for analogies: `v1,v2,...` for both weights, or
    /// `w1 values;w2 values` [default: 0,0.2,0.4,0.6,0.8,1,2,4,6,8].
    #[arg(long)]
    grid: Option<String>,
    /// Unit-normalize vectors before analogy scoring.
    #[arg(long)]
    normalize: bool,
    /// Fail a dataset on any out-of-vocabulary word instead of skipping.
    #[arg(long)]
    strict: bool,
    /// One word per line; items with any other word are dropped first.
    #[arg(long)]
    nouns: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Similarity,
    Synonym,
    Analogy,
}

impl Task {
    fn command(self) -> &'static str {
        match self {
            Task::Similarity => "eval-sim",
            Task::Synonym => "eval-syn",
            Task::Analogy => "eval-analogy",
        }
    }
}

fn parse_values(raw: &str) -> Result<Vec<f64>> {
    raw.split(',')
        .map(|v| {
            let x: f64 = v.trim().parse().with_context(|| format!("invalid grid value {v:?}"))?;
            if !x.is_finite() {
                bail!("grid values must be finite");
            }
            Ok(x)
        })
        .collect()
}

pub fn parse_grid(raw: &str) -> Result<Vec<AnalogyWeights>> {
    let (w1, w2) = match raw.split_once(';') {
        Some((a, b)) => (parse_values(a)?, parse_values(b)?),
        None => {
            let v = parse_values(raw)?;
            (v.clone(), v)
        }
    };
    Ok(weight_grid(&w1, &w2))
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn read_word_list(path: &Path) -> Result<HashSet<String>> {
    let mut words = HashSet::new();
    for line in open(path)?.lines() {
        let line = line?;
        let w = line.trim();
        if !w.is_empty() {
            words.insert(w.to_owned());
        }
    }
    Ok(words)
}

fn evaluate(
    task: Task,
    vectors: &EmbeddingMatrix,
    path: &Path,
    grid: &[AnalogyWeights],
    nouns: Option<&HashSet<String>>,
    options: &EvalOptions,
) -> Result<EvalReport> {
    let name = dataset_name(path);
    let reader = open(path)?;
    let report = match task {
        Task::Similarity => {
            let mut ds = SimilarityDataset::read_tsv(reader, &name)?;
            if let Some(nouns) = nouns {
                ds.retain_words(nouns);
            }
            eval_similarity(vectors, &ds, options)?
        }
        Task::Synonym => {
            let mut ds = McqDataset::read_tsv(reader, &name)?;
            if let Some(nouns) = nouns {
                ds.retain_words(nouns);
            }
            eval_synonym(vectors, &ds, options)?
        }
        Task::Analogy => {
            let mut ds = AnalogyDataset::read_tsv(reader, &name)?;
            if let Some(nouns) = nouns {
                ds.retain_words(nouns);
            }
            eval_analogy(vectors, &ds, grid, options)?
        }
    };
    Ok(report)
}

pub fn run(args: EvalArgs, task: Task) -> Result<()> {
    let ctx = RunContext::new(&args.common)?;
    check_input(&args.vectors)?;
    let s = &ctx.settings;
    let options = EvalOptions {
        strict: s.flag(args.strict, "strict")?,
        normalize: s.flag(args.normalize, "normalize")?,
    };
    let grid = match s.optional(args.grid, "grid")? {
        Some(raw) => parse_grid(&raw)?,
        None => default_grid(),
    };
    if grid.is_empty() {
        bail!("analogy weight grid is empty");
    }
    let nouns_path: Option<PathBuf> = s.optional(args.nouns, "nouns")?;
    let nouns = nouns_path.as_deref().map(read_word_list).transpose()?;

    let vectors = read_vectors(&args.vectors)?;
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for path in &args.datasets {
        match evaluate(task, &vectors, path, &grid, nouns.as_ref(), &options) {
            Ok(report) => reports.push(report),
            Err(err) => failures.push(json!({
                "dataset": path_value(path),
                "error": format!("{err:#}"),
            })),
        }
    }

    let mut config = json!({
        "vectors": path_value(&args.vectors),
        "datasets": args.datasets.iter().map(|p| path_value(p)).collect::<Vec<_>>(),
        "strict": options.strict,
        "nouns": nouns_path.as_deref().map(path_value),
    });
    if task == Task::Analogy {
        config["normalize"] = json!(options.normalize);
        config["grid"] = json!(grid);
    }
    ctx.emit(
        task.command(),
        config,
        json!({
            "task": task.command(),
            "vocab_size": vectors.len(),
            "reports": reports,
            "failures": failures,
        }),
    )
}
