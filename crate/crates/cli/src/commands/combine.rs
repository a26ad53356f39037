use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use dtembed::combine::combine;
use dtembed::{CombineConfig, CombineMethod};
use serde_json::json;

use crate::report::{check_input, check_output, path_value, read_vectors, write_vectors, RunContext};
use crate::Common;

#[derive(Args, Debug)]
pub struct CombineArgs {
    /// Two or more vector files, concatenated in this order.
    #[arg(required = true, num_args = 2..)]
    vectors: Vec<PathBuf>,
    #[arg(short, long)]
    output: PathBuf,
    /// cc, pca or tsvd [default: cc].
    #[arg(long)]
    method: Option<String>,
    /// Output dimension for pca/tsvd [default: 300].
    #[arg(long)]
    target_dim: Option<usize>,
    /// Scale each input vector to unit length before concatenating.
    #[arg(long)]
    normalize_parts: bool,
    /// Correlation instead of covariance PCA.
    #[arg(long)]
    standardize: bool,
    #[command(flatten)]
    common: Common,
}

fn parse_method(raw: &str) -> Result<CombineMethod> {
    match raw {
        "cc" | "concat" => Ok(CombineMethod::Concat),
        "pca" => Ok(CombineMethod::Pca),
        "tsvd" => Ok(CombineMethod::Tsvd),
        other => bail!("unknown combination method {other:?} (expected cc, pca or tsvd)"),
    }
}

pub fn run(args: CombineArgs) -> Result<()> {
    let ctx = RunContext::new(&args.common)?;
    if args.vectors.len() < 2 {
        bail!("combine needs at least two vector files");
    }
    for p in &args.vectors {
        check_input(p)?;
    }
    check_output(&args.output)?;
    let s = &ctx.settings;
    let config = CombineConfig {
        method: parse_method(&s.get(args.method, "method", "cc".to_owned())?)?,
        target_dim: s.get(args.target_dim, "target-dim", 300)?,
        normalize_parts: s.flag(args.normalize_parts, "normalize-parts")?,
        standardize: s.flag(args.standardize, "standardize")?,
    };

    let inputs = args
        .vectors
        .iter()
        .map(|p| read_vectors(p))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<_> = inputs.iter().collect();
    let combined = combine(&refs, &config)?;
    write_vectors(&args.output, &combined.embedding)?;

    ctx.emit(
        "combine",
        json!({
            "vectors": args.vectors.iter().map(|p| path_value(p)).collect::<Vec<_>>(),
            "output": path_value(&args.output),
            "combine": config,
        }),
        json!({
            "input_dimensions": inputs.iter().map(|e| e.dim()).collect::<Vec<_>>(),
            "output_dimension": combined.embedding.dim(),
            "components": combined.components,
            "coverage": combined.coverage,
        }),
    )
}
