use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use dtembed::combine::retrofit_traced;
use dtembed::RetrofitConfig;
use serde_json::json;

use crate::report::{check_input, check_output, path_value, read_graph, read_vectors, write_vectors, RunContext};
use crate::Common;

#[derive(Args, Debug)]
pub struct RetrofitArgs {
    vectors: PathBuf,
    /// Thesaurus edge list supplying the links.
    edges: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    /// Link words only through edges heavier than this [default: 500].
    #[arg(long)]
    min_edge_weight: Option<u32>,
    /// [default: 10]
    #[arg(long)]
    iterations: Option<usize>,
    /// Weight of the original vector [default: 1].
    #[arg(long)]
    alpha: Option<f64>,
    #[command(flatten)]
    common: Common,
}

pub fn run(args: RetrofitArgs) -> Result<()> {
    let ctx = RunContext::new(&args.common)?;
    check_input(&args.vectors)?;
    check_input(&args.edges)?;
    check_output(&args.output)?;
    let s = &ctx.settings;
    let defaults = RetrofitConfig::default();
    let config = RetrofitConfig {
        min_edge_weight: s.get(args.min_edge_weight, "min-edge-weight", defaults.min_edge_weight)?,
        iterations: s.get(args.iterations, "iterations", defaults.iterations)?,
        alpha: s.get(args.alpha, "alpha", defaults.alpha)?,
    };

    let vectors = read_vectors(&args.vectors)?;
    let graph = read_graph(&args.edges)?;
    let outcome = retrofit_traced(&vectors, &graph, &config)?;
    write_vectors(&args.output, &outcome.embedding)?;

    let linked = vectors.vocab().iter().filter(|w| graph.node_id(w).is_some()).count();
    ctx.emit(
        "retrofit",
        json!({
            "vectors": path_value(&args.vectors),
            "edges": path_value(&args.edges),
            "output": path_value(&args.output),
            "retrofit": config,
        }),
        json!({
            "vocab_size": vectors.len(),
            "words_in_graph": linked,
            "max_change_per_sweep": outcome.max_change,
        }),
    )
}
