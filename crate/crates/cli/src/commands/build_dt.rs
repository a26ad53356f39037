use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use dtembed::dt::{build_dt, BuilderConfig, FeatureCounts, LmiVariant};
use serde_json::json;

use crate::report::{check_input, check_output, create, open, path_value, RunContext};
use crate::Common;

#[derive(Args, Debug)]
pub struct BuildDtArgs {
    /// TSV of `word<TAB>feature<TAB>count`.
    counts: PathBuf,
    /// Edge list to write.
    #[arg(short, long)]
    output: PathBuf,
    /// Features kept per word [default: 1000].
    #[arg(long)]
    top_k: Option<usize>,
    /// Minimum shared features for an edge (required).
    #[arg(long)]
    min_overlap: Option<u32>,
    /// `normalized` (with corpus size) or `unnormalized` [default: normalized].
    #[arg(long)]
    lmi: Option<String>,
    #[command(flatten)]
    common: Common,
}

pub fn parse_lmi(raw: &str) -> Result<LmiVariant> {
    match raw {
        "normalized" => Ok(LmiVariant::Normalized),
        "unnormalized" => Ok(LmiVariant::Unnormalized),
        other => bail!("unknown LMI variant {other:?} (expected normalized or unnormalized)"),
    }
}

pub fn run(args: BuildDtArgs) -> Result<()> {
    let ctx = RunContext::new(&args.common)?;
    check_input(&args.counts)?;
    check_output(&args.output)?;
    let s = &ctx.settings;
    let config = BuilderConfig {
        top_k: s.get(args.top_k, "top-k", 1000)?,
        min_overlap: s.required(args.min_overlap, "min-overlap")?,
        lmi: parse_lmi(&s.get(args.lmi, "lmi", "normalized".to_owned())?)?,
    };
    config.validate()?;

    let counts = FeatureCounts::read_tsv(open(&args.counts)?, &args.counts.display().to_string())?;
    let graph = build_dt(&counts, &config)?;
    graph.write_edge_list(create(&args.output)?)?;

    let isolated = graph.node_count() - graph.connected_nodes().count();
    let histogram: serde_json::Map<String, serde_json::Value> = graph
        .weight_histogram()
        .into_iter()
        .map(|(w, n)| (w.to_string(), json!(n)))
        .collect();
    ctx.emit(
        "build-dt",
        json!({
            "counts": path_value(&args.counts),
            "output": path_value(&args.output),
            "top_k": config.top_k,
            "min_overlap": config.min_overlap,
            "lmi": config.lmi,
        }),
        json!({
            "word_count": counts.words().len(),
            "feature_count": counts.features().len(),
            "node_count": graph.node_count(),
            "edge_count": graph.edge_count(),
            "isolated_nodes": isolated,
            "weight_histogram": histogram,
        }),
    )
}
