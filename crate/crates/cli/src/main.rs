//! `dtembed`: build a distributional thesaurus, embed it, combine it with
//! other vectors and evaluate the result.

mod commands;
mod report;
mod settings;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "dtembed", version, about = "Distributional thesaurus embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Common {
    /// Flat key = value file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Single-threaded training with bit-reproducible output.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Where to write the JSON report (stdout when omitted).
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a thesaurus edge list from word-feature counts.
    BuildDt(commands::build_dt::BuildDtArgs),
    /// Embed a thesaurus graph with DeepWalk, node2vec or LINE.
    Embed(commands::embed::EmbedArgs),
    /// Combine two or more vector files.
    Combine(commands::combine::CombineArgs),
    /// Retrofit vectors to a thesaurus graph.
    Retrofit(commands::retrofit::RetrofitArgs),
    /// Spearman correlation on word similarity datasets.
    EvalSim(commands::eval::EvalArgs),
    /// Accuracy on multiple-choice synonym datasets.
    EvalSyn(commands::eval::EvalArgs),
    /// Accuracy on SAT-style analogy datasets, grid-searching the score weights.
    EvalAnalogy(commands::eval::EvalArgs),
}

fn configure_threads() -> Result<()> {
    if let Ok(raw) = std::env::var("DTEMBED_THREADS") {
        let threads: usize = raw
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .with_context(|| format!("DTEMBED_THREADS must be a positive integer, got {raw:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring worker threads")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::BuildDt(args) => commands::build_dt::run(args),
        Command::Embed(args) => commands::embed::run(args),
        Command::Combine(args) => commands::combine::run(args),
        Command::Retrofit(args) => commands::retrofit::run(args),
        Command::EvalSim(args) => commands::eval::run(args, commands::eval::Task::Similarity),
        Command::EvalSyn(args) => commands::eval::run(args, commands::eval::Task::Synonym),
        Command::EvalAnalogy(args) => commands::eval::run(args, commands::eval::Task::Analogy),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
