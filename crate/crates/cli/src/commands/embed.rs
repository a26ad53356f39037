use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use dtembed::embed::{filter_edges, generate_walks, line_embed, train_sgns};
use dtembed::{LineConfig, LineOrder, SgnsConfig, ThreadMode, WalkConfig};
use serde_json::json;

use crate::report::{check_input, check_output, path_value, read_graph, write_vectors, RunContext};
use crate::Common;

#[derive(Args, Debug)]
pub struct EmbedArgs {
    /// Thesaurus edge list.
    edges: PathBuf,
    /// Vector file to write.
    #[arg(short, long)]
    output: PathBuf,
    /// deepwalk, node2vec or line [default: node2vec].
    #[arg(long)]
    method: Option<String>,
    /// Keep only edges at least this heavy [default: 50].
    #[arg(long)]
    min_edge_weight: Option<u32>,
    /// [default: 128]
    #[arg(long)]
    dim: Option<usize>,
    /// Walks started per node [default: 10].
    #[arg(long)]
    walks: Option<usize>,
    /// Nodes per walk [default: 80].
    #[arg(long)]
    walk_length: Option<usize>,
    /// Return parameter [default: 1].
    #[arg(long)]
    p: Option<f64>,
    /// In-out parameter [default: 1].
    #[arg(long)]
    q: Option<f64>,
    /// Ignore edge weights during node2vec walks.
    #[arg(long)]
    unweighted: bool,
    /// [default: 10]
    #[arg(long)]
    window: Option<usize>,
    /// Negative samples per positive [default: 5].
    #[arg(long)]
    negatives: Option<usize>,
    /// [default: 5]
    #[arg(long)]
    epochs: Option<usize>,
    /// Initial learning rate [default: 0.025].
    #[arg(long)]
    learning_rate: Option<f64>,
    /// Final learning rate [default: 0.0001].
    #[arg(long)]
    min_learning_rate: Option<f64>,
    /// LINE proximity: first, second or both [default: second].
    #[arg(long)]
    line_order: Option<String>,
    /// LINE edge samples per edge per epoch [default: 10].
    #[arg(long)]
    samples_per_edge: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    DeepWalk,
    Node2Vec,
    Line,
}

impl Method {
    fn parse(raw: &str) -> Result<Self> {
        match raw {
            "deepwalk" => Ok(Method::DeepWalk),
            "node2vec" => Ok(Method::Node2Vec),
            "line" => Ok(Method::Line),
            other => bail!("unknown embedding method {other:?} (expected deepwalk, node2vec or line)"),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Method::DeepWalk => "deepwalk",
            Method::Node2Vec => "node2vec",
            Method::Line => "line",
        }
    }
}

fn parse_line_order(raw: &str) -> Result<LineOrder> {
    match raw {
        "first" => Ok(LineOrder::First),
        "second" => Ok(LineOrder::Second),
        "both" => Ok(LineOrder::Both),
        other => bail!("unknown LINE order {other:?} (expected first, second or both)"),
    }
}

pub fn run(args: EmbedArgs) -> Result<()> {
    let ctx = RunContext::new(&args.common)?;
    check_input(&args.edges)?;
    check_output(&args.output)?;
    let s = &ctx.settings;

    let method = Method::parse(&s.get(args.method, "method", "node2vec".to_owned())?)?;
    let min_edge_weight = s.get(args.min_edge_weight, "min-edge-weight", 50)?;
    let defaults = SgnsConfig::default();
    let sgns = SgnsConfig {
        dim: s.get(args.dim, "dim", defaults.dim)?,
        window: s.get(args.window, "window", defaults.window)?,
        negatives: s.get(args.negatives, "negatives", defaults.negatives)?,
        initial_lr: s.get(args.learning_rate, "learning-rate", defaults.initial_lr)?,
        min_lr: s.get(args.min_learning_rate, "min-learning-rate", defaults.min_lr)?,
        epochs: s.get(args.epochs, "epochs", defaults.epochs)?,
        seed: ctx.seed,
        mode: if ctx.deterministic {
            ThreadMode::Deterministic
        } else {
            ThreadMode::Parallel
        },
    };
    sgns.validate()?;
    let walk_defaults = WalkConfig::default();
    let mut walks = WalkConfig {
        walks_per_node: s.get(args.walks, "walks", walk_defaults.walks_per_node)?,
        walk_length: s.get(args.walk_length, "walk-length", walk_defaults.walk_length)?,
        p: s.get(args.p, "p", 1.0)?,
        q: s.get(args.q, "q", 1.0)?,
        unweighted: s.flag(args.unweighted, "unweighted")?,
        seed: ctx.seed,
    };
    if method == Method::DeepWalk {
        walks.p = 1.0;
        walks.q = 1.0;
        walks.unweighted = true;
    }
    let line = LineConfig {
        order: parse_line_order(&s.get(args.line_order, "line-order", "second".to_owned())?)?,
        samples_per_edge: s.get(
            args.samples_per_edge,
            "samples-per-edge",
            LineConfig::default().samples_per_edge,
        )?,
    };
    if method != Method::Line {
        walks.validate()?;
    }

    let graph = read_graph(&args.edges)?;
    let filtered = filter_edges(&graph, min_edge_weight);
    if filtered.edge_count() == 0 {
        bail!(
            "no edges with weight >= {min_edge_weight} in {} ({} edges before filtering)",
            args.edges.display(),
            graph.edge_count()
        );
    }

    let (embedding, walk_count) = match method {
        Method::DeepWalk | Method::Node2Vec => {
            let corpus = generate_walks(&filtered, &walks)?;
            (train_sgns(&corpus, &sgns)?, Some(corpus.walks.len()))
        }
        Method::Line => (line_embed(&filtered, &line, &sgns)?, None),
    };
    write_vectors(&args.output, &embedding)?;

    let mut config = json!({
        "edges": path_value(&args.edges),
        "output": path_value(&args.output),
        "method": method.name(),
        "min_edge_weight": min_edge_weight,
        "sgns": sgns,
    });
    match method {
        Method::Line => config["line"] = json!(line),
        _ => config["walks"] = json!(walks),
    }
    ctx.emit(
        "embed",
        config,
        json!({
            "equivalent_to_deepwalk": method == Method::DeepWalk || (method == Method::Node2Vec && walks.is_first_order()),
            "input_edge_count": graph.edge_count(),
            "filtered_node_count": filtered.node_count(),
            "filtered_edge_count": filtered.edge_count(),
            "walk_count": walk_count,
            "vocab_size": embedding.len(),
            "dimension": embedding.dim(),
        }),
    )
}
