//! Node embeddings for thesaurus graphs: node2vec/DeepWalk walks with
//! skip-gram negative sampling, and LINE edge sampling.

mod alias;
mod line;
mod sgns;
mod shared;
mod walk;

pub use alias::AliasTable;
pub use line::{line_embed, EdgeSampler, LineConfig, LineOrder};
pub use sgns::{
    log_sigmoid, noise_table, pair_gradients, pair_objective, sigmoid, train_sgns, SgnsConfig, ThreadMode, NOISE_POWER,
};
pub use walk::{generate_walks, WalkConfig, WalkCorpus, Walker};

use crate::dt::DtGraph;
use crate::error::Result;
use crate::vectors::EmbeddingMatrix;

/// Keeps edges with `weight >= min_weight` and drops nodes left isolated.
pub fn filter_edges(graph: &DtGraph, min_weight: u32) -> DtGraph {
    graph.filter_edges(min_weight)
}

/// Walks followed by skip-gram training.
pub fn node2vec(graph: &DtGraph, walks: &WalkConfig, sgns: &SgnsConfig) -> Result<EmbeddingMatrix> {
    let corpus = generate_walks(graph, walks)?;
    train_sgns(&corpus, sgns)
}
