use serde::{Deserialize, Serialize};

use crate::dt::DtGraph;
use crate::error::{Error, Result};
use crate::vectors::EmbeddingMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrofitConfig {
    /// Only edges heavier than this link two words.
    pub min_edge_weight: u32,
    pub iterations: usize,
    /// Weight of a word's original vector.
    pub alpha: f64,
}

impl Default for RetrofitConfig {
    fn default() -> Self {
        RetrofitConfig {
            min_edge_weight: 500,
            iterations: 10,
            alpha: 1.0,
        }
    }
}

/// Retrofitted vectors plus the largest per-vector L2 change of each sweep.
#[derive(Debug, Clone)]
pub struct RetrofitOutcome {
    pub embedding: EmbeddingMatrix,
    pub max_change: Vec<f64>,
}

/// Pulls each word toward its graph neighbors while anchoring it to its
/// original vector:
///
/// `q_i ← (α·q̂_i + Σ_j β_ij·q_j) / (α + Σ_j β_ij)`, `β_ij = 1/|N(i)|`
///
/// Sweeps run in place (Gauss–Seidel) in vocabulary order. Words without
/// linked neighbors in the vocabulary come back unchanged.
pub fn retrofit(e: &EmbeddingMatrix, graph: &DtGraph, config: &RetrofitConfig) -> Result<EmbeddingMatrix> {
    Ok(retrofit_traced(e, graph, config)?.embedding)
}

pub fn retrofit_traced(e: &EmbeddingMatrix, graph: &DtGraph, config: &RetrofitConfig) -> Result<RetrofitOutcome> {
    if config.iterations == 0 {
        return Err(Error::Config("retrofitting needs at least one iteration".into()));
    }
    if !(config.alpha > 0.0 && config.alpha.is_finite()) {
        return Err(Error::Config("alpha must be positive".into()));
    }
    let node_of: Vec<Option<u32>> = e.vocab().iter().map(|w| graph.node_id(w)).collect();
    if node_of.iter().all(Option::is_none) {
        return Err(Error::EmptyIntersection {
            sizes: vec![e.len(), graph.node_count()],
        });
    }

    let links: Vec<Vec<usize>> = node_of
        .iter()
        .enumerate()
        .map(|(i, node)| {
            let Some(node) = *node else { return Vec::new() };
            let (ns, ws) = graph.neighbors(node);
            ns.iter()
                .zip(ws)
                .filter(|&(_, &w)| w > config.min_edge_weight)
                .filter_map(|(&n, _)| e.index_of(graph.word(n)))
                .filter(|&j| j != i)
                .collect()
        })
        .collect();

    let dim = e.dim();
    let original = e.as_slice();
    let mut current = original.to_vec();
    let mut max_change = Vec::with_capacity(config.iterations);
    let mut updated = vec![0.0; dim];
    for _ in 0..config.iterations {
        let mut sweep_max = 0.0f64;
        for (i, neighbors) in links.iter().enumerate() {
            if neighbors.is_empty() {
                continue;
            }
            let beta = 1.0 / neighbors.len() as f64;
            for (k, u) in updated.iter_mut().enumerate() {
                *u = config.alpha * original[i * dim + k];
            }
            for &j in neighbors {
                for (k, u) in updated.iter_mut().enumerate() {
                    *u += beta * current[j * dim + k];
                }
            }
            // Σ_j β_ij = 1
            let denom = config.alpha + 1.0;
            let row = &mut current[i * dim..(i + 1) * dim];
            let mut change = 0.0;
            for (q, u) in row.iter_mut().zip(&updated) {
                let next = u / denom;
                change += (next - *q) * (next - *q);
                *q = next;
            }
            sweep_max = sweep_max.max(change.sqrt());
        }
        max_change.push(sweep_max);
    }

    Ok(RetrofitOutcome {
        embedding: EmbeddingMatrix::new(e.vocab().to_vec(), dim, current)?,
        max_change,
    })
}
