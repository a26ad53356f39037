use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::alias::AliasTable;
use super::sgns::{apply_pair, fill_targets, init_inputs, noise_table, Scratch, SgnsConfig, ThreadMode};
use super::shared::SharedRows;
use crate::dt::DtGraph;
use crate::error::{Error, Result};
use crate::vectors::EmbeddingMatrix;

/// Samples drawn per worker between progress updates.
const BATCH: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineOrder {
    /// Direct-edge proximity; node vectors act as both sides of the dot product.
    First,
    /// Shared-neighborhood proximity with separate context vectors.
    #[default]
    Second,
    /// Half the dimensions from each order, each half unit-normalized.
    Both,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineConfig {
    pub order: LineOrder,
    /// Edge samples per undirected edge per epoch.
    pub samples_per_edge: usize,
}

impl Default for LineConfig {
    fn default() -> Self {
        LineConfig {
            order: LineOrder::Second,
            samples_per_edge: 10,
        }
    }
}

/// Draws undirected edges proportionally to weight, in a random direction.
pub struct EdgeSampler {
    edges: Vec<(u32, u32)>,
    table: AliasTable,
}

impl EdgeSampler {
    pub fn new(graph: &DtGraph) -> Result<Self> {
        let (edges, weights): (Vec<(u32, u32)>, Vec<f64>) = graph.edges().map(|(u, v, w)| ((u, v), w as f64)).unzip();
        if edges.is_empty() {
            return Err(Error::Empty("graph has no edges".into()));
        }
        Ok(EdgeSampler {
            table: AliasTable::new(&weights),
            edges,
        })
    }

    /// Index into [`DtGraph::edges`] order.
    pub fn sample_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.table.sample(rng)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (u32, u32) {
        let (u, v) = self.edges[self.table.sample(rng)];
        if rng.random::<bool>() {
            (u, v)
        } else {
            (v, u)
        }
    }
}

/// LINE embedding by weighted edge sampling with negative sampling.
pub fn line_embed(graph: &DtGraph, line: &LineConfig, config: &SgnsConfig) -> Result<EmbeddingMatrix> {
    config.validate()?;
    if line.samples_per_edge == 0 {
        return Err(Error::Config("samples per edge must be at least 1".into()));
    }
    // Only nodes with edges get vectors.
    let graph = graph.filter_edges(0);
    let sampler = EdgeSampler::new(&graph)?;

    let data = match line.order {
        LineOrder::First | LineOrder::Second => train_order(&graph, &sampler, line, config, line.order, config.dim)?,
        LineOrder::Both => {
            if config.dim < 2 {
                return Err(Error::Config("combined LINE needs dimension of at least 2".into()));
            }
            let first_dim = config.dim / 2;
            let second_dim = config.dim - first_dim;
            let first = train_order(&graph, &sampler, line, config, LineOrder::First, first_dim)?;
            let second_cfg = SgnsConfig {
                seed: config.seed.wrapping_add(1),
                ..config.clone()
            };
            let second = train_order(&graph, &sampler, line, &second_cfg, LineOrder::Second, second_dim)?;
            let mut data = Vec::with_capacity(graph.node_count() * config.dim);
            for (a, b) in first.chunks_exact(first_dim).zip(second.chunks_exact(second_dim)) {
                data.extend(unit(a));
                data.extend(unit(b));
            }
            data
        }
    };
    EmbeddingMatrix::new(graph.words().to_vec(), config.dim, data)
}

fn unit(v: &[f64]) -> impl Iterator<Item = f64> + '_ {
    let n = crate::vectors::norm(v);
    let scale = if n > 0.0 { 1.0 / n } else { 0.0 };
    v.iter().map(move |x| x * scale)
}

fn train_order(
    graph: &DtGraph,
    sampler: &EdgeSampler,
    line: &LineConfig,
    config: &SgnsConfig,
    order: LineOrder,
    dim: usize,
) -> Result<Vec<f64>> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::Undefined("negative sampling needs at least two nodes".into()));
    }
    let degrees: Vec<u64> = (0..n as u32)
        .map(|u| graph.neighbors(u).1.iter().map(|&w| w as u64).sum())
        .collect();
    let noise = noise_table(&degrees);

    let mut init_rng = ChaCha8Rng::seed_from_u64(config.seed);
    let vertices = SharedRows::from_values(init_inputs(n, dim, &mut init_rng), dim);
    let contexts = match order {
        LineOrder::Second => Some(SharedRows::from_values(vec![0.0; n * dim], dim)),
        _ => None,
    };
    let outputs = contexts.as_ref().unwrap_or(&vertices);

    let total = graph.edge_count() * line.samples_per_edge * config.epochs;
    let progress = AtomicUsize::new(0);
    let workers = match config.mode {
        ThreadMode::Deterministic => 1,
        ThreadMode::Parallel => rayon::current_num_threads().max(1),
    };
    let sub_config = SgnsConfig { dim, ..config.clone() };

    let run = |worker: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(worker as u64 + 1);
        let mut scratch = Scratch::new(dim);
        let mut targets = Vec::with_capacity(config.negatives + 1);
        let share = total / workers + usize::from(worker < total % workers);
        let mut remaining = share;
        while remaining > 0 {
            let batch = remaining.min(BATCH);
            let done = progress.fetch_add(batch, Ordering::Relaxed);
            let lr = sub_config.learning_rate(done, total);
            for _ in 0..batch {
                let (source, target) = sampler.sample(&mut rng);
                fill_targets(&mut targets, target as usize, &noise, config.negatives, &mut rng);
                apply_pair(&vertices, outputs, source as usize, &targets, lr, &mut scratch);
            }
            remaining -= batch;
        }
    };
    if workers == 1 {
        run(0);
    } else {
        (0..workers).into_par_iter().for_each(run);
    }
    drop(contexts);
    Ok(vertices.into_values())
}
