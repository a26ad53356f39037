use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::alias::AliasTable;
use super::shared::SharedRows;
use super::walk::WalkCorpus;
use crate::error::{Error, Result};
use crate::vectors::{dot, EmbeddingMatrix};

/// Exponent applied to token counts to form the noise distribution.
pub const NOISE_POWER: f64 = 0.75;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThreadMode {
    /// One worker; identical seeds give bit-identical vectors.
    #[default]
    Deterministic,
    /// Lock-free asynchronous updates from every rayon worker.
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SgnsConfig {
    pub dim: usize,
    /// Maximum distance between center and context; the effective window
    /// for each center is drawn uniformly from `1..=window`.
    pub window: usize,
    pub negatives: usize,
    pub initial_lr: f64,
    pub min_lr: f64,
    pub epochs: usize,
    pub seed: u64,
    pub mode: ThreadMode,
}

impl Default for SgnsConfig {
    fn default() -> Self {
        SgnsConfig {
            dim: 128,
            window: 10,
            negatives: 5,
            initial_lr: 0.025,
            min_lr: 1e-4,
            epochs: 5,
            seed: 0,
            mode: ThreadMode::Deterministic,
        }
    }
}

impl SgnsConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Config("dimension must be at least 1".into()));
        }
        if self.window == 0 {
            return Err(Error::Config("window must be at least 1".into()));
        }
        if self.negatives == 0 {
            return Err(Error::Config("negatives must be at least 1".into()));
        }
        if self.epochs == 0 {
            return Err(Error::Config("epochs must be at least 1".into()));
        }
        if !(self.initial_lr > 0.0 && self.min_lr >= 0.0 && self.min_lr <= self.initial_lr) {
            return Err(Error::Config(
                "need 0 <= min_lr <= initial_lr and initial_lr > 0".into(),
            ));
        }
        Ok(())
    }

    /// Linear decay from `initial_lr` to `min_lr` over `total` units of work.
    pub fn learning_rate(&self, done: usize, total: usize) -> f64 {
        let progress = (done as f64 / total.max(1) as f64).min(1.0);
        self.min_lr + (self.initial_lr - self.min_lr) * (1.0 - progress)
    }
}

pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

pub fn log_sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        -(-x).exp().ln_1p()
    } else {
        x - x.exp().ln_1p()
    }
}

/// `log σ(u_pos·v) + Σ_n log σ(−u_n·v)` for a center vector `v`.
pub fn pair_objective(center: &[f64], positive: &[f64], negatives: &[&[f64]]) -> f64 {
    log_sigmoid(dot(positive, center)) + negatives.iter().map(|n| log_sigmoid(-dot(n, center))).sum::<f64>()
}

/// Gradients of [`pair_objective`]: `(∂/∂v, ∂/∂u_pos, ∂/∂u_n for each n)`.
pub fn pair_gradients(center: &[f64], positive: &[f64], negatives: &[&[f64]]) -> (Vec<f64>, Vec<f64>, Vec<Vec<f64>>) {
    let g_pos = 1.0 - sigmoid(dot(positive, center));
    let mut grad_center: Vec<f64> = positive.iter().map(|u| g_pos * u).collect();
    let grad_positive: Vec<f64> = center.iter().map(|v| g_pos * v).collect();
    let grad_negatives = negatives
        .iter()
        .map(|n| {
            let g = -sigmoid(dot(n, center));
            for (gc, u) in grad_center.iter_mut().zip(n.iter()) {
                *gc += g * u;
            }
            center.iter().map(|v| g * v).collect()
        })
        .collect();
    (grad_center, grad_positive, grad_negatives)
}

/// Scratch buffers for one training thread.
pub(crate) struct Scratch {
    center: Vec<f64>,
    target: Vec<f64>,
    center_grad: Vec<f64>,
}

impl Scratch {
    pub fn new(dim: usize) -> Self {
        Scratch {
            center: vec![0.0; dim],
            target: vec![0.0; dim],
            center_grad: vec![0.0; dim],
        }
    }
}

/// One ascent step of size `lr` on the pair objective. `targets` holds the
/// positive context (label 1) and the negatives (label 0). `inputs` and
/// `outputs` may be the same matrix.
pub(crate) fn apply_pair(
    inputs: &SharedRows,
    outputs: &SharedRows,
    center: usize,
    targets: &[(usize, f64)],
    lr: f64,
    scratch: &mut Scratch,
) {
    inputs.load(center, &mut scratch.center);
    scratch.center_grad.fill(0.0);
    for &(target, label) in targets {
        outputs.load(target, &mut scratch.target);
        let g = (label - sigmoid(dot(&scratch.center, &scratch.target))) * lr;
        for (acc, u) in scratch.center_grad.iter_mut().zip(&scratch.target) {
            *acc += g * u;
        }
        outputs.add_scaled(target, &scratch.center, g);
    }
    inputs.add_scaled(center, &scratch.center_grad, 1.0);
}

/// Fills `targets` with the positive context followed by `negatives` noise
/// draws. Draws that hit the positive are skipped.
pub(crate) fn fill_targets<R: Rng + ?Sized>(
    targets: &mut Vec<(usize, f64)>,
    positive: usize,
    noise: &AliasTable,
    negatives: usize,
    rng: &mut R,
) {
    targets.clear();
    targets.push((positive, 1.0));
    for _ in 0..negatives {
        let n = noise.sample(rng);
        if n != positive {
            targets.push((n, 0.0));
        }
    }
}

/// Noise distribution proportional to `count^0.75`.
pub fn noise_table(counts: &[u64]) -> AliasTable {
    let weights: Vec<f64> = counts.iter().map(|&c| (c as f64).powf(NOISE_POWER)).collect();
    AliasTable::new(&weights)
}

pub(crate) fn init_inputs(rows: usize, dim: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let half = 0.5 / dim as f64;
    (0..rows * dim).map(|_| rng.random_range(-half..half)).collect()
}

/// Trains skip-gram with negative sampling on a walk corpus and returns the
/// center-side vectors for every token that occurs in it.
pub fn train_sgns(corpus: &WalkCorpus, config: &SgnsConfig) -> Result<EmbeddingMatrix> {
    config.validate()?;
    let node_count = corpus.words.len();
    let mut counts = vec![0u64; node_count];
    for &t in corpus.walks.iter().flatten() {
        let slot = counts
            .get_mut(t as usize)
            .ok_or_else(|| Error::Config(format!("walk token {t} outside vocabulary")))?;
        *slot += 1;
    }
    let mut dense = vec![usize::MAX; node_count];
    let mut vocab = Vec::new();
    let mut dense_counts = Vec::new();
    for (node, &c) in counts.iter().enumerate() {
        if c > 0 {
            dense[node] = vocab.len();
            vocab.push(corpus.words[node].clone());
            dense_counts.push(c);
        }
    }
    if vocab.is_empty() {
        return Err(Error::Empty("walk corpus".into()));
    }
    if vocab.len() < 2 {
        return Err(Error::Undefined(
            "negative sampling needs at least two distinct tokens".into(),
        ));
    }

    let walks: Vec<Vec<usize>> = corpus
        .walks
        .iter()
        .map(|w| w.iter().map(|&t| dense[t as usize]).collect())
        .collect();
    let noise = noise_table(&dense_counts);
    let dim = config.dim;

    let mut init_rng = ChaCha8Rng::seed_from_u64(config.seed);
    let inputs = SharedRows::from_values(init_inputs(vocab.len(), dim, &mut init_rng), dim);
    let outputs = SharedRows::from_values(vec![0.0; vocab.len() * dim], dim);

    let tokens: usize = walks.iter().map(Vec::len).sum();
    let total = tokens * config.epochs;
    let progress = AtomicUsize::new(0);
    let workers = match config.mode {
        ThreadMode::Deterministic => 1,
        ThreadMode::Parallel => rayon::current_num_threads().max(1),
    };
    let chunk = walks.len().div_ceil(workers);

    for epoch in 0..config.epochs {
        let run = |(worker, part): (usize, &[Vec<usize>])| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream((epoch * workers + worker) as u64 + 1);
            train_chunk(part, &inputs, &outputs, &noise, config, &progress, total, &mut rng);
        };
        if workers == 1 {
            run((0, &walks[..]));
        } else {
            walks.par_chunks(chunk).enumerate().for_each(run);
        }
    }

    EmbeddingMatrix::new(vocab, dim, inputs.into_values())
}

#[allow(clippy::too_many_arguments)]
fn train_chunk(
    walks: &[Vec<usize>],
    inputs: &SharedRows,
    outputs: &SharedRows,
    noise: &AliasTable,
    config: &SgnsConfig,
    progress: &AtomicUsize,
    total: usize,
    rng: &mut ChaCha8Rng,
) {
    let mut scratch = Scratch::new(config.dim);
    let mut targets = Vec::with_capacity(config.negatives + 1);
    for walk in walks {
        let done = progress.fetch_add(walk.len(), Ordering::Relaxed);
        let lr = config.learning_rate(done, total);
        for (pos, &center) in walk.iter().enumerate() {
            let reach = rng.random_range(1..=config.window);
            let lo = pos.saturating_sub(reach);
            let hi = (pos + reach).min(walk.len() - 1);
            for (ctx_pos, &context) in walk.iter().enumerate().take(hi + 1).skip(lo) {
                if ctx_pos == pos {
                    continue;
                }
                fill_targets(&mut targets, context, noise, config.negatives, rng);
                apply_pair(inputs, outputs, center, &targets, lr, &mut scratch);
            }
        }
    }
}
