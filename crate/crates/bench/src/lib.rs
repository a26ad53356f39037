//! Synthetic inputs for the benchmarks.

use dtembed::{DtGraph, EmbeddingMatrix, FeatureCounts};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Count table where words in the same topic draw features from a shared
/// pool, so the thesaurus graph has dense topical blocks.
pub fn topical_counts(words: usize, topics: usize, features_per_word: usize, seed: u64) -> FeatureCounts {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = features_per_word * 4;
    let mut entries = Vec::with_capacity(words * features_per_word);
    for w in 0..words {
        let topic = w % topics;
        for _ in 0..features_per_word {
            let f = if rng.random_bool(0.8) {
                topic * pool + rng.random_range(0..pool)
            } else {
                rng.random_range(0..topics * pool)
            };
            entries.push((format!("w{w:06}"), format!("f{f:07}"), rng.random_range(1..20u64)));
        }
    }
    FeatureCounts::from_entries(entries)
}

/// `blocks` cliques of `size` nodes, consecutive cliques joined by one
/// light edge.
pub fn clique_chain(blocks: usize, size: usize) -> DtGraph {
    let n = blocks * size;
    let words: Vec<String> = (0..n).map(|i| format!("n{i:06}")).collect();
    let mut edges = Vec::new();
    for b in 0..blocks {
        let base = (b * size) as u32;
        for u in 0..size as u32 {
            for v in u + 1..size as u32 {
                edges.push((base + u, base + v, 100));
            }
        }
        if b + 1 < blocks {
            edges.push((base, base + size as u32, 1));
        }
    }
    DtGraph::from_edges(words, edges).expect("generated edges are valid")
}

pub fn random_embedding(words: usize, dim: usize, seed: u64) -> EmbeddingMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..words * dim).map(|_| rng.random_range(-1.0..1.0)).collect();
    EmbeddingMatrix::new((0..words).map(|i| format!("w{i:06}")).collect(), dim, data)
        .expect("generated vectors are valid")
}
