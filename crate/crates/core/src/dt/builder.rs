use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compute_lmi, top_k_features, DtGraph, FeatureCounts, LmiVariant, ScoredFeatures};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BuilderConfig {
    /// Features kept per word after LMI ranking.
    pub top_k: usize,
    /// Minimum number of shared features for an edge.
    pub min_overlap: u32,
    pub lmi: LmiVariant,
}

impl BuilderConfig {
    pub fn new(min_overlap: u32) -> Self {
        BuilderConfig {
            top_k: 1000,
            min_overlap,
            lmi: LmiVariant::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.top_k == 0 {
            return Err(Error::Config("top-k must be at least 1".into()));
        }
        if self.min_overlap == 0 {
            return Err(Error::Config("min-overlap must be at least 1".into()));
        }
        Ok(())
    }
}

/// Connects every pair of words whose feature sets share at least
/// `min_overlap` features, weighting the edge by the overlap size.
///
/// Overlaps are counted through an inverted index (feature → words holding
/// it). Each word accumulates counts only for higher-numbered partners into
/// thread-local scratch, so the parallel result matches a sequential build
/// exactly.
pub fn build_dt_graph(feature_sets: &ScoredFeatures, config: &BuilderConfig) -> Result<DtGraph> {
    config.validate()?;
    let n = feature_sets.len();
    if n == 0 {
        return Err(Error::Empty("vocabulary".into()));
    }

    let mut postings: Vec<Vec<u32>> = vec![Vec::new(); feature_sets.features().len()];
    for (w, list) in feature_sets.lists().iter().enumerate() {
        for &(f, _) in list {
            postings[f as usize].push(w as u32);
        }
    }

    let min_overlap = config.min_overlap;
    let upper: Vec<Vec<(u32, u32)>> = (0..n as u32)
        .into_par_iter()
        .map_init(
            || (vec![0u32; n], Vec::<u32>::new()),
            |(counter, touched), u| {
                for &(f, _) in feature_sets.list(u) {
                    let bucket = &postings[f as usize];
                    let start = bucket.partition_point(|&v| v <= u);
                    for &v in &bucket[start..] {
                        if counter[v as usize] == 0 {
                            touched.push(v);
                        }
                        counter[v as usize] += 1;
                    }
                }
                touched.sort_unstable();
                let mut row = Vec::new();
                for &v in touched.iter() {
                    let c = std::mem::take(&mut counter[v as usize]);
                    if c >= min_overlap {
                        row.push((v, c));
                    }
                }
                touched.clear();
                row
            },
        )
        .collect();

    let edges = upper
        .iter()
        .enumerate()
        .flat_map(|(u, row)| row.iter().map(move |&(v, w)| (u as u32, v, w)));
    DtGraph::from_edges(feature_sets.words().to_vec(), edges)
}

/// LMI scoring, top-k truncation and overlap graph construction in one go.
pub fn build_dt(counts: &FeatureCounts, config: &BuilderConfig) -> Result<DtGraph> {
    config.validate()?;
    let scored = compute_lmi(counts, config.lmi)?;
    let top = top_k_features(&scored, config.top_k)?;
    build_dt_graph(&top, config)
}
