use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FeatureCounts;
use crate::error::{Error, Result};

/// Which form of lexicographer's mutual information to score with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LmiVariant {
    /// `F(w,f) · log2(F(w,f) · N / (F(w) · F(f)))`
    #[default]
    Normalized,
    /// `F(w,f) · log2(F(w,f) / (F(w) · F(f)))`, without the corpus size.
    Unnormalized,
}

/// Per-word lists of `(feature id, score)`.
///
/// Straight out of [`compute_lmi`] the lists are in feature-id order; after
/// [`top_k_features`] they are ranked by descending score.
#[derive(Debug, Clone)]
pub struct ScoredFeatures {
    words: Arc<[String]>,
    features: Arc<[String]>,
    lists: Vec<Vec<(u32, f64)>>,
}

impl ScoredFeatures {
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn features(&self) -> &[String] {
        &self.features
    }

    pub fn list(&self, word: u32) -> &[(u32, f64)] {
        &self.lists[word as usize]
    }

    pub fn lists(&self) -> &[Vec<(u32, f64)>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// Score of `feature` for `word`, looked up by name.
    pub fn score(&self, word: &str, feature: &str) -> Option<f64> {
        let w = self.words.binary_search_by(|x| x.as_str().cmp(word)).ok()?;
        let f = self.features.binary_search_by(|x| x.as_str().cmp(feature)).ok()? as u32;
        self.lists[w].iter().find(|&&(id, _)| id == f).map(|&(_, s)| s)
    }
}

pub fn lmi_score(pair: u64, word: u64, feature: u64, total: u64, variant: LmiVariant) -> f64 {
    let pair = pair as f64;
    let ratio = match variant {
        LmiVariant::Normalized => pair * total as f64 / (word as f64 * feature as f64),
        LmiVariant::Unnormalized => pair / (word as f64 * feature as f64),
    };
    pair * ratio.log2()
}

/// Scores every stored `(word, feature)` pair. Non-positive scores are kept.
pub fn compute_lmi(counts: &FeatureCounts, variant: LmiVariant) -> Result<ScoredFeatures> {
    if counts.is_empty() {
        return Err(Error::Empty("feature counts".into()));
    }
    counts.validate()?;

    let total = counts.total();
    let mut lists = vec![Vec::new(); counts.words().len()];
    for &(w, f, c) in counts.entries() {
        let score = lmi_score(c, counts.word_marginal(w), counts.feature_marginal(f), total, variant);
        lists[w as usize].push((f, score));
    }
    Ok(ScoredFeatures {
        words: counts.shared_words(),
        features: counts.shared_features(),
        lists,
    })
}

/// Descending score, then ascending feature id (= lexicographic feature order).
fn rank_order(a: &(u32, f64), b: &(u32, f64)) -> Ordering {
    b.1.total_cmp(&a.1).then(a.0.cmp(&b.0))
}

/// Keeps each word's `k` highest-scored features.
pub fn top_k_features(scored: &ScoredFeatures, k: usize) -> Result<ScoredFeatures> {
    if k == 0 {
        return Err(Error::Config("top-k must be at least 1".into()));
    }
    let lists = scored
        .lists
        .iter()
        .map(|list| {
            let mut list = list.clone();
            if list.len() > k {
                list.select_nth_unstable_by(k - 1, rank_order);
                list.truncate(k);
            }
            list.sort_unstable_by(rank_order);
            list
        })
        .collect();
    Ok(ScoredFeatures {
        words: Arc::clone(&scored.words),
        features: Arc::clone(&scored.features),
        lists,
    })
}
