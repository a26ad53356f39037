use serde::{Deserialize, Serialize};

use super::datasets::{AnalogyDataset, McqDataset, SimilarityDataset};
use super::metrics::{cosine, spearman};
use crate::error::{Error, Result};
use crate::vectors::{dot, norm, EmbeddingMatrix};

/// Grid values tried for each of `w1` and `w2`.
pub const DEFAULT_GRID_VALUES: [f64; 10] = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 2.0, 4.0, 6.0, 8.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalogyWeights {
    pub w1: f64,
    pub w2: f64,
}

impl AnalogyWeights {
    pub const ZERO: AnalogyWeights = AnalogyWeights { w1: 0.0, w2: 0.0 };

    pub fn new(w1: f64, w2: f64) -> Self {
        AnalogyWeights { w1, w2 }
    }
}

/// Row-major grid: `w1` varies slowest.
pub fn weight_grid(w1_values: &[f64], w2_values: &[f64]) -> Vec<AnalogyWeights> {
    w1_values
        .iter()
        .flat_map(|&w1| w2_values.iter().map(move |&w2| AnalogyWeights { w1, w2 }))
        .collect()
}

pub fn default_grid() -> Vec<AnalogyWeights> {
    weight_grid(&DEFAULT_GRID_VALUES, &DEFAULT_GRID_VALUES)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Spearman,
    Accuracy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub dataset_name: String,
    pub metric: Metric,
    pub metric_value: f64,
    pub pairs_evaluated: usize,
    pub pairs_skipped_oov: usize,
    /// Best grid point for analogy tasks.
    pub analogy_weights: Option<AnalogyWeights>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOptions {
    /// Fail on any out-of-vocabulary word instead of skipping the item.
    pub strict: bool,
    /// Unit-normalize vectors before analogy scoring.
    pub normalize: bool,
}

fn lookup<'e>(e: &'e EmbeddingMatrix, word: &str, options: &EvalOptions) -> Result<Option<&'e [f64]>> {
    match e.get(word) {
        Some(v) if norm(v) > 0.0 => Ok(Some(v)),
        Some(_) => Ok(None),
        None if options.strict => Err(Error::OutOfVocabulary(word.to_owned())),
        None => Ok(None),
    }
}

/// Spearman's ρ between gold scores and cosine similarities over the pairs
/// whose words both have (non-zero) vectors.
pub fn eval_similarity(e: &EmbeddingMatrix, ds: &SimilarityDataset, options: &EvalOptions) -> Result<EvalReport> {
    let mut gold = Vec::new();
    let mut predicted = Vec::new();
    for pair in &ds.pairs {
        let (Some(u), Some(v)) = (lookup(e, &pair.first, options)?, lookup(e, &pair.second, options)?) else {
            continue;
        };
        gold.push(pair.gold);
        predicted.push(cosine(u, v)?);
    }
    if gold.len() < 2 {
        return Err(Error::Empty(format!(
            "{}: {} scorable pairs, need at least 2",
            ds.name,
            gold.len()
        )));
    }
    Ok(EvalReport {
        dataset_name: ds.name.clone(),
        metric: Metric::Spearman,
        metric_value: spearman(&gold, &predicted)?,
        pairs_evaluated: gold.len(),
        pairs_skipped_oov: ds.pairs.len() - gold.len(),
        analogy_weights: None,
    })
}

/// Index of the largest score; ties go to the lowest index.
fn argmax(scores: impl IntoIterator<Item = f64>) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, s) in scores.into_iter().enumerate() {
        if s > best.1 {
            best = (i, s);
        }
    }
    best.0
}

/// Accuracy of picking the choice most cosine-similar to the question.
/// Questions without a vector are skipped; choices without one never win.
pub fn eval_synonym(e: &EmbeddingMatrix, ds: &McqDataset, options: &EvalOptions) -> Result<EvalReport> {
    let mut evaluated = 0;
    let mut correct = 0;
    for item in &ds.items {
        let question = lookup(e, &item.question, options)?;
        let choices = item
            .choices
            .iter()
            .map(|c| lookup(e, c, options))
            .collect::<Result<Vec<_>>>()?;
        let Some(q) = question else { continue };
        let scores = choices
            .iter()
            .map(|c| c.map_or(Ok(f64::NEG_INFINITY), |c| cosine(q, c)))
            .collect::<Result<Vec<_>>>()?;
        evaluated += 1;
        if argmax(scores) == item.answer {
            correct += 1;
        }
    }
    if evaluated == 0 {
        return Err(Error::Empty(format!("{}: no scorable questions", ds.name)));
    }
    Ok(EvalReport {
        dataset_name: ds.name.clone(),
        metric: Metric::Accuracy,
        metric_value: correct as f64 / evaluated as f64,
        pairs_evaluated: evaluated,
        pairs_skipped_oov: ds.items.len() - evaluated,
        analogy_weights: None,
    })
}

/// The three weight-independent parts of the analogy score:
/// `(a1·a2 + b1·b2, (b2−a2)·(b1−a1), (b2−b1)·(a2−a1))`.
pub fn analogy_terms(a1: &[f64], b1: &[f64], a2: &[f64], b2: &[f64]) -> Result<[f64; 3]> {
    let d = a1.len();
    for v in [b1, a2, b2] {
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: v.len(),
            });
        }
    }
    let base = dot(a1, a2) + dot(b1, b2);
    let (mut cross1, mut cross2) = (0.0, 0.0);
    for i in 0..d {
        cross1 += (b2[i] - a2[i]) * (b1[i] - a1[i]);
        cross2 += (b2[i] - b1[i]) * (a2[i] - a1[i]);
    }
    Ok([base, cross1, cross2])
}

fn weighted(terms: [f64; 3], w: AnalogyWeights) -> f64 {
    terms[0] + w.w1 * terms[1] + w.w2 * terms[2]
}

/// `s = a1·a2 + b1·b2 + w1 (b2−a2)·(b1−a1) + w2 (b2−b1)·(a2−a1)` on the raw
/// vectors.
pub fn analogy_score(a1: &[f64], b1: &[f64], a2: &[f64], b2: &[f64], w: AnalogyWeights) -> Result<f64> {
    Ok(weighted(analogy_terms(a1, b1, a2, b2)?, w))
}

/// Accuracy at every grid point, in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalogyGridResult {
    pub accuracies: Vec<f64>,
    pub evaluated: usize,
    pub skipped: usize,
}

pub fn analogy_grid_accuracies(
    e: &EmbeddingMatrix,
    ds: &AnalogyDataset,
    grid: &[AnalogyWeights],
    options: &EvalOptions,
) -> Result<AnalogyGridResult> {
    if grid.is_empty() {
        return Err(Error::Config("analogy weight grid is empty".into()));
    }
    let fetch = |w: &str| -> Result<Option<Vec<f64>>> {
        Ok(lookup(e, w, options)?.map(|v| {
            if options.normalize {
                let n = norm(v);
                v.iter().map(|x| x / n).collect()
            } else {
                v.to_vec()
            }
        }))
    };

    // Per scorable item: weight-independent terms per choice (None = OOV).
    let mut items = Vec::new();
    for item in &ds.items {
        let a1 = fetch(&item.stem.0)?;
        let b1 = fetch(&item.stem.1)?;
        let choices = item
            .choices
            .iter()
            .map(|(a, b)| Ok((fetch(a)?, fetch(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let (Some(a1), Some(b1)) = (a1, b1) else { continue };
        let terms = choices
            .iter()
            .map(|c| match c {
                (Some(a2), Some(b2)) => analogy_terms(&a1, &b1, a2, b2).map(Some),
                _ => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        items.push((terms, item.answer));
    }
    if items.is_empty() {
        return Err(Error::Empty(format!("{}: no scorable questions", ds.name)));
    }

    let accuracies = grid
        .iter()
        .map(|&w| {
            let correct = items
                .iter()
                .filter(|(terms, answer)| {
                    argmax(terms.iter().map(|t| t.map_or(f64::NEG_INFINITY, |t| weighted(t, w)))) == *answer
                })
                .count();
            correct as f64 / items.len() as f64
        })
        .collect();
    Ok(AnalogyGridResult {
        accuracies,
        evaluated: items.len(),
        skipped: ds.items.len() - items.len(),
    })
}

/// Best accuracy over the grid and the first grid point reaching it.
pub fn eval_analogy(
    e: &EmbeddingMatrix,
    ds: &AnalogyDataset,
    grid: &[AnalogyWeights],
    options: &EvalOptions,
) -> Result<EvalReport> {
    let result = analogy_grid_accuracies(e, ds, grid, options)?;
    let best = argmax(result.accuracies.iter().copied());
    Ok(EvalReport {
        dataset_name: ds.name.clone(),
        metric: Metric::Accuracy,
        metric_value: result.accuracies[best],
        pairs_evaluated: result.evaluated,
        pairs_skipped_oov: result.skipped,
        analogy_weights: Some(grid[best]),
    })
}
