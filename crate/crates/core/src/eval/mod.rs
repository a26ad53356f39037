//! Intrinsic evaluation: word similarity (Spearman's ρ), multiple-choice
//! synonyms and SAT-style analogies.

mod datasets;
mod metrics;
mod tasks;

pub use datasets::{
    AnalogyDataset, AnalogyItem, McqDataset, SimilarityDataset, SimilarityPair, SynonymItem, ANALOGY_CHOICES,
    SYNONYM_CHOICES,
};
pub use metrics::{average_ranks, cosine, pearson, spearman};
pub use tasks::{
    analogy_grid_accuracies, analogy_score, analogy_terms, default_grid, eval_analogy, eval_similarity, eval_synonym,
    weight_grid, AnalogyGridResult, AnalogyWeights, EvalOptions, EvalReport, Metric, DEFAULT_GRID_VALUES,
};
