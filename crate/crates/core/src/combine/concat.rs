use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vectors::{norm, EmbeddingMatrix};

/// Maximum number of dropped words listed in a coverage report.
pub const MAX_DROPPED_EXAMPLES: usize = 20;

/// Vocabulary alignment summary for a combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub input_vocab_sizes: Vec<usize>,
    pub output_vocab_size: usize,
    /// Up to 20 words present in some input but absent from the output,
    /// in lexicographic order.
    pub dropped_examples: Vec<String>,
}

/// Words present in every input, in lexicographic order.
pub fn shared_vocabulary(inputs: &[&EmbeddingMatrix]) -> (Vec<String>, CoverageReport) {
    let sizes: Vec<usize> = inputs.iter().map(|e| e.len()).collect();
    let Some((first, rest)) = inputs.split_first() else {
        return (
            Vec::new(),
            CoverageReport {
                input_vocab_sizes: sizes,
                output_vocab_size: 0,
                dropped_examples: Vec::new(),
            },
        );
    };
    let mut shared: Vec<String> = first
        .vocab()
        .iter()
        .filter(|w| rest.iter().all(|e| e.contains(w)))
        .cloned()
        .collect();
    shared.sort_unstable();

    let mut dropped = BTreeSet::new();
    for e in inputs {
        for w in e.vocab() {
            if !inputs.iter().all(|o| o.contains(w)) {
                dropped.insert(w.as_str());
            }
        }
    }
    let report = CoverageReport {
        input_vocab_sizes: sizes,
        output_vocab_size: shared.len(),
        dropped_examples: dropped
            .into_iter()
            .take(MAX_DROPPED_EXAMPLES)
            .map(str::to_owned)
            .collect(),
    };
    (shared, report)
}

/// Concatenates the vectors of every shared word, inputs in the given order.
/// With `normalize_parts`, each part is scaled to unit length first (zero
/// vectors stay zero).
pub fn concat_many(inputs: &[&EmbeddingMatrix], normalize_parts: bool) -> Result<(EmbeddingMatrix, CoverageReport)> {
    if inputs.is_empty() {
        return Err(Error::Empty("no embeddings to combine".into()));
    }
    let (vocab, report) = shared_vocabulary(inputs);
    if vocab.is_empty() {
        return Err(Error::EmptyIntersection {
            sizes: report.input_vocab_sizes,
        });
    }
    let dim: usize = inputs.iter().map(|e| e.dim()).sum();
    let mut data = Vec::with_capacity(vocab.len() * dim);
    for w in &vocab {
        for e in inputs {
            let v = e.get(w).expect("word is in the shared vocabulary");
            let n = norm(v);
            if normalize_parts && n > 0.0 {
                data.extend(v.iter().map(|x| x / n));
            } else {
                data.extend_from_slice(v);
            }
        }
    }
    Ok((EmbeddingMatrix::new(vocab, dim, data)?, report))
}

pub fn concat(
    first: &EmbeddingMatrix,
    second: &EmbeddingMatrix,
    normalize_parts: bool,
) -> Result<(EmbeddingMatrix, CoverageReport)> {
    concat_many(&[first, second], normalize_parts)
}
