//! Distributional thesaurus graphs and the word embeddings built on them.
//!
//! The pipeline runs in four stages, one module each:
//!
//! * [`dt`] scores word–feature counts with lexicographer's mutual
//!   information, keeps each word's top-k features, and links words by the
//!   number of features they share.
//! * [`embed`] turns the (weight-filtered) graph into dense vectors with
//!   node2vec/DeepWalk walks plus skip-gram negative sampling, or with LINE.
//! * [`combine`] merges embedding spaces by concatenation, PCA or truncated
//!   SVD, or retrofits one space to the graph.
//! * [`eval`] scores a space on similarity, synonym and analogy datasets.

pub mod combine;
pub mod dt;
pub mod embed;
mod error;
pub mod eval;
pub mod vectors;

pub use combine::{CombineConfig, CombineMethod, CoverageReport, PcaModel, RetrofitConfig};
pub use dt::{BuilderConfig, DtGraph, FeatureCounts, LmiVariant};
pub use embed::{LineConfig, LineOrder, SgnsConfig, ThreadMode, WalkConfig, WalkCorpus};
pub use error::{Error, Result};
pub use eval::{AnalogyWeights, EvalOptions, EvalReport};
pub use vectors::EmbeddingMatrix;
