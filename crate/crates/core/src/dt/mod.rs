//! Distributional thesaurus construction: LMI feature ranking, top-k
//! truncation and feature-overlap graphs.

mod builder;
mod counts;
mod graph;
mod lmi;

pub use builder::{build_dt, build_dt_graph, BuilderConfig};
pub use counts::FeatureCounts;
pub use graph::DtGraph;
pub use lmi::{compute_lmi, lmi_score, top_k_features, LmiVariant, ScoredFeatures};
