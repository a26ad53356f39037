//! Combining embedding spaces: concatenation, PCA, truncated SVD, and
//! graph retrofitting.

mod concat;
mod pca;
mod retrofit;

pub use concat::{concat, concat_many, shared_vocabulary, CoverageReport, MAX_DROPPED_EXAMPLES};
pub use pca::{pca_fit, pca_transform, truncated_svd, PcaModel, TruncatedSvd};
pub use retrofit::{retrofit, retrofit_traced, RetrofitConfig, RetrofitOutcome};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vectors::EmbeddingMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CombineMethod {
    #[default]
    Concat,
    Pca,
    Tsvd,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CombineConfig {
    pub method: CombineMethod,
    /// Output dimension for PCA and truncated SVD.
    pub target_dim: usize,
    pub normalize_parts: bool,
    /// Correlation PCA instead of covariance PCA.
    pub standardize: bool,
}

impl Default for CombineConfig {
    fn default() -> Self {
        CombineConfig {
            method: CombineMethod::Concat,
            target_dim: 300,
            normalize_parts: false,
            standardize: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Combined {
    pub embedding: EmbeddingMatrix,
    pub coverage: CoverageReport,
    /// Components actually kept by PCA/TSVD.
    pub components: Option<usize>,
}

/// Concatenates the inputs in order, then optionally reduces dimension.
pub fn combine(inputs: &[&EmbeddingMatrix], config: &CombineConfig) -> Result<Combined> {
    let total_dim: usize = inputs.iter().map(|e| e.dim()).sum();
    if config.method != CombineMethod::Concat && config.target_dim > total_dim {
        return Err(Error::Config(format!(
            "target dimension {} exceeds combined dimension {total_dim}",
            config.target_dim
        )));
    }
    let (joined, coverage) = concat_many(inputs, config.normalize_parts)?;
    let (embedding, components) = match config.method {
        CombineMethod::Concat => (joined, None),
        CombineMethod::Pca => {
            let model = pca_fit(&joined, config.target_dim, config.standardize)?;
            (model.transform(&joined)?, Some(model.n_components()))
        }
        CombineMethod::Tsvd => {
            let svd = TruncatedSvd::fit(&joined, config.target_dim)?;
            (svd.transform(&joined)?, Some(svd.n_components()))
        }
    };
    Ok(Combined {
        embedding,
        coverage,
        components,
    })
}
