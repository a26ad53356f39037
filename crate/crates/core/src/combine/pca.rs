use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vectors::{dot, EmbeddingMatrix};

/// Fitted principal component projection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaModel {
    pub mean: Vec<f64>,
    /// Per-coordinate standard deviations when fitted on standardized data.
    pub scale: Option<Vec<f64>>,
    /// Row-major `n_components × input_dim`, descending explained variance.
    pub components: Vec<f64>,
    pub explained_variance: Vec<f64>,
    pub input_dim: usize,
    /// Dimension asked for; more than `n_components()` when the data had
    /// lower rank.
    pub requested_dim: usize,
}

impl PcaModel {
    pub fn n_components(&self) -> usize {
        self.explained_variance.len()
    }

    pub fn component(&self, i: usize) -> &[f64] {
        &self.components[i * self.input_dim..(i + 1) * self.input_dim]
    }

    fn prepare(&self, v: &[f64], buf: &mut [f64]) {
        for (j, b) in buf.iter_mut().enumerate() {
            *b = v[j] - self.mean[j];
            if let Some(scale) = &self.scale {
                *b /= scale[j];
            }
        }
    }

    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let mut centered = vec![0.0; self.input_dim];
        self.prepare(v, &mut centered);
        (0..self.n_components())
            .map(|i| dot(self.component(i), &centered))
            .collect()
    }

    /// Maps projected coordinates back into the input space.
    pub fn reconstruct(&self, y: &[f64]) -> Vec<f64> {
        let mut x = vec![0.0; self.input_dim];
        for (i, &yi) in y.iter().enumerate() {
            for (xj, cj) in x.iter_mut().zip(self.component(i)) {
                *xj += yi * cj;
            }
        }
        for (j, xj) in x.iter_mut().enumerate() {
            if let Some(scale) = &self.scale {
                *xj *= scale[j];
            }
            *xj += self.mean[j];
        }
        x
    }

    pub fn transform(&self, e: &EmbeddingMatrix) -> Result<EmbeddingMatrix> {
        if e.dim() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                actual: e.dim(),
            });
        }
        let m = self.n_components();
        let mut data = Vec::with_capacity(e.len() * m);
        for (_, v) in e.rows() {
            data.extend(self.project(v));
        }
        EmbeddingMatrix::new(e.vocab().to_vec(), m, data)
    }

    pub fn inverse_transform(&self, e: &EmbeddingMatrix) -> Result<EmbeddingMatrix> {
        if e.dim() != self.n_components() {
            return Err(Error::DimensionMismatch {
                expected: self.n_components(),
                actual: e.dim(),
            });
        }
        let mut data = Vec::with_capacity(e.len() * self.input_dim);
        for (_, y) in e.rows() {
            data.extend(self.reconstruct(y));
        }
        EmbeddingMatrix::new(e.vocab().to_vec(), self.input_dim, data)
    }
}

/// Projection onto the top right-singular directions of the raw (uncentered)
/// data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSvd {
    /// Row-major `n_components × input_dim`.
    pub components: Vec<f64>,
    pub singular_values: Vec<f64>,
    pub input_dim: usize,
    pub requested_dim: usize,
}

impl TruncatedSvd {
    pub fn fit(e: &EmbeddingMatrix, target_dim: usize) -> Result<Self> {
        check_target(e, target_dim)?;
        let x = DMatrix::from_row_slice(e.len(), e.dim(), e.as_slice());
        let (singular_values, components) = top_singular(x, target_dim);
        Ok(TruncatedSvd {
            components,
            singular_values,
            input_dim: e.dim(),
            requested_dim: target_dim,
        })
    }

    pub fn n_components(&self) -> usize {
        self.singular_values.len()
    }

    pub fn component(&self, i: usize) -> &[f64] {
        &self.components[i * self.input_dim..(i + 1) * self.input_dim]
    }

    pub fn transform(&self, e: &EmbeddingMatrix) -> Result<EmbeddingMatrix> {
        if e.dim() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                actual: e.dim(),
            });
        }
        let m = self.n_components();
        let mut data = Vec::with_capacity(e.len() * m);
        for (_, v) in e.rows() {
            data.extend((0..m).map(|i| dot(self.component(i), v)));
        }
        EmbeddingMatrix::new(e.vocab().to_vec(), m, data)
    }
}

fn check_target(e: &EmbeddingMatrix, target_dim: usize) -> Result<()> {
    if e.len() < 2 {
        return Err(Error::Config("need at least two vectors to fit a projection".into()));
    }
    if target_dim == 0 || target_dim > e.len().min(e.dim()) {
        return Err(Error::Config(format!(
            "target dimension {target_dim} must be in 1..={}",
            e.len().min(e.dim())
        )));
    }
    Ok(())
}

/// Up to `k` leading singular values (those above the numerical rank
/// tolerance) and their right-singular vectors as rows, signed so that each
/// row's largest-magnitude coordinate is positive.
fn top_singular(x: DMatrix<f64>, k: usize) -> (Vec<f64>, Vec<f64>) {
    let (n, d) = x.shape();
    // A tall matrix has the same singular values and right-singular vectors
    // as the R factor of its QR decomposition.
    let x = if n > 2 * d { x.qr().r() } else { x };
    let svd = x.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let s = svd.singular_values;

    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| s[b].total_cmp(&s[a]).then(a.cmp(&b)));
    let s_max = order.first().map_or(0.0, |&i| s[i]);
    let tol = s_max * n.max(d) as f64 * f64::EPSILON;

    let mut values = Vec::new();
    let mut rows = Vec::new();
    for &i in order.iter().take(k) {
        if s[i] <= tol {
            break;
        }
        let mut row: Vec<f64> = v_t.row(i).iter().copied().collect();
        let pivot = row
            .iter()
            .enumerate()
            .fold(
                (0, 0.0f64),
                |best, (j, &x)| if x.abs() > best.1.abs() { (j, x) } else { best },
            )
            .1;
        if pivot < 0.0 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
        values.push(s[i]);
        rows.extend(row);
    }
    (values, rows)
}

/// Fits covariance PCA (or correlation PCA with `standardize`) through the
/// SVD of the centered data matrix.
///
/// If the data has rank below `target_dim`, only the rank many components
/// are kept; [`PcaModel::requested_dim`] records what was asked for.
pub fn pca_fit(e: &EmbeddingMatrix, target_dim: usize, standardize: bool) -> Result<PcaModel> {
    check_target(e, target_dim)?;
    let (n, d) = (e.len(), e.dim());
    let mut mean = vec![0.0; d];
    for (_, v) in e.rows() {
        for (m, x) in mean.iter_mut().zip(v) {
            *m += x;
        }
    }
    mean.iter_mut().for_each(|m| *m /= n as f64);

    let mut x = DMatrix::from_row_slice(n, d, e.as_slice());
    for (j, mut col) in x.column_iter_mut().enumerate() {
        col.add_scalar_mut(-mean[j]);
    }
    let scale = standardize.then(|| {
        x.column_iter()
            .map(|c| {
                let sd = (c.norm_squared() / (n - 1) as f64).sqrt();
                if sd > 0.0 {
                    sd
                } else {
                    1.0
                }
            })
            .collect::<Vec<f64>>()
    });
    if let Some(scale) = &scale {
        for (j, mut col) in x.column_iter_mut().enumerate() {
            col /= scale[j];
        }
    }

    let (singular, components) = top_singular(x, target_dim);
    Ok(PcaModel {
        mean,
        scale,
        components,
        explained_variance: singular.iter().map(|s| s * s / (n - 1) as f64).collect(),
        input_dim: d,
        requested_dim: target_dim,
    })
}

pub fn pca_transform(model: &PcaModel, e: &EmbeddingMatrix) -> Result<EmbeddingMatrix> {
    model.transform(e)
}

pub fn truncated_svd(e: &EmbeddingMatrix, target_dim: usize) -> Result<EmbeddingMatrix> {
    TruncatedSvd::fit(e, target_dim)?.transform(e)
}
