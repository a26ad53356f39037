//! Naive reference implementations used by the integration tests and the
//! acceptance harness. Nothing here calls into the algorithms under test.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

pub type Entries = Vec<(String, String, u64)>;
pub type EdgeMap = BTreeMap<(String, String), u32>;

/// Random sparse count table with at most `max_words` words and
/// `max_features` features. Counts are small so ties are common.
pub fn random_table<R: Rng>(rng: &mut R, max_words: usize, max_features: usize) -> Entries {
    let words = rng.random_range(2..=max_words);
    let features = rng.random_range(1..=max_features);
    let density = rng.random_range(0.05..0.5);
    let mut entries = Vec::new();
    for w in 0..words {
        for f in 0..features {
            if rng.random_bool(density) {
                entries.push((format!("w{w:02}"), format!("f{f:03}"), rng.random_range(1..=6)));
            }
        }
    }
    if entries.is_empty() {
        entries.push(("w00".into(), "f000".into(), 1));
    }
    entries
}

/// `F(w,f) log2(F(w,f) N / (F(w) F(f)))`, marginals summed from the table.
pub fn naive_lmi(entries: &Entries) -> BTreeMap<String, Vec<(String, f64)>> {
    let mut fw: BTreeMap<&str, u64> = BTreeMap::new();
    let mut ff: BTreeMap<&str, u64> = BTreeMap::new();
    let mut n = 0u64;
    for (w, f, c) in entries {
        *fw.entry(w).or_default() += c;
        *ff.entry(f).or_default() += c;
        n += c;
    }
    let mut out: BTreeMap<String, Vec<(String, f64)>> = BTreeMap::new();
    for (w, f, c) in entries {
        let c = *c as f64;
        let score = c * (c * n as f64 / (fw[w.as_str()] as f64 * ff[f.as_str()] as f64)).log2();
        out.entry(w.clone()).or_default().push((f.clone(), score));
    }
    out
}

/// Full stable sort by descending score, then feature name; keep `k`.
pub fn naive_top_k(scores: &BTreeMap<String, Vec<(String, f64)>>, k: usize) -> BTreeMap<String, BTreeSet<String>> {
    scores
        .iter()
        .map(|(w, list)| {
            let mut list = list.clone();
            list.sort_by(|a, b| a.0.cmp(&b.0));
            list.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
            (w.clone(), list.into_iter().take(k).map(|(f, _)| f).collect())
        })
        .collect()
}

/// All-pairs set intersection; keeps pairs sharing at least `t` features.
pub fn naive_dt(sets: &BTreeMap<String, BTreeSet<String>>, t: u32) -> EdgeMap {
    let words: Vec<&String> = sets.keys().collect();
    let mut edges = BTreeMap::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let shared = sets[words[i]].intersection(&sets[words[j]]).count() as u32;
            if shared >= t && shared > 0 {
                edges.insert((words[i].clone(), words[j].clone()), shared);
            }
        }
    }
    edges
}

pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    assert_eq!(p.len(), q.len());
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

pub fn frequencies(counts: &[usize]) -> Vec<f64> {
    let total: usize = counts.iter().sum();
    counts.iter().map(|&c| c as f64 / total as f64).collect()
}

/// Average rank by counting: `1 + #smaller + (#equal - 1) / 2`.
pub fn naive_ranks(x: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|&a| {
            let smaller = x.iter().filter(|&&b| b < a).count() as f64;
            let equal = x.iter().filter(|&&b| b == a).count() as f64;
            1.0 + smaller + (equal - 1.0) / 2.0
        })
        .collect()
}

pub fn naive_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx.sqrt() * syy.sqrt())
}

pub fn naive_spearman(x: &[f64], y: &[f64]) -> f64 {
    naive_pearson(&naive_ranks(x), &naive_ranks(y))
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    dot(a, b) / (dot(a, a).sqrt() * dot(b, b).sqrt())
}

/// Central difference of `f` at `x` along every coordinate.
pub fn central_difference(x: &[f64], h: f64, f: impl Fn(&[f64]) -> f64) -> Vec<f64> {
    let mut probe = x.to_vec();
    (0..x.len())
        .map(|i| {
            probe[i] = x[i] + h;
            let up = f(&probe);
            probe[i] = x[i] - h;
            let down = f(&probe);
            probe[i] = x[i];
            (up - down) / (2.0 * h)
        })
        .collect()
}

/// `|a - b| / max(|a|, |b|)` in the Euclidean norm; 0 when both vanish.
pub fn relative_error(a: &[f64], b: &[f64]) -> f64 {
    let diff: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let scale = dot(a, a).sqrt().max(dot(b, b).sqrt());
    if scale == 0.0 {
        0.0
    } else {
        dot(&diff, &diff).sqrt() / scale
    }
}

/// Sample covariance of `rows` (n × d), divisor `n - 1`.
pub fn covariance(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = rows.len();
    let d = rows[0].len();
    let mean: Vec<f64> = (0..d)
        .map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n as f64)
        .collect();
    let mut cov = vec![vec![0.0; d]; d];
    for r in rows {
        for i in 0..d {
            for j in 0..d {
                cov[i][j] += (r[i] - mean[i]) * (r[j] - mean[j]);
            }
        }
    }
    for row in &mut cov {
        for c in row.iter_mut() {
            *c /= (n - 1) as f64;
        }
    }
    cov
}

/// `AᵀA` for `rows` (n × d).
pub fn gram(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let d = rows[0].len();
    let mut g = vec![vec![0.0; d]; d];
    for r in rows {
        for i in 0..d {
            for j in 0..d {
                g[i][j] += r[i] * r[j];
            }
        }
    }
    g
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(matrix: &[Vec<f64>]) -> Vec<f64> {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>().max(f64::MIN_POSITIVE);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig
}

/// Singular values of `rows` from the eigenvalues of the Gram matrix.
pub fn naive_singular_values(rows: &[Vec<f64>]) -> Vec<f64> {
    jacobi_eigenvalues(&gram(rows))
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect()
}

/// Per-edge predicate scan.
pub fn naive_filter(edges: &EdgeMap, min_weight: u32) -> EdgeMap {
    edges
        .iter()
        .filter(|(_, &w)| w >= min_weight)
        .map(|(k, &w)| (k.clone(), w))
        .collect()
}

/// Hand expansion of the analogy score.
pub fn analogy_expansion(a1: &[f64], b1: &[f64], a2: &[f64], b2: &[f64], w1: f64, w2: f64) -> f64 {
    let mut s = 0.0;
    for i in 0..a1.len() {
        s += a1[i] * a2[i];
    }
    for i in 0..a1.len() {
        s += b1[i] * b2[i];
    }
    for i in 0..a1.len() {
        s += w1 * (b2[i] - a2[i]) * (b1[i] - a1[i]);
    }
    for i in 0..a1.len() {
        s += w2 * (b2[i] - b1[i]) * (a2[i] - a1[i]);
    }
    s
}

pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
