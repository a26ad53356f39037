use std::collections::{BTreeSet, HashMap};
use std::io::BufRead;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Sparse word × feature co-occurrence counts with their marginals.
///
/// Words and features are interned in lexicographic order, so comparing ids
/// compares the underlying strings.
#[derive(Debug, Clone)]
pub struct FeatureCounts {
    words: Arc<[String]>,
    features: Arc<[String]>,
    /// Sorted by (word, feature); every count is strictly positive.
    entries: Vec<(u32, u32, u64)>,
    word_marginals: Vec<u64>,
    feature_marginals: Vec<u64>,
    total: u64,
}

impl FeatureCounts {
    /// Builds counts from raw `(word, feature, count)` triples. Repeated pairs
    /// are summed and zero counts dropped; marginals are derived.
    pub fn from_entries<I, W, F>(entries: I) -> Self
    where
        I: IntoIterator<Item = (W, F, u64)>,
        W: AsRef<str>,
        F: AsRef<str>,
    {
        let mut pairs: HashMap<(String, String), u64> = HashMap::new();
        for (w, f, c) in entries {
            if c == 0 {
                continue;
            }
            *pairs.entry((w.as_ref().to_owned(), f.as_ref().to_owned())).or_default() += c;
        }
        Self::from_pair_map(pairs)
    }

    fn from_pair_map(pairs: HashMap<(String, String), u64>) -> Self {
        let words: BTreeSet<&str> = pairs.keys().map(|(w, _)| w.as_str()).collect();
        let features: BTreeSet<&str> = pairs.keys().map(|(_, f)| f.as_str()).collect();
        let words: Vec<String> = words.into_iter().map(str::to_owned).collect();
        let features: Vec<String> = features.into_iter().map(str::to_owned).collect();
        let word_ids: HashMap<&str, u32> = words.iter().enumerate().map(|(i, w)| (w.as_str(), i as u32)).collect();
        let feature_ids: HashMap<&str, u32> = features
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_str(), i as u32))
            .collect();

        let mut entries: Vec<(u32, u32, u64)> = pairs
            .iter()
            .map(|((w, f), &c)| (word_ids[w.as_str()], feature_ids[f.as_str()], c))
            .collect();
        entries.sort_unstable();

        let mut word_marginals = vec![0u64; words.len()];
        let mut feature_marginals = vec![0u64; features.len()];
        let mut total = 0u64;
        for &(w, f, c) in &entries {
            word_marginals[w as usize] += c;
            feature_marginals[f as usize] += c;
            total += c;
        }

        FeatureCounts {
            words: words.into(),
            features: features.into(),
            entries,
            word_marginals,
            feature_marginals,
            total,
        }
    }

    /// Builds counts from entries plus externally supplied marginals, which
    /// are checked against the entries.
    pub fn with_marginals<I, W, F>(
        entries: I,
        word_marginals: &HashMap<String, u64>,
        feature_marginals: &HashMap<String, u64>,
        total: u64,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (W, F, u64)>,
        W: AsRef<str>,
        F: AsRef<str>,
    {
        let mut counts = Self::from_entries(entries);
        for (i, w) in counts.words.iter().enumerate() {
            counts.word_marginals[i] = *word_marginals
                .get(w)
                .ok_or_else(|| Error::Validation(format!("word {w:?} has no marginal count")))?;
        }
        for (i, f) in counts.features.iter().enumerate() {
            counts.feature_marginals[i] = *feature_marginals
                .get(f)
                .ok_or_else(|| Error::Validation(format!("feature {f:?} has no marginal count")))?;
        }
        counts.total = total;
        counts.validate()?;
        Ok(counts)
    }

    /// Reads `word<TAB>feature<TAB>count` lines. Blank lines are ignored.
    pub fn read_tsv<R: BufRead>(reader: R, source_name: &str) -> Result<Self> {
        let mut pairs: HashMap<(String, String), u64> = HashMap::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut cols = line.split('\t');
            let (Some(w), Some(f), Some(c), None) = (cols.next(), cols.next(), cols.next(), cols.next()) else {
                return Err(Error::parse(source_name, lineno, "expected 3 tab-separated columns"));
            };
            if w.is_empty() || f.is_empty() {
                return Err(Error::parse(source_name, lineno, "empty word or feature"));
            }
            let c: u64 = c
                .trim()
                .parse()
                .map_err(|_| Error::parse(source_name, lineno, format!("invalid count {c:?}")))?;
            if c == 0 {
                continue;
            }
            *pairs.entry((w.to_owned(), f.to_owned())).or_default() += c;
        }
        if pairs.is_empty() {
            return Err(Error::Empty(format!("{source_name}: no counts")));
        }
        Ok(Self::from_pair_map(pairs))
    }

    /// Checks that every marginal equals the sum of its entries and that the
    /// total agrees with both marginal sums.
    pub fn validate(&self) -> Result<()> {
        let mut word_sums = vec![0u64; self.words.len()];
        let mut feature_sums = vec![0u64; self.features.len()];
        for &(w, f, c) in &self.entries {
            word_sums[w as usize] += c;
            feature_sums[f as usize] += c;
        }
        for (i, (&sum, &marginal)) in word_sums.iter().zip(&self.word_marginals).enumerate() {
            if sum != marginal {
                return Err(Error::Validation(format!(
                    "word {:?}: marginal {marginal} but entries sum to {sum}",
                    self.words[i]
                )));
            }
        }
        for (i, (&sum, &marginal)) in feature_sums.iter().zip(&self.feature_marginals).enumerate() {
            if sum != marginal {
                return Err(Error::Validation(format!(
                    "feature {:?}: marginal {marginal} but entries sum to {sum}",
                    self.features[i]
                )));
            }
        }
        let word_total: u64 = self.word_marginals.iter().sum();
        let feature_total: u64 = self.feature_marginals.iter().sum();
        if word_total != self.total || feature_total != self.total {
            return Err(Error::Validation(format!(
                "total {} disagrees with word marginals ({word_total}) or feature marginals ({feature_total})",
                self.total
            )));
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn features(&self) -> &[String] {
        &self.features
    }

    pub(crate) fn shared_words(&self) -> Arc<[String]> {
        Arc::clone(&self.words)
    }

    pub(crate) fn shared_features(&self) -> Arc<[String]> {
        Arc::clone(&self.features)
    }

    /// `(word id, feature id, count)` sorted by word then feature.
    pub fn entries(&self) -> &[(u32, u32, u64)] {
        &self.entries
    }

    pub fn word_marginal(&self, word: u32) -> u64 {
        self.word_marginals[word as usize]
    }

    pub fn feature_marginal(&self, feature: u32) -> u64 {
        self.feature_marginals[feature as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}
