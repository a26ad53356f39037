//! Vocabulary-indexed dense vectors and the plain-text vector file format.
//!
//! The file format is a `<vocab_size> <dimension>` header followed by one
//! `word v1 ... vd` line per word. The reader also accepts header-less files
//! (as distributed for GloVe).

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix {
    vocab: Vec<String>,
    index: HashMap<String, usize>,
    dim: usize,
    data: Vec<f64>,
}

impl EmbeddingMatrix {
    /// `data` is row-major, `vocab.len() × dim`.
    pub fn new(vocab: Vec<String>, dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Config("embedding dimension must be at least 1".into()));
        }
        if data.len() != vocab.len() * dim {
            return Err(Error::DimensionMismatch {
                expected: vocab.len() * dim,
                actual: data.len(),
            });
        }
        if let Some(i) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::Validation(format!(
                "non-finite value in vector for {:?}",
                vocab[i / dim]
            )));
        }
        let mut index = HashMap::with_capacity(vocab.len());
        for (i, w) in vocab.iter().enumerate() {
            if w.is_empty() || w.chars().any(char::is_whitespace) {
                return Err(Error::Validation(format!("invalid word {w:?}")));
            }
            if index.insert(w.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate word {w:?}")));
            }
        }
        Ok(EmbeddingMatrix {
            vocab,
            index,
            dim,
            data,
        })
    }

    pub fn from_rows<W: Into<String>>(rows: impl IntoIterator<Item = (W, Vec<f64>)>) -> Result<Self> {
        let mut vocab = Vec::new();
        let mut data = Vec::new();
        let mut dim = None;
        for (w, row) in rows {
            let w = w.into();
            match dim {
                None => dim = Some(row.len()),
                Some(d) if d != row.len() => {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        actual: row.len(),
                    })
                }
                _ => {}
            }
            vocab.push(w);
            data.extend(row);
        }
        let dim = dim.ok_or_else(|| Error::Empty("embedding has no rows".into()))?;
        Self::new(vocab, dim, data)
    }

    pub fn len(&self) -> usize {
        self.vocab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vocab.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vocab(&self) -> &[String] {
        &self.vocab
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn get(&self, word: &str) -> Option<&[f64]> {
        self.index_of(word).map(|i| self.row(i))
    }

    pub fn rows(&self) -> impl Iterator<Item = (&str, &[f64])> {
        self.vocab
            .iter()
            .map(String::as_str)
            .zip(self.data.chunks_exact(self.dim))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_parts(self) -> (Vec<String>, usize, Vec<f64>) {
        (self.vocab, self.dim, self.data)
    }

    /// Multiplies every vector by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.vocab.clone(),
            self.dim,
            self.data.iter().map(|x| x * factor).collect(),
        )
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.len(), self.dim)?;
        let mut line = String::new();
        for (word, row) in self.rows() {
            use std::fmt::Write as _;
            line.clear();
            line.push_str(word);
            for x in row {
                // Shortest representation that parses back to the same f64.
                write!(line, " {x}").expect("writing to a String");
            }
            line.push('\n');
            out.write_all(line.as_bytes())?;
        }
        out.flush()?;
        Ok(())
    }

    /// Streams a vector file in one pass.
    pub fn read_text<R: BufRead>(reader: R, source_name: &str) -> Result<Self> {
        let mut vocab = Vec::new();
        let mut index = HashMap::new();
        let mut data = Vec::new();
        let mut dim: Option<usize> = None;
        let mut declared_rows: Option<usize> = None;

        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split_ascii_whitespace();
            let word = cols.next().expect("line is not blank");
            let values: Vec<&str> = cols.collect();

            if lineno == 1 && values.len() == 1 {
                if let (Ok(rows), Ok(d)) = (word.parse::<usize>(), values[0].parse::<usize>()) {
                    if d == 0 {
                        return Err(Error::parse(source_name, lineno, "dimension must be at least 1"));
                    }
                    declared_rows = Some(rows);
                    dim = Some(d);
                    data.reserve(rows.saturating_mul(d).min(1 << 28));
                    continue;
                }
            }
            match dim {
                None => dim = Some(values.len()),
                Some(d) if d != values.len() => {
                    return Err(Error::parse(
                        source_name,
                        lineno,
                        format!("expected {d} values, found {}", values.len()),
                    ))
                }
                _ => {}
            }
            if values.is_empty() {
                return Err(Error::parse(source_name, lineno, "word without values"));
            }
            for v in values {
                let x: f64 = v
                    .parse()
                    .map_err(|_| Error::parse(source_name, lineno, format!("invalid number {v:?}")))?;
                if !x.is_finite() {
                    return Err(Error::parse(source_name, lineno, "non-finite value"));
                }
                data.push(x);
            }
            if index.insert(word.to_owned(), vocab.len()).is_some() {
                return Err(Error::parse(source_name, lineno, format!("duplicate word {word:?}")));
            }
            vocab.push(word.to_owned());
        }

        if let Some(rows) = declared_rows {
            if rows != vocab.len() {
                return Err(Error::parse(
                    source_name,
                    1,
                    format!("header declares {rows} words, file has {}", vocab.len()),
                ));
            }
        }
        let dim = dim.ok_or_else(|| Error::Empty(format!("{source_name}: no vectors")))?;
        Ok(EmbeddingMatrix {
            vocab,
            index,
            dim,
            data,
        })
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
