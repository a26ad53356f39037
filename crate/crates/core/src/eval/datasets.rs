use std::collections::HashSet;
use std::io::BufRead;

use crate::error::{Error, Result};

pub const SYNONYM_CHOICES: usize = 4;
pub const ANALOGY_CHOICES: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityPair {
    pub first: String,
    pub second: String,
    pub gold: f64,
}

/// Word pairs with human similarity or relatedness judgments.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityDataset {
    pub name: String,
    pub pairs: Vec<SimilarityPair>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynonymItem {
    pub question: String,
    pub choices: [String; SYNONYM_CHOICES],
    pub answer: usize,
}

/// Multiple-choice synonym questions (TOEFL/ESL style).
#[derive(Debug, Clone, PartialEq)]
pub struct McqDataset {
    pub name: String,
    pub items: Vec<SynonymItem>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalogyItem {
    pub stem: (String, String),
    pub choices: [(String, String); ANALOGY_CHOICES],
    pub answer: usize,
}

/// SAT-style analogy questions: pick the pair related like the stem pair.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalogyDataset {
    pub name: String,
    pub items: Vec<AnalogyItem>,
}

fn columns<'a>(line: &'a str, source: &str, lineno: usize) -> Result<[&'a str; 3]> {
    let cols: Vec<&str> = line.split('\t').collect();
    match cols[..] {
        [a, b, c] if !a.is_empty() && !b.is_empty() => Ok([a, b, c.trim()]),
        _ => Err(Error::parse(source, lineno, "expected 3 tab-separated columns")),
    }
}

fn answer_index(text: &str, bound: usize, source: &str, lineno: usize) -> Result<usize> {
    match text.parse::<usize>() {
        Ok(i) if i < bound => Ok(i),
        _ => Err(Error::parse(
            source,
            lineno,
            format!("answer index {text:?} not in 0..{bound}"),
        )),
    }
}

fn lines<R: BufRead>(reader: R) -> impl Iterator<Item = (usize, std::io::Result<String>)> {
    reader
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
}

impl SimilarityDataset {
    /// `word1<TAB>word2<TAB>score`
    pub fn read_tsv<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in lines(reader) {
            let line = line?;
            let [a, b, score] = columns(&line, name, lineno)?;
            let gold: f64 = score
                .parse()
                .ok()
                .filter(|g: &f64| g.is_finite())
                .ok_or_else(|| Error::parse(name, lineno, format!("invalid score {score:?}")))?;
            pairs.push(SimilarityPair {
                first: a.to_owned(),
                second: b.to_owned(),
                gold,
            });
        }
        if pairs.is_empty() {
            return Err(Error::Empty(format!("{name}: no pairs")));
        }
        Ok(SimilarityDataset {
            name: name.to_owned(),
            pairs,
        })
    }

    /// Keeps pairs whose words are both in `words` (e.g. a noun list).
    pub fn retain_words(&mut self, words: &HashSet<String>) {
        self.pairs
            .retain(|p| words.contains(&p.first) && words.contains(&p.second));
    }
}

impl McqDataset {
    /// `question<TAB>c1|c2|c3|c4<TAB>answer_index`
    pub fn read_tsv<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let mut items = Vec::new();
        for (lineno, line) in lines(reader) {
            let line = line?;
            let [question, choices, answer] = columns(&line, name, lineno)?;
            let choices: Vec<String> = choices.split('|').map(str::to_owned).collect();
            let choices: [String; SYNONYM_CHOICES] = choices.try_into().map_err(|c: Vec<String>| {
                Error::parse(
                    name,
                    lineno,
                    format!("expected {SYNONYM_CHOICES} choices, found {}", c.len()),
                )
            })?;
            let distinct: HashSet<&String> = choices.iter().collect();
            if distinct.len() != SYNONYM_CHOICES || choices.iter().any(String::is_empty) {
                return Err(Error::parse(name, lineno, "choices must be distinct and non-empty"));
            }
            items.push(SynonymItem {
                question: question.to_owned(),
                choices,
                answer: answer_index(answer, SYNONYM_CHOICES, name, lineno)?,
            });
        }
        if items.is_empty() {
            return Err(Error::Empty(format!("{name}: no questions")));
        }
        Ok(McqDataset {
            name: name.to_owned(),
            items,
        })
    }

    pub fn retain_words(&mut self, words: &HashSet<String>) {
        self.items
            .retain(|it| words.contains(&it.question) && it.choices.iter().all(|c| words.contains(c)));
    }
}

impl AnalogyDataset {
    /// `a1<TAB>b1<TAB>a2_1:b2_1|...|a2_5:b2_5<TAB>answer_index`
    pub fn read_tsv<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let mut items = Vec::new();
        for (lineno, line) in lines(reader) {
            let line = line?;
            let cols: Vec<&str> = line.split('\t').collect();
            let [a1, b1, choices, answer] = cols[..] else {
                return Err(Error::parse(name, lineno, "expected 4 tab-separated columns"));
            };
            if a1.is_empty() || b1.is_empty() {
                return Err(Error::parse(name, lineno, "empty stem word"));
            }
            let choices = choices
                .split('|')
                .map(|pair| match pair.split_once(':') {
                    Some((a, b)) if !a.is_empty() && !b.is_empty() && !b.contains(':') => {
                        Ok((a.to_owned(), b.to_owned()))
                    }
                    _ => Err(Error::parse(name, lineno, format!("malformed choice {pair:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            let choices: [(String, String); ANALOGY_CHOICES] = choices.try_into().map_err(|c: Vec<_>| {
                Error::parse(
                    name,
                    lineno,
                    format!("expected {ANALOGY_CHOICES} choices, found {}", c.len()),
                )
            })?;
            items.push(AnalogyItem {
                stem: (a1.to_owned(), b1.to_owned()),
                choices,
                answer: answer_index(answer.trim(), ANALOGY_CHOICES, name, lineno)?,
            });
        }
        if items.is_empty() {
            return Err(Error::Empty(format!("{name}: no questions")));
        }
        Ok(AnalogyDataset {
            name: name.to_owned(),
            items,
        })
    }

    pub fn retain_words(&mut self, words: &HashSet<String>) {
        self.items.retain(|it| {
            words.contains(&it.stem.0)
                && words.contains(&it.stem.1)
                && it.choices.iter().all(|(a, b)| words.contains(a) && words.contains(b))
        });
    }
}
