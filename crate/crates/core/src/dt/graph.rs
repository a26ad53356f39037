use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Undirected word graph with positive integer edge weights.
///
/// Nodes are kept in lexicographic word order and adjacency is stored in
/// compressed sparse rows, each row sorted by neighbor id. Every edge is
/// stored in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtGraph {
    words: Vec<String>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    weights: Vec<u32>,
}

impl DtGraph {
    /// Builds a graph over `words` (must be sorted and unique) from
    /// undirected edges `(u, v, weight)` with `u != v`. Each unordered pair
    /// may appear at most once.
    pub fn from_edges<I>(words: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, u32)>,
    {
        if words.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("graph vocabulary must be sorted and unique".into()));
        }
        let n = words.len();
        let mut directed: Vec<(u32, u32, u32)> = Vec::new();
        for (u, v, w) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Config(format!("edge ({u}, {v}) references a missing node")));
            }
            if u == v {
                return Err(Error::Config(format!("self-loop on {:?}", words[u as usize])));
            }
            if w == 0 {
                return Err(Error::Config("edge weights must be positive".into()));
            }
            directed.push((u, v, w));
            directed.push((v, u, w));
        }
        directed.sort_unstable();
        if let Some(d) = directed.windows(2).find(|d| d[0].0 == d[1].0 && d[0].1 == d[1].1) {
            return Err(Error::Config(format!(
                "duplicate edge between {:?} and {:?}",
                words[d[0].0 as usize], words[d[0].1 as usize]
            )));
        }

        let mut offsets = vec![0usize; n + 1];
        for &(u, _, _) in &directed {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = directed.iter().map(|&(_, v, _)| v).collect();
        let weights = directed.iter().map(|&(_, _, w)| w).collect();
        Ok(DtGraph {
            words,
            offsets,
            neighbors,
            weights,
        })
    }

    /// Builds a graph from edges named by word. Node set is the set of
    /// words appearing in any edge.
    pub fn from_word_edges<'a, I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str, u32)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let words: BTreeSet<&str> = edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        let words: Vec<String> = words.into_iter().map(str::to_owned).collect();
        let ids: HashMap<&str, u32> = words.iter().enumerate().map(|(i, w)| (w.as_str(), i as u32)).collect();
        let edges: Vec<_> = edges.iter().map(|&(a, b, w)| (ids[a], ids[b], w)).collect();
        Self::from_edges(words, edges)
    }

    pub fn node_count(&self) -> usize {
        self.words.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn word(&self, node: u32) -> &str {
        &self.words[node as usize]
    }

    pub fn node_id(&self, word: &str) -> Option<u32> {
        self.words
            .binary_search_by(|w| w.as_str().cmp(word))
            .ok()
            .map(|i| i as u32)
    }

    /// Neighbor ids (ascending) and the matching edge weights.
    pub fn neighbors(&self, node: u32) -> (&[u32], &[u32]) {
        let range = self.offsets[node as usize]..self.offsets[node as usize + 1];
        (&self.neighbors[range.clone()], &self.weights[range])
    }

    /// Position of `node`'s adjacency row in the flat directed-edge arrays.
    pub(crate) fn row_start(&self, node: u32) -> usize {
        self.offsets[node as usize]
    }

    pub(crate) fn directed_edge_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn degree(&self, node: u32) -> usize {
        self.offsets[node as usize + 1] - self.offsets[node as usize]
    }

    pub fn weight(&self, u: u32, v: u32) -> Option<u32> {
        let (ns, ws) = self.neighbors(u);
        ns.binary_search(&v).ok().map(|i| ws[i])
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).0.binary_search(&v).is_ok()
    }

    /// Each undirected edge once as `(u, v, weight)` with `u < v`, in
    /// ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        (0..self.node_count() as u32).flat_map(move |u| {
            let (ns, ws) = self.neighbors(u);
            ns.iter()
                .zip(ws)
                .filter(move |(&v, _)| v > u)
                .map(move |(&v, &w)| (u, v, w))
        })
    }

    /// Nodes with at least one edge.
    pub fn connected_nodes(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.node_count() as u32).filter(|&u| self.degree(u) > 0)
    }

    /// Subgraph of edges with `weight >= min_weight`; nodes left without
    /// edges are dropped.
    pub fn filter_edges(&self, min_weight: u32) -> DtGraph {
        let kept: Vec<(u32, u32, u32)> = self.edges().filter(|&(_, _, w)| w >= min_weight).collect();
        let mut used = vec![false; self.node_count()];
        for &(u, v, _) in &kept {
            used[u as usize] = true;
            used[v as usize] = true;
        }
        let mut remap = vec![u32::MAX; self.node_count()];
        let mut words = Vec::new();
        for (i, word) in self.words.iter().enumerate() {
            if used[i] {
                remap[i] = words.len() as u32;
                words.push(word.clone());
            }
        }
        let edges = kept
            .into_iter()
            .map(|(u, v, w)| (remap[u as usize], remap[v as usize], w));
        DtGraph::from_edges(words, edges).expect("filtering preserves graph invariants")
    }

    /// Count of edges per weight value.
    pub fn weight_histogram(&self) -> BTreeMap<u32, usize> {
        let mut hist = BTreeMap::new();
        for (_, _, w) in self.edges() {
            *hist.entry(w).or_default() += 1;
        }
        hist
    }

    /// Writes `word1<TAB>word2<TAB>weight` with `word1 < word2`, sorted.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        for (u, v, w) in self.edges() {
            writeln!(out, "{}\t{}\t{}", self.word(u), self.word(v), w)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_edge_list<R: BufRead>(reader: R, source_name: &str) -> Result<Self> {
        let mut raw: Vec<(String, String, u32)> = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let [a, b, w] = cols[..] else {
                return Err(Error::parse(source_name, lineno, "expected 3 tab-separated columns"));
            };
            let w: u32 = w
                .trim()
                .parse()
                .map_err(|_| Error::parse(source_name, lineno, format!("invalid weight {w:?}")))?;
            if a == b {
                return Err(Error::parse(source_name, lineno, "self-loop"));
            }
            if w == 0 {
                return Err(Error::parse(source_name, lineno, "zero weight"));
            }
            raw.push((a.to_owned(), b.to_owned(), w));
        }
        DtGraph::from_word_edges(raw.iter().map(|(a, b, w)| (a.as_str(), b.as_str(), *w)))
            .map_err(|e| Error::parse(source_name, 0, e.to_string()))
    }
}
