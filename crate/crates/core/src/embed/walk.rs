use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::alias::AliasTable;
use crate::dt::DtGraph;
use crate::error::{Error, Result};

/// Start nodes handled by one independently seeded partition.
const PARTITION_SIZE: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkConfig {
    pub walks_per_node: usize,
    /// Nodes per walk, including the start node.
    pub walk_length: usize,
    /// Return parameter.
    pub p: f64,
    /// In-out parameter.
    pub q: f64,
    /// Ignore edge weights when choosing the next hop.
    pub unweighted: bool,
    pub seed: u64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig {
            walks_per_node: 10,
            walk_length: 80,
            p: 1.0,
            q: 1.0,
            unweighted: false,
            seed: 0,
        }
    }
}

impl WalkConfig {
    /// DeepWalk walks: uniform over neighbors, no second-order bias.
    pub fn deepwalk() -> Self {
        WalkConfig {
            unweighted: true,
            ..Default::default()
        }
    }

    /// With `p = q = 1` the second-order bias is constant and walks are
    /// first-order.
    pub fn is_first_order(&self) -> bool {
        self.p == 1.0 && self.q == 1.0
    }

    pub fn validate(&self) -> Result<()> {
        if self.walks_per_node == 0 {
            return Err(Error::Config("walks per node must be at least 1".into()));
        }
        if self.walk_length < 2 {
            return Err(Error::Config("walk length must be at least 2".into()));
        }
        if !(self.p > 0.0 && self.p.is_finite() && self.q > 0.0 && self.q.is_finite()) {
            return Err(Error::Config("p and q must be positive and finite".into()));
        }
        Ok(())
    }
}

/// Node-id sequences over a graph's vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCorpus {
    pub words: Vec<String>,
    pub walks: Vec<Vec<u32>>,
}

impl WalkCorpus {
    pub fn token_count(&self) -> usize {
        self.walks.iter().map(Vec::len).sum()
    }
}

/// Samples node2vec transitions over a fixed graph.
///
/// Second-order tables are built the first time a directed edge
/// `(previous → current)` is traversed and cached for the lifetime of the
/// walker; concurrent callers share the cache.
pub struct Walker<'g> {
    graph: &'g DtGraph,
    config: WalkConfig,
    first_order: Vec<Option<AliasTable>>,
    second_order: Vec<OnceLock<AliasTable>>,
}

impl<'g> Walker<'g> {
    pub fn new(graph: &'g DtGraph, config: &WalkConfig) -> Result<Self> {
        config.validate()?;
        let first_order = (0..graph.node_count() as u32)
            .map(|u| {
                let (ns, ws) = graph.neighbors(u);
                if ns.is_empty() {
                    None
                } else if config.unweighted {
                    Some(AliasTable::uniform(ns.len()))
                } else {
                    let ws: Vec<f64> = ws.iter().map(|&w| w as f64).collect();
                    Some(AliasTable::new(&ws))
                }
            })
            .collect();
        let second_order = if config.is_first_order() {
            Vec::new()
        } else {
            (0..graph.directed_edge_count()).map(|_| OnceLock::new()).collect()
        };
        Ok(Walker {
            graph,
            config: config.clone(),
            first_order,
            second_order,
        })
    }

    /// Unnormalized weight of stepping `previous → current → next`.
    fn biased_weight(&self, previous: u32, next: u32, weight: u32) -> f64 {
        let w = if self.config.unweighted { 1.0 } else { weight as f64 };
        let alpha = if next == previous {
            1.0 / self.config.p
        } else if self.graph.is_adjacent(previous, next) {
            1.0
        } else {
            1.0 / self.config.q
        };
        w * alpha
    }

    /// Exact next-hop distribution as `(node, probability)` pairs.
    pub fn transition_probabilities(&self, previous: Option<u32>, current: u32) -> Vec<(u32, f64)> {
        let (ns, ws) = self.graph.neighbors(current);
        let raw: Vec<f64> = match previous {
            Some(t) if !self.config.is_first_order() => {
                ns.iter().zip(ws).map(|(&x, &w)| self.biased_weight(t, x, w)).collect()
            }
            _ => ws
                .iter()
                .map(|&w| if self.config.unweighted { 1.0 } else { w as f64 })
                .collect(),
        };
        let sum: f64 = raw.iter().sum();
        ns.iter().zip(raw).map(|(&x, r)| (x, r / sum)).collect()
    }

    /// Draws the node following `current`, given the node visited before it.
    /// Returns `None` at a dead end.
    pub fn step<R: Rng + ?Sized>(&self, previous: Option<u32>, current: u32, rng: &mut R) -> Option<u32> {
        let (ns, _) = self.graph.neighbors(current);
        let table = match previous {
            Some(t) if !self.config.is_first_order() => {
                let (tn, _) = self.graph.neighbors(t);
                let pos = tn.binary_search(&current).expect("walk follows graph edges");
                let slot = &self.second_order[self.graph.row_start(t) + pos];
                slot.get_or_init(|| {
                    let (ns, ws) = self.graph.neighbors(current);
                    let weights: Vec<f64> = ns.iter().zip(ws).map(|(&x, &w)| self.biased_weight(t, x, w)).collect();
                    AliasTable::new(&weights)
                })
            }
            _ => self.first_order[current as usize].as_ref()?,
        };
        Some(ns[table.sample(rng)])
    }

    pub fn walk<R: Rng + ?Sized>(&self, start: u32, rng: &mut R) -> Vec<u32> {
        let mut walk = Vec::with_capacity(self.config.walk_length);
        walk.push(start);
        let mut previous = None;
        let mut current = start;
        while walk.len() < self.config.walk_length {
            let Some(next) = self.step(previous, current, rng) else {
                break;
            };
            walk.push(next);
            previous = Some(current);
            current = next;
        }
        walk
    }
}

/// `walks_per_node` walks from every node that has at least one edge.
///
/// Start nodes are shuffled per round and split into fixed-size partitions,
/// each with its own ChaCha stream, so the corpus depends only on the seed
/// and not on how many threads run it.
pub fn generate_walks(graph: &DtGraph, config: &WalkConfig) -> Result<WalkCorpus> {
    let walker = Walker::new(graph, config)?;
    let nodes: Vec<u32> = graph.connected_nodes().collect();
    if nodes.is_empty() {
        return Err(Error::Empty("graph has no edges to walk".into()));
    }

    let mut order_rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut starts = Vec::with_capacity(nodes.len() * config.walks_per_node);
    for _ in 0..config.walks_per_node {
        let mut round = nodes.clone();
        round.shuffle(&mut order_rng);
        starts.extend(round);
    }

    let walks: Vec<Vec<u32>> = starts
        .par_chunks(PARTITION_SIZE)
        .enumerate()
        .flat_map_iter(|(part, chunk)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(part as u64 + 1);
            chunk.iter().map(|&s| walker.walk(s, &mut rng)).collect::<Vec<_>>()
        })
        .collect();

    Ok(WalkCorpus {
        words: graph.words().to_vec(),
        walks,
    })
}
