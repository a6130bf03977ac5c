//! Label propagation.
//!
//! Every node starts with a unique label. The graph variant updates nodes
//! one at a time (in a freshly shuffled order each sweep) to the label
//! carrying the largest total edge weight among their neighbors. The
//! hypergraph variant runs two phases per sweep: each hyperedge takes the
//! most frequent label among its members, then each vertex takes the most
//! frequent label among its hyperedges. Each phase reads only the labels
//! written by the other one.
//!
//! Ties are broken uniformly at random. A run stops once two consecutive
//! sweeps leave every vertex label unchanged, or after `max_iterations`
//! sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;
use crate::views::WeightedGraph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum UpdateOrder {
    /// reshuffle the processing order every sweep
    #[default]
    Shuffled,
    /// always process in id order
    Sequential,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LpConfig {
    pub max_iterations: usize,
    pub seed: u64,
    pub order: UpdateOrder,
}

impl Default for LpConfig {
    fn default() -> Self {
        Self {
            max_iterations: 100,
            seed: 0,
            order: UpdateOrder::Shuffled,
        }
    }
}

impl LpConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub partition: Partition,
    /// sweeps performed, including the two final unchanged ones
    pub iterations: usize,
    /// false when the run hit `max_iterations` while labels were still moving
    pub converged: bool,
}

/// Weighted label tally over a dense label space.
struct Tally {
    weight: Vec<f64>,
    touched: Vec<usize>,
    best: Vec<usize>,
}

impl Tally {
    fn new(labels: usize) -> Self {
        Self {
            weight: vec![0.0; labels],
            touched: Vec::new(),
            best: Vec::new(),
        }
    }

    fn add(&mut self, label: usize, w: f64) {
        if self.weight[label] == 0.0 {
            self.touched.push(label);
        }
        self.weight[label] += w;
    }

    /// Most frequent label, ties drawn uniformly. Resets the tally.
    fn winner<R: Rng>(&mut self, rng: &mut R) -> Option<usize> {
        let max = self.touched.iter().map(|&l| self.weight[l]).fold(f64::NEG_INFINITY, f64::max);
        self.best.clear();
        self.best
            .extend(self.touched.iter().copied().filter(|&l| self.weight[l] == max));
        for &l in &self.touched {
            self.weight[l] = 0.0;
        }
        self.touched.clear();
        if self.best.is_empty() {
            return None;
        }
        self.best.sort_unstable();
        Some(self.best[rng.random_range(0..self.best.len())])
    }
}

/// Unchanged sweeps in a row that end a run.
const QUIET_SWEEPS: usize = 2;

fn sweep_order(order: &mut [usize], cfg: &LpConfig, rng: &mut ChaCha8Rng) {
    if cfg.order == UpdateOrder::Shuffled {
        order.shuffle(rng);
    }
}

pub fn graph_label_propagation<G: WeightedGraph + ?Sized>(g: &G, cfg: &LpConfig) -> Result<LpOutcome> {
    cfg.validate()?;
    let n = g.node_count();
    let adj = g.adjacency();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut labels: Vec<usize> = (0..n).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut tally = Tally::new(n);

    let mut quiet = 0;
    for iteration in 1..=cfg.max_iterations {
        sweep_order(&mut order, cfg, &mut rng);
        let mut changed = false;
        for &u in &order {
            for &(v, w) in &adj[u] {
                tally.add(labels[v], w);
            }
            if let Some(l) = tally.winner(&mut rng) {
                if l != labels[u] {
                    labels[u] = l;
                    changed = true;
                }
            }
        }
        quiet = if changed { 0 } else { quiet + 1 };
        if quiet == QUIET_SWEEPS {
            return Ok(LpOutcome {
                partition: Partition::from_labels(labels),
                iterations: iteration,
                converged: true,
            });
        }
    }
    Ok(LpOutcome {
        partition: Partition::from_labels(labels),
        iterations: cfg.max_iterations,
        converged: false,
    })
}

pub fn hypergraph_label_propagation(h: &Hypergraph, cfg: &LpConfig) -> Result<LpOutcome> {
    cfg.validate()?;
    let (n, k) = (h.nhv(), h.nhe());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut vlabels: Vec<usize> = (0..n).collect();
    let mut elabels: Vec<Option<usize>> = vec![None; k];
    let mut vorder: Vec<usize> = (0..n).collect();
    let mut eorder: Vec<usize> = (0..k).collect();
    let mut tally = Tally::new(n);

    let mut quiet = 0;
    for iteration in 1..=cfg.max_iterations {
        // hyperedges read vertex labels only
        sweep_order(&mut eorder, cfg, &mut rng);
        for &ei in &eorder {
            for v in h.column(ei).keys() {
                tally.add(vlabels[v.index()], 1.0);
            }
            if let Some(l) = tally.winner(&mut rng) {
                elabels[ei] = Some(l);
            }
        }

        // vertices read hyperedge labels only
        sweep_order(&mut vorder, cfg, &mut rng);
        let mut changed = false;
        for &vi in &vorder {
            for e in h.row(vi).keys() {
                if let Some(l) = elabels[e.index()] {
                    tally.add(l, 1.0);
                }
            }
            if let Some(l) = tally.winner(&mut rng) {
                if l != vlabels[vi] {
                    vlabels[vi] = l;
                    changed = true;
                }
            }
        }
        quiet = if changed { 0 } else { quiet + 1 };
        if quiet == QUIET_SWEEPS {
            return Ok(LpOutcome {
                partition: Partition::from_labels(vlabels),
                iterations: iteration,
                converged: true,
            });
        }
    }
    Ok(LpOutcome {
        partition: Partition::from_labels(vlabels),
        iterations: cfg.max_iterations,
        converged: false,
    })
}
