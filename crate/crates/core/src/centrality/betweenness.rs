//! Brandes accumulation over unweighted shortest paths.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::sadj::{s_adjacency, SAdjacency};
use super::CentralityVector;
use crate::error::Result;
use crate::hypergraph::Hypergraph;

/// Sources handled by one rayon task. Fixed, so the summation order and
/// hence the floating-point result do not depend on the thread count.
const SOURCE_CHUNK: usize = 32;

/// Raw s-betweenness: for every vertex, the sum over unordered pairs `{x, y}`
/// not containing it of the fraction of shortest s-walks from `x` to `y`
/// passing through it. Unreachable pairs contribute nothing.
pub fn s_betweenness(h: &Hypergraph, s: usize) -> Result<CentralityVector> {
    Ok(brandes(&s_adjacency(h, s)?))
}

/// Betweenness of an unweighted undirected adjacency, unordered pairs,
/// no normalization.
pub fn brandes(adj: &SAdjacency) -> CentralityVector {
    let lists = adj.lists();
    let n = lists.len();
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut work = Workspace::new(n);
            let mut acc = vec![0.0; n];
            for &s in chunk {
                work.single_source(lists, s, &mut acc);
            }
            acc
        })
        .collect();
    let mut total = vec![0.0; n];
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t += p;
        }
    }
    for t in &mut total {
        *t /= 2.0;
    }
    CentralityVector::from_scores(total)
}

struct Workspace {
    dist: Vec<usize>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![usize::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }

    fn single_source(&mut self, lists: &[Vec<usize>], s: usize, acc: &mut [f64]) {
        self.dist[s] = 0;
        self.sigma[s] = 1.0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            for &w in &lists[v] {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }
        // predecessors of w are its neighbors one hop closer to s
        for &w in self.order.iter().rev() {
            let dw = self.dist[w];
            for &v in &lists[w] {
                if dw > 0 && self.dist[v] == dw - 1 {
                    self.delta[v] += self.sigma[v] / self.sigma[w] * (1.0 + self.delta[w]);
                }
            }
            if w != s {
                acc[w] += self.delta[w];
            }
        }
        for &v in &self.order {
            self.dist[v] = usize::MAX;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
        }
        self.order.clear();
    }
}
