//! Classic betweenness of the two-section graph, computed without Brandes
//! accumulation: all-pairs BFS geodesic counts combined through
//! `sigma(x, v) * sigma(v, y) / sigma(x, y)` whenever `v` lies on a geodesic.
//! Cubic in the vertex count; meant for cross-checking small instances.

use std::collections::VecDeque;

use super::{s_betweenness, CentralityVector};
use crate::hypergraph::Hypergraph;
use crate::views::TwoSectionView;

struct Geodesics {
    dist: Vec<usize>,
    count: Vec<u128>,
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Geodesics {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut count = vec![0u128; n];
    dist[src] = 0;
    count[src] = 1;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
            if dist[y] == dist[x] + 1 {
                count[y] = count[y].saturating_add(count[x]);
            }
        }
    }
    Geodesics { dist, count }
}

/// Unnormalized unordered-pair betweenness of the unweighted two-section view.
pub fn classic_betweenness(view: &TwoSectionView<'_>) -> CentralityVector {
    let n = view.node_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| view.neighbors_at(v).into_keys().collect()).collect();
    let all: Vec<Geodesics> = (0..n).map(|s| bfs(&adj, s)).collect();
    let mut scores = vec![0.0; n];
    for x in 0..n {
        for y in x + 1..n {
            let dxy = all[x].dist[y];
            if dxy == usize::MAX {
                continue;
            }
            let sxy = all[x].count[y] as f64;
            for (v, score) in scores.iter_mut().enumerate() {
                if v == x || v == y {
                    continue;
                }
                let (dxv, dvy) = (all[x].dist[v], all[v].dist[y]);
                if dxv != usize::MAX && dvy != usize::MAX && dxv + dvy == dxy {
                    *score += (all[x].count[v] * all[v].count[y]) as f64 / sxy;
                }
            }
        }
    }
    CentralityVector::from_scores(scores)
}

/// True when 1-betweenness agrees with [`classic_betweenness`] on every
/// vertex to within `1e-9` (relative to the score magnitude).
pub fn betweenness_equivalence_check(h: &Hypergraph) -> bool {
    let fast = s_betweenness(h, 1).expect("s = 1 is valid");
    let slow = classic_betweenness(&TwoSectionView::new(h));
    fast.scores()
        .iter()
        .zip(slow.scores())
        .all(|(a, b)| (a - b).abs() <= 1e-9 * a.abs().max(1.0))
}
