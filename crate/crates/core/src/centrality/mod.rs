//! s-adjacency, s-betweenness and ranking utilities.
//!
//! Two vertices are s-adjacent when they share at least `s` hyperedges. An
//! s-walk moves between s-adjacent vertices; s-betweenness is ordinary
//! betweenness over shortest s-walks, so `s = 1` gives the betweenness of
//! the two-section graph.

mod betweenness;
mod oracle;
mod pearson;
mod sadj;

pub use betweenness::{brandes, s_betweenness};
pub use oracle::{betweenness_equivalence_check, classic_betweenness};
pub use pearson::pearson;
pub use sadj::{s_adjacency, s_shortest_path_length, SAdjacency};

use crate::hypergraph::VertexId;

/// One finite score per vertex, with a total order by descending score and
/// then ascending vertex id.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityVector {
    scores: Vec<f64>,
}

impl CentralityVector {
    /// `scores[i]` belongs to vertex `i + 1`.
    ///
    /// Panics if a score is NaN or infinite.
    pub fn from_scores(scores: Vec<f64>) -> Self {
        assert!(scores.iter().all(|s| s.is_finite()), "centrality scores must be finite");
        Self { scores }
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn get(&self, v: VertexId) -> Option<f64> {
        self.scores.get(v.index()).copied()
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// All vertices, best first.
    pub fn ranking(&self) -> Vec<(VertexId, f64)> {
        let mut out: Vec<(VertexId, f64)> = self
            .scores
            .iter()
            .enumerate()
            .map(|(i, &s)| (VertexId::from_index(i), s))
            .collect();
        out.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        out
    }

    /// The `k` best vertices (fewer if there are fewer vertices).
    pub fn top_k(&self, k: usize) -> Vec<(VertexId, f64)> {
        let mut r = self.ranking();
        r.truncate(k);
        r
    }
}
