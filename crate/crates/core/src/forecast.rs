//! Star forecasting from hypergraph and two-section neighborhoods.
//!
//! The hypergraph predictor averages, over the hyperedges containing `u`,
//! the mean rating of the other members of each hyperedge:
//!
//! ```text
//! s1(u) = 1/|E(u)| * sum_{e in E(u)} 1/(|e| - 1) * sum_{v in e, v != u} s(v)
//! ```
//!
//! Singleton hyperedges have no other members and are skipped (they do not
//! count in `|E(u)|` either). The graph predictor is the edge-weighted mean
//! rating over two-section neighbors. A vertex with nothing to average over
//! gets no prediction.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::views::WeightedGraph;

/// Ground-truth star value per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct RatingTable {
    values: Vec<f64>,
}

impl RatingTable {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidRecord(format!("rating {bad} is not finite")));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check_domain(&self, n: usize) -> Result<()> {
        if self.values.len() != n {
            return Err(Error::DomainMismatch(format!(
                "{} ratings for {n} vertices",
                self.values.len()
            )));
        }
        Ok(())
    }
}

/// `predictions[i]` is the forecast for vertex `i + 1`.
pub fn forecast_hypergraph(h: &Hypergraph, ratings: &RatingTable) -> Result<Vec<Option<f64>>> {
    ratings.check_domain(h.nhv())?;
    let s = ratings.values();
    let mut out = Vec::with_capacity(h.nhv());
    for ui in 0..h.nhv() {
        let mut total = 0.0;
        let mut usable = 0usize;
        for e in h.row(ui).keys() {
            let members = h.column(e.index());
            if members.len() < 2 {
                continue;
            }
            let others: f64 = members.keys().filter(|v| v.index() != ui).map(|v| s[v.index()]).sum();
            total += others / (members.len() - 1) as f64;
            usable += 1;
        }
        out.push((usable > 0).then(|| total / usable as f64));
    }
    Ok(out)
}

/// Weighted neighborhood mean over any weighted graph; pass a
/// [`TwoSectionView`](crate::views::TwoSectionView) for the co-review graph.
pub fn forecast_graph<G: WeightedGraph + ?Sized>(g: &G, ratings: &RatingTable) -> Result<Vec<Option<f64>>> {
    ratings.check_domain(g.node_count())?;
    let s = ratings.values();
    Ok(g.adjacency()
        .iter()
        .map(|nbrs| {
            let weight: f64 = nbrs.iter().map(|&(_, w)| w).sum();
            (!nbrs.is_empty() && weight != 0.0)
                .then(|| nbrs.iter().map(|&(v, w)| s[v] * w).sum::<f64>() / weight)
        })
        .collect())
}

/// Mean absolute error over the vertices that have a prediction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorSummary {
    pub mean_abs_error: f64,
    /// number of vertices with a prediction
    pub evaluated: usize,
}

pub fn average_error(predictions: &[Option<f64>], ratings: &RatingTable) -> Result<ErrorSummary> {
    ratings.check_domain(predictions.len())?;
    let mut total = 0.0;
    let mut evaluated = 0;
    for (p, s) in predictions.iter().zip(ratings.values()) {
        if let Some(p) = p {
            total += (s - p).abs();
            evaluated += 1;
        }
    }
    if evaluated == 0 {
        return Err(Error::EmptyEvaluationSet);
    }
    Ok(ErrorSummary {
        mean_abs_error: total / evaluated as f64,
        evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::VertexId;
    use crate::views::TwoSectionView;
    use serde_json::Value;

    // b1, b2, b3 with stars 5, 3, 1; u1 = {b1,b2}, u2 = {b2,b3}
    fn instance() -> (Hypergraph, RatingTable) {
        let h = Hypergraph::from_incidence(&[
            vec![Some(1.0), None],
            vec![Some(1.0), Some(1.0)],
            vec![None, Some(1.0)],
        ])
        .unwrap();
        (h, RatingTable::new(vec![5.0, 3.0, 1.0]).unwrap())
    }

    #[test]
    fn hypergraph_predictions() {
        let (h, r) = instance();
        assert_eq!(forecast_hypergraph(&h, &r).unwrap(), vec![Some(3.0), Some(3.0), Some(3.0)]);
    }

    #[test]
    fn graph_predictions() {
        let (mut h, r) = instance();
        assert_eq!(forecast_graph(&TwoSectionView::new(&h), &r).unwrap()[1], Some(3.0));
        h.add_hyperedge([(VertexId::new(1), 1.0), (VertexId::new(2), 1.0)], Value::Null).unwrap();
        let p = forecast_graph(&TwoSectionView::new(&h), &r).unwrap();
        assert_eq!(p[1], Some(11.0 / 3.0));
    }

    #[test]
    fn isolated_vertices_have_no_prediction() {
        let (mut h, _) = instance();
        h.add_vertex([], Value::Null).unwrap();
        let r = RatingTable::new(vec![5.0, 3.0, 1.0, 4.0]).unwrap();
        assert_eq!(forecast_hypergraph(&h, &r).unwrap()[3], None);
        assert_eq!(forecast_graph(&TwoSectionView::new(&h), &r).unwrap()[3], None);
    }

    #[test]
    fn singleton_hyperedges_skipped() {
        // u = {1}, u' = {1,2}
        let h = Hypergraph::from_incidence(&[vec![Some(1.0), Some(1.0)], vec![None, Some(1.0)]]).unwrap();
        let r = RatingTable::new(vec![1.0, 4.0]).unwrap();
        assert_eq!(forecast_hypergraph(&h, &r).unwrap(), vec![Some(4.0), Some(1.0)]);
        let only_singleton = Hypergraph::from_incidence(&[vec![Some(1.0)]]).unwrap();
        let r = RatingTable::new(vec![2.0]).unwrap();
        assert_eq!(forecast_hypergraph(&only_singleton, &r).unwrap(), vec![None]);
    }

    #[test]
    fn errors_and_summary() {
        let (h, r) = instance();
        let p = forecast_hypergraph(&h, &r).unwrap();
        let e = average_error(&p, &r).unwrap();
        assert_eq!(e.mean_abs_error, 4.0 / 3.0);
        assert_eq!(e.evaluated, 3);
        assert_eq!(average_error(&r.values().iter().map(|&x| Some(x)).collect::<Vec<_>>(), &r).unwrap().mean_abs_error, 0.0);
        assert_eq!(average_error(&[None, None, None], &r), Err(Error::EmptyEvaluationSet));
        assert!(matches!(average_error(&[None], &r), Err(Error::DomainMismatch(_))));
        assert!(RatingTable::new(vec![f64::NAN]).is_err());
    }
}
