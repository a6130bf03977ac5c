use crate::centrality::CentralityVector;
use crate::hypergraph::Hypergraph;
use crate::views::WeightedGraph;

/// Number of hyperedges containing each vertex.
pub fn degree_centrality(h: &Hypergraph) -> CentralityVector {
    CentralityVector::from_scores((0..h.nhv()).map(|vi| h.row(vi).len() as f64).collect())
}

/// Number of distinct neighbors of each node, ignoring edge weights.
pub fn graph_degree_centrality<G: WeightedGraph + ?Sized>(g: &G) -> CentralityVector {
    CentralityVector::from_scores(g.adjacency().iter().map(|a| a.len() as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::views::TwoSectionView;

    #[test]
    fn hypergraph_degree() {
        // e1={1,2}, e2={1}, vertex 3 isolated
        let h = Hypergraph::from_incidence(&[vec![Some(1.0), Some(1.0)], vec![Some(1.0), None], vec![None, None]])
            .unwrap();
        assert_eq!(degree_centrality(&h).scores(), &[2.0, 1.0, 0.0]);
    }

    #[test]
    fn two_section_degree() {
        let clique = Hypergraph::from_incidence(&[vec![Some(1.0)], vec![Some(1.0)], vec![Some(1.0)], vec![None]])
            .unwrap();
        assert_eq!(graph_degree_centrality(&TwoSectionView::new(&clique)).scores(), &[2.0, 2.0, 2.0, 0.0]);

        // e1={1,2}, e2={1,3}
        let h = Hypergraph::from_incidence(&[vec![Some(1.0), Some(1.0)], vec![Some(1.0), None], vec![None, Some(1.0)]])
            .unwrap();
        assert_eq!(graph_degree_centrality(&TwoSectionView::new(&h)).scores(), &[2.0, 1.0, 1.0]);
    }

    #[test]
    fn ties_ranked_by_id() {
        let h = Hypergraph::from_incidence(&[vec![Some(1.0)], vec![Some(1.0)], vec![None]]).unwrap();
        let ranked: Vec<usize> = degree_centrality(&h).ranking().iter().map(|(v, _)| v.get()).collect();
        assert_eq!(ranked, vec![1, 2, 3]);
    }
}
