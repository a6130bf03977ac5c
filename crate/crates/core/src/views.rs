//! Read-only graph views over a [`Hypergraph`].
//!
//! Views borrow the hypergraph and answer adjacency queries straight from
//! its incidence indexes. Nothing is copied until [`materialize`] is called
//! explicitly, and the materialized graph carries no metadata.
//!
//! [`materialize`]: TwoSectionView::materialize

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{HyperedgeId, Hypergraph, VertexId};

/// Anything the graph algorithms can treat as a simple undirected weighted graph.
pub trait WeightedGraph {
    fn node_count(&self) -> usize;

    /// 0-based adjacency lists, each neighbor listed once and in increasing
    /// order, without self-loops.
    fn adjacency(&self) -> Vec<Vec<(usize, f64)>>;
}

/// The incidence graph: nodes `1..=n` are vertices, `n+1..=n+k` hyperedges.
#[derive(Clone, Copy, Debug)]
pub struct BipartiteView<'a> {
    h: &'a Hypergraph,
}

impl<'a> BipartiteView<'a> {
    pub fn new(h: &'a Hypergraph) -> Self {
        Self { h }
    }

    pub fn node_count(&self) -> usize {
        self.h.nhv() + self.h.nhe()
    }

    pub fn edge_count(&self) -> usize {
        self.h.incidence_count()
    }

    pub fn is_vertex_node(&self, node: usize) -> bool {
        (1..=self.h.nhv()).contains(&node)
    }

    pub fn hyperedge_node(&self, e: HyperedgeId) -> usize {
        self.h.nhv() + e.get()
    }

    pub fn neighbors(&self, node: usize) -> Result<BTreeSet<usize>> {
        let n = self.h.nhv();
        if node == 0 || node > self.node_count() {
            return Err(Error::UnknownNode(node));
        }
        Ok(if node <= n {
            self.h.row(node - 1).keys().map(|e| n + e.get()).collect()
        } else {
            self.h.column(node - n - 1).keys().map(|v| v.get()).collect()
        })
    }

    pub fn materialize(&self) -> MaterializedGraph {
        let n = self.h.nhv();
        let mut edges = Vec::with_capacity(self.edge_count());
        for vi in 0..n {
            for e in self.h.row(vi).keys() {
                edges.push((vi + 1, n + e.get(), 1.0));
            }
        }
        MaterializedGraph::from_canonical(self.node_count(), edges)
    }
}

impl WeightedGraph for BipartiteView<'_> {
    fn node_count(&self) -> usize {
        BipartiteView::node_count(self)
    }

    fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let n = self.h.nhv();
        let mut adj = Vec::with_capacity(self.node_count());
        for vi in 0..n {
            adj.push(self.h.row(vi).keys().map(|e| (n + e.index(), 1.0)).collect());
        }
        for ei in 0..self.h.nhe() {
            adj.push(self.h.column(ei).keys().map(|v| (v.index(), 1.0)).collect());
        }
        adj
    }
}

/// Clique expansion: `u ~ v` iff they share a hyperedge, weighted by the
/// number of shared hyperedges.
#[derive(Clone, Copy, Debug)]
pub struct TwoSectionView<'a> {
    h: &'a Hypergraph,
}

impl<'a> TwoSectionView<'a> {
    pub fn new(h: &'a Hypergraph) -> Self {
        Self { h }
    }

    pub fn hypergraph(&self) -> &'a Hypergraph {
        self.h
    }

    pub fn node_count(&self) -> usize {
        self.h.nhv()
    }

    /// Shared-hyperedge counts keyed by 0-based neighbor index.
    pub(crate) fn neighbors_at(&self, vi: usize) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for e in self.h.row(vi).keys() {
            for u in self.h.column(e.index()).keys() {
                if u.index() != vi {
                    *out.entry(u.index()).or_insert(0) += 1;
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: VertexId) -> Result<BTreeMap<VertexId, usize>> {
        if v.get() > self.h.nhv() {
            return Err(Error::UnknownVertex(v.get()));
        }
        Ok(self
            .neighbors_at(v.index())
            .into_iter()
            .map(|(u, w)| (VertexId::from_index(u), w))
            .collect())
    }

    /// Number of hyperedges containing both `u` and `v` (0 for `u == v`).
    pub fn weight(&self, u: VertexId, v: VertexId) -> Result<usize> {
        let a = self.h.get_hyperedges(u)?;
        let b = self.h.get_hyperedges(v)?;
        if u == v {
            return Ok(0);
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        Ok(small.keys().filter(|e| large.contains_key(e)).count())
    }

    pub fn edge_count(&self) -> usize {
        (0..self.h.nhv())
            .map(|vi| self.neighbors_at(vi).range(vi + 1..).count())
            .sum()
    }

    pub fn materialize(&self) -> MaterializedGraph {
        let mut edges = Vec::new();
        for vi in 0..self.h.nhv() {
            for (u, w) in self.neighbors_at(vi).range(vi + 1..) {
                edges.push((vi + 1, u + 1, *w as f64));
            }
        }
        MaterializedGraph::from_canonical(self.h.nhv(), edges)
    }
}

impl WeightedGraph for TwoSectionView<'_> {
    fn node_count(&self) -> usize {
        self.h.nhv()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        (0..self.h.nhv())
            .map(|vi| {
                self.neighbors_at(vi)
                    .into_iter()
                    .map(|(u, w)| (u, w as f64))
                    .collect()
            })
            .collect()
    }
}

/// A plain undirected weighted graph with 1-based node ids and canonical
/// `(u, v, w)` edges, `u < v`, sorted and without duplicates.
#[derive(Clone, Debug, PartialEq)]
pub struct MaterializedGraph {
    node_count: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl MaterializedGraph {
    /// Canonicalizes an arbitrary edge list. Parallel edges are merged by
    /// summing their weights.
    pub fn new(node_count: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut merged: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (a, b, w) in edges {
            for x in [a, b] {
                if x == 0 || x > node_count {
                    return Err(Error::UnknownNode(x));
                }
            }
            if a == b {
                return Err(Error::InvalidRecord(format!("self-loop on node {a}")));
            }
            crate::hypergraph::check_weight(w)?;
            *merged.entry((a.min(b), a.max(b))).or_insert(0.0) += w;
        }
        Ok(Self {
            node_count,
            edges: merged.into_iter().map(|((a, b), w)| (a, b, w)).collect(),
        })
    }

    fn from_canonical(node_count: usize, mut edges: Vec<(usize, usize, f64)>) -> Self {
        edges.sort_by_key(|&(a, b, _)| (a, b));
        Self { node_count, edges }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Graphviz rendering. `labels[i]` names node `i + 1` when given.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let name = |i: usize| match labels.and_then(|l| l.get(i - 1)) {
            Some(l) => format!("{l:?}"),
            None => i.to_string(),
        };
        let mut out = String::from("graph {\n");
        for i in 1..=self.node_count {
            let _ = writeln!(out, "  {};", name(i));
        }
        for &(a, b, w) in &self.edges {
            let _ = writeln!(out, "  {} -- {} [weight={}];", name(a), name(b), w);
        }
        out.push_str("}\n");
        out
    }
}

impl WeightedGraph for MaterializedGraph {
    fn node_count(&self) -> usize {
        self.node_count
    }

    fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b, w) in &self.edges {
            adj[a - 1].push((b - 1, w));
            adj[b - 1].push((a - 1, w));
        }
        for list in &mut adj {
            list.sort_by_key(|x| x.0);
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    // e1 = {1,2}, e2 = {2,3}
    fn chain() -> Hypergraph {
        Hypergraph::from_incidence(&[
            vec![Some(1.0), None],
            vec![Some(1.0), Some(1.0)],
            vec![None, Some(1.0)],
        ])
        .unwrap()
    }

    #[test]
    fn bipartite_neighbors() {
        let h = chain();
        let b = BipartiteView::new(&h);
        assert_eq!(b.neighbors(2).unwrap().into_iter().collect::<Vec<_>>(), vec![4, 5]);
        assert_eq!(b.neighbors(4).unwrap().into_iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(b.neighbors(6), Err(Error::UnknownNode(6)));
        assert_eq!(b.neighbors(0), Err(Error::UnknownNode(0)));
    }

    #[test]
    fn twosection_neighbors() {
        let mut h = chain();
        let t = TwoSectionView::new(&h);
        let n: Vec<_> = t.neighbors(v(2)).unwrap().into_iter().collect();
        assert_eq!(n, vec![(v(1), 1), (v(3), 1)]);

        h.add_hyperedge([(v(1), 1.0), (v(2), 1.0)], Value::Null).unwrap();
        let t = TwoSectionView::new(&h);
        let n: Vec<_> = t.neighbors(v(2)).unwrap().into_iter().collect();
        assert_eq!(n, vec![(v(1), 2), (v(3), 1)]);
        assert_eq!(t.weight(v(1), v(2)).unwrap(), 2);
        assert_eq!(t.weight(v(2), v(1)).unwrap(), 2);

        h.add_vertex([], Value::Null).unwrap();
        let t = TwoSectionView::new(&h);
        assert!(t.neighbors(v(4)).unwrap().is_empty());
        assert_eq!(t.neighbors(v(5)), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn materialize_clique() {
        let h = Hypergraph::from_incidence(&[vec![Some(1.0)], vec![Some(1.0)], vec![Some(1.0)]]).unwrap();
        let g = TwoSectionView::new(&h).materialize();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edges(), &[(1, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)]);

        let g = TwoSectionView::new(&Hypergraph::new(3, 0)).materialize();
        assert_eq!((g.node_count(), g.edges().len()), (3, 0));
    }

    #[test]
    fn materialize_bipartite() {
        let h = Hypergraph::from_incidence(&[vec![Some(1.0)], vec![Some(1.0)]]).unwrap();
        let g = BipartiteView::new(&h).materialize();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edges(), &[(1, 3, 1.0), (2, 3, 1.0)]);
    }

    #[test]
    fn singleton_and_empty_hyperedges() {
        // e1 = {1}, e2 = {}
        let h = Hypergraph::from_incidence(&[vec![Some(1.0), None], vec![None, None]]).unwrap();
        assert_eq!(TwoSectionView::new(&h).edge_count(), 0);
        let b = BipartiteView::new(&h);
        assert_eq!(b.node_count(), 4);
        assert!(b.neighbors(4).unwrap().is_empty());
    }

    #[test]
    fn materialized_graph_merges_and_rejects() {
        let g = MaterializedGraph::new(3, [(2, 1, 1.0), (1, 2, 1.0), (3, 2, 0.5)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2, 2.0), (2, 3, 0.5)]);
        assert_eq!(g.adjacency()[1], vec![(0, 2.0), (2, 0.5)]);
        assert!(MaterializedGraph::new(2, [(1, 1, 1.0)]).is_err());
        assert_eq!(MaterializedGraph::new(2, [(1, 3, 1.0)]), Err(Error::UnknownNode(3)));
    }

    #[test]
    fn dot_output() {
        let g = MaterializedGraph::new(2, [(1, 2, 3.0)]).unwrap();
        assert_eq!(g.to_dot(None), "graph {\n  1;\n  2;\n  1 -- 2 [weight=3];\n}\n");
        let labels = vec!["a".to_string(), "b c".to_string()];
        assert!(g.to_dot(Some(&labels)).contains("\"a\" -- \"b c\""));
    }
}
