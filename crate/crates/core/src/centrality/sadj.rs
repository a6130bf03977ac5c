use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// Vertices joined when they share at least `s` hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SAdjacency {
    s: usize,
    neighbors: Vec<Vec<usize>>,
}

impl SAdjacency {
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn node_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> Result<impl Iterator<Item = VertexId> + '_> {
        let list = self.neighbors.get(v.index()).ok_or(Error::UnknownVertex(v.get()))?;
        Ok(list.iter().map(|&u| VertexId::from_index(u)))
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors
            .get(u.index())
            .is_some_and(|l| l.binary_search(&v.index()).is_ok())
    }

    /// Canonical `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.neighbors.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push((VertexId::from_index(u), VertexId::from_index(v)));
            }
        }
        out
    }

    /// 0-based sorted neighbor lists.
    pub(crate) fn lists(&self) -> &[Vec<usize>] {
        &self.neighbors
    }
}

/// Builds the s-adjacency by counting, for each vertex, how many hyperedges
/// it shares with every co-member. Work is proportional to the sum of
/// squared hyperedge sizes; only pairs that reach `s` are stored.
pub fn s_adjacency(h: &Hypergraph, s: usize) -> Result<SAdjacency> {
    if s < 1 {
        return Err(Error::InvalidS(s));
    }
    let n = h.nhv();
    let mut shared = vec![0usize; n];
    let mut touched = Vec::new();
    let mut neighbors = Vec::with_capacity(n);
    for vi in 0..n {
        for e in h.row(vi).keys() {
            for u in h.column(e.index()).keys() {
                let ui = u.index();
                if ui == vi {
                    continue;
                }
                if shared[ui] == 0 {
                    touched.push(ui);
                }
                shared[ui] += 1;
            }
        }
        let mut list: Vec<usize> = touched.iter().copied().filter(|&u| shared[u] >= s).collect();
        list.sort_unstable();
        for &u in &touched {
            shared[u] = 0;
        }
        touched.clear();
        neighbors.push(list);
    }
    Ok(SAdjacency { s, neighbors })
}

/// Hop count of a shortest s-walk from `u` to `v`, `None` when unreachable.
pub fn s_shortest_path_length(adj: &SAdjacency, u: VertexId, v: VertexId) -> Result<Option<usize>> {
    let n = adj.node_count();
    for x in [u, v] {
        if x.get() > n {
            return Err(Error::UnknownVertex(x.get()));
        }
    }
    let (src, dst) = (u.index(), v.index());
    let mut dist = vec![usize::MAX; n];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        if x == dst {
            return Ok(Some(dist[x]));
        }
        for &y in &adj.neighbors[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::views::TwoSectionView;
    use serde_json::Value;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    // e1={1,2,3}, e2={1,2,4}, e3={2,3}
    fn instance() -> Hypergraph {
        let mut h = Hypergraph::new(4, 0);
        for m in [&[1, 2, 3][..], &[1, 2, 4], &[2, 3]] {
            h.add_hyperedge(m.iter().map(|&x| (v(x), 1.0)), Value::Null).unwrap();
        }
        h
    }

    fn pairs(a: &SAdjacency) -> Vec<(usize, usize)> {
        a.edges().into_iter().map(|(x, y)| (x.get(), y.get())).collect()
    }

    #[test]
    fn levels() {
        let h = instance();
        assert_eq!(pairs(&s_adjacency(&h, 1).unwrap()), vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(pairs(&s_adjacency(&h, 2).unwrap()), vec![(1, 2), (2, 3)]);
        assert!(pairs(&s_adjacency(&h, 3).unwrap()).is_empty());
        assert_eq!(s_adjacency(&h, 0), Err(Error::InvalidS(0)));
    }

    #[test]
    fn s1_is_two_section_pattern() {
        let h = instance();
        let a = s_adjacency(&h, 1).unwrap();
        let g = TwoSectionView::new(&h).materialize();
        let expected: Vec<(usize, usize)> = g.edges().iter().map(|&(x, y, _)| (x, y)).collect();
        assert_eq!(pairs(&a), expected);
    }

    #[test]
    fn path_lengths() {
        let a = s_adjacency(&instance(), 2).unwrap();
        assert_eq!(s_shortest_path_length(&a, v(1), v(3)).unwrap(), Some(2));
        assert_eq!(s_shortest_path_length(&a, v(1), v(1)).unwrap(), Some(0));
        assert_eq!(s_shortest_path_length(&a, v(1), v(4)).unwrap(), None);
        assert_eq!(s_shortest_path_length(&a, v(1), v(5)), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn neighbor_queries() {
        let a = s_adjacency(&instance(), 2).unwrap();
        assert_eq!(a.neighbors(v(2)).unwrap().map(VertexId::get).collect::<Vec<_>>(), vec![1, 3]);
        assert!(a.contains(v(3), v(2)));
        assert!(!a.contains(v(1), v(3)));
        assert_eq!(a.edge_count(), 2);
    }
}
