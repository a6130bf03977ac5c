//! Hypergraph modularity (strict variant) and Newman modularity for graphs.
//!
//! For a partition `P` of a hypergraph with `m` nonempty hyperedges,
//!
//! ```text
//! Q_H(P) = (1/m) * sum_A e(A)  -  sum_d (E_d / m) * sum_A (vol(A) / vol(V))^d
//! ```
//!
//! where `e(A)` counts hyperedges entirely inside `A`, `E_d` counts hyperedges
//! of size `d` and `vol` sums unweighted vertex degrees. Empty hyperedges are
//! ignored throughout.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;
use crate::views::WeightedGraph;

/// Degrees, total volume and hyperedge size histogram of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    /// `degrees[i]` = number of hyperedges containing vertex `i + 1`
    pub degrees: Vec<usize>,
    /// hyperedge size -> number of hyperedges of that size (size 0 included)
    pub size_counts: BTreeMap<usize, usize>,
    pub volume: usize,
}

pub fn degree_summary(h: &Hypergraph) -> DegreeSummary {
    let degrees: Vec<usize> = (0..h.nhv()).map(|vi| h.row(vi).len()).collect();
    let mut size_counts = BTreeMap::new();
    for ei in 0..h.nhe() {
        *size_counts.entry(h.column(ei).len()).or_insert(0) += 1;
    }
    DegreeSummary {
        volume: degrees.iter().sum(),
        degrees,
        size_counts,
    }
}

fn check_total(p: &Partition, n: usize) -> Result<()> {
    if p.len() != n {
        return Err(Error::PartitionNotTotal(format!(
            "partition covers {} vertices, expected {n}",
            p.len()
        )));
    }
    Ok(())
}

pub fn hypergraph_modularity(h: &Hypergraph, p: &Partition) -> Result<f64> {
    check_total(p, h.nhv())?;
    if h.nhe() == 0 {
        return Err(Error::NoHyperedges);
    }
    let summary = degree_summary(h);
    let m: usize = summary.size_counts.iter().filter(|(&d, _)| d > 0).map(|(_, &c)| c).sum();
    if m == 0 || summary.volume == 0 {
        return Err(Error::NoUsableHyperedges);
    }
    let labels = p.labels();

    let inside = (0..h.nhe())
        .filter(|&ei| {
            let mut members = h.column(ei).keys();
            match members.next() {
                None => false,
                Some(first) => {
                    let l = labels[first.index()];
                    members.all(|v| labels[v.index()] == l)
                }
            }
        })
        .count();

    let mut community_volume: HashMap<usize, usize> = HashMap::new();
    for (i, &d) in summary.degrees.iter().enumerate() {
        *community_volume.entry(labels[i]).or_insert(0) += d;
    }
    let mut fractions: Vec<f64> = community_volume
        .values()
        .filter(|&&vol| vol > 0)
        .map(|&vol| vol as f64 / summary.volume as f64)
        .collect();
    fractions.sort_by(f64::total_cmp);

    let expected: f64 = summary
        .size_counts
        .iter()
        .filter(|(&d, _)| d > 0)
        .map(|(&d, &count)| {
            let tax: f64 = fractions.iter().map(|f| f.powi(d as i32)).sum();
            count as f64 * tax
        })
        .sum::<f64>()
        / m as f64;

    Ok(inside as f64 / m as f64 - expected)
}

/// Newman weighted modularity `Q = sum_c [ W_c / m - (K_c / 2m)^2 ]`, with
/// `W_c` the edge weight inside community `c`, `K_c` its weighted degree and
/// `m` the total edge weight.
pub fn graph_modularity<G: WeightedGraph + ?Sized>(g: &G, p: &Partition) -> Result<f64> {
    check_total(p, g.node_count())?;
    let adj = g.adjacency();
    let labels = p.labels();
    let mut inside: HashMap<usize, f64> = HashMap::new();
    let mut strength: HashMap<usize, f64> = HashMap::new();
    let mut twice_m = 0.0;
    for (u, list) in adj.iter().enumerate() {
        for &(v, w) in list {
            twice_m += w;
            *strength.entry(labels[u]).or_insert(0.0) += w;
            if labels[u] == labels[v] {
                *inside.entry(labels[u]).or_insert(0.0) += w;
            }
        }
    }
    if twice_m == 0.0 {
        return Err(Error::EmptyGraph);
    }
    let mut keys: Vec<usize> = strength.keys().copied().collect();
    keys.sort_unstable();
    Ok(keys
        .into_iter()
        .map(|c| {
            let k = strength[&c] / twice_m;
            inside.get(&c).copied().unwrap_or(0.0) / twice_m - k * k
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::VertexId;
    use crate::views::MaterializedGraph;
    use serde_json::Value;

    fn build(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let mut h = Hypergraph::new(n, 0);
        for e in edges {
            h.add_hyperedge(e.iter().map(|&x| (VertexId::new(x), 1.0)), Value::Null).unwrap();
        }
        h
    }

    #[test]
    fn hand_instance() {
        let h = build(4, &[&[1, 2], &[3, 4], &[1, 3]]);
        let q = hypergraph_modularity(&h, &Partition::from_labels(vec![0, 0, 1, 1])).unwrap();
        assert!((q - 1.0 / 6.0).abs() < 1e-12, "{q}");
        let q = hypergraph_modularity(&h, &Partition::singletons(4)).unwrap();
        assert!((q + 5.0 / 18.0).abs() < 1e-12, "{q}");
        let q = hypergraph_modularity(&h, &Partition::whole(4)).unwrap();
        assert!(q.abs() < 1e-12);
    }

    #[test]
    fn empty_hyperedges_do_not_count() {
        let mut h = build(4, &[&[1, 2], &[3, 4], &[1, 3]]);
        h.add_hyperedge([], Value::Null).unwrap();
        let q = hypergraph_modularity(&h, &Partition::from_labels(vec![0, 0, 1, 1])).unwrap();
        assert!((q - 1.0 / 6.0).abs() < 1e-12);
        assert!(hypergraph_modularity(&h, &Partition::whole(4)).unwrap().abs() < 1e-12);
    }

    #[test]
    fn modularity_errors() {
        let h = build(3, &[]);
        assert_eq!(hypergraph_modularity(&h, &Partition::whole(3)), Err(Error::NoHyperedges));
        let h = build(3, &[&[]]);
        assert_eq!(hypergraph_modularity(&h, &Partition::whole(3)), Err(Error::NoUsableHyperedges));
        let h = build(3, &[&[1, 2]]);
        assert!(matches!(
            hypergraph_modularity(&h, &Partition::whole(2)),
            Err(Error::PartitionNotTotal(_))
        ));
    }

    #[test]
    fn newman_hand_values() {
        let g = MaterializedGraph::new(4, [(1, 2, 1.0), (3, 4, 1.0)]).unwrap();
        let q = graph_modularity(&g, &Partition::from_labels(vec![0, 0, 1, 1])).unwrap();
        assert!((q - 0.5).abs() < 1e-15);

        let g = MaterializedGraph::new(2, [(1, 2, 1.0)]).unwrap();
        assert!(graph_modularity(&g, &Partition::whole(2)).unwrap().abs() < 1e-15);
        assert!((graph_modularity(&g, &Partition::singletons(2)).unwrap() + 0.5).abs() < 1e-15);

        let g = MaterializedGraph::new(2, []).unwrap();
        assert_eq!(graph_modularity(&g, &Partition::whole(2)), Err(Error::EmptyGraph));
    }

    #[test]
    fn summary_invariants() {
        let h = build(4, &[&[1, 2, 3], &[1], &[], &[2, 4]]);
        let s = degree_summary(&h);
        assert_eq!(s.degrees, vec![2, 2, 1, 1]);
        assert_eq!(s.volume, s.size_counts.iter().map(|(d, c)| d * c).sum::<usize>());
        assert_eq!(s.size_counts.values().sum::<usize>(), h.nhe());
    }
}
