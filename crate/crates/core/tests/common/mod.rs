#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperweave::analytics::connected_components;
use hyperweave::{HyperedgeId, Hypergraph, Partition, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unit-weight hypergraph where each incidence is present with probability `p`.
pub fn bernoulli(rng: &mut impl Rng, n: usize, k: usize, p: f64) -> Hypergraph {
    let rows: Vec<Vec<Option<f64>>> = (0..n)
        .map(|_| (0..k).map(|_| rng.random_bool(p).then_some(1.0)).collect())
        .collect();
    let mut h = Hypergraph::from_incidence(&rows).unwrap();
    if n == 0 {
        h = Hypergraph::new(0, k);
    }
    h
}

/// `incidences` random unit-weight incidences (duplicates collapse).
pub fn sparse(rng: &mut impl Rng, n: usize, k: usize, incidences: usize) -> Hypergraph {
    let mut h = Hypergraph::new(n, k);
    if n > 0 && k > 0 {
        for _ in 0..incidences {
            let v = VertexId::from_index(rng.random_range(0..n));
            let e = HyperedgeId::from_index(rng.random_range(0..k));
            h.set_weight(v, e, Some(1.0)).unwrap();
        }
    }
    h
}

/// Hyperedges of random size in `sizes`, members drawn without replacement.
pub fn sized(rng: &mut impl Rng, n: usize, k: usize, sizes: std::ops::RangeInclusive<usize>) -> Hypergraph {
    let mut h = Hypergraph::new(n, 0);
    for _ in 0..k {
        let size = rng.random_range(sizes.clone()).min(n);
        let members = rand::seq::index::sample(rng, n, size);
        h.add_hyperedge(members.iter().map(|i| (VertexId::from_index(i), 1.0)), Value::Null)
            .unwrap();
    }
    h
}

/// Like [`sized`] but regenerated until the whole hypergraph is connected.
pub fn connected(rng: &mut impl Rng, n: usize, k: usize, sizes: std::ops::RangeInclusive<usize>) -> Hypergraph {
    loop {
        let h = sized(rng, n, k, sizes.clone());
        if connected_components(&h).len() == 1 {
            return h;
        }
    }
}

/// Arbitrary weights and metadata, including awkward floats.
pub fn decorated(rng: &mut impl Rng, n: usize, k: usize) -> Hypergraph {
    let mut h = bernoulli(rng, n, k, 0.3);
    for v in h.vertices().collect::<Vec<_>>() {
        let es: Vec<HyperedgeId> = h.get_hyperedges(v).unwrap().keys().copied().collect();
        for e in es {
            h.set_weight(v, e, Some(awkward_float(rng))).unwrap();
        }
        if rng.random_bool(0.5) {
            h.set_vertex_meta(v, json!({"name": format!("v{v}"), "x": awkward_float(rng)}))
                .unwrap();
        }
    }
    for e in h.hyperedges().collect::<Vec<_>>() {
        if rng.random_bool(0.5) {
            h.set_hyperedge_meta(e, json!(format!("edge \"{e}\"\n"))).unwrap();
        }
    }
    h
}

pub fn awkward_float(rng: &mut impl Rng) -> f64 {
    match rng.random_range(0..6) {
        0 => 1.0,
        1 => rng.random_range(-1e6..1e6),
        2 => rng.random::<f64>() * 1e-300,
        3 => f64::from_bits(rng.random::<u64>() & 0x7fef_ffff_ffff_ffff),
        4 => -(rng.random_range(0..100) as f64),
        _ => 1.0 / rng.random_range(1..1000) as f64,
    }
}

/// Two disjoint groups of `group` vertices with `per_group` hyperedges of
/// size 2 to 10 each, every group connected, no bridges. Returns the hypergraph and the truth.
pub fn planted(rng: &mut impl Rng, group: usize, per_group: usize) -> (Hypergraph, Partition) {
    let a = connected(rng, group, per_group, 2..=10);
    let b = connected(rng, group, per_group, 2..=10);
    let mut h = Hypergraph::new(2 * group, 0);
    for (offset, part) in [(0, &a), (group, &b)] {
        for e in part.hyperedges() {
            let members = part.get_vertices(e).unwrap();
            h.add_hyperedge(
                members.keys().map(|v| (VertexId::from_index(v.index() + offset), 1.0)),
                Value::Null,
            )
            .unwrap();
        }
    }
    let truth = Partition::from_labels((0..2 * group).map(|i| i / group).collect());
    (h, truth)
}

pub fn random_partition(rng: &mut impl Rng, n: usize, max_labels: usize) -> Partition {
    Partition::from_labels((0..n).map(|_| rng.random_range(0..max_labels.max(1))).collect())
}

pub fn member_sets(h: &Hypergraph) -> Vec<BTreeSet<usize>> {
    h.hyperedges()
        .map(|e| h.get_vertices(e).unwrap().keys().map(|v| v.get()).collect())
        .collect()
}
