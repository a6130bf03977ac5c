//! Synthetic workloads shared by the benchmarks.

use hyperweave::io::ReviewRecord;
use hyperweave::{Hypergraph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

/// `records` reviews by `users` users over `items` items, stars uniform in 1..=5.
pub fn synthetic_reviews(records: usize, users: usize, items: usize, seed: u64) -> Vec<ReviewRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..records)
        .map(|_| {
            let u = rng.random_range(0..users);
            let b = rng.random_range(0..items);
            ReviewRecord::new(format!("u{u}"), format!("b{b}"), rng.random_range(1..=5)).expect("stars in range")
        })
        .collect()
}

/// `k` hyperedges over `n` vertices with sizes uniform in `2..=max_size`.
pub fn random_hypergraph(n: usize, k: usize, max_size: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Hypergraph::new(n, 0);
    for _ in 0..k {
        let size = rng.random_range(2..=max_size);
        let members: Vec<(VertexId, f64)> = (0..size)
            .map(|_| (VertexId::from_index(rng.random_range(0..n)), 1.0))
            .collect();
        h.add_hyperedge(members, Value::Null).expect("ids in range");
    }
    h
}
