//! One-step random walks: pick a hyperedge containing the current vertex,
//! then a vertex inside that hyperedge.

use std::collections::BTreeMap;

use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::hypergraph::{HyperedgeId, Hypergraph, VertexId};

/// Chooses the hyperedge to leave `v` through. Must return a hyperedge
/// containing `v`.
pub trait HyperedgeSelector {
    fn select(&self, h: &Hypergraph, v: VertexId, rng: &mut dyn RngCore) -> HyperedgeId;
}

/// Chooses the destination inside `e`. Must return a member of `e`.
pub trait VertexSelector {
    fn select(&self, h: &Hypergraph, v: VertexId, e: HyperedgeId, rng: &mut dyn RngCore) -> VertexId;
}

/// Uniform choice, for either step. The source vertex is a valid destination.
#[derive(Clone, Copy, Debug, Default)]
pub struct Uniform;

impl HyperedgeSelector for Uniform {
    fn select(&self, h: &Hypergraph, v: VertexId, rng: &mut dyn RngCore) -> HyperedgeId {
        let row = h.row(v.index());
        *row.keys().nth(rng.random_range(0..row.len())).expect("index in range")
    }
}

impl VertexSelector for Uniform {
    fn select(&self, h: &Hypergraph, _v: VertexId, e: HyperedgeId, rng: &mut dyn RngCore) -> VertexId {
        let col = h.column(e.index());
        *col.keys().nth(rng.random_range(0..col.len())).expect("index in range")
    }
}

impl<F> HyperedgeSelector for F
where
    F: Fn(&Hypergraph, VertexId, &mut dyn RngCore) -> HyperedgeId,
{
    fn select(&self, h: &Hypergraph, v: VertexId, rng: &mut dyn RngCore) -> HyperedgeId {
        self(h, v, rng)
    }
}

impl<F> VertexSelector for F
where
    F: Fn(&Hypergraph, VertexId, HyperedgeId, &mut dyn RngCore) -> VertexId,
{
    fn select(&self, h: &Hypergraph, v: VertexId, e: HyperedgeId, rng: &mut dyn RngCore) -> VertexId {
        self(h, v, e, rng)
    }
}

/// One step with uniform hyperedge and vertex choice.
pub fn random_walk_step<R: RngCore>(h: &Hypergraph, v: VertexId, rng: &mut R) -> Result<VertexId> {
    random_walk_step_with(h, v, &Uniform, &Uniform, rng)
}

/// One step with caller-supplied selectors. Selector outputs are checked.
pub fn random_walk_step_with<R, HS, VS>(
    h: &Hypergraph,
    v: VertexId,
    heselect: &HS,
    vselect: &VS,
    rng: &mut R,
) -> Result<VertexId>
where
    R: RngCore,
    HS: HyperedgeSelector + ?Sized,
    VS: VertexSelector + ?Sized,
{
    if h.get_hyperedges(v)?.is_empty() {
        return Err(Error::IsolatedVertex(v.get()));
    }
    let e = heselect.select(h, v, rng);
    if !h.get_hyperedges(v)?.contains_key(&e) {
        return Err(Error::SelectorContract(format!("hyperedge {e}")));
    }
    let u = vselect.select(h, v, e, rng);
    if !h.get_vertices(e)?.contains_key(&u) {
        return Err(Error::SelectorContract(format!("vertex {u}")));
    }
    Ok(u)
}

/// A walk of `steps` uniform steps; the returned path starts at `start`.
pub fn random_walk<R: RngCore>(h: &Hypergraph, start: VertexId, steps: usize, rng: &mut R) -> Result<Vec<VertexId>> {
    let mut path = Vec::with_capacity(steps + 1);
    path.push(start);
    let mut at = start;
    for _ in 0..steps {
        at = random_walk_step(h, at, rng)?;
        path.push(at);
    }
    Ok(path)
}

/// Exact one-step distribution of the uniform walk from `v`:
/// `P(u | v) = sum over e containing v and u of 1 / (deg(v) * |e|)`.
pub fn transition_kernel(h: &Hypergraph, v: VertexId) -> Result<BTreeMap<VertexId, f64>> {
    let row = h.get_hyperedges(v)?;
    if row.is_empty() {
        return Err(Error::IsolatedVertex(v.get()));
    }
    let deg = row.len() as f64;
    let mut out = BTreeMap::new();
    for e in row.keys() {
        let members = h.column(e.index());
        let p = 1.0 / (deg * members.len() as f64);
        for &u in members.keys() {
            *out.entry(u).or_insert(0.0) += p;
        }
    }
    Ok(out)
}
