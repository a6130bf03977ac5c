//! The dual-indexed hypergraph.
//!
//! A hypergraph with `n` vertices and `k` hyperedges behaves like an `n × k`
//! sparse matrix whose entry `(v, e)` is the weight of vertex `v` inside
//! hyperedge `e`. Absence of an entry means non-membership, which is not the
//! same thing as a weight of zero.
//!
//! Incidences are stored twice, once per vertex (`v2he`) and once per
//! hyperedge (`he2v`), so that both row and column queries only touch the
//! incidences they return. Every mutation updates both sides before it
//! returns.
//!
//! Ids are 1-based and always contiguous. Removing a vertex (or hyperedge)
//! relocates the last one into the freed slot and reports that move through
//! an [`IdRemap`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(usize);

        impl $name {
            /// Wraps a 1-based id.
            ///
            /// Panics on `0`, which is never a valid id.
            pub const fn new(id: usize) -> Self {
                assert!(id >= 1, "ids are 1-based");
                Self(id)
            }

            /// Converts a 0-based storage index into an id.
            pub const fn from_index(index: usize) -> Self {
                Self(index + 1)
            }

            /// The 1-based id.
            pub const fn get(self) -> usize {
                self.0
            }

            /// The 0-based storage index.
            pub const fn index(self) -> usize {
                self.0 - 1
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }

        impl From<$name> for usize {
            fn from(id: $name) -> usize {
                id.0
            }
        }
    };
}

id_type!(
    /// Identifier of a vertex (a matrix row), in `1..=nhv`.
    VertexId
);
id_type!(
    /// Identifier of a hyperedge (a matrix column), in `1..=nhe`.
    HyperedgeId
);

/// Old-id to new-id mapping produced by operations that renumber.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdRemap(BTreeMap<usize, usize>);

impl IdRemap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, old: usize, new: usize) {
        self.0.insert(old, new);
    }

    /// Where `old` went, if it is part of the mapping.
    pub fn get(&self, old: usize) -> Option<usize> {
        self.0.get(&old).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&a, &b)| (a, b))
    }
}

impl FromIterator<(usize, usize)> for IdRemap {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

pub(crate) fn check_weight(w: f64) -> Result<f64> {
    if w.is_finite() {
        Ok(w)
    } else {
        Err(Error::NonFiniteWeight(w))
    }
}

/// Weighted hypergraph with optional JSON metadata on vertices and hyperedges.
///
/// Metadata defaults to `Value::Null`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Hypergraph {
    v2he: Vec<BTreeMap<HyperedgeId, f64>>,
    he2v: Vec<BTreeMap<VertexId, f64>>,
    vmeta: Vec<Value>,
    hemeta: Vec<Value>,
}

impl Hypergraph {
    /// `n` isolated vertices and `k` empty hyperedges.
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            v2he: vec![BTreeMap::new(); n],
            he2v: vec![BTreeMap::new(); k],
            vmeta: vec![Value::Null; n],
            hemeta: vec![Value::Null; k],
        }
    }

    /// Builds a hypergraph from a dense grid, one row per vertex and one
    /// column per hyperedge. `None` cells are non-memberships.
    pub fn from_incidence<R: AsRef<[Option<f64>]>>(rows: &[R]) -> Result<Self> {
        let k = rows.first().map_or(0, |r| r.as_ref().len());
        let mut h = Self::new(rows.len(), k);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != k {
                return Err(Error::NonRectangular {
                    row: i + 1,
                    expected: k,
                    found: row.len(),
                });
            }
            for (j, cell) in row.iter().enumerate() {
                if let Some(w) = *cell {
                    h.insert_unchecked(i, j, check_weight(w)?);
                }
            }
        }
        Ok(h)
    }

    /// Dense `n × k` rendering of the incidence pattern.
    pub fn to_incidence(&self) -> Vec<Vec<Option<f64>>> {
        self.v2he
            .iter()
            .map(|row| {
                let mut dense = vec![None; self.nhe()];
                for (e, &w) in row {
                    dense[e.index()] = Some(w);
                }
                dense
            })
            .collect()
    }

    /// Number of vertices.
    pub fn nhv(&self) -> usize {
        self.v2he.len()
    }

    /// Number of hyperedges.
    pub fn nhe(&self) -> usize {
        self.he2v.len()
    }

    /// Total number of (vertex, hyperedge) memberships.
    pub fn incidence_count(&self) -> usize {
        self.he2v.iter().map(BTreeMap::len).sum()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.nhv()).map(VertexId::from_index)
    }

    pub fn hyperedges(&self) -> impl ExactSizeIterator<Item = HyperedgeId> {
        (0..self.nhe()).map(HyperedgeId::from_index)
    }

    fn check_vertex(&self, v: VertexId) -> Result<usize> {
        if v.get() <= self.nhv() {
            Ok(v.index())
        } else {
            Err(Error::UnknownVertex(v.get()))
        }
    }

    fn check_hyperedge(&self, e: HyperedgeId) -> Result<usize> {
        if e.get() <= self.nhe() {
            Ok(e.index())
        } else {
            Err(Error::UnknownHyperedge(e.get()))
        }
    }

    fn insert_unchecked(&mut self, vi: usize, ei: usize, w: f64) -> Option<f64> {
        self.he2v[ei].insert(VertexId::from_index(vi), w);
        self.v2he[vi].insert(HyperedgeId::from_index(ei), w)
    }

    fn remove_unchecked(&mut self, vi: usize, ei: usize) -> Option<f64> {
        self.he2v[ei].remove(&VertexId::from_index(vi));
        self.v2he[vi].remove(&HyperedgeId::from_index(ei))
    }

    /// Adds a vertex, optionally placing it into existing hyperedges.
    ///
    /// Nothing is modified unless every hyperedge id and weight is valid.
    pub fn add_vertex<I>(&mut self, hyperedges: I, meta: Value) -> Result<VertexId>
    where
        I: IntoIterator<Item = (HyperedgeId, f64)>,
    {
        let memberships: Vec<(usize, f64)> = hyperedges
            .into_iter()
            .map(|(e, w)| Ok((self.check_hyperedge(e)?, check_weight(w)?)))
            .collect::<Result<_>>()?;
        let vi = self.nhv();
        self.v2he.push(BTreeMap::new());
        self.vmeta.push(meta);
        for (ei, w) in memberships {
            self.insert_unchecked(vi, ei, w);
        }
        Ok(VertexId::from_index(vi))
    }

    /// Adds a hyperedge over existing vertices.
    pub fn add_hyperedge<I>(&mut self, vertices: I, meta: Value) -> Result<HyperedgeId>
    where
        I: IntoIterator<Item = (VertexId, f64)>,
    {
        let members: Vec<(usize, f64)> = vertices
            .into_iter()
            .map(|(v, w)| Ok((self.check_vertex(v)?, check_weight(w)?)))
            .collect::<Result<_>>()?;
        let ei = self.nhe();
        self.he2v.push(BTreeMap::new());
        self.hemeta.push(meta);
        for (vi, w) in members {
            self.insert_unchecked(vi, ei, w);
        }
        Ok(HyperedgeId::from_index(ei))
    }

    /// Removes `v` and moves the last vertex into its slot.
    ///
    /// The returned remap is empty when `v` was the last vertex, otherwise it
    /// holds the single entry `old last id -> v`.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<IdRemap> {
        let vi = self.check_vertex(v)?;
        for e in self.v2he[vi].keys() {
            self.he2v[e.index()].remove(&v);
        }
        let last = self.nhv() - 1;
        let mut remap = IdRemap::new();
        if vi != last {
            let moved = VertexId::from_index(last);
            for e in self.v2he[last].keys() {
                let col = &mut self.he2v[e.index()];
                let w = col.remove(&moved).expect("dual index out of sync");
                col.insert(v, w);
            }
            remap.insert(moved.get(), v.get());
        }
        self.v2he.swap_remove(vi);
        self.vmeta.swap_remove(vi);
        Ok(remap)
    }

    /// Removes `e` and moves the last hyperedge into its slot.
    pub fn remove_hyperedge(&mut self, e: HyperedgeId) -> Result<IdRemap> {
        let ei = self.check_hyperedge(e)?;
        for v in self.he2v[ei].keys() {
            self.v2he[v.index()].remove(&e);
        }
        let last = self.nhe() - 1;
        let mut remap = IdRemap::new();
        if ei != last {
            let moved = HyperedgeId::from_index(last);
            for v in self.he2v[last].keys() {
                let row = &mut self.v2he[v.index()];
                let w = row.remove(&moved).expect("dual index out of sync");
                row.insert(e, w);
            }
            remap.insert(moved.get(), e.get());
        }
        self.he2v.swap_remove(ei);
        self.hemeta.swap_remove(ei);
        Ok(remap)
    }

    /// Sets (`Some`) or deletes (`None`) the incidence `(v, e)` and returns
    /// the previous weight.
    pub fn set_weight(&mut self, v: VertexId, e: HyperedgeId, w: Option<f64>) -> Result<Option<f64>> {
        let vi = self.check_vertex(v)?;
        let ei = self.check_hyperedge(e)?;
        Ok(match w {
            Some(w) => self.insert_unchecked(vi, ei, check_weight(w)?),
            None => self.remove_unchecked(vi, ei),
        })
    }

    pub fn get_weight(&self, v: VertexId, e: HyperedgeId) -> Result<Option<f64>> {
        let vi = self.check_vertex(v)?;
        self.check_hyperedge(e)?;
        Ok(self.v2he[vi].get(&e).copied())
    }

    /// Members of `e` with their weights.
    pub fn get_vertices(&self, e: HyperedgeId) -> Result<&BTreeMap<VertexId, f64>> {
        let ei = self.check_hyperedge(e)?;
        Ok(&self.he2v[ei])
    }

    /// Hyperedges containing `v` with the weight of `v` in each.
    pub fn get_hyperedges(&self, v: VertexId) -> Result<&BTreeMap<HyperedgeId, f64>> {
        let vi = self.check_vertex(v)?;
        Ok(&self.v2he[vi])
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.get_hyperedges(v).map(BTreeMap::len)
    }

    /// Number of members of `e`.
    pub fn hyperedge_size(&self, e: HyperedgeId) -> Result<usize> {
        self.get_vertices(e).map(BTreeMap::len)
    }

    /// Replaces the metadata of `v`, returning the old value.
    pub fn set_vertex_meta(&mut self, v: VertexId, meta: Value) -> Result<Value> {
        let vi = self.check_vertex(v)?;
        Ok(std::mem::replace(&mut self.vmeta[vi], meta))
    }

    pub fn get_vertex_meta(&self, v: VertexId) -> Result<&Value> {
        let vi = self.check_vertex(v)?;
        Ok(&self.vmeta[vi])
    }

    pub fn set_hyperedge_meta(&mut self, e: HyperedgeId, meta: Value) -> Result<Value> {
        let ei = self.check_hyperedge(e)?;
        Ok(std::mem::replace(&mut self.hemeta[ei], meta))
    }

    pub fn get_hyperedge_meta(&self, e: HyperedgeId) -> Result<&Value> {
        let ei = self.check_hyperedge(e)?;
        Ok(&self.hemeta[ei])
    }

    /// Verifies that both indexes describe the same incidences.
    pub fn check_consistency(&self) -> Result<()> {
        for (vi, row) in self.v2he.iter().enumerate() {
            let v = VertexId::from_index(vi);
            for (&e, &w) in row {
                if self.he2v.get(e.index()).and_then(|col| col.get(&v)) != Some(&w) {
                    return Err(Error::DualInconsistency {
                        vertex: v.get(),
                        hyperedge: e.get(),
                    });
                }
            }
        }
        for (ei, col) in self.he2v.iter().enumerate() {
            let e = HyperedgeId::from_index(ei);
            for (&v, &w) in col {
                if self.v2he.get(v.index()).and_then(|row| row.get(&e)) != Some(&w) {
                    return Err(Error::DualInconsistency {
                        vertex: v.get(),
                        hyperedge: e.get(),
                    });
                }
            }
        }
        Ok(())
    }

    // 0-based fast paths for the algorithm modules.

    pub(crate) fn row(&self, vi: usize) -> &BTreeMap<HyperedgeId, f64> {
        &self.v2he[vi]
    }

    pub(crate) fn column(&self, ei: usize) -> &BTreeMap<VertexId, f64> {
        &self.he2v[ei]
    }

    pub(crate) fn vertex_meta_slice(&self) -> &[Value] {
        &self.vmeta
    }

    pub(crate) fn hyperedge_meta_slice(&self) -> &[Value] {
        &self.hemeta
    }

    /// Rebuilds a hypergraph from per-vertex rows; used by deserializers that
    /// have already validated ids and weights.
    pub(crate) fn from_parts(
        v2he: Vec<BTreeMap<HyperedgeId, f64>>,
        he2v: Vec<BTreeMap<VertexId, f64>>,
        vmeta: Vec<Value>,
        hemeta: Vec<Value>,
    ) -> Self {
        debug_assert_eq!(v2he.len(), vmeta.len());
        debug_assert_eq!(he2v.len(), hemeta.len());
        Self {
            v2he,
            he2v,
            vmeta,
            hemeta,
        }
    }
}
