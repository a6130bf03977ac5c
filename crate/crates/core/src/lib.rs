//! Hypergraph analytics.
//!
//! A [`Hypergraph`] is a sparse vertex-by-hyperedge weight matrix indexed
//! both ways. On top of it the crate provides
//!
//! - bipartite and two-section [views](views) that read the incidences in place,
//! - HGF text and JSON [serialization](io), plus builders for review tables and scene lists,
//! - [analytics]: connected components, random walks, degree centrality, modularity,
//! - [community] detection by label propagation and partition comparison by NMI,
//! - [centrality]: s-adjacency and s-betweenness,
//! - [forecast]: neighborhood rating predictors.

pub mod analytics;
pub mod centrality;
pub mod community;
mod error;
pub mod forecast;
mod hypergraph;
pub mod io;
mod partition;
pub mod views;

pub use centrality::CentralityVector;
pub use error::{Error, ErrorFamily, Result};
pub use hypergraph::{HyperedgeId, Hypergraph, IdRemap, VertexId};
pub use partition::Partition;
pub use views::{BipartiteView, MaterializedGraph, TwoSectionView, WeightedGraph};
