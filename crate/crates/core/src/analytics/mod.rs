//! Connectivity, random walks, degree centrality and modularity.

mod components;
mod degree;
mod modularity;
mod walk;

pub use crate::partition::Partition;
pub use components::connected_components;
pub use degree::{degree_centrality, graph_degree_centrality};
pub use modularity::{degree_summary, graph_modularity, hypergraph_modularity, DegreeSummary};
pub use walk::{
    random_walk, random_walk_step, random_walk_step_with, transition_kernel, HyperedgeSelector, Uniform,
    VertexSelector,
};
