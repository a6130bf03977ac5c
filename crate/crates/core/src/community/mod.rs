//! Label propagation (graph and two-phase hypergraph variants) and
//! normalized mutual information between partitions.

mod lp;
mod nmi;

pub use lp::{graph_label_propagation, hypergraph_label_propagation, LpConfig, LpOutcome, UpdateOrder};
pub use nmi::{entropy, mutual_information, nmi};
