//! Serialization formats and dataset ingestion.

mod hgf;
mod ingest;
mod json;
mod partition;

pub use hgf::{read_hgf, write_hgf};
pub use ingest::{
    build_from_reviews, build_from_scenes, item_mean_stars, largest_connected_component, read_reviews_csv,
    read_scenes_json, LabeledHypergraph, ReviewRecord, SceneRecord, Subhypergraph,
};
pub use json::{read_json, write_json, FORMAT_VERSION};
pub use partition::{
    read_partition_csv, read_partition_json, write_partition_csv, write_partition_json, Assignment,
};
