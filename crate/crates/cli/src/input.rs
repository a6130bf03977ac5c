//! Loading hypergraphs and their labels from any supported input format.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use hyperweave::io::{
    build_from_reviews, build_from_scenes, item_mean_stars, largest_connected_component, read_hgf, read_json,
    read_reviews_csv, read_scenes_json, ReviewRecord,
};
use hyperweave::{Hypergraph, VertexId};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Hgf,
    Json,
    ReviewsCsv,
    ScenesJson,
}

impl InputFormat {
    fn guess(path: &Path, text: &str) -> Result<Self, CliError> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("hgf") => Ok(Self::Hgf),
            Some("csv") => Ok(Self::ReviewsCsv),
            Some("json") if text.trim_start().starts_with('[') => Ok(Self::ScenesJson),
            Some("json") => Ok(Self::Json),
            _ => Err(CliError::Usage(format!(
                "cannot tell the format of {}; pass --format",
                path.display()
            ))),
        }
    }
}

/// A loaded hypergraph with display labels for vertices and hyperedges.
pub struct Dataset {
    pub hypergraph: Hypergraph,
    pub vertex_labels: Vec<String>,
    pub hyperedge_labels: Vec<String>,
    /// mean stars per vertex, reviews input only
    pub ratings: Option<Vec<f64>>,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn meta_label(meta: &Value, fallback: String) -> String {
    match meta {
        Value::Null => fallback,
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn labelled(h: Hypergraph) -> Dataset {
    let vertex_labels = h
        .vertices()
        .map(|v| meta_label(h.get_vertex_meta(v).expect("live vertex"), v.to_string()))
        .collect();
    let hyperedge_labels = h
        .hyperedges()
        .map(|e| meta_label(h.get_hyperedge_meta(e).expect("live hyperedge"), format!("e{e}")))
        .collect();
    Dataset {
        hypergraph: h,
        vertex_labels,
        hyperedge_labels,
        ratings: None,
    }
}

pub fn load(
    path: &Path,
    format: Option<InputFormat>,
    stars: &[u8],
    lcc: bool,
) -> Result<(Dataset, InputFormat), CliError> {
    let text = read_text(path)?;
    let format = match format {
        Some(f) => f,
        None => InputFormat::guess(path, &text)?,
    };
    if !stars.is_empty() && format != InputFormat::ReviewsCsv {
        return Err(CliError::Usage("--stars only applies to reviews-csv input".into()));
    }
    let dataset = if text.is_empty() {
        match format {
            InputFormat::ReviewsCsv => reviews(&[], stars),
            _ => labelled(Hypergraph::new(0, 0)),
        }
    } else {
        match format {
            InputFormat::Hgf => labelled(read_hgf(&text)?),
            InputFormat::Json => labelled(read_json(&text)?),
            InputFormat::ScenesJson => {
                let built = build_from_scenes(&read_scenes_json(&text)?);
                Dataset {
                    hypergraph: built.hypergraph,
                    vertex_labels: built.vertex_labels,
                    hyperedge_labels: built.hyperedge_labels,
                    ratings: None,
                }
            }
            InputFormat::ReviewsCsv => reviews(&read_reviews_csv(text.as_bytes())?, stars),
        }
    };
    Ok((if lcc { restrict(dataset) } else { dataset }, format))
}

fn reviews(records: &[ReviewRecord], stars: &[u8]) -> Dataset {
    let filter: BTreeSet<u8> = stars.iter().copied().collect();
    let built = build_from_reviews(records, (!filter.is_empty()).then_some(&filter));
    let ratings = item_mean_stars(records, &built);
    Dataset {
        hypergraph: built.hypergraph,
        vertex_labels: built.vertex_labels,
        hyperedge_labels: built.hyperedge_labels,
        ratings: Some(ratings),
    }
}

fn restrict(d: Dataset) -> Dataset {
    let sub = largest_connected_component(&d.hypergraph);
    let pick = |labels: &[String], map: &hyperweave::IdRemap, len: usize| {
        let mut out = vec![String::new(); len];
        for (old, new) in map.iter() {
            out[new - 1] = labels[old - 1].clone();
        }
        out
    };
    let ratings = d.ratings.as_ref().map(|r| {
        let mut out = vec![0.0; sub.hypergraph.nhv()];
        for (old, new) in sub.vertex_map.iter() {
            out[new - 1] = r[old - 1];
        }
        out
    });
    Dataset {
        vertex_labels: pick(&d.vertex_labels, &sub.vertex_map, sub.hypergraph.nhv()),
        hyperedge_labels: pick(&d.hyperedge_labels, &sub.hyperedge_map, sub.hypergraph.nhe()),
        hypergraph: sub.hypergraph,
        ratings,
    }
}

impl Dataset {
    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertex_labels[v.index()]
    }
}
