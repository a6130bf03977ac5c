//! JSON hypergraph documents.
//!
//! `v2he[i]` maps hyperedge ids to the weight of vertex `i + 1`, `he2v[j]`
//! maps vertex ids to weights inside hyperedge `j + 1`, and the metadata
//! arrays are aligned by id. Both incidence tables are stored and checked
//! against each other on load.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypergraph::{HyperedgeId, Hypergraph, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Document {
    n: usize,
    k: usize,
    v2he: Vec<BTreeMap<usize, f64>>,
    he2v: Vec<BTreeMap<usize, f64>>,
    vmeta: Vec<Value>,
    hemeta: Vec<Value>,
    format_version: u32,
}

pub fn write_json(h: &Hypergraph) -> String {
    let doc = Document {
        n: h.nhv(),
        k: h.nhe(),
        v2he: h
            .vertices()
            .map(|v| h.row(v.index()).iter().map(|(e, &w)| (e.get(), w)).collect())
            .collect(),
        he2v: h
            .hyperedges()
            .map(|e| h.column(e.index()).iter().map(|(v, &w)| (v.get(), w)).collect())
            .collect(),
        vmeta: h.vertex_meta_slice().to_vec(),
        hemeta: h.hyperedge_meta_slice().to_vec(),
        format_version: FORMAT_VERSION,
    };
    serde_json::to_string(&doc).expect("hypergraph documents always serialize")
}

pub fn read_json(text: &str) -> Result<Hypergraph> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::SchemaViolation(e.to_string()))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::SchemaViolation(format!(
            "unsupported format_version {}",
            doc.format_version
        )));
    }
    let (n, k) = (doc.n, doc.k);
    for (field, len, want) in [
        ("v2he", doc.v2he.len(), n),
        ("vmeta", doc.vmeta.len(), n),
        ("he2v", doc.he2v.len(), k),
        ("hemeta", doc.hemeta.len(), k),
    ] {
        if len != want {
            return Err(Error::SchemaViolation(format!("{field} has {len} entries, expected {want}")));
        }
    }

    let mut v2he = Vec::with_capacity(n);
    for (i, row) in doc.v2he.iter().enumerate() {
        let mut out = BTreeMap::new();
        for (&e, &w) in row {
            if e == 0 || e > k {
                return Err(Error::SchemaViolation(format!("v2he[{}] references hyperedge {e}", i + 1)));
            }
            out.insert(HyperedgeId::new(e), w);
        }
        v2he.push(out);
    }
    let mut he2v = Vec::with_capacity(k);
    for (j, col) in doc.he2v.iter().enumerate() {
        let mut out = BTreeMap::new();
        for (&v, &w) in col {
            if v == 0 || v > n {
                return Err(Error::SchemaViolation(format!("he2v[{}] references vertex {v}", j + 1)));
            }
            out.insert(VertexId::new(v), w);
        }
        he2v.push(out);
    }

    let h = Hypergraph::from_parts(v2he, he2v, doc.vmeta, doc.hemeta);
    h.check_consistency()?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty() {
        let s = write_json(&Hypergraph::new(0, 0));
        assert_eq!(
            s,
            r#"{"n":0,"k":0,"v2he":[],"he2v":[],"vmeta":[],"hemeta":[],"format_version":1}"#
        );
        assert_eq!(read_json(&s).unwrap(), Hypergraph::new(0, 0));
    }

    #[test]
    fn roundtrip_with_meta() {
        let mut h = Hypergraph::from_incidence(&[vec![Some(1.0), None], vec![Some(0.25), Some(-3.0)]]).unwrap();
        h.set_vertex_meta(VertexId::new(2), json!({"name": "b2", "stars": 4.5})).unwrap();
        h.set_hyperedge_meta(HyperedgeId::new(1), json!("u1")).unwrap();
        let s = write_json(&h);
        assert_eq!(read_json(&s).unwrap(), h);
    }

    #[test]
    fn dual_inconsistency() {
        let s = r#"{"n":1,"k":1,"v2he":[{"1":1.0}],"he2v":[{}],"vmeta":[null],"hemeta":[null],"format_version":1}"#;
        assert_eq!(
            read_json(s),
            Err(Error::DualInconsistency {
                vertex: 1,
                hyperedge: 1
            })
        );
        let s = r#"{"n":1,"k":1,"v2he":[{"1":1.0}],"he2v":[{"1":2.0}],"vmeta":[null],"hemeta":[null],"format_version":1}"#;
        assert!(matches!(read_json(s), Err(Error::DualInconsistency { .. })));
    }

    #[test]
    fn schema_violations() {
        for bad in [
            "[]",
            r#"{"n":1,"k":0,"v2he":[],"he2v":[],"vmeta":[],"hemeta":[],"format_version":1}"#,
            r#"{"n":1,"k":1,"v2he":[{"2":1.0}],"he2v":[{}],"vmeta":[null],"hemeta":[null],"format_version":1}"#,
            r#"{"n":0,"k":0,"v2he":[],"he2v":[],"vmeta":[],"hemeta":[],"format_version":2}"#,
            r#"{"n":0,"k":0,"v2he":[],"he2v":[],"vmeta":[],"hemeta":[]}"#,
        ] {
            assert!(matches!(read_json(bad), Err(Error::SchemaViolation(_))), "{bad}");
        }
    }
}
