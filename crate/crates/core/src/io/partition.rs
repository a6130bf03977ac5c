//! Partition files: a JSON object `{"label": [vertex ids]}` or a two-column
//! `vertex,label` CSV.

use std::collections::BTreeMap;
use std::io::Read;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Vertex id to label text, as found in a partition file.
pub type Assignment = BTreeMap<usize, String>;

/// Writes communities in canonical order, labelled `1, 2, ...`.
pub fn write_partition_json(p: &Partition) -> String {
    let body: Vec<String> = p
        .communities()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let ids: Vec<usize> = c.iter().map(|v| v.get()).collect();
            format!("\"{}\":{}", i + 1, serde_json::to_string(&ids).expect("ids serialize"))
        })
        .collect();
    format!("{{{}}}\n", body.join(","))
}

pub fn write_partition_csv(p: &Partition) -> String {
    let canonical = p.canonical();
    let mut out = String::from("vertex,label\n");
    for (i, l) in canonical.labels().iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, l + 1));
    }
    out
}

fn insert(map: &mut Assignment, v: usize, label: String) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidRecord("vertex ids are 1-based".into()));
    }
    if map.insert(v, label).is_some() {
        return Err(Error::PartitionNotTotal(format!("vertex {v} assigned twice")));
    }
    Ok(())
}

pub fn read_partition_json(text: &str) -> Result<Assignment> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::InvalidRecord(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidRecord("partition JSON must be an object".into()))?;
    let mut map = Assignment::new();
    for (label, ids) in obj {
        let ids = ids
            .as_array()
            .ok_or_else(|| Error::InvalidRecord(format!("community {label:?} is not an array")))?;
        for id in ids {
            let v = id
                .as_u64()
                .ok_or_else(|| Error::InvalidRecord(format!("bad vertex id {id}")))?;
            insert(&mut map, v as usize, label.clone())?;
        }
    }
    Ok(map)
}

pub fn read_partition_csv<R: Read>(reader: R) -> Result<Assignment> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut map = Assignment::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::InvalidRecord(e.to_string()))?;
        if row.len() != 2 {
            return Err(Error::InvalidRecord(format!("expected vertex,label, got {} fields", row.len())));
        }
        let v: usize = row[0]
            .parse()
            .map_err(|_| Error::InvalidRecord(format!("bad vertex id {:?}", &row[0])))?;
        insert(&mut map, v, row[1].to_string())?;
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let p = Partition::from_labels(vec![7, 7, 3, 7]);
        let text = write_partition_json(&p);
        assert_eq!(text, "{\"1\":[1,2,4],\"2\":[3]}\n");
        let back = Partition::from_assignment(&read_partition_json(&text).unwrap()).unwrap();
        assert_eq!(back.canonical(), p.canonical());
    }

    #[test]
    fn csv_roundtrip() {
        let p = Partition::from_labels(vec![4, 2, 4]);
        let text = write_partition_csv(&p);
        assert_eq!(text, "vertex,label\n1,1\n2,2\n3,1\n");
        let back = Partition::from_assignment(&read_partition_csv(text.as_bytes()).unwrap()).unwrap();
        assert_eq!(back, p.canonical());
    }

    #[test]
    fn text_labels_and_errors() {
        let m = read_partition_json(r#"{"thai":[1,3],"pizza":[2]}"#).unwrap();
        assert_eq!(m[&2], "pizza");
        assert!(read_partition_json(r#"{"a":[1],"b":[1]}"#).is_err());
        assert!(read_partition_json(r#"{"a":[0]}"#).is_err());
        assert!(read_partition_json("[1]").is_err());
        assert!(read_partition_csv("vertex,label\nx,1\n".as_bytes()).is_err());
    }

    #[test]
    fn empty_partition() {
        let p = Partition::from_labels(vec![]);
        assert_eq!(write_partition_json(&p), "{}\n");
        assert!(read_partition_json("{}").unwrap().is_empty());
    }
}
