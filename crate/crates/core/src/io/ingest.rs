//! Builders for the two dataset shapes: review tables (items reviewed by
//! users) and scene lists (characters appearing together).

use std::collections::{BTreeSet, HashMap};
use std::io::Read;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::analytics::connected_components;
use crate::error::{Error, Result};
use crate::hypergraph::{HyperedgeId, Hypergraph, IdRemap, VertexId};

/// One review: `user_id` rated `item_id` with 1 to 5 stars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReviewRecord {
    pub user_id: String,
    pub item_id: String,
    pub stars: u8,
}

impl ReviewRecord {
    pub fn new(user_id: impl Into<String>, item_id: impl Into<String>, stars: u8) -> Result<Self> {
        if !(1..=5).contains(&stars) {
            return Err(Error::InvalidRecord(format!("stars must be in 1..=5, got {stars}")));
        }
        Ok(Self {
            user_id: user_id.into(),
            item_id: item_id.into(),
            stars,
        })
    }
}

/// One scene and the characters in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SceneRecord {
    pub id: String,
    pub members: Vec<String>,
}

/// A built hypergraph plus the external names of its vertices and
/// hyperedges, indexed by `id - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledHypergraph {
    pub hypergraph: Hypergraph,
    pub vertex_labels: Vec<String>,
    pub hyperedge_labels: Vec<String>,
}

/// Reads a `user_id,item_id,stars` CSV with a header row.
pub fn read_reviews_csv<R: Read>(reader: R) -> Result<Vec<ReviewRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::InvalidRecord(e.to_string()))?;
    if headers.iter().collect::<Vec<_>>() != ["user_id", "item_id", "stars"] {
        return Err(Error::InvalidRecord(format!(
            "expected header user_id,item_id,stars, got {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for row in rdr.deserialize::<ReviewRecord>() {
        let r = row.map_err(|e| Error::InvalidRecord(e.to_string()))?;
        out.push(ReviewRecord::new(r.user_id, r.item_id, r.stars)?);
    }
    Ok(out)
}

/// Reads a JSON array of `{"id": ..., "members": [...]}` objects.
pub fn read_scenes_json(text: &str) -> Result<Vec<SceneRecord>> {
    serde_json::from_str(text).map_err(|e| Error::InvalidRecord(e.to_string()))
}

#[derive(Default)]
struct Interner {
    index: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Interner {
    fn intern(&mut self, key: &str) -> usize {
        if let Some(&i) = self.index.get(key) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(key.to_string(), i);
        self.labels.push(key.to_string());
        i
    }
}

fn assemble(vertices: Interner, hyperedges: Vec<(String, BTreeSet<usize>)>) -> LabeledHypergraph {
    let mut h = Hypergraph::new(vertices.labels.len(), 0);
    for (i, label) in vertices.labels.iter().enumerate() {
        h.set_vertex_meta(VertexId::from_index(i), Value::String(label.clone()))
            .expect("vertex exists");
    }
    let mut hyperedge_labels = Vec::with_capacity(hyperedges.len());
    for (label, members) in hyperedges {
        h.add_hyperedge(
            members.into_iter().map(|i| (VertexId::from_index(i), 1.0)),
            Value::String(label.clone()),
        )
        .expect("members were interned");
        hyperedge_labels.push(label);
    }
    LabeledHypergraph {
        hypergraph: h,
        vertex_labels: vertices.labels,
        hyperedge_labels,
    }
}

/// One vertex per distinct item and one hyperedge per user holding every
/// item the user reviewed at least once.
///
/// Vertices come from all records; hyperedges only from records whose star
/// value passes `star_filter`, and users left with no such record get no
/// hyperedge. Both are numbered in order of first appearance.
pub fn build_from_reviews(records: &[ReviewRecord], star_filter: Option<&BTreeSet<u8>>) -> LabeledHypergraph {
    let mut items = Interner::default();
    let mut users = Interner::default();
    let mut memberships: Vec<BTreeSet<usize>> = Vec::new();
    for r in records {
        let item = items.intern(&r.item_id);
        if star_filter.is_some_and(|f| !f.contains(&r.stars)) {
            continue;
        }
        let user = users.intern(&r.user_id);
        if user == memberships.len() {
            memberships.push(BTreeSet::new());
        }
        memberships[user].insert(item);
    }
    assemble(items, users.labels.into_iter().zip(memberships).collect())
}

/// Mean star value per vertex of a hypergraph built by [`build_from_reviews`],
/// over every record of the item regardless of any star filter.
pub fn item_mean_stars(records: &[ReviewRecord], built: &LabeledHypergraph) -> Vec<f64> {
    let index: HashMap<&str, usize> = built
        .vertex_labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut sums = vec![(0.0, 0usize); built.vertex_labels.len()];
    for r in records {
        if let Some(&i) = index.get(r.item_id.as_str()) {
            sums[i].0 += f64::from(r.stars);
            sums[i].1 += 1;
        }
    }
    sums.into_iter()
        .map(|(s, c)| if c == 0 { f64::NAN } else { s / c as f64 })
        .collect()
}

/// One vertex per distinct character and one hyperedge per scene with at
/// least one member. Repeated members within a scene count once.
pub fn build_from_scenes(records: &[SceneRecord]) -> LabeledHypergraph {
    let mut characters = Interner::default();
    let mut scenes = Vec::new();
    for s in records {
        let members: BTreeSet<usize> = s.members.iter().map(|m| characters.intern(m)).collect();
        if !members.is_empty() {
            scenes.push((s.id.clone(), members));
        }
    }
    assemble(characters, scenes)
}

/// An induced sub-hypergraph together with where every surviving id went.
#[derive(Clone, Debug, PartialEq)]
pub struct Subhypergraph {
    pub hypergraph: Hypergraph,
    /// old vertex id -> new vertex id, for every kept vertex
    pub vertex_map: IdRemap,
    /// old hyperedge id -> new hyperedge id, for every kept hyperedge
    pub hyperedge_map: IdRemap,
}

/// Restricts `h` to its largest connected component.
///
/// Ties go to the component with the smallest vertex id. Hyperedges outside
/// the component and empty hyperedges are dropped; relative order, weights
/// and metadata of what survives are kept.
pub fn largest_connected_component(h: &Hypergraph) -> Subhypergraph {
    let components = connected_components(h);
    let Some(best) = components
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))
        .map(|(_, c)| c)
    else {
        return Subhypergraph {
            hypergraph: Hypergraph::new(0, 0),
            vertex_map: IdRemap::new(),
            hyperedge_map: IdRemap::new(),
        };
    };

    let mut vertex_map = IdRemap::new();
    let mut out = Hypergraph::new(best.len(), 0);
    for (new_index, &old) in best.iter().enumerate() {
        let new = VertexId::from_index(new_index);
        vertex_map.insert(old.get(), new.get());
        out.set_vertex_meta(new, h.get_vertex_meta(old).expect("live").clone())
            .expect("live");
    }

    let kept: BTreeSet<HyperedgeId> = best
        .iter()
        .flat_map(|&v| h.get_hyperedges(v).expect("live").keys().copied())
        .collect();
    let mut hyperedge_map = IdRemap::new();
    for old in kept {
        let members = h.get_vertices(old).expect("live").iter().map(|(v, &w)| {
            let new = vertex_map.get(v.get()).expect("member of the same component");
            (VertexId::new(new), w)
        });
        let new = out
            .add_hyperedge(members, h.get_hyperedge_meta(old).expect("live").clone())
            .expect("remapped ids are valid");
        hyperedge_map.insert(old.get(), new.get());
    }
    Subhypergraph {
        hypergraph: out,
        vertex_map,
        hyperedge_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(u: &str, b: &str, s: u8) -> ReviewRecord {
        ReviewRecord::new(u, b, s).unwrap()
    }

    fn members(h: &Hypergraph, e: usize) -> Vec<usize> {
        h.get_vertices(HyperedgeId::new(e)).unwrap().keys().map(|v| v.get()).collect()
    }

    #[test]
    fn reviews_unfiltered() {
        let recs = [rec("u1", "b1", 5), rec("u1", "b2", 5), rec("u2", "b2", 3)];
        let built = build_from_reviews(&recs, None);
        let h = &built.hypergraph;
        assert_eq!((h.nhv(), h.nhe()), (2, 2));
        assert_eq!(built.vertex_labels, ["b1", "b2"]);
        assert_eq!(built.hyperedge_labels, ["u1", "u2"]);
        assert_eq!(members(h, 1), [1, 2]);
        assert_eq!(members(h, 2), [2]);
        assert_eq!(h.get_vertex_meta(VertexId::new(2)).unwrap(), &Value::String("b2".into()));
    }

    #[test]
    fn reviews_filtered() {
        let recs = [rec("u1", "b1", 5), rec("u1", "b2", 5), rec("u2", "b2", 3)];
        let filter: BTreeSet<u8> = [5].into();
        let built = build_from_reviews(&recs, Some(&filter));
        assert_eq!((built.hypergraph.nhv(), built.hypergraph.nhe()), (2, 1));
        assert_eq!(built.hyperedge_labels, ["u1"]);
    }

    #[test]
    fn reviews_empty_and_duplicates() {
        let built = build_from_reviews(&[], None);
        assert_eq!((built.hypergraph.nhv(), built.hypergraph.nhe()), (0, 0));

        let recs = [rec("u", "b", 2), rec("u", "b", 4)];
        let built = build_from_reviews(&recs, None);
        assert_eq!(built.hypergraph.incidence_count(), 1);
        assert_eq!(item_mean_stars(&recs, &built), vec![3.0]);
    }

    #[test]
    fn invalid_stars() {
        assert!(ReviewRecord::new("u", "b", 0).is_err());
        assert!(ReviewRecord::new("u", "b", 6).is_err());
        let csv = "user_id,item_id,stars\nu,b,9\n";
        assert!(read_reviews_csv(csv.as_bytes()).is_err());
    }

    #[test]
    fn csv_parsing() {
        let csv = "user_id,item_id,stars\nu1,b1,5\nu2, b1 ,3\n";
        let recs = read_reviews_csv(csv.as_bytes()).unwrap();
        assert_eq!(recs, vec![rec("u1", "b1", 5), rec("u2", "b1", 3)]);
        assert!(read_reviews_csv("user,item,stars\n".as_bytes()).is_err());
        assert!(read_reviews_csv("user_id,item_id,stars\n".as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn scenes() {
        let scenes = read_scenes_json(
            r#"[{"id":"s1","members":["A","B"]},{"id":"s2","members":["B","C","C"]},{"id":"s3","members":[]}]"#,
        )
        .unwrap();
        let built = build_from_scenes(&scenes);
        let h = &built.hypergraph;
        assert_eq!((h.nhv(), h.nhe()), (3, 2));
        assert_eq!(members(h, 2), [2, 3]);
        assert_eq!(built.hyperedge_labels, ["s1", "s2"]);
        assert_eq!(build_from_scenes(&[]).hypergraph, Hypergraph::new(0, 0));
    }

    #[test]
    fn lcc_keeps_largest() {
        // components {1,2,3} and {4,5}; e3 lives in the small one
        let mut h = Hypergraph::new(5, 0);
        for (i, m) in [[1, 2], [2, 3], [4, 5]].iter().enumerate() {
            h.add_hyperedge(m.iter().map(|&x| (VertexId::new(x), 1.0)), Value::from(i)).unwrap();
        }
        h.add_hyperedge([], Value::Null).unwrap();
        let sub = largest_connected_component(&h);
        assert_eq!((sub.hypergraph.nhv(), sub.hypergraph.nhe()), (3, 2));
        assert_eq!(sub.vertex_map.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 2), (3, 3)]);
        assert_eq!(sub.hyperedge_map.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 2)]);
        sub.hypergraph.check_consistency().unwrap();
    }

    #[test]
    fn lcc_renumbers_and_breaks_ties() {
        // {1,4} and {2,3}: same size, the one holding vertex 1 wins
        let mut h = Hypergraph::new(4, 0);
        h.add_hyperedge([(VertexId::new(2), 1.0), (VertexId::new(3), 1.0)], Value::Null).unwrap();
        h.add_hyperedge([(VertexId::new(1), 1.0), (VertexId::new(4), 2.0)], Value::Null).unwrap();
        let sub = largest_connected_component(&h);
        assert_eq!(sub.vertex_map.iter().collect::<Vec<_>>(), vec![(1, 1), (4, 2)]);
        assert_eq!(sub.hyperedge_map.iter().collect::<Vec<_>>(), vec![(2, 1)]);
        assert_eq!(sub.hypergraph.get_weight(VertexId::new(2), HyperedgeId::new(1)).unwrap(), Some(2.0));
    }

    #[test]
    fn lcc_of_connected_and_empty() {
        let h = Hypergraph::from_incidence(&[vec![Some(1.0)], vec![Some(1.0)]]).unwrap();
        assert_eq!(largest_connected_component(&h).hypergraph, h);
        let sub = largest_connected_component(&Hypergraph::new(0, 0));
        assert_eq!(sub.hypergraph, Hypergraph::new(0, 0));
    }
}
