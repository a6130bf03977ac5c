use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hypergraph::VertexId;

/// Assignment of every vertex `1..=n` to exactly one community label.
///
/// Labels are arbitrary integers; only equality between them matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// `labels[i]` is the community of vertex `i + 1`.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        Self { labels }
    }

    /// Every vertex in its own community.
    pub fn singletons(n: usize) -> Self {
        Self::from_labels((0..n).collect())
    }

    /// One community holding everything.
    pub fn whole(n: usize) -> Self {
        Self::from_labels(vec![0; n])
    }

    /// Builds a partition from explicit vertex sets that must cover `1..=n`
    /// exactly once.
    pub fn from_communities<C: AsRef<[VertexId]>>(n: usize, communities: &[C]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (label, community) in communities.iter().enumerate() {
            for v in community.as_ref() {
                let slot = labels
                    .get_mut(v.index())
                    .ok_or_else(|| Error::PartitionNotTotal(format!("vertex {v} outside 1..={n}")))?;
                if *slot != usize::MAX {
                    return Err(Error::PartitionNotTotal(format!("vertex {v} assigned twice")));
                }
                *slot = label;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::PartitionNotTotal(format!("vertex {} unassigned", i + 1)));
        }
        Ok(Self { labels })
    }

    /// Builds a partition from a vertex-id keyed assignment with arbitrary
    /// label values. The keys must be exactly `1..=len`.
    pub fn from_assignment<L: Eq + std::hash::Hash>(assignment: &BTreeMap<usize, L>) -> Result<Self> {
        let mut interned: HashMap<&L, usize> = HashMap::new();
        let mut labels = Vec::with_capacity(assignment.len());
        for (expected, (&v, label)) in (1..).zip(assignment) {
            if v != expected {
                return Err(Error::PartitionNotTotal(format!(
                    "vertex ids must be 1..={}, found {v}",
                    assignment.len()
                )));
            }
            let next = interned.len();
            labels.push(*interned.entry(label).or_insert(next));
        }
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Option<usize> {
        self.labels.get(v.index()).copied()
    }

    /// Label fibers, each sorted, ordered by their smallest vertex.
    pub fn communities(&self) -> Vec<Vec<VertexId>> {
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for (i, &l) in self.labels.iter().enumerate() {
            let idx = *slot.entry(l).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[idx].push(VertexId::from_index(i));
        }
        out
    }

    pub fn community_count(&self) -> usize {
        self.communities().len()
    }

    /// Same partition with labels renumbered `0, 1, ...` in order of first
    /// appearance.
    pub fn canonical(&self) -> Self {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let labels = self
            .labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Self { labels }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(xs: &[usize]) -> Vec<VertexId> {
        xs.iter().map(|&x| VertexId::new(x)).collect()
    }

    #[test]
    fn communities_roundtrip() {
        let p = Partition::from_communities(4, &[ids(&[3, 4]), ids(&[1, 2])]).unwrap();
        assert_eq!(p.labels(), &[1, 1, 0, 0]);
        assert_eq!(p.communities(), vec![ids(&[1, 2]), ids(&[3, 4])]);
        assert_eq!(p.canonical().labels(), &[0, 0, 1, 1]);
        assert_eq!(p.community_count(), 2);
    }

    #[test]
    fn rejects_non_total() {
        assert!(matches!(
            Partition::from_communities(3, &[ids(&[1, 2])]),
            Err(Error::PartitionNotTotal(_))
        ));
        assert!(Partition::from_communities(2, &[ids(&[1, 2]), ids(&[2])]).is_err());
        assert!(Partition::from_communities(2, &[ids(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn from_assignment_interns() {
        let m: BTreeMap<usize, &str> = [(1, "x"), (2, "y"), (3, "x")].into_iter().collect();
        let p = Partition::from_assignment(&m).unwrap();
        assert_eq!(p.labels(), &[0, 1, 0]);
        let gap: BTreeMap<usize, &str> = [(1, "x"), (3, "y")].into_iter().collect();
        assert!(Partition::from_assignment(&gap).is_err());
    }
}
