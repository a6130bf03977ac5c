use crate::hypergraph::{Hypergraph, VertexId};

/// Vertex sets joined by alternating vertex/hyperedge paths.
///
/// Each component is sorted and components are ordered by their smallest
/// vertex. A vertex in no hyperedge is a singleton component.
pub fn connected_components(h: &Hypergraph) -> Vec<Vec<VertexId>> {
    let mut seen_v = vec![false; h.nhv()];
    let mut seen_e = vec![false; h.nhe()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..h.nhv() {
        if seen_v[start] {
            continue;
        }
        seen_v[start] = true;
        stack.push(start);
        let mut component = Vec::new();
        while let Some(vi) = stack.pop() {
            component.push(VertexId::from_index(vi));
            for e in h.row(vi).keys() {
                if std::mem::replace(&mut seen_e[e.index()], true) {
                    continue;
                }
                for u in h.column(e.index()).keys() {
                    if !std::mem::replace(&mut seen_v[u.index()], true) {
                        stack.push(u.index());
                    }
                }
            }
        }
        component.sort_unstable();
        out.push(component);
    }
    out
}
