//! Plain-text hypergraph format.
//!
//! ```text
//! n k
//! v=w v=w ...      <- hyperedge 1
//! ...              <- hyperedge k (an empty line is an empty hyperedge)
//! ```
//!
//! Writers emit single spaces between tokens and always render weights with
//! a decimal point. Readers accept any run of spaces or tabs between tokens
//! and an optional `\r` before each newline. Metadata is not carried.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{check_weight, HyperedgeId, Hypergraph, VertexId};

/// Shortest round-tripping decimal rendering that always contains a `.`.
pub(crate) fn format_weight(w: f64) -> String {
    let mut s = w.to_string();
    if !s.contains('.') {
        s.push_str(".0");
    }
    s
}

pub fn write_hgf(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.nhv(), h.nhe());
    for e in h.hyperedges() {
        let members = h.get_vertices(e).expect("live hyperedge");
        let mut first = true;
        for (v, &w) in members {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{}={}", v, format_weight(w));
        }
        out.push('\n');
    }
    out
}

pub fn read_hgf(text: &str) -> Result<Hypergraph> {
    let mut lines: Vec<&str> = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
    if text.ends_with('\n') {
        lines.pop();
    }
    let header = lines.first().ok_or_else(|| Error::MalformedHeader("empty document".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::MalformedHeader(format!("expected two counts, got {header:?}")))
    };
    let (n, k) = match fields.as_slice() {
        [a, b] => (parse(a)?, parse(b)?),
        _ => return Err(Error::MalformedHeader(format!("expected two counts, got {header:?}"))),
    };
    let body = &lines[1..];
    if body.len() != k {
        return Err(Error::LineCountMismatch {
            expected: k,
            found: body.len(),
        });
    }

    let mut h = Hypergraph::new(n, k);
    for (j, line) in body.iter().enumerate() {
        let lineno = j + 2;
        let e = HyperedgeId::from_index(j);
        for token in line.split_whitespace() {
            let bad = || Error::BadWeightToken {
                line: lineno,
                token: token.to_string(),
            };
            let (vs, ws) = token.split_once('=').ok_or_else(bad)?;
            let index: usize = vs.parse().map_err(|_| bad())?;
            let w: f64 = ws.parse().map_err(|_| bad())?;
            check_weight(w).map_err(|_| bad())?;
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange {
                    line: lineno,
                    index,
                    n,
                });
            }
            if h.set_weight(VertexId::new(index), e, Some(w))?.is_some() {
                return Err(Error::DuplicateIncidence {
                    line: lineno,
                    vertex: index,
                });
            }
        }
    }
    Ok(h)
}
