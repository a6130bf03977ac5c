//! Normalized mutual information, sum normalization:
//! `NMI(X, Y) = 2 I(X, Y) / (H(X) + H(Y))`, natural logarithms.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Entropy of a multiset of counts. Counts are summed in sorted order so
/// the result does not depend on label names.
fn entropy_of_counts(mut counts: Vec<usize>, total: usize) -> f64 {
    counts.sort_unstable();
    let n = total as f64;
    -counts
        .into_iter()
        .map(|c| {
            let p = c as f64 / n;
            p * p.ln()
        })
        .sum::<f64>()
}

fn label_counts(labels: &[usize]) -> Vec<usize> {
    let mut m: HashMap<usize, usize> = HashMap::new();
    for &l in labels {
        *m.entry(l).or_insert(0) += 1;
    }
    m.into_values().collect()
}

fn check(x: &Partition, y: &Partition) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::DomainMismatch(format!(
            "partitions cover {} and {} vertices",
            x.len(),
            y.len()
        )));
    }
    if x.is_empty() {
        return Err(Error::EmptyDomain);
    }
    Ok(())
}

/// Shannon entropy of the community-size distribution.
pub fn entropy(p: &Partition) -> f64 {
    entropy_of_counts(label_counts(p.labels()), p.len())
}

/// `I(X, Y) = H(X) + H(Y) - H(X, Y)`, clamped at zero.
pub fn mutual_information(x: &Partition, y: &Partition) -> Result<f64> {
    check(x, y)?;
    let mut joint: HashMap<(usize, usize), usize> = HashMap::new();
    for (&a, &b) in x.labels().iter().zip(y.labels()) {
        *joint.entry((a, b)).or_insert(0) += 1;
    }
    let hxy = entropy_of_counts(joint.into_values().collect(), x.len());
    Ok((entropy(x) + entropy(y) - hxy).max(0.0))
}

/// Normalized mutual information in `[0, 1]`. Two single-community
/// partitions (both entropies zero) are identical and score 1.
pub fn nmi(x: &Partition, y: &Partition) -> Result<f64> {
    let i = mutual_information(x, y)?;
    let denom = entropy(x) + entropy(y);
    if denom == 0.0 {
        return Ok(1.0);
    }
    Ok((2.0 * i / denom).clamp(0.0, 1.0))
}
