use super::CentralityVector;
use crate::error::{Error, Result};

/// Pearson correlation of two score vectors over the same vertices.
pub fn pearson(xs: &CentralityVector, ys: &CentralityVector) -> Result<f64> {
    let (x, y) = (xs.scores(), ys.scores());
    if x.len() != y.len() {
        return Err(Error::DomainMismatch(format!("{} vs {} vertices", x.len(), y.len())));
    }
    if x.is_empty() {
        return Err(Error::ZeroVariance);
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}
