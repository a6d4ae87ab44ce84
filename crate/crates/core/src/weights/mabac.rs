use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::number::{Ivqrofn, Rung};
use crate::operators::WeightVector;

/// Weighting of the normalized matrix before the border is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MabacVariant {
    /// `v = w* (r + 1)`.
    #[default]
    Shifted,
    /// `v = w* r`, zeros floored at `1e-9` so the geometric mean stays positive.
    Literal,
}

const LITERAL_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MabacAnalysis {
    pub variant: MabacVariant,
    /// Min–max normalized cell scores, all attributes treated as benefits.
    pub normalized: Matrix<f64>,
    pub weighted: Matrix<f64>,
    /// Geometric mean of each weighted column.
    pub border: Vec<f64>,
    /// Signed distance of each weighted cell from its column border.
    pub distances: Matrix<f64>,
    pub weights: WeightVector,
    pub notes: Vec<String>,
}

/// Border-approximation weights: each attribute's weight is proportional to
/// the summed distance of its column from the column's geometric mean.
pub fn mabac_analysis(r: &Matrix<Ivqrofn>, q: Rung, variant: MabacVariant) -> Result<MabacAnalysis> {
    let (m, n) = r.shape();
    if m < 2 {
        return Err(Error::InvalidConfig(
            "border approximation needs at least two alternatives".into(),
        ));
    }
    let scores = Matrix::try_from_fn(m, n, |i, j| r.get(i, j).normalized_score(q))?;
    let mut notes = Vec::new();
    let mut spans = Vec::with_capacity(n);
    for j in 0..n {
        let (lo, hi) = scores
            .column(j)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        if hi - lo <= 0.0 {
            notes.push(format!("attribute {j} has zero spread; normalized values set to 0.5"));
        }
        spans.push((lo, hi));
    }
    let normalized = scores.map_indexed(|_, j, &x| {
        let (lo, hi) = spans[j];
        if hi > lo {
            (x - lo) / (hi - lo)
        } else {
            0.5
        }
    });
    let initial = 1.0 / n as f64;
    let weighted = normalized.map(|&x| match variant {
        MabacVariant::Shifted => initial * (x + 1.0),
        MabacVariant::Literal => (initial * x).max(LITERAL_FLOOR),
    });
    let border: Vec<f64> = (0..n)
        .map(|j| (weighted.column(j).map(|v| v.ln()).sum::<f64>() / m as f64).exp())
        .collect();
    let distances = weighted.map_indexed(|_, j, &v| v - border[j]);
    let mass: Vec<f64> = (0..n).map(|j| distances.column(j).sum::<f64>().max(0.0)).collect();
    let weights = if mass.iter().sum::<f64>() > 0.0 {
        WeightVector::normalized(mass)?
    } else {
        notes.push("every column equals its border; weights fall back to uniform".into());
        WeightVector::uniform(n)?
    };
    Ok(MabacAnalysis {
        variant,
        normalized,
        weighted,
        border,
        distances,
        weights,
        notes,
    })
}

pub fn mabac_weights(r: &Matrix<Ivqrofn>, q: Rung, variant: MabacVariant) -> Result<WeightVector> {
    mabac_analysis(r, q, variant).map(|a| a.weights)
}
