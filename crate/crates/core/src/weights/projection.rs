use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::number::{Ivqrofn, Rung};
use crate::operators::WeightVector;

/// How an attribute column and its ideal column are vectorized.
///
/// Each cell contributes four coordinates built from q-th powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectionReading {
    /// Raw powers `(mu_lo, mu_hi, nu_lo, nu_hi)^q` against the positive ideal `(1, 1, 0, 0)`.
    IdealPoint,
    /// Benefit coordinates `(mu^q, 1 - nu^q)` against the all-ones ideal.
    BenefitIdeal,
    /// Benefit coordinates against the column's best value per coordinate.
    #[default]
    ColumnBest,
}

fn benefit(a: &Ivqrofn, q: Rung) -> [f64; 4] {
    let [ml, mh, nl, nh] = a.powers(q);
    [ml, mh, 1.0 - nl, 1.0 - nh]
}

/// Projection of each attribute column onto its ideal column, normalized to
/// weights.
pub fn projection_scores(r: &Matrix<Ivqrofn>, q: Rung, reading: ProjectionReading) -> Result<Vec<f64>> {
    for a in r.iter() {
        a.ensure_valid(q)?;
    }
    (0..r.cols())
        .map(|j| {
            let column: Vec<[f64; 4]> = r
                .column(j)
                .map(|a| match reading {
                    ProjectionReading::IdealPoint => a.powers(q),
                    _ => benefit(a, q),
                })
                .collect();
            let ideal: [f64; 4] = match reading {
                ProjectionReading::IdealPoint => [1.0, 1.0, 0.0, 0.0],
                ProjectionReading::BenefitIdeal => [1.0; 4],
                ProjectionReading::ColumnBest => {
                    let mut best = [f64::NEG_INFINITY; 4];
                    for y in &column {
                        for (b, v) in best.iter_mut().zip(y) {
                            *b = b.max(*v);
                        }
                    }
                    best
                }
            };
            let dot: f64 = column
                .iter()
                .map(|y| y.iter().zip(&ideal).map(|(a, b)| a * b).sum::<f64>())
                .sum();
            let norm = (column.len() as f64 * ideal.iter().map(|b| b * b).sum::<f64>()).sqrt();
            if norm > 0.0 {
                Ok(dot / norm)
            } else {
                Err(Error::ZeroIdealNorm)
            }
        })
        .collect()
}

pub fn projection_weights(r: &Matrix<Ivqrofn>, q: Rung, reading: ProjectionReading) -> Result<WeightVector> {
    let p = projection_scores(r, q, reading)?;
    if p.iter().sum::<f64>() > 0.0 {
        WeightVector::normalized(p)
    } else {
        Err(Error::InvalidWeights("all projections are zero".into()))
    }
}
