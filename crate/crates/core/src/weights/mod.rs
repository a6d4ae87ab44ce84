//! Attribute-weight derivation from an aggregated decision matrix, and the
//! summary metrics used to compare the resulting rankings.

mod mabac;
mod projection;
mod swing;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::number::{Ivqrofn, Rung};
use crate::operators::WeightVector;

pub use mabac::{mabac_analysis, mabac_weights, MabacAnalysis, MabacVariant};
pub use projection::{projection_scores, projection_weights, ProjectionReading};
pub use swing::{
    calibrate_swing, default_alpha_grid, distance_matrix, selection_matrix, swing_analysis, swing_similarity,
    swing_weights, BipartiteSelection, SimilarityMatrix, SwingAnalysis, SwingCalibration, SwingConfig,
};

/// How attribute weights are obtained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum WeightMethod {
    Swing(SwingConfig),
    Mabac { variant: MabacVariant },
    Projection { reading: ProjectionReading },
    Manual { weights: WeightVector },
}

impl Default for WeightMethod {
    fn default() -> Self {
        Self::Swing(SwingConfig::default())
    }
}

impl WeightMethod {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Swing(_) => "swing",
            Self::Mabac { .. } => "mabac",
            Self::Projection { .. } => "projection",
            Self::Manual { .. } => "manual",
        }
    }

    pub fn derive(&self, r: &Matrix<Ivqrofn>, q: Rung) -> Result<WeightVector> {
        match self {
            Self::Swing(cfg) => swing_weights(r, q, cfg),
            Self::Mabac { variant } => mabac_weights(r, q, *variant),
            Self::Projection { reading } => projection_weights(r, q, *reading),
            Self::Manual { weights } => {
                if weights.len() == r.cols() {
                    Ok(weights.clone())
                } else {
                    Err(Error::LengthMismatch {
                        what: "manual weights",
                        expected: r.cols(),
                        found: weights.len(),
                    })
                }
            }
        }
    }
}

impl fmt::Display for WeightMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Manual { weights } => {
                let parts: Vec<String> = weights.iter().map(f64::to_string).collect();
                write!(f, "manual:{}", parts.join(","))
            }
            other => f.write_str(other.label()),
        }
    }
}

impl FromStr for WeightMethod {
    type Err = Error;

    /// `swing`, `mabac`, `projection` or `manual:w1,w2,...`; derived
    /// methods take their default settings.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(list) = s.strip_prefix("manual:") {
            let weights = list
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidWeights(format!("manual weights `{list}`: {e}")))?;
            return Ok(Self::Manual {
                weights: WeightVector::new(weights)?,
            });
        }
        match s.to_ascii_lowercase().as_str() {
            "swing" => Ok(Self::Swing(SwingConfig::default())),
            "mabac" => Ok(Self::Mabac {
                variant: MabacVariant::default(),
            }),
            "projection" => Ok(Self::Projection {
                reading: ProjectionReading::default(),
            }),
            _ => Err(Error::InvalidConfig(format!("unknown weight method `{s}`"))),
        }
    }
}

/// Herfindahl–Hirschman concentration of positive scores.
pub fn hhi(scores: &[f64]) -> Result<f64> {
    if scores.is_empty() {
        return Err(Error::TooFewScores { needed: 1, found: 0 });
    }
    if let Some(&s) = scores.iter().find(|s| s.is_nan() || **s <= 0.0) {
        return Err(Error::NonPositiveScore(s));
    }
    let total: f64 = scores.iter().sum();
    Ok(scores.iter().map(|s| (s / total).powi(2)).sum())
}

/// Mean gap between consecutive scores in descending order.
pub fn score_spread(scores: &[f64]) -> Result<f64> {
    if scores.len() < 2 {
        return Err(Error::TooFewScores {
            needed: 2,
            found: scores.len(),
        });
    }
    let mut sorted = scores.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let gaps: f64 = sorted.windows(2).map(|w| w[0] - w[1]).sum();
    Ok(gaps / (sorted.len() - 1) as f64)
}
