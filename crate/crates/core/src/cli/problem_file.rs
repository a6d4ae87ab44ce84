use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::magdm::{Cell, DecisionProblem, LabeledCell};
use crate::matrix::Matrix;
use crate::operators::WeightVector;
use crate::{Ivqrofn, LinguisticTerm};

/// On-disk problem description (JSON).
///
/// ```json
/// {
///   "alternatives": ["x1", "x2"],
///   "attributes": ["c1", "c2"],
///   "experts": ["d1"],
///   "expert_weights": [1.0],
///   "matrices": [[["HI", [0.5, 0.6, 0.2, 0.3]],
///                 [{"term": "CHI", "value": [0.9, 0.95, 0.05, 0.1]}, "BA"]]]
/// }
/// ```
///
/// A cell is a scale code, a `[mu_lo, mu_hi, nu_lo, nu_hi]` array, or a
/// labeled number `{"term", "value"}` whose label is checked against the scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub experts: Vec<String>,
    pub expert_weights: Vec<f64>,
    pub matrices: Vec<Vec<Vec<RawCell>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawCell {
    Code(String),
    Numbers(Vec<f64>),
    Labeled(RawLabeled),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLabeled {
    pub term: String,
    pub value: Vec<f64>,
}

fn numbers(v: &[f64], at: &str) -> Result<Ivqrofn, CliError> {
    let arr: [f64; 4] = v
        .try_into()
        .map_err(|_| CliError::Parse(format!("{at}: expected 4 numbers, found {}", v.len())))?;
    Ivqrofn::try_from(arr).map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

fn term(code: &str, at: &str) -> Result<LinguisticTerm, CliError> {
    code.parse().map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

impl RawCell {
    fn resolve(&self, at: &str) -> Result<Cell, CliError> {
        Ok(match self {
            Self::Code(c) => Cell::Term(term(c, at)?),
            Self::Numbers(v) => Cell::Value(numbers(v, at)?),
            Self::Labeled(l) => Cell::Labeled(LabeledCell {
                term: term(&l.term, at)?,
                value: numbers(&l.value, at)?,
            }),
        })
    }
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("problem file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_problem(&self) -> Result<DecisionProblem, CliError> {
        if self.matrices.is_empty() {
            return Err(CliError::Parse("matrices: no expert matrices".into()));
        }
        let expert_weights = WeightVector::new(self.expert_weights.clone())
            .map_err(|e| CliError::Parse(format!("expert_weights: {e}")))?;
        let judgments = self
            .matrices
            .iter()
            .enumerate()
            .map(|(k, rows)| {
                let rows = rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, c)| c.resolve(&format!("matrices[{k}][{i}][{j}]")))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Matrix::from_rows(rows).map_err(|e| CliError::Parse(format!("matrices[{k}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        DecisionProblem::new(
            self.alternatives.clone(),
            self.attributes.clone(),
            self.experts.clone(),
            expert_weights,
            judgments,
        )
        .map_err(|e| CliError::Parse(format!("problem structure: {e}")))
    }
}

/// Reads and validates a problem file.
pub fn load_problem(path: &Path) -> Result<DecisionProblem, CliError> {
    ProblemFile::load(path)?.to_problem()
}
