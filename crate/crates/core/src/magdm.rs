//! Group decision pipeline: ingest expert judgments, pick a rung, aggregate
//! experts per cell, derive attribute weights, aggregate attributes per
//! alternative, rank.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::linguistic::LinguisticTerm;
use crate::matrix::Matrix;
use crate::number::{min_valid_q, Ivqrofn, Rung};
use crate::operators::{owa_aggregate, OperatorFamily, WeightVector};
use crate::weights::{hhi, score_spread, swing_analysis, WeightMethod};

/// A judgment: a scale term, a number, or both (the number wins; the term is
/// kept to report disagreements with the scale).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Term(LinguisticTerm),
    Value(Ivqrofn),
    Labeled(LabeledCell),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledCell {
    pub term: LinguisticTerm,
    pub value: Ivqrofn,
}

impl Cell {
    pub fn value(&self) -> Ivqrofn {
        match *self {
            Self::Term(t) => t.to_ivqrofn(),
            Self::Value(v) => v,
            Self::Labeled(LabeledCell { value, .. }) => value,
        }
    }
}

impl From<LinguisticTerm> for Cell {
    fn from(t: LinguisticTerm) -> Self {
        Self::Term(t)
    }
}

impl From<Ivqrofn> for Cell {
    fn from(v: Ivqrofn) -> Self {
        Self::Value(v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    attributes: Vec<String>,
    experts: Vec<String>,
    expert_weights: WeightVector,
    judgments: Vec<Matrix<Cell>>,
}

impl DecisionProblem {
    pub fn new(
        alternatives: Vec<String>,
        attributes: Vec<String>,
        experts: Vec<String>,
        expert_weights: WeightVector,
        judgments: Vec<Matrix<Cell>>,
    ) -> Result<Self> {
        for (what, list) in [
            ("alternatives", &alternatives),
            ("attributes", &attributes),
            ("experts", &experts),
        ] {
            if list.is_empty() {
                return Err(Error::Empty(what));
            }
        }
        let check = |what, expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(Error::LengthMismatch { what, expected, found })
            }
        };
        check("expert_weights", experts.len(), expert_weights.len())?;
        check("matrices", experts.len(), judgments.len())?;
        for m in &judgments {
            check("matrix rows", alternatives.len(), m.rows())?;
            check("matrix columns", attributes.len(), m.cols())?;
        }
        Ok(Self {
            alternatives,
            attributes,
            experts,
            expert_weights,
            judgments,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }
    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }
    pub fn experts(&self) -> &[String] {
        &self.experts
    }
    pub fn expert_weights(&self) -> &WeightVector {
        &self.expert_weights
    }
    pub fn judgments(&self) -> &[Matrix<Cell>] {
        &self.judgments
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Diagnostic {
    /// A labeled cell whose number differs from the scale row of its label.
    LabelMismatch {
        expert: String,
        alternative: String,
        attribute: String,
        term: LinguisticTerm,
        scale: Ivqrofn,
        cell: Ivqrofn,
    },
    Note {
        stage: Stage,
        message: String,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LabelMismatch {
                expert,
                alternative,
                attribute,
                term,
                scale,
                cell,
            } => write!(
                f,
                "{expert} ({alternative}, {attribute}): label {term} is {scale} on the scale but the cell holds {cell}"
            ),
            Self::Note { stage, message } => write!(f, "{stage}: {message}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ingested {
    pub matrices: Vec<Matrix<Ivqrofn>>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Resolves every cell to a number and reports label/number disagreements.
pub fn ingest(problem: &DecisionProblem) -> Ingested {
    let mut diagnostics = Vec::new();
    let matrices = problem
        .judgments
        .iter()
        .enumerate()
        .map(|(k, m)| {
            m.map_indexed(|i, j, cell| {
                if let Cell::Labeled(LabeledCell { term, value }) = *cell {
                    let scale = term.to_ivqrofn();
                    let differs = scale
                        .to_array()
                        .iter()
                        .zip(value.to_array())
                        .any(|(a, b)| (a - b).abs() > 1e-12);
                    if differs {
                        diagnostics.push(Diagnostic::LabelMismatch {
                            expert: problem.experts[k].clone(),
                            alternative: problem.alternatives[i].clone(),
                            attribute: problem.attributes[j].clone(),
                            term,
                            scale,
                            cell: value,
                        });
                    }
                }
                cell.value()
            })
        })
        .collect();
    Ingested { matrices, diagnostics }
}

/// Aggregates the experts' judgments of each cell with the ordered weighted
/// operator of `family`.
pub fn aggregate_experts(
    matrices: &[Matrix<Ivqrofn>],
    expert_weights: &WeightVector,
    q: Rung,
    family: &OperatorFamily,
) -> Result<Matrix<Ivqrofn>> {
    let first = matrices.first().ok_or(Error::Empty("expert matrices"))?;
    let (m, n) = first.shape();
    if let Some(bad) = matrices.iter().find(|x| x.shape() != (m, n)) {
        return Err(Error::LengthMismatch {
            what: "expert matrix rows",
            expected: m,
            found: bad.rows(),
        });
    }
    Matrix::try_from_fn(m, n, |i, j| {
        let cell: Vec<Ivqrofn> = matrices.iter().map(|x| *x.get(i, j)).collect();
        owa_aggregate(&cell, expert_weights, family, q)
    })
}

/// Aggregates each row of `r` with the attribute weights.
pub fn aggregate_attributes(
    r: &Matrix<Ivqrofn>,
    weights: &WeightVector,
    q: Rung,
    family: &OperatorFamily,
) -> Result<Vec<Ivqrofn>> {
    r.row_iter().map(|row| owa_aggregate(row, weights, family, q)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankEntry {
    pub alternative: usize,
    pub score: f64,
    pub normalized_score: f64,
    pub accuracy: f64,
    /// Entries sharing a group compare equal.
    pub tie_group: usize,
}

/// Alternatives from best to worst.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ranking {
    pub entries: Vec<RankEntry>,
}

impl Ranking {
    pub fn order(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.alternative).collect()
    }

    pub fn has_ties(&self) -> bool {
        self.entries.windows(2).any(|w| w[0].tie_group == w[1].tie_group)
    }

    /// `x2 > x3 > x1`, with `=` joining tied alternatives.
    pub fn display_with(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                let tied = self.entries[k - 1].tie_group == e.tie_group;
                out.push_str(if tied { " = " } else { " > " });
            }
            out.push_str(&labels[e.alternative]);
        }
        out
    }
}

/// Orders aggregates by score then accuracy; ties keep input order.
pub fn rank(aggregates: &[Ivqrofn], q: Rung) -> Result<Ranking> {
    let order = crate::operators::owa_order(aggregates, q)?;
    let mut entries: Vec<RankEntry> = Vec::with_capacity(order.len());
    let mut group = 0;
    for (k, &i) in order.iter().enumerate() {
        let a = &aggregates[i];
        if k > 0 && a.compare(&aggregates[order[k - 1]], q)? != Ordering::Equal {
            group += 1;
        }
        entries.push(RankEntry {
            alternative: i,
            score: a.score(q)?,
            normalized_score: a.normalized_score(q)?,
            accuracy: a.accuracy(q)?,
            tie_group: group,
        });
    }
    Ok(Ranking { entries })
}

/// Rung to use: fixed, or the smallest integer admitting every judgment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RungChoice {
    Fixed(Rung),
    Auto { q_max: u32 },
}

impl Default for RungChoice {
    fn default() -> Self {
        Self::Auto { q_max: 20 }
    }
}

/// Missing fields take their defaults when deserialized.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineConfig {
    pub q: RungChoice,
    pub family: OperatorFamily,
    pub weights: WeightMethod,
    /// Rung at which derived attribute weights are computed; the pipeline
    /// rung when absent.
    pub weight_q: Option<Rung>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Configuration,
    Rung,
    ExpertAggregation,
    Weights,
    AttributeAggregation,
    Ranking,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Configuration => "configuration",
            Self::Rung => "rung selection",
            Self::ExpertAggregation => "expert aggregation",
            Self::Weights => "attribute weights",
            Self::AttributeAggregation => "attribute aggregation",
            Self::Ranking => "ranking",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{stage} failed: {source}")]
pub struct PipelineError {
    pub stage: Stage,
    #[source]
    pub source: Error,
}

trait AtStage<T> {
    fn at(self, stage: Stage) -> std::result::Result<T, PipelineError>;
}

impl<T> AtStage<T> for Result<T> {
    fn at(self, stage: Stage) -> std::result::Result<T, PipelineError> {
        self.map_err(|source| PipelineError { stage, source })
    }
}

/// Everything the pipeline computed, in problem order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub q: Rung,
    pub family: OperatorFamily,
    pub weight_method: WeightMethod,
    pub aggregated: Matrix<Ivqrofn>,
    pub weights: WeightVector,
    pub aggregates: Vec<Ivqrofn>,
    pub scores: Vec<f64>,
    pub normalized_scores: Vec<f64>,
    pub accuracies: Vec<f64>,
    pub ranking: Ranking,
    pub score_spread: Option<f64>,
    pub hhi: f64,
    pub diagnostics: Vec<Diagnostic>,
}

impl EvaluationReport {
    pub fn ranking_string(&self) -> String {
        self.ranking.display_with(&self.alternatives)
    }
}

pub fn evaluate(
    problem: &DecisionProblem,
    config: &PipelineConfig,
) -> std::result::Result<EvaluationReport, PipelineError> {
    config.family.validate().at(Stage::Configuration)?;
    let Ingested {
        matrices,
        mut diagnostics,
    } = ingest(problem);

    let q = match config.q {
        RungChoice::Fixed(q) => q,
        RungChoice::Auto { q_max } => {
            let q = min_valid_q(matrices.iter().flat_map(Matrix::iter), q_max).at(Stage::Rung)?;
            diagnostics.push(Diagnostic::Note {
                stage: Stage::Rung,
                message: format!("smallest admissible rung is q = {q}"),
            });
            q
        }
    };

    let aggregated =
        aggregate_experts(&matrices, &problem.expert_weights, q, &config.family).at(Stage::ExpertAggregation)?;

    let weight_q = config.weight_q.unwrap_or(q);
    let weights = match &config.weights {
        WeightMethod::Swing(cfg) => {
            let analysis = swing_analysis(&aggregated, weight_q, cfg).at(Stage::Weights)?;
            diagnostics.push(Diagnostic::Note {
                stage: Stage::Weights,
                message: format!(
                    "swing d_bound = {}, alpha = {}, links cells {} the threshold",
                    cfg.d_bound,
                    cfg.alpha,
                    if cfg.invert_selection { "below" } else { "above" }
                ),
            });
            diagnostics.extend(analysis.notes.iter().map(|message| Diagnostic::Note {
                stage: Stage::Weights,
                message: message.clone(),
            }));
            analysis.weights
        }
        other => other.derive(&aggregated, weight_q).at(Stage::Weights)?,
    };

    let aggregates = aggregate_attributes(&aggregated, &weights, q, &config.family).at(Stage::AttributeAggregation)?;
    let ranking = rank(&aggregates, q).at(Stage::Ranking)?;
    let mut scores = Vec::with_capacity(aggregates.len());
    let mut normalized_scores = Vec::with_capacity(aggregates.len());
    let mut accuracies = Vec::with_capacity(aggregates.len());
    for a in &aggregates {
        scores.push(a.score(q).at(Stage::Ranking)?);
        normalized_scores.push(a.normalized_score(q).at(Stage::Ranking)?);
        accuracies.push(a.accuracy(q).at(Stage::Ranking)?);
    }
    let hhi = hhi(&normalized_scores).at(Stage::Ranking)?;
    let score_spread = score_spread(&normalized_scores).ok();
    if ranking.has_ties() {
        diagnostics.push(Diagnostic::Note {
            stage: Stage::Ranking,
            message: "some alternatives tie on score and accuracy".into(),
        });
    }

    Ok(EvaluationReport {
        alternatives: problem.alternatives.clone(),
        attributes: problem.attributes.clone(),
        q,
        family: config.family,
        weight_method: config.weights.clone(),
        aggregated,
        weights,
        aggregates,
        scores,
        normalized_scores,
        accuracies,
        ranking,
        score_spread,
        hhi,
        diagnostics,
    })
}
