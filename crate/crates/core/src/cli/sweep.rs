use serde::{Deserialize, Serialize};

use crate::magdm::{aggregate_attributes, aggregate_experts, ingest, rank, DecisionProblem, PipelineError, Stage};
use crate::operators::{OperatorFamily, WeightVector};
use crate::weights::{hhi, score_spread, WeightMethod};
use crate::{Error, Rung};

/// A family entry of a sweep. Plain Weber is instantiated once per swept lambda.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum FamilyChoice {
    WeberSweep,
    Fixed(OperatorFamily),
}

impl std::str::FromStr for FamilyChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim().eq_ignore_ascii_case("weber") {
            Ok(Self::WeberSweep)
        } else {
            s.parse().map(Self::Fixed)
        }
    }
}

/// Grid of a sensitivity sweep.
///
/// Attribute weights are derived once per method, at `weight_q` (default:
/// the first swept q) on the expert aggregation of `weight_family` (default:
/// the first expanded family), and held fixed across all rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub qs: Vec<u32>,
    pub lambdas: Vec<f64>,
    pub families: Vec<FamilyChoice>,
    pub methods: Vec<WeightMethod>,
    pub weight_q: Option<u32>,
    pub weight_family: Option<OperatorFamily>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            qs: (2..=9).collect(),
            lambdas: vec![2.0],
            families: vec![FamilyChoice::WeberSweep],
            methods: vec![WeightMethod::default()],
            weight_q: None,
            weight_family: None,
        }
    }
}

impl SweepSpec {
    pub fn expanded_families(&self) -> Result<Vec<OperatorFamily>, Error> {
        let mut out = Vec::new();
        for f in &self.families {
            match f {
                FamilyChoice::WeberSweep => {
                    out.extend(self.lambdas.iter().map(|&lambda| OperatorFamily::Weber { lambda }));
                }
                FamilyChoice::Fixed(f) => out.push(*f),
            }
        }
        for f in &out {
            f.validate()?;
        }
        Ok(out)
    }

    fn validate(&self) -> Result<(), Error> {
        if self.qs.is_empty() {
            return Err(Error::Empty("q list"));
        }
        if self.families.is_empty() {
            return Err(Error::Empty("family list"));
        }
        if self.methods.is_empty() {
            return Err(Error::Empty("weight method list"));
        }
        if self.families.contains(&FamilyChoice::WeberSweep) && self.lambdas.is_empty() {
            return Err(Error::Empty("lambda list"));
        }
        if let Some(&q) = self.qs.iter().find(|&&q| q < 1) {
            return Err(Error::InvalidRung(f64::from(q)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub q: u32,
    pub family: String,
    pub weight_method: String,
    pub normalized_scores: Vec<f64>,
    pub ranking: String,
    pub score_spread: f64,
    pub hhi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub weight_q: u32,
    pub weight_family: String,
    /// Fixed weights per method, in method order.
    pub weights: Vec<(String, WeightVector)>,
    pub rows: Vec<SweepRow>,
}

fn at(stage: Stage) -> impl FnOnce(Error) -> PipelineError {
    move |source| PipelineError { stage, source }
}

pub fn run_sweep(problem: &DecisionProblem, spec: &SweepSpec) -> Result<SweepTable, PipelineError> {
    spec.validate().map_err(at(Stage::Configuration))?;
    let families = spec.expanded_families().map_err(at(Stage::Configuration))?;
    let rung = |q: u32| Rung::integer(q).map_err(at(Stage::Rung));
    let matrices = ingest(problem).matrices;

    let weight_q = spec.weight_q.unwrap_or(spec.qs[0]);
    let weight_family = spec.weight_family.unwrap_or(families[0]);
    let reference = aggregate_experts(&matrices, problem.expert_weights(), rung(weight_q)?, &weight_family)
        .map_err(at(Stage::ExpertAggregation))?;
    let weights = spec
        .methods
        .iter()
        .map(|m| {
            m.derive(&reference, rung(weight_q)?)
                .map(|w| (m.to_string(), w))
                .map_err(at(Stage::Weights))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut rows = Vec::new();
    for &q in &spec.qs {
        let rq = rung(q)?;
        for family in &families {
            let r = aggregate_experts(&matrices, problem.expert_weights(), rq, family)
                .map_err(at(Stage::ExpertAggregation))?;
            for (label, w) in &weights {
                let aggregates = aggregate_attributes(&r, w, rq, family).map_err(at(Stage::AttributeAggregation))?;
                let ranking = rank(&aggregates, rq).map_err(at(Stage::Ranking))?;
                let scores = aggregates
                    .iter()
                    .map(|a| a.normalized_score(rq))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(at(Stage::Ranking))?;
                rows.push(SweepRow {
                    q,
                    family: family.to_string(),
                    weight_method: label.clone(),
                    ranking: ranking.display_with(problem.alternatives()),
                    score_spread: score_spread(&scores).unwrap_or(0.0),
                    hhi: hhi(&scores).map_err(at(Stage::Ranking))?,
                    normalized_scores: scores,
                });
            }
        }
    }
    Ok(SweepTable {
        alternatives: problem.alternatives().to_vec(),
        attributes: problem.attributes().to_vec(),
        weight_q,
        weight_family: weight_family.to_string(),
        weights,
        rows,
    })
}

impl SweepTable {
    /// `q,family,weights,score_<alt>...,ranking,score_spread,hhi`
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(vec![]);
        let mut header = vec!["q".to_string(), "family".into(), "weights".into()];
        header.extend(self.alternatives.iter().map(|a| format!("score_{a}")));
        header.extend(["ranking".into(), "score_spread".into(), "hhi".into()]);
        w.write_record(&header)?;
        for r in &self.rows {
            let mut rec = vec![r.q.to_string(), r.family.clone(), r.weight_method.clone()];
            rec.extend(r.normalized_scores.iter().map(f64::to_string));
            rec.extend([r.ranking.clone(), r.score_spread.to_string(), r.hhi.to_string()]);
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn render(&self) -> String {
        let mut out = format!("weights fixed at q = {} with {}\n", self.weight_q, self.weight_family);
        for (label, w) in &self.weights {
            let ws: Vec<String> = w.iter().map(|x| format!("{x:.4}")).collect();
            out.push_str(&format!("  {label:<10} ({})\n", ws.join(", ")));
        }
        out.push('\n');
        let mut header = format!("{:>3}  {:<14} {:<10}", "q", "family", "weights");
        for a in &self.alternatives {
            header.push_str(&format!(" {a:>7}"));
        }
        header.push_str(&format!(" {:>7} {:>7}  ranking\n", "spread", "hhi"));
        out.push_str(&header);
        for r in &self.rows {
            out.push_str(&format!("{:>3}  {:<14} {:<10}", r.q, r.family, r.weight_method));
            for s in &r.normalized_scores {
                out.push_str(&format!(" {s:>7.4}"));
            }
            out.push_str(&format!(" {:>7.4} {:>7.4}  {}\n", r.score_spread, r.hhi, r.ranking));
        }
        out
    }
}
