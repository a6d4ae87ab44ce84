use serde::{Deserialize, Serialize};

use crate::magdm::{evaluate, DecisionProblem, PipelineConfig, PipelineError, RungChoice};
use crate::operators::{OperatorFamily, WeightVector};
use crate::weights::{MabacVariant, ProjectionReading, SwingConfig, WeightMethod};
use crate::Rung;

/// Settings shared by the three derived weighting methods.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CompareSpec {
    pub q: RungChoice,
    pub family: OperatorFamily,
    pub swing: SwingConfig,
    pub mabac: MabacVariant,
    pub projection: ProjectionReading,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodRow {
    pub method: String,
    pub weights: WeightVector,
    pub normalized_scores: Vec<f64>,
    pub ranking: String,
    pub hhi: f64,
    pub score_spread: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightComparison {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub q: Rung,
    pub family: OperatorFamily,
    pub swing: SwingConfig,
    pub mabac: MabacVariant,
    pub projection: ProjectionReading,
    pub rows: Vec<MethodRow>,
}

pub fn compare_weights(problem: &DecisionProblem, spec: &CompareSpec) -> Result<WeightComparison, PipelineError> {
    let methods = [
        WeightMethod::Swing(spec.swing),
        WeightMethod::Mabac { variant: spec.mabac },
        WeightMethod::Projection {
            reading: spec.projection,
        },
    ];
    let mut q = None;
    let mut rows = Vec::with_capacity(methods.len());
    for weights in methods {
        let config = PipelineConfig {
            q: spec.q,
            family: spec.family,
            weights,
            weight_q: None,
        };
        let report = evaluate(problem, &config)?;
        q = Some(report.q);
        rows.push(MethodRow {
            method: report.weight_method.label().to_string(),
            ranking: report.ranking_string(),
            weights: report.weights,
            normalized_scores: report.normalized_scores,
            hhi: report.hhi,
            score_spread: report.score_spread,
        });
    }
    Ok(WeightComparison {
        alternatives: problem.alternatives().to_vec(),
        attributes: problem.attributes().to_vec(),
        q: q.expect("three methods evaluated"),
        family: spec.family,
        swing: spec.swing,
        mabac: spec.mabac,
        projection: spec.projection,
        rows,
    })
}

impl WeightComparison {
    /// `method,w_<attr>...,score_<alt>...,ranking,hhi,score_spread`
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(vec![]);
        let mut header = vec!["method".to_string()];
        header.extend(self.attributes.iter().map(|a| format!("w_{a}")));
        header.extend(self.alternatives.iter().map(|a| format!("score_{a}")));
        header.extend(["ranking".into(), "hhi".into(), "score_spread".into()]);
        w.write_record(&header)?;
        for r in &self.rows {
            let mut rec = vec![r.method.clone()];
            rec.extend(r.weights.iter().map(f64::to_string));
            rec.extend(r.normalized_scores.iter().map(f64::to_string));
            rec.push(r.ranking.clone());
            rec.push(r.hhi.to_string());
            rec.push(r.score_spread.map(|s| s.to_string()).unwrap_or_default());
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "q = {}, family {}, swing d_bound = {}, alpha = {}{}\n\n",
            self.q,
            self.family,
            self.swing.d_bound,
            self.swing.alpha,
            if self.swing.invert_selection { " (inverted)" } else { "" }
        );
        out.push_str(&format!("{:<11}", "method"));
        for a in &self.attributes {
            out.push_str(&format!(" {a:>7}"));
        }
        out.push_str(&format!(" {:>7} {:>7}  ranking\n", "hhi", "spread"));
        for r in &self.rows {
            out.push_str(&format!("{:<11}", r.method));
            for w in r.weights.iter() {
                out.push_str(&format!(" {w:>7.4}"));
            }
            let spread = r.score_spread.map(|s| format!("{s:.4}")).unwrap_or_else(|| "-".into());
            out.push_str(&format!(" {:>7.4} {:>7}  {}\n", r.hhi, spread, r.ranking));
        }
        out
    }
}
