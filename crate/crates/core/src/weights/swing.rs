use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::number::{Ivqrofn, Rung};
use crate::operators::WeightVector;

/// Threshold and smoothing for the selection graph.
///
/// The defaults reproduce the published case-study weights: any threshold
/// strictly between 0.2337 and 0.2459 yields the same graph there, and the
/// smoothing value 12 is the best point of the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwingConfig {
    pub d_bound: f64,
    pub alpha: f64,
    /// Link cells whose distance is *below* the threshold instead of above.
    #[serde(default)]
    pub invert_selection: bool,
}

impl Default for SwingConfig {
    fn default() -> Self {
        Self {
            d_bound: 0.24,
            alpha: 12.0,
            invert_selection: false,
        }
    }
}

impl SwingConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.d_bound) {
            return Err(Error::InvalidConfig(format!("d_bound {} outside [0, 1]", self.d_bound)));
        }
        if !(self.alpha.is_finite() && self.alpha >= 0.0) {
            return Err(Error::InvalidConfig(format!("alpha {} must be >= 0", self.alpha)));
        }
        Ok(())
    }
}

/// Distance of every cell to the positive ideal.
pub fn distance_matrix(r: &Matrix<Ivqrofn>, q: Rung) -> Result<Matrix<f64>> {
    Matrix::try_from_fn(r.rows(), r.cols(), |i, j| {
        r.get(i, j).distance(&Ivqrofn::POSITIVE_IDEAL, q)
    })
}

/// Alternative–attribute links with their supports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteSelection {
    links: Matrix<bool>,
    /// For each attribute, the alternatives linked to it.
    by_attribute: Vec<Vec<usize>>,
    /// For each alternative, the attributes linked to it.
    by_alternative: Vec<Vec<usize>>,
}

impl BipartiteSelection {
    pub fn from_links(links: Matrix<bool>) -> Self {
        let by_attribute = (0..links.cols())
            .map(|j| (0..links.rows()).filter(|&i| *links.get(i, j)).collect())
            .collect();
        let by_alternative = (0..links.rows())
            .map(|i| (0..links.cols()).filter(|&j| *links.get(i, j)).collect())
            .collect();
        Self {
            links,
            by_attribute,
            by_alternative,
        }
    }

    pub fn links(&self) -> &Matrix<bool> {
        &self.links
    }

    pub fn attribute_support(&self, attribute: usize) -> &[usize] {
        &self.by_attribute[attribute]
    }

    pub fn alternative_support(&self, alternative: usize) -> &[usize] {
        &self.by_alternative[alternative]
    }

    pub fn is_empty(&self) -> bool {
        !self.links.iter().any(|&b| b)
    }
}

/// Links cell `(i, j)` when its distance exceeds `d_bound` (or falls below it
/// when inverted). A distance equal to the threshold never links.
pub fn selection_matrix(d: &Matrix<f64>, d_bound: f64, invert: bool) -> BipartiteSelection {
    let links = d.map(|&x| if invert { x < d_bound } else { x > d_bound });
    BipartiteSelection::from_links(links)
}

/// Symmetric attribute similarity with unit diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityMatrix {
    values: Matrix<f64>,
    /// Attribute pairs with no common alternative.
    empty_support: Vec<(usize, usize)>,
}

impl SimilarityMatrix {
    pub fn values(&self) -> &Matrix<f64> {
        &self.values
    }

    pub fn empty_support(&self) -> &[(usize, usize)] {
        &self.empty_support
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Swing similarity between attributes over shared alternatives.
///
/// For attributes `i != j` with shared alternatives `U`, sums over ordered
/// pairs `(e, g)` in `U × U` (including `e == g`) the term
/// `1 / sqrt(|I_e| |I_g|) / (alpha + |I_e ∩ I_g|)`.
pub fn swing_similarity(b: &BipartiteSelection, alpha: f64) -> Result<SimilarityMatrix> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::InvalidConfig(format!("alpha {alpha} must be >= 0")));
    }
    let n = b.links.cols();
    let mut empty_support = Vec::new();
    let mut cells = vec![0.0; n * n];
    for i in 0..n {
        cells[i * n + i] = 1.0;
        for j in i + 1..n {
            let shared = intersect(&b.by_attribute[i], &b.by_attribute[j]);
            if shared.is_empty() {
                empty_support.push((i, j));
                continue;
            }
            let mut s = 0.0;
            for &e in &shared {
                let ie = &b.by_alternative[e];
                for &g in &shared {
                    let ig = &b.by_alternative[g];
                    let common = intersect(ie, ig).len() as f64;
                    s += 1.0 / ((ie.len() * ig.len()) as f64).sqrt() / (alpha + common);
                }
            }
            cells[i * n + j] = s;
            cells[j * n + i] = s;
        }
    }
    Ok(SimilarityMatrix {
        values: Matrix::from_fn(n, n, |i, j| cells[i * n + j]),
        empty_support,
    })
}

/// Every intermediate of the Swing derivation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwingAnalysis {
    pub config: SwingConfig,
    pub distances: Matrix<f64>,
    pub selection: BipartiteSelection,
    pub similarity: SimilarityMatrix,
    /// Row means of the similarity matrix.
    pub importance: Vec<f64>,
    pub weights: WeightVector,
    pub notes: Vec<String>,
}

pub fn swing_analysis(r: &Matrix<Ivqrofn>, q: Rung, cfg: &SwingConfig) -> Result<SwingAnalysis> {
    cfg.validate()?;
    let distances = distance_matrix(r, q)?;
    let selection = selection_matrix(&distances, cfg.d_bound, cfg.invert_selection);
    let similarity = swing_similarity(&selection, cfg.alpha)?;
    let n = r.cols();
    let importance: Vec<f64> = similarity
        .values
        .row_iter()
        .map(|row| row.iter().sum::<f64>() / n as f64)
        .collect();
    let mut notes = Vec::new();
    let isolated = n > 1 && similarity.empty_support.len() == n * (n - 1) / 2;
    if selection.is_empty() {
        notes.push(format!(
            "selection graph is empty at d_bound = {}; weights fall back to uniform",
            cfg.d_bound
        ));
    } else if isolated {
        notes.push("no two attributes share a linked alternative; weights fall back to uniform".into());
    }
    let weights = if selection.is_empty() || isolated {
        WeightVector::uniform(n)?
    } else {
        WeightVector::normalized(importance.clone())?
    };
    Ok(SwingAnalysis {
        config: *cfg,
        distances,
        selection,
        similarity,
        importance,
        weights,
        notes,
    })
}

pub fn swing_weights(r: &Matrix<Ivqrofn>, q: Rung, cfg: &SwingConfig) -> Result<WeightVector> {
    swing_analysis(r, q, cfg).map(|a| a.weights)
}

/// A grid point of the calibration search and its worst-entry error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwingCalibration {
    pub config: SwingConfig,
    pub residual: f64,
}

/// Default smoothing grid `{0.5, 1, 2, ..., 20}`.
pub fn default_alpha_grid() -> Vec<f64> {
    std::iter::once(0.5).chain((1..=20).map(f64::from)).collect()
}

/// Searches thresholds over the distinct cell distances (both link
/// directions) and the given smoothing values. Returns every grid point
/// sorted by residual against `target`.
pub fn calibrate_swing(r: &Matrix<Ivqrofn>, q: Rung, target: &[f64], alphas: &[f64]) -> Result<Vec<SwingCalibration>> {
    if target.len() != r.cols() {
        return Err(Error::LengthMismatch {
            what: "calibration target",
            expected: r.cols(),
            found: target.len(),
        });
    }
    let d = distance_matrix(r, q)?;
    let mut bounds: Vec<f64> = d.iter().copied().collect();
    bounds.sort_by(f64::total_cmp);
    bounds.dedup();
    let mut out = Vec::new();
    for &invert_selection in &[false, true] {
        for &d_bound in &bounds {
            for &alpha in alphas {
                let config = SwingConfig {
                    d_bound,
                    alpha,
                    invert_selection,
                };
                let w = swing_weights(r, q, &config)?;
                let residual = w.iter().zip(target).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                out.push(SwingCalibration { config, residual });
            }
        }
    }
    out.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    Ok(out)
}
