use super::{OperatorFamily, WeightVector};
use crate::error::{Error, Result};
use crate::number::{Ivqrofn, Rung};

/// Positions of `values` from largest to smallest under score then accuracy.
/// Ties keep their input order.
pub fn owa_order(values: &[Ivqrofn], q: Rung) -> Result<Vec<usize>> {
    for a in values {
        a.ensure_valid(q)?;
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&i, &j| values[j].compare_unchecked(&values[i], q));
    Ok(idx)
}

/// Ordered weighted aggregation: the i-th weight scales the i-th largest
/// value and the scaled terms are summed with the family's `add`.
pub fn owa_aggregate(values: &[Ivqrofn], weights: &WeightVector, family: &OperatorFamily, q: Rung) -> Result<Ivqrofn> {
    if values.is_empty() {
        return Err(Error::Empty("value list"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            what: "weights",
            expected: values.len(),
            found: weights.len(),
        });
    }
    let ops = family.ops(q)?;
    let order = owa_order(values, q)?;
    // Zero weights contribute the additive identity and are skipped.
    order
        .iter()
        .zip(weights.iter())
        .filter(|(_, &w)| w > 0.0)
        .map(|(&i, &w)| ops.scalar_unchecked(w, &values[i]))
        .reduce(|acc, term| ops.add_unchecked(&acc, &term))
        .ok_or_else(|| Error::InvalidWeights("no positive weight".into()))?
        .into_valid(q)
}
