//! Interval-valued q-rung orthopair fuzzy numbers (IVq-ROFNs), parametric
//! t-norm aggregation, attribute-weight derivation and a multi-expert
//! decision pipeline.

pub mod cli;
pub mod error;
pub mod linguistic;
pub mod magdm;
pub mod matrix;
pub mod number;
pub mod operators;
pub mod weights;

pub use error::{Error, Result};
pub use linguistic::LinguisticTerm;
pub use matrix::Matrix;
pub use number::{min_valid_q, Interval, Ivqrofn, Rung};
pub use operators::{owa_aggregate, FamilyOps, OperatorFamily, WeightVector};
