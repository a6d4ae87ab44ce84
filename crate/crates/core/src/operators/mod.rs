//! Operator families acting on IVq-ROFNs and the ordered weighted aggregator.
//!
//! Every family is a t-conorm / t-norm pair applied to q-th powers of the
//! bounds: `add` combines memberships with the t-conorm and non-memberships
//! with the t-norm, `mul` is its dual, and `scalar` / `pow` are the k-fold
//! versions obtained from the same pair.

pub mod algebraic;
pub mod generator;
mod owa;
pub mod weber;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::{Ivqrofn, Rung};

pub use owa::{owa_aggregate, owa_order};

/// Scalar connectives on `[0, 1]`, evaluated on q-th powers.
///
/// The `*_values` methods lift the connectives to IVq-ROFNs; families with
/// a literal closed form may override them.
pub(crate) trait Connectives {
    fn conorm(&self, x: f64, y: f64) -> f64;
    fn norm(&self, x: f64, y: f64) -> f64;
    /// `x` combined with itself `k` times under the t-conorm (real `k > 0`).
    fn conorm_multiple(&self, k: f64, x: f64) -> f64;
    /// `x` combined with itself `k` times under the t-norm (real `k > 0`).
    fn norm_power(&self, x: f64, k: f64) -> f64;

    fn add_values(&self, a: &Ivqrofn, b: &Ivqrofn, q: Rung) -> Ivqrofn {
        let (x, y) = (a.powers(q), b.powers(q));
        Ivqrofn::from_computed(
            q.root(self.conorm(x[0], y[0])),
            q.root(self.conorm(x[1], y[1])),
            q.root(self.norm(x[2], y[2])),
            q.root(self.norm(x[3], y[3])),
        )
    }

    fn mul_values(&self, a: &Ivqrofn, b: &Ivqrofn, q: Rung) -> Ivqrofn {
        self.add_values(&a.complement(), &b.complement(), q).complement()
    }

    fn scalar_values(&self, k: f64, a: &Ivqrofn, q: Rung) -> Ivqrofn {
        let x = a.powers(q);
        Ivqrofn::from_computed(
            q.root(self.conorm_multiple(k, x[0])),
            q.root(self.conorm_multiple(k, x[1])),
            q.root(self.norm_power(x[2], k)),
            q.root(self.norm_power(x[3], k)),
        )
    }

    fn pow_values(&self, a: &Ivqrofn, k: f64, q: Rung) -> Ivqrofn {
        self.scalar_values(k, &a.complement(), q).complement()
    }
}

pub(crate) fn check_k(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveScalar(k))
    }
}

/// Parametric t-norm family driving aggregation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OperatorFamily {
    Weber { lambda: f64 },
    Algebraic,
    Frank { alpha: f64 },
    Hamacher { gamma: f64 },
}

impl Default for OperatorFamily {
    fn default() -> Self {
        Self::Weber { lambda: 2.0 }
    }
}

impl OperatorFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Weber { lambda } => weber::Weber::new(lambda).map(|_| ()),
            Self::Algebraic => Ok(()),
            Self::Frank { alpha } => generator::Frank::new(alpha).map(|_| ()),
            Self::Hamacher { gamma } => generator::Hamacher::new(gamma).map(|_| ()),
        }
    }

    /// Binds the family to a rung.
    pub fn ops(&self, q: Rung) -> Result<FamilyOps> {
        let kind = match *self {
            Self::Weber { lambda } => Kind::Weber(weber::Weber::new(lambda)?),
            Self::Algebraic => Kind::Algebraic,
            Self::Frank { alpha } => Kind::Frank(generator::Frank::new(alpha)?),
            Self::Hamacher { gamma } => Kind::Hamacher(generator::Hamacher::new(gamma)?),
        };
        Ok(FamilyOps { kind, q })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Weber { .. } => "weber",
            Self::Algebraic => "algebraic",
            Self::Frank { .. } => "frank",
            Self::Hamacher { .. } => "hamacher",
        }
    }
}

impl fmt::Display for OperatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Weber { lambda } => write!(f, "weber:{lambda}"),
            Self::Algebraic => f.write_str("algebraic"),
            Self::Frank { alpha } => write!(f, "frank:{alpha}"),
            Self::Hamacher { gamma } => write!(f, "hamacher:{gamma}"),
        }
    }
}

impl FromStr for OperatorFamily {
    type Err = Error;

    /// `weber[:lambda]`, `algebraic`, `frank:alpha`, `hamacher:gamma`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, raw) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let param = |default: Option<f64>| -> Result<f64> {
            match raw {
                Some(p) => p.trim().parse().map_err(|_| Error::UnknownFamily(s.to_string())),
                None => default.ok_or_else(|| Error::UnknownFamily(s.to_string())),
            }
        };
        let family = match name.trim().to_ascii_lowercase().as_str() {
            "weber" => Self::Weber {
                lambda: param(Some(2.0))?,
            },
            "algebraic" | "owa" if raw.is_none() => Self::Algebraic,
            "frank" => Self::Frank { alpha: param(None)? },
            "hamacher" => Self::Hamacher { gamma: param(None)? },
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        family.validate()?;
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Weber(weber::Weber),
    Algebraic,
    Frank(generator::Frank),
    Hamacher(generator::Hamacher),
}

/// The four operations of a family at a fixed rung. Inputs are checked for
/// validity at that rung.
#[derive(Debug, Clone, Copy)]
pub struct FamilyOps {
    kind: Kind,
    q: Rung,
}

macro_rules! dispatch {
    ($self:ident, $f:ident ( $($arg:expr),* )) => {
        match &$self.kind {
            Kind::Weber(c) => c.$f($($arg),*),
            Kind::Algebraic => algebraic::Algebraic.$f($($arg),*),
            Kind::Frank(c) => c.$f($($arg),*),
            Kind::Hamacher(c) => c.$f($($arg),*),
        }
    };
}

impl FamilyOps {
    pub fn q(&self) -> Rung {
        self.q
    }

    pub fn add(&self, a: &Ivqrofn, b: &Ivqrofn) -> Result<Ivqrofn> {
        a.ensure_valid(self.q)?;
        b.ensure_valid(self.q)?;
        self.add_unchecked(a, b).into_valid(self.q)
    }

    pub fn mul(&self, a: &Ivqrofn, b: &Ivqrofn) -> Result<Ivqrofn> {
        a.ensure_valid(self.q)?;
        b.ensure_valid(self.q)?;
        dispatch!(self, mul_values(a, b, self.q)).into_valid(self.q)
    }

    pub fn scalar(&self, k: f64, a: &Ivqrofn) -> Result<Ivqrofn> {
        check_k(k)?;
        a.ensure_valid(self.q)?;
        self.scalar_unchecked(k, a).into_valid(self.q)
    }

    pub fn pow(&self, a: &Ivqrofn, k: f64) -> Result<Ivqrofn> {
        check_k(k)?;
        a.ensure_valid(self.q)?;
        if k == 1.0 {
            return Ok(*a);
        }
        dispatch!(self, pow_values(a, k, self.q)).into_valid(self.q)
    }

    pub(crate) fn add_unchecked(&self, a: &Ivqrofn, b: &Ivqrofn) -> Ivqrofn {
        dispatch!(self, add_values(a, b, self.q))
    }

    pub(crate) fn scalar_unchecked(&self, k: f64, a: &Ivqrofn) -> Ivqrofn {
        // Unit multiples are exact, so a lone full-weight input passes through.
        if k == 1.0 {
            return *a;
        }
        dispatch!(self, scalar_values(k, a, self.q))
    }
}

/// Nonnegative weights summing to one (within `1e-9`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub const SUM_TOL: f64 = 1e-9;

    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty("weight vector"));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidWeights(format!("entry {w} is negative or not finite")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOL {
            return Err(Error::InvalidWeights(format!("entries sum to {sum}, not 1")));
        }
        Ok(Self(weights))
    }

    /// Scales nonnegative raw masses to sum to one.
    pub fn normalized(raw: Vec<f64>) -> Result<Self> {
        let sum: f64 = raw.iter().sum();
        if !(sum.is_finite() && sum > 0.0) || raw.iter().any(|w| *w < 0.0) {
            return Err(Error::InvalidWeights(format!("cannot normalize masses {raw:?}")));
        }
        Self::new(raw.into_iter().map(|w| w / sum).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty("weight vector"));
        }
        Ok(Self(vec![1.0 / n as f64; n]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Vec<f64> {
        w.0
    }
}

impl std::ops::Deref for WeightVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}
