use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack allowed on `mu_hi^q + nu_hi^q <= 1`.
pub const VALIDITY_TOL: f64 = 1e-12;
/// Score and accuracy differences below this count as ties.
pub const COMPARE_TOL: f64 = 1e-9;

/// Rung exponent `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Rung(f64);

impl Rung {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q >= 1.0 {
            Ok(Self(q))
        } else {
            Err(Error::InvalidRung(q))
        }
    }

    pub fn integer(q: u32) -> Result<Self> {
        Self::new(f64::from(q))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `x^q` for `x` in `[0, 1]`.
    #[inline]
    pub fn pow(self, x: f64) -> f64 {
        x.powf(self.0)
    }

    /// `x^(1/q)` with `x` clamped into `[0, 1]` first.
    #[inline]
    pub fn root(self, x: f64) -> f64 {
        let x = x.clamp(0.0, 1.0);
        if x == 0.0 {
            0.0
        } else if x == 1.0 {
            1.0
        } else {
            (x.ln() / self.0).exp()
        }
    }
}

impl TryFrom<f64> for Rung {
    type Error = Error;
    fn try_from(q: f64) -> Result<Self> {
        Self::new(q)
    }
}

impl From<Rung> for f64 {
    fn from(q: Rung) -> f64 {
        q.0
    }
}

impl fmt::Display for Rung {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Interval-valued q-rung orthopair fuzzy number `<[mu_lo, mu_hi], [nu_lo, nu_hi]>`.
///
/// Bound ordering is enforced on construction. Validity against a rung is a
/// separate check, see [`Ivqrofn::is_valid`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct Ivqrofn {
    mu_lo: f64,
    mu_hi: f64,
    nu_lo: f64,
    nu_hi: f64,
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Ivqrofn {
    /// Positive ideal `<[1,1],[0,0]>`.
    pub const POSITIVE_IDEAL: Self = Self::raw(1.0, 1.0, 0.0, 0.0);
    /// Negative ideal `<[0,0],[1,1]>`, the identity of `add`.
    pub const NEGATIVE_IDEAL: Self = Self::raw(0.0, 0.0, 1.0, 1.0);

    const fn raw(mu_lo: f64, mu_hi: f64, nu_lo: f64, nu_hi: f64) -> Self {
        Self {
            mu_lo,
            mu_hi,
            nu_lo,
            nu_hi,
        }
    }

    pub fn new(mu_lo: f64, mu_hi: f64, nu_lo: f64, nu_hi: f64) -> Result<Self> {
        let ordered = |lo: f64, hi: f64| (0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi) && lo <= hi;
        if ordered(mu_lo, mu_hi) && ordered(nu_lo, nu_hi) {
            Ok(Self::raw(mu_lo, mu_hi, nu_lo, nu_hi))
        } else {
            Err(Error::MalformedBounds(mu_lo, mu_hi, nu_lo, nu_hi))
        }
    }

    /// Like [`Ivqrofn::new`] and additionally valid at `q`.
    pub fn checked(mu_lo: f64, mu_hi: f64, nu_lo: f64, nu_hi: f64, q: Rung) -> Result<Self> {
        let a = Self::new(mu_lo, mu_hi, nu_lo, nu_hi)?;
        a.ensure_valid(q)?;
        Ok(a)
    }

    /// Builds a result of an operator. Bounds are clamped into `[0, 1]` and
    /// round-off inversions of a bound pair are collapsed.
    pub(crate) fn from_computed(mu_lo: f64, mu_hi: f64, nu_lo: f64, nu_hi: f64) -> Self {
        let fix = |lo: f64, hi: f64| {
            let lo = lo.clamp(0.0, 1.0);
            let hi = hi.clamp(0.0, 1.0);
            if lo > hi {
                let m = 0.5 * (lo + hi);
                (m, m)
            } else {
                (lo, hi)
            }
        };
        let (ml, mh) = fix(mu_lo, mu_hi);
        let (nl, nh) = fix(nu_lo, nu_hi);
        Self::raw(ml, mh, nl, nh)
    }

    pub fn mu_lo(&self) -> f64 {
        self.mu_lo
    }
    pub fn mu_hi(&self) -> f64 {
        self.mu_hi
    }
    pub fn nu_lo(&self) -> f64 {
        self.nu_lo
    }
    pub fn nu_hi(&self) -> f64 {
        self.nu_hi
    }

    pub fn membership(&self) -> Interval {
        Interval {
            lo: self.mu_lo,
            hi: self.mu_hi,
        }
    }

    pub fn non_membership(&self) -> Interval {
        Interval {
            lo: self.nu_lo,
            hi: self.nu_hi,
        }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.mu_lo, self.mu_hi, self.nu_lo, self.nu_hi]
    }

    /// Swaps membership and non-membership intervals.
    pub fn complement(self) -> Self {
        Self::raw(self.nu_lo, self.nu_hi, self.mu_lo, self.mu_hi)
    }

    /// Component-wise q-th powers.
    pub fn powers(&self, q: Rung) -> [f64; 4] {
        self.to_array().map(|x| q.pow(x))
    }

    pub fn is_valid(&self, q: Rung) -> bool {
        q.pow(self.mu_hi) + q.pow(self.nu_hi) <= 1.0 + VALIDITY_TOL
    }

    pub fn ensure_valid(&self, q: Rung) -> Result<()> {
        if self.is_valid(q) {
            Ok(())
        } else {
            Err(Error::InvalidNumber {
                value: *self,
                q: q.get(),
            })
        }
    }

    /// Passes a computed result through if it is valid at `q`.
    pub(crate) fn into_valid(self, q: Rung) -> Result<Self> {
        if self.is_valid(q) {
            Ok(self)
        } else {
            Err(Error::OutsideRung {
                value: self,
                q: q.get(),
            })
        }
    }

    pub fn hesitation(&self, q: Rung) -> Result<Interval> {
        self.ensure_valid(q)?;
        let [ml, mh, nl, nh] = self.powers(q);
        Ok(Interval {
            lo: q.root(1.0 - mh - nh),
            hi: q.root(1.0 - ml - nl),
        })
    }

    pub fn score(&self, q: Rung) -> Result<f64> {
        self.ensure_valid(q)?;
        Ok(self.score_unchecked(q))
    }

    /// Score rescaled to `[0, 1]` as `(1 + score) / 2`.
    pub fn normalized_score(&self, q: Rung) -> Result<f64> {
        self.score(q).map(|s| 0.5 * (1.0 + s))
    }

    pub fn accuracy(&self, q: Rung) -> Result<f64> {
        self.ensure_valid(q)?;
        Ok(self.accuracy_unchecked(q))
    }

    pub(crate) fn score_unchecked(&self, q: Rung) -> f64 {
        let [ml, mh, nl, nh] = self.powers(q);
        0.5 * (ml + mh - nl - nh)
    }

    pub(crate) fn accuracy_unchecked(&self, q: Rung) -> f64 {
        let [ml, mh, nl, nh] = self.powers(q);
        0.5 * (ml + mh + nl + nh)
    }

    /// Orders by score, then accuracy; differences within [`COMPARE_TOL`] tie.
    pub fn compare(&self, other: &Self, q: Rung) -> Result<Ordering> {
        self.ensure_valid(q)?;
        other.ensure_valid(q)?;
        Ok(self.compare_unchecked(other, q))
    }

    pub(crate) fn compare_unchecked(&self, other: &Self, q: Rung) -> Ordering {
        let by = |x: f64, y: f64| {
            if (x - y).abs() <= COMPARE_TOL {
                Ordering::Equal
            } else if x > y {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        };
        by(self.score_unchecked(q), other.score_unchecked(q))
            .then_with(|| by(self.accuracy_unchecked(q), other.accuracy_unchecked(q)))
    }

    /// Mean absolute difference of the q-th power components.
    pub fn distance(&self, other: &Self, q: Rung) -> Result<f64> {
        self.ensure_valid(q)?;
        other.ensure_valid(q)?;
        let a = self.powers(q);
        let b = other.powers(q);
        Ok(0.25 * a.iter().zip(&b).map(|(x, y)| (x - y).abs()).sum::<f64>())
    }
}

impl TryFrom<[f64; 4]> for Ivqrofn {
    type Error = Error;
    fn try_from(v: [f64; 4]) -> Result<Self> {
        Self::new(v[0], v[1], v[2], v[3])
    }
}

impl From<Ivqrofn> for [f64; 4] {
    fn from(a: Ivqrofn) -> [f64; 4] {
        a.to_array()
    }
}

impl fmt::Display for Ivqrofn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(4);
        write!(
            f,
            "<[{:.p$}, {:.p$}], [{:.p$}, {:.p$}]>",
            self.mu_lo, self.mu_hi, self.nu_lo, self.nu_hi
        )
    }
}

/// Smallest integer rung in `1..=q_max` at which every value is valid.
pub fn min_valid_q<'a, I>(values: I, q_max: u32) -> Result<Rung>
where
    I: IntoIterator<Item = &'a Ivqrofn>,
{
    if q_max < 1 {
        return Err(Error::InvalidConfig("q_max must be >= 1".into()));
    }
    let values: Vec<&Ivqrofn> = values.into_iter().collect();
    (1..=q_max)
        .map(|q| Rung::integer(q).expect("integer rung >= 1"))
        .find(|&q| values.iter().all(|a| a.is_valid(q)))
        .ok_or(Error::NoValidRung { q_max })
}
