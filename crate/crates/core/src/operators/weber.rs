//! Weber family: `S(x, y) = min(x + y + λxy, 1)` with dual t-norm
//! `T(x, y) = max((x + y + λxy - 1) / (1 + λ), 0)`, for `λ > -1`, `λ != 0`.

use super::{check_k, Connectives, WeightVector};
use crate::error::{Error, Result};
use crate::number::{Ivqrofn, Rung};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weber {
    lambda: f64,
}

impl Weber {
    pub fn new(lambda: f64) -> Result<Self> {
        if lambda.is_finite() && lambda > -1.0 && lambda != 0.0 {
            Ok(Self { lambda })
        } else {
            Err(Error::InvalidLambda(lambda))
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `((1 + λx)^k - 1) / λ` without clamping.
    fn raw_multiple(&self, k: f64, x: f64) -> f64 {
        let l = self.lambda;
        (k * (l * x).ln_1p()).exp_m1() / l
    }

    /// `((1 + λx)^k / (1 + λ)^(k - 1) - 1) / λ` without clamping.
    fn raw_power(&self, x: f64, k: f64) -> f64 {
        let l = self.lambda;
        (k * (l * x).ln_1p() - (k - 1.0) * l.ln_1p()).exp_m1() / l
    }
}

impl Connectives for Weber {
    fn conorm(&self, x: f64, y: f64) -> f64 {
        (x + y + self.lambda * x * y).min(1.0)
    }

    fn norm(&self, x: f64, y: f64) -> f64 {
        ((x + y + self.lambda * x * y - 1.0) / (1.0 + self.lambda)).max(0.0)
    }

    fn conorm_multiple(&self, k: f64, x: f64) -> f64 {
        self.raw_multiple(k, x).min(1.0)
    }

    fn norm_power(&self, x: f64, k: f64) -> f64 {
        self.raw_power(x, k).max(0.0)
    }
}

/// Weber t-conorm on scalars.
pub fn t_conorm(x: f64, y: f64, lambda: f64) -> Result<f64> {
    Ok(Weber::new(lambda)?.conorm(x, y))
}

/// Weber t-norm on scalars.
pub fn t_norm(x: f64, y: f64, lambda: f64) -> Result<f64> {
    Ok(Weber::new(lambda)?.norm(x, y))
}

fn checked2(a: &Ivqrofn, b: &Ivqrofn, lambda: f64, q: Rung) -> Result<Weber> {
    let w = Weber::new(lambda)?;
    a.ensure_valid(q)?;
    b.ensure_valid(q)?;
    Ok(w)
}

pub fn add(a: &Ivqrofn, b: &Ivqrofn, lambda: f64, q: Rung) -> Result<Ivqrofn> {
    let w = checked2(a, b, lambda, q)?;
    w.add_values(a, b, q).into_valid(q)
}

pub fn mul(a: &Ivqrofn, b: &Ivqrofn, lambda: f64, q: Rung) -> Result<Ivqrofn> {
    let w = checked2(a, b, lambda, q)?;
    w.mul_values(a, b, q).into_valid(q)
}

pub fn scalar(k: f64, a: &Ivqrofn, lambda: f64, q: Rung) -> Result<Ivqrofn> {
    let w = Weber::new(lambda)?;
    check_k(k)?;
    a.ensure_valid(q)?;
    w.scalar_values(k, a, q).into_valid(q)
}

pub fn pow(a: &Ivqrofn, k: f64, lambda: f64, q: Rung) -> Result<Ivqrofn> {
    let w = Weber::new(lambda)?;
    check_k(k)?;
    a.ensure_valid(q)?;
    w.pow_values(a, k, q).into_valid(q)
}

/// Product form of the Weber OWA over values already in aggregation order.
///
/// Each weighted term `θ_i = w_i · a_i` is formed first, then all terms are
/// combined at once through `1 + λS = Π(1 + λx_i)` for memberships and
/// `1 + λT = Π(1 + λx_i) / (1 + λ)^(n-1)` for non-memberships.
pub fn owa_closed_form(ordered: &[Ivqrofn], weights: &WeightVector, lambda: f64, q: Rung) -> Result<Ivqrofn> {
    let w = Weber::new(lambda)?;
    if ordered.is_empty() {
        return Err(Error::Empty("value list"));
    }
    if ordered.len() != weights.len() {
        return Err(Error::LengthMismatch {
            what: "weights",
            expected: ordered.len(),
            found: weights.len(),
        });
    }
    let mut log_prod = [0.0f64; 4];
    for (a, &wi) in ordered.iter().zip(weights.iter()) {
        a.ensure_valid(q)?;
        let theta = if wi > 0.0 {
            w.scalar_values(wi, a, q)
        } else {
            Ivqrofn::NEGATIVE_IDEAL
        };
        for (acc, x) in log_prod.iter_mut().zip(theta.powers(q)) {
            *acc += (lambda * x).ln_1p();
        }
    }
    let n1 = (ordered.len() - 1) as f64;
    let member = |lp: f64| q.root((lp.exp_m1() / lambda).min(1.0));
    let non_member = |lp: f64| q.root(((lp - n1 * lambda.ln_1p()).exp_m1() / lambda).max(0.0));
    Ivqrofn::from_computed(
        member(log_prod[0]),
        member(log_prod[1]),
        non_member(log_prod[2]),
        non_member(log_prod[3]),
    )
    .into_valid(q)
}
