//! Algebraic (product) family: `S(x, y) = x + y - xy`, `T(x, y) = xy`.

use super::{check_k, Connectives};
use crate::error::Result;
use crate::number::{Ivqrofn, Rung};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Algebraic;

impl Connectives for Algebraic {
    fn conorm(&self, x: f64, y: f64) -> f64 {
        x + y - x * y
    }

    fn norm(&self, x: f64, y: f64) -> f64 {
        x * y
    }

    fn conorm_multiple(&self, k: f64, x: f64) -> f64 {
        -(k * (-x).ln_1p()).exp_m1()
    }

    fn norm_power(&self, x: f64, k: f64) -> f64 {
        x.powf(k)
    }

    fn add_values(&self, a: &Ivqrofn, b: &Ivqrofn, q: Rung) -> Ivqrofn {
        let s = |x: f64, y: f64| {
            let (x, y) = (q.pow(x), q.pow(y));
            q.root(x + y - x * y)
        };
        Ivqrofn::from_computed(
            s(a.mu_lo(), b.mu_lo()),
            s(a.mu_hi(), b.mu_hi()),
            a.nu_lo() * b.nu_lo(),
            a.nu_hi() * b.nu_hi(),
        )
    }

    fn mul_values(&self, a: &Ivqrofn, b: &Ivqrofn, q: Rung) -> Ivqrofn {
        let s = |x: f64, y: f64| {
            let (x, y) = (q.pow(x), q.pow(y));
            q.root(x + y - x * y)
        };
        Ivqrofn::from_computed(
            a.mu_lo() * b.mu_lo(),
            a.mu_hi() * b.mu_hi(),
            s(a.nu_lo(), b.nu_lo()),
            s(a.nu_hi(), b.nu_hi()),
        )
    }

    fn scalar_values(&self, k: f64, a: &Ivqrofn, q: Rung) -> Ivqrofn {
        let m = |x: f64| q.root(1.0 - (1.0 - q.pow(x)).powf(k));
        Ivqrofn::from_computed(m(a.mu_lo()), m(a.mu_hi()), a.nu_lo().powf(k), a.nu_hi().powf(k))
    }

    fn pow_values(&self, a: &Ivqrofn, k: f64, q: Rung) -> Ivqrofn {
        let m = |x: f64| q.root(1.0 - (1.0 - q.pow(x)).powf(k));
        Ivqrofn::from_computed(a.mu_lo().powf(k), a.mu_hi().powf(k), m(a.nu_lo()), m(a.nu_hi()))
    }
}

pub fn add(a: &Ivqrofn, b: &Ivqrofn, q: Rung) -> Result<Ivqrofn> {
    a.ensure_valid(q)?;
    b.ensure_valid(q)?;
    Algebraic.add_values(a, b, q).into_valid(q)
}

pub fn mul(a: &Ivqrofn, b: &Ivqrofn, q: Rung) -> Result<Ivqrofn> {
    a.ensure_valid(q)?;
    b.ensure_valid(q)?;
    Algebraic.mul_values(a, b, q).into_valid(q)
}

pub fn scalar(k: f64, a: &Ivqrofn, q: Rung) -> Result<Ivqrofn> {
    check_k(k)?;
    a.ensure_valid(q)?;
    Algebraic.scalar_values(k, a, q).into_valid(q)
}

pub fn pow(a: &Ivqrofn, k: f64, q: Rung) -> Result<Ivqrofn> {
    check_k(k)?;
    a.ensure_valid(q)?;
    Algebraic.pow_values(a, k, q).into_valid(q)
}
