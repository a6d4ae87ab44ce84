//! Strict Archimedean families given by an additive generator `f` of the
//! t-norm. The t-conorm uses `g(x) = f(1 - x)`, so for q-th powers
//! `S(x, y) = 1 - f⁻¹(f(1-x) + f(1-y))` and `T(x, y) = f⁻¹(f(x) + f(y))`.

use super::Connectives;
use crate::error::{Error, Result};

pub(crate) trait Generator {
    fn f(&self, x: f64) -> f64;
    fn f_inv(&self, y: f64) -> f64;
}

impl<G: Generator> Connectives for G {
    fn conorm(&self, x: f64, y: f64) -> f64 {
        1.0 - self.f_inv(self.f(1.0 - x) + self.f(1.0 - y))
    }

    fn norm(&self, x: f64, y: f64) -> f64 {
        self.f_inv(self.f(x) + self.f(y))
    }

    fn conorm_multiple(&self, k: f64, x: f64) -> f64 {
        1.0 - self.f_inv(k * self.f(1.0 - x))
    }

    fn norm_power(&self, x: f64, k: f64) -> f64 {
        self.f_inv(k * self.f(x))
    }
}

/// Frank family, `f(x) = -ln((α^x - 1) / (α - 1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frank {
    ln_alpha: f64,
}

impl Frank {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.0 && alpha != 1.0 {
            Ok(Self { ln_alpha: alpha.ln() })
        } else {
            Err(Error::InvalidFamilyParameter {
                family: "frank",
                value: alpha,
            })
        }
    }
}

impl Generator for Frank {
    fn f(&self, x: f64) -> f64 {
        let l = self.ln_alpha;
        -((x * l).exp_m1() / l.exp_m1()).ln()
    }

    fn f_inv(&self, y: f64) -> f64 {
        let l = self.ln_alpha;
        (l.exp_m1() * (-y).exp()).ln_1p() / l
    }
}

/// Hamacher family, `f(x) = ln((γ + (1 - γ)x) / x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hamacher {
    gamma: f64,
}

impl Hamacher {
    pub fn new(gamma: f64) -> Result<Self> {
        if gamma.is_finite() && gamma > 0.0 {
            Ok(Self { gamma })
        } else {
            Err(Error::InvalidFamilyParameter {
                family: "hamacher",
                value: gamma,
            })
        }
    }
}

impl Generator for Hamacher {
    fn f(&self, x: f64) -> f64 {
        ((self.gamma + (1.0 - self.gamma) * x) / x).ln()
    }

    fn f_inv(&self, y: f64) -> f64 {
        self.gamma / (y.exp_m1() + self.gamma)
    }
}
