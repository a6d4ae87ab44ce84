//! Shared fixtures for the integration suites: the bundled case problem,
//! published reference values, a seeded sampler of valid numbers and the
//! runners for the algebraic-law checks.
#![allow(dead_code)]

use std::path::PathBuf;

use ivqrof::cli::problem_file::load_problem;
use ivqrof::magdm::{aggregate_experts, ingest, DecisionProblem};
use ivqrof::{Ivqrofn, Matrix, OperatorFamily, Rung, WeightVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;


pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// Case data as computed (the canonical file).
pub fn case_problem() -> DecisionProblem {
    load_problem(&data_path("learning_effectiveness.json")).expect("bundled case file")
}

/// Case data transcribed cell by cell from the published decision matrices.
pub fn printed_problem() -> DecisionProblem {
    load_problem(&data_path("learning_effectiveness_printed.json")).expect("bundled printed file")
}

pub fn q(x: f64) -> Rung {
    Rung::new(x).unwrap()
}

pub fn weber2() -> OperatorFamily {
    OperatorFamily::Weber { lambda: 2.0 }
}

pub fn expert_matrix(problem: &DecisionProblem, rung: Rung, family: &OperatorFamily) -> Matrix<Ivqrofn> {
    let matrices = ingest(problem).matrices;
    aggregate_experts(&matrices, problem.expert_weights(), rung, family).unwrap()
}

pub fn wv(w: &[f64]) -> WeightVector {
    WeightVector::new(w.to_vec()).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn num_diff(a: &Ivqrofn, b: &Ivqrofn) -> f64 {
    max_abs_diff(&a.to_array(), &b.to_array())
}

pub const EXPERT_WEIGHTS: [f64; 4] = [0.2445, 0.2494, 0.2488, 0.2573];

/// Published aggregation matrix, two decimals per bound.
pub const PRINTED_R: [[[f64; 4]; 5]; 5] = [
    [
        [0.78, 0.84, 0.21, 0.27],
        [0.72, 0.84, 0.15, 0.28],
        [0.66, 0.75, 0.26, 0.36],
        [0.69, 0.78, 0.24, 0.32],
        [0.58, 0.67, 0.35, 0.44],
    ],
    [
        [0.78, 0.88, 0.12, 0.22],
        [0.81, 0.89, 0.11, 0.21],
        [0.81, 0.89, 0.11, 0.21],
        [0.78, 0.85, 0.18, 0.24],
        [0.74, 0.83, 0.20, 0.28],
    ],
    [
        [0.80, 0.90, 0.10, 0.20],
        [0.81, 0.89, 0.11, 0.21],
        [0.72, 0.82, 0.20, 0.30],
        [0.66, 0.78, 0.22, 0.34],
        [0.76, 0.84, 0.18, 0.26],
    ],
    [
        [0.61, 0.69, 0.33, 0.41],
        [0.54, 0.62, 0.41, 0.49],
        [0.55, 0.66, 0.34, 0.45],
        [0.68, 0.79, 0.22, 0.33],
        [0.61, 0.69, 0.33, 0.41],
    ],
    [
        [0.52, 0.62, 0.37, 0.47],
        [0.50, 0.61, 0.39, 0.50],
        [0.78, 0.88, 0.12, 0.22],
        [0.73, 0.83, 0.19, 0.27],
        [0.72, 0.80, 0.23, 0.31],
    ],
];

pub const W_SWING: [f64; 5] = [0.1961, 0.1961, 0.1961, 0.1961, 0.2156];
pub const W_MABAC: [f64; 5] = [0.2001, 0.2017, 0.2014, 0.1979, 0.1989];
pub const W_PROJECTION: [f64; 5] = [0.1974, 0.2239, 0.2159, 0.1732, 0.1896];

pub const ALTERNATIVE_AGGREGATES: [[f64; 4]; 5] = [
    [0.6897, 0.7803, 0.2579, 0.3420],
    [0.7869, 0.8746, 0.1532, 0.2391],
    [0.7492, 0.8493, 0.1755, 0.2701],
    [0.6003, 0.6947, 0.3344, 0.4252],
    [0.6524, 0.7503, 0.2841, 0.3734],
];

pub const CASE_RANKING: &str = "x2 > x3 > x1 > x5 > x4";

/// Normalized scores per rung 2..=9 for each operator family.
pub const SCORES_WEBER: [[f64; 5]; 8] = [
    [0.7252, 0.8259, 0.7947, 0.6376, 0.6921],
    [0.6907, 0.7871, 0.7540, 0.6126, 0.6601],
    [0.6612, 0.7506, 0.7157, 0.5920, 0.6329],
    [0.6381, 0.7198, 0.6840, 0.5763, 0.6117],
    [0.6201, 0.6944, 0.6583, 0.5647, 0.5954],
    [0.6060, 0.6733, 0.6374, 0.5560, 0.5826],
    [0.5946, 0.6556, 0.6203, 0.5494, 0.5724],
    [0.5853, 0.6405, 0.6061, 0.5442, 0.5640],
];

pub const SCORES_HAMACHER: [[f64; 5]; 8] = [
    [0.7909, 0.8606, 0.8259, 0.7027, 0.7513],
    [0.7511, 0.8212, 0.7838, 0.6714, 0.7137],
    [0.7128, 0.7828, 0.7425, 0.6398, 0.6767],
    [0.6819, 0.7499, 0.7080, 0.6149, 0.6472],
    [0.6576, 0.7222, 0.6797, 0.5963, 0.6243],
    [0.6382, 0.6988, 0.6565, 0.5823, 0.6065],
    [0.6225, 0.6787, 0.6372, 0.5717, 0.5924],
    [0.6095, 0.6613, 0.6210, 0.5633, 0.5810],
];

pub const SCORES_FRANK: [[f64; 5]; 8] = [
    [0.7953, 0.8623, 0.8276, 0.7088, 0.7559],
    [0.7575, 0.8239, 0.7866, 0.6790, 0.7199],
    [0.7202, 0.7864, 0.7460, 0.6481, 0.6836],
    [0.6897, 0.7541, 0.7119, 0.6232, 0.6540],
    [0.6653, 0.7267, 0.6837, 0.6042, 0.6308],
    [0.6455, 0.7032, 0.6604, 0.5896, 0.6125],
    [0.6293, 0.6831, 0.6410, 0.5782, 0.5978],
    [0.6157, 0.6656, 0.6246, 0.5692, 0.5858],
];

pub const SCORES_ALGEBRAIC: [[f64; 5]; 8] = [
    [0.8002, 0.8643, 0.8297, 0.7156, 0.7610],
    [0.7634, 0.8267, 0.7893, 0.6862, 0.7255],
    [0.7265, 0.7897, 0.7492, 0.6551, 0.6892],
    [0.6958, 0.7576, 0.7151, 0.6298, 0.6593],
    [0.6710, 0.7301, 0.6868, 0.6101, 0.6356],
    [0.6508, 0.7066, 0.6634, 0.5949, 0.6167],
    [0.6340, 0.6863, 0.6437, 0.5829, 0.6015],
    [0.6199, 0.6686, 0.6271, 0.5732, 0.5890],
];

/// The four compared families with their published parameters and score tables.
pub fn compared_families() -> [(OperatorFamily, &'static [[f64; 5]; 8]); 4] {
    [
        (weber2(), &SCORES_WEBER),
        (OperatorFamily::Hamacher { gamma: 2.0 }, &SCORES_HAMACHER),
        (OperatorFamily::Frank { alpha: 2.0 }, &SCORES_FRANK),
        (OperatorFamily::Algebraic, &SCORES_ALGEBRAIC),
    ]
}

/// Seeded source of valid numbers, rungs, parameters and weights.
///
/// Numbers are drawn in q-th-power space with every power at least `floor`,
/// which keeps the final root well conditioned.
pub struct Sampler {
    pub rng: ChaCha8Rng,
    pub floor: f64,
}

pub const RUNGS: [f64; 7] = [1.0, 2.0, 2.5, 3.0, 4.0, 6.0, 9.0];
pub const LAMBDAS: [f64; 4] = [-0.5, 0.5, 2.0, 10.0];

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            floor: 1e-3,
        }
    }

    pub fn rung(&mut self) -> Rung {
        q(*RUNGS.choose(&mut self.rng).unwrap())
    }

    pub fn lambda(&mut self) -> f64 {
        *LAMBDAS.choose(&mut self.rng).unwrap()
    }

    pub fn k(&mut self) -> f64 {
        self.rng.gen_range(0.05..3.0)
    }

    pub fn family(&mut self) -> OperatorFamily {
        match self.rng.gen_range(0..4) {
            0 => OperatorFamily::Weber { lambda: self.lambda() },
            1 => OperatorFamily::Algebraic,
            2 => OperatorFamily::Frank {
                alpha: *[0.5, 2.0, 5.0].choose(&mut self.rng).unwrap(),
            },
            _ => OperatorFamily::Hamacher {
                gamma: *[0.5, 1.0, 2.0, 5.0].choose(&mut self.rng).unwrap(),
            },
        }
    }

    fn between(&mut self, lo: f64, hi: f64) -> f64 {
        if hi > lo {
            self.rng.gen_range(lo..=hi)
        } else {
            lo
        }
    }

    fn from_powers(p: [f64; 4], rung: Rung) -> Ivqrofn {
        let [ml, mh, nl, nh] = p.map(|x| rung.root(x));
        Ivqrofn::checked(ml, mh, nl, nh, rung).expect("sampled powers are valid")
    }

    pub fn number(&mut self, rung: Rung) -> Ivqrofn {
        let f = self.floor;
        let mh = self.between(f, 1.0 - f);
        let nh = self.between(f, 1.0 - mh);
        let ml = self.between(f, mh);
        let nl = self.between(f, nh);
        Self::from_powers([ml, mh, nl, nh], rung)
    }

    /// A number dominated by `top`: memberships no larger, non-memberships no smaller.
    pub fn dominated_by(&mut self, top: &Ivqrofn, rung: Rung) -> Ivqrofn {
        let f = self.floor;
        let [tml, tmh, tnl, tnh] = top.powers(rung);
        let mh = self.between(f.min(tmh), tmh);
        let ml = self.between(f.min(tml).min(mh), tml.min(mh));
        let nh = self.between(tnh, (1.0 - mh).max(tnh));
        let nl = self.between(tnl, nh.max(tnl));
        Self::from_powers([ml, mh, nl, nh.max(nl)], rung)
    }

    /// Random weights; with `n > 1` one entry is zero a fifth of the time.
    pub fn weights(&mut self, n: usize) -> WeightVector {
        let mut raw: Vec<f64> = (0..n).map(|_| self.rng.gen_range(0.01..1.0)).collect();
        if n > 1 && self.rng.gen_bool(0.2) {
            let i = self.rng.gen_range(0..n);
            raw[i] = 0.0;
        }
        WeightVector::normalized(raw).unwrap()
    }
}

/// Greatest lower bound of two numbers in the dominance order.
pub fn meet(a: &Ivqrofn, b: &Ivqrofn) -> Ivqrofn {
    Ivqrofn::new(
        a.mu_lo().min(b.mu_lo()),
        a.mu_hi().min(b.mu_hi()),
        a.nu_lo().max(b.nu_lo()),
        a.nu_hi().max(b.nu_hi()),
    )
    .unwrap()
}

/// Every q-th power strictly inside `(margin, 1 - margin)`, so no clamp fired.
pub fn interior(v: &Ivqrofn, rung: Rung, margin: f64) -> bool {
    v.powers(rung).iter().all(|p| *p > margin && *p < 1.0 - margin)
}

pub const LAW_TOL: f64 = 1e-10;
pub const LAW_CASES: usize = 10_000;
const INTERIOR_MARGIN: f64 = 1e-6;
const MAX_ATTEMPTS: usize = 2_000_000;

#[derive(Debug, Clone)]
pub struct LawOutcome {
    pub name: &'static str,
    pub accepted: usize,
    pub rejected: usize,
    pub failures: usize,
    pub max_err: f64,
}

impl LawOutcome {
    pub fn ok(&self) -> bool {
        self.failures == 0 && self.accepted >= LAW_CASES
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} accepted, {} rejected as saturated, {} failures, max error {:.2e}",
            self.name, self.accepted, self.rejected, self.failures, self.max_err
        )
    }
}

/// Runs `case` until `LAW_CASES` draws are accepted. A case returns `None`
/// when its draw is outside the law's domain, otherwise its error.
pub fn run_law(name: &'static str, seed: u64, mut case: impl FnMut(&mut Sampler) -> Option<f64>) -> LawOutcome {
    let mut s = Sampler::new(seed);
    let mut out = LawOutcome {
        name,
        accepted: 0,
        rejected: 0,
        failures: 0,
        max_err: 0.0,
    };
    while out.accepted < LAW_CASES && out.accepted + out.rejected < MAX_ATTEMPTS {
        match case(&mut s) {
            None => out.rejected += 1,
            Some(err) => {
                out.accepted += 1;
                out.max_err = out.max_err.max(err);
                if err.is_nan() || err > LAW_TOL {
                    out.failures += 1;
                }
            }
        }
    }
    out
}

fn all_interior(values: &[&Ivqrofn], rung: Rung) -> bool {
    values.iter().all(|v| interior(v, rung, INTERIOR_MARGIN))
}

/// Operation laws of the Weber family. Distributivity and additivity are
/// checked where no intermediate result saturates: the Weber pair is
/// nilpotent, and once a bound is clamped to 0 or 1 those identities no
/// longer hold.
pub fn weber_laws() -> Vec<LawOutcome> {
    let ops = |s: &mut Sampler| {
        let rung = s.rung();
        let ops = OperatorFamily::Weber { lambda: s.lambda() }.ops(rung).unwrap();
        (rung, ops)
    };
    vec![
        run_law("add commutes", 11, |s| {
            let (rung, o) = ops(s);
            let (a, b) = (s.number(rung), s.number(rung));
            Some(num_diff(&o.add(&a, &b).ok()?, &o.add(&b, &a).ok()?))
        }),
        run_law("mul commutes", 12, |s| {
            let (rung, o) = ops(s);
            let (a, b) = (s.number(rung), s.number(rung));
            Some(num_diff(&o.mul(&a, &b).ok()?, &o.mul(&b, &a).ok()?))
        }),
        run_law("scalar distributes over add", 13, |s| {
            let (rung, o) = ops(s);
            let (a, b, k) = (s.number(rung), s.number(rung), s.k());
            let sum = o.add(&a, &b).ok()?;
            let (ka, kb) = (o.scalar(k, &a).ok()?, o.scalar(k, &b).ok()?);
            let lhs = o.scalar(k, &sum).ok()?;
            let rhs = o.add(&ka, &kb).ok()?;
            all_interior(&[&sum, &ka, &kb, &lhs, &rhs], rung).then(|| num_diff(&lhs, &rhs))
        }),
        run_law("power distributes over mul", 14, |s| {
            let (rung, o) = ops(s);
            let (a, b, k) = (s.number(rung), s.number(rung), s.k());
            let prod = o.mul(&a, &b).ok()?;
            let (ak, bk) = (o.pow(&a, k).ok()?, o.pow(&b, k).ok()?);
            let lhs = o.pow(&prod, k).ok()?;
            let rhs = o.mul(&ak, &bk).ok()?;
            all_interior(&[&prod, &ak, &bk, &lhs, &rhs], rung).then(|| num_diff(&lhs, &rhs))
        }),
        run_law("scalars add", 15, |s| {
            let (rung, o) = ops(s);
            let (a, k1, k2) = (s.number(rung), s.k(), s.k());
            let (x, y) = (o.scalar(k1, &a).ok()?, o.scalar(k2, &a).ok()?);
            let lhs = o.add(&x, &y).ok()?;
            let rhs = o.scalar(k1 + k2, &a).ok()?;
            all_interior(&[&x, &y, &lhs, &rhs], rung).then(|| num_diff(&lhs, &rhs))
        }),
        run_law("exponents add", 16, |s| {
            let (rung, o) = ops(s);
            let (a, k1, k2) = (s.number(rung), s.k(), s.k());
            let (x, y) = (o.pow(&a, k1).ok()?, o.pow(&a, k2).ok()?);
            let lhs = o.mul(&x, &y).ok()?;
            let rhs = o.pow(&a, k1 + k2).ok()?;
            all_interior(&[&x, &y, &lhs, &rhs], rung).then(|| num_diff(&lhs, &rhs))
        }),
    ]
}

fn random_list(s: &mut Sampler, rung: Rung) -> Vec<Ivqrofn> {
    let n = s.rng.gen_range(1..=6);
    (0..n).map(|_| s.number(rung)).collect()
}

/// Aggregation laws over every family. Draws whose aggregate leaves the
/// valid region are not counted here; `closure_laws` accounts for them.
pub fn owa_laws() -> Vec<LawOutcome> {
    vec![
        run_law("owa idempotent", 21, |s| {
            let (rung, family) = (s.rung(), s.family());
            let a = s.number(rung);
            let n = s.rng.gen_range(1..=6);
            let w = s.weights(n);
            let r = ivqrof::owa_aggregate(&vec![a; n], &w, &family, rung).unwrap();
            Some(num_diff(&r, &a))
        }),
        run_law("owa ignores input order", 22, |s| {
            let (rung, family) = (s.rung(), s.family());
            let values = random_list(s, rung);
            let w = s.weights(values.len());
            let mut shuffled = values.clone();
            shuffled.shuffle(&mut s.rng);
            let a = ivqrof::owa_aggregate(&values, &w, &family, rung).ok()?;
            let b = ivqrof::owa_aggregate(&shuffled, &w, &family, rung).ok()?;
            Some(num_diff(&a, &b))
        }),
        run_law("owa bounded", 23, |s| {
            let (rung, family) = (s.rung(), s.family());
            let values = random_list(s, rung);
            let w = s.weights(values.len());
            let r = ivqrof::owa_aggregate(&values, &w, &family, rung).ok()?;
            let lowest = values.iter().skip(1).fold(values[0], |acc, v| meet(&acc, v));
            let highest = values.iter().skip(1).fold(values[0], |acc, v| join(&acc, v));
            // Excess of the result beyond the component-wise envelope.
            let below = lowest
                .to_array()
                .iter()
                .zip(r.to_array())
                .enumerate()
                .map(|(i, (lo, x))| if i < 2 { lo - x } else { x - lo })
                .fold(0.0, f64::max);
            let above = highest
                .to_array()
                .iter()
                .zip(r.to_array())
                .enumerate()
                .map(|(i, (hi, x))| if i < 2 { x - hi } else { hi - x })
                .fold(0.0, f64::max);
            let score = r.score(rung).unwrap();
            let score_excess = (lowest.score(rung).unwrap() - score)
                .max(score - highest.score(rung).unwrap())
                .max(0.0);
            Some(below.max(above).max(score_excess))
        }),
        run_law("owa monotone on dominance chains", 24, |s| {
            let (rung, family) = (s.rung(), s.family());
            let n = s.rng.gen_range(1..=6);
            let mut a = vec![s.number(rung)];
            for i in 1..n {
                let next = s.dominated_by(&a[i - 1], rung);
                a.push(next);
            }
            let mut b = vec![s.dominated_by(&a[0], rung)];
            for i in 1..n {
                let bound = meet(&a[i], &b[i - 1]);
                let next = s.dominated_by(&bound, rung);
                b.push(next);
            }
            let w = s.weights(n);
            let ra = ivqrof::owa_aggregate(&a, &w, &family, rung).ok()?;
            let rb = ivqrof::owa_aggregate(&b, &w, &family, rung).ok()?;
            let shortfall = [
                rb.mu_lo() - ra.mu_lo(),
                rb.mu_hi() - ra.mu_hi(),
                ra.nu_lo() - rb.nu_lo(),
                ra.nu_hi() - rb.nu_hi(),
            ]
            .into_iter()
            .fold(0.0, f64::max);
            let ordered = ra.compare(&rb, rung).unwrap() != std::cmp::Ordering::Less;
            Some(if ordered { shortfall } else { f64::INFINITY })
        }),
    ]
}

/// Least upper bound of two numbers in the dominance order.
pub fn join(a: &Ivqrofn, b: &Ivqrofn) -> Ivqrofn {
    Ivqrofn::new(
        a.mu_lo().max(b.mu_lo()),
        a.mu_hi().max(b.mu_hi()),
        a.nu_lo().min(b.nu_lo()),
        a.nu_hi().min(b.nu_hi()),
    )
    .unwrap()
}

/// Whether every operation and the aggregator map valid inputs to valid
/// results, one outcome per family kind.
pub fn closure_laws() -> Vec<LawOutcome> {
    fn closure(name: &'static str, seed: u64, pick: fn(&mut Sampler) -> OperatorFamily, owa: bool) -> LawOutcome {
        run_law(name, seed, move |s| {
            let (rung, family) = (s.rung(), pick(s));
            let ok = if owa {
                let values = random_list(s, rung);
                let w = s.weights(values.len());
                ivqrof::owa_aggregate(&values, &w, &family, rung).is_ok_and(|r| r.is_valid(rung))
            } else {
                let o = family.ops(rung).unwrap();
                let (a, b, k) = (s.number(rung), s.number(rung), s.k());
                [o.add(&a, &b), o.mul(&a, &b), o.scalar(k, &a), o.pow(&a, k)]
                    .iter()
                    .all(|r| r.as_ref().is_ok_and(|v| v.is_valid(rung)))
            };
            Some(if ok { 0.0 } else { f64::INFINITY })
        })
    }
    fn weber(s: &mut Sampler) -> OperatorFamily {
        OperatorFamily::Weber { lambda: s.lambda() }
    }
    fn algebraic(_: &mut Sampler) -> OperatorFamily {
        OperatorFamily::Algebraic
    }
    fn frank(s: &mut Sampler) -> OperatorFamily {
        OperatorFamily::Frank {
            alpha: *[0.5, 2.0, 5.0].choose(&mut s.rng).unwrap(),
        }
    }
    fn hamacher(s: &mut Sampler) -> OperatorFamily {
        OperatorFamily::Hamacher {
            gamma: *[0.5, 1.0, 2.0, 5.0].choose(&mut s.rng).unwrap(),
        }
    }
    vec![
        closure("closure: algebraic operations", 51, algebraic, false),
        closure("closure: algebraic aggregation", 52, algebraic, true),
        closure("closure: frank operations", 53, frank, false),
        closure("closure: frank aggregation", 54, frank, true),
        closure("closure: hamacher operations", 55, hamacher, false),
        closure("closure: hamacher aggregation", 56, hamacher, true),
        closure("closure: weber operations", 57, weber, false),
        closure("closure: weber aggregation", 58, weber, true),
    ]
}

/// Direct evaluation of the Weber OWA with `powf`, over values already in
/// aggregation order. With weights summing to one the `(1 + λ)` factors of
/// the non-membership side cancel, so every bound is the weighted
/// quasi-arithmetic mean `((Π (1 + λx^q)^w - 1) / λ)^(1/q)`.
pub fn weber_owa_oracle(ordered: &[Ivqrofn], w: &[f64], lambda: f64, rung: Rung) -> [f64; 4] {
    let qv = rung.get();
    let mut prod = [1.0f64; 4];
    for (a, &wi) in ordered.iter().zip(w) {
        for (p, x) in prod.iter_mut().zip(a.to_array()) {
            *p *= (1.0 + lambda * x.powf(qv)).powf(wi);
        }
    }
    prod.map(|p| ((p - 1.0) / lambda).clamp(0.0, 1.0).powf(1.0 / qv))
}

/// The computed number, whether or not it stayed in the valid region.
pub fn raw(r: ivqrof::Result<Ivqrofn>) -> Ivqrofn {
    match r {
        Ok(v) | Err(ivqrof::Error::OutsideRung { value: v, .. }) => v,
        Err(e) => panic!("{e}"),
    }
}

/// For n = 1..=6, `cases` draws each: the aggregator's pairwise fold, the
/// library's product form and a direct `powf` evaluation must agree.
pub fn closed_form_equivalence(cases: usize) -> LawOutcome {
    use ivqrof::operators::{owa_order, weber};
    let mut s = Sampler::new(31);
    let mut out = LawOutcome {
        name: "product form = fold",
        accepted: 0,
        rejected: 0,
        failures: 0,
        max_err: 0.0,
    };
    for n in 1..=6 {
        for _ in 0..cases {
            let (rung, lambda) = (s.rung(), s.lambda());
            let values: Vec<_> = (0..n).map(|_| s.number(rung)).collect();
            let w = s.weights(n);
            let family = OperatorFamily::Weber { lambda };
            let fold = raw(ivqrof::owa_aggregate(&values, &w, &family, rung));
            let ordered: Vec<_> = owa_order(&values, rung)
                .unwrap()
                .into_iter()
                .map(|i| values[i])
                .collect();
            let product = raw(weber::owa_closed_form(&ordered, &w, lambda, rung));
            let direct = weber_owa_oracle(&ordered, &w, lambda, rung);
            let err = num_diff(&fold, &product)
                .max(max_abs_diff(&fold.to_array(), &direct))
                .max(max_abs_diff(&product.to_array(), &direct));
            out.accepted += 1;
            out.max_err = out.max_err.max(err);
            if err.is_nan() || err > LAW_TOL {
                out.failures += 1;
            }
        }
    }
    out
}

/// Worst violation of identity, commutativity and associativity of the Weber
/// t-conorm on a 0.05 grid, per lambda.
pub fn conorm_axiom_violations() -> Vec<(f64, f64)> {
    let grid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.05).collect();
    [-0.5, 0.5, 2.0, 10.0]
        .into_iter()
        .map(|lambda| {
            let s = |x: f64, y: f64| ivqrof::operators::weber::t_conorm(x, y, lambda).unwrap();
            let mut worst = 0.0f64;
            for &x in &grid {
                worst = worst.max((s(x, 0.0) - x).abs());
                for &y in &grid {
                    worst = worst.max((s(x, y) - s(y, x)).abs());
                    for &z in &grid {
                        worst = worst.max((s(s(x, y), z) - s(x, s(y, z))).abs());
                    }
                }
            }
            (lambda, worst)
        })
        .collect()
}
