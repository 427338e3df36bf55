//! Diameter, valency and multiplicity bounds packaged as named rules.
//!
//! Each function returns [`RuleVerdict`]s carrying both sides of its
//! inequality. Caps are exact rationals. Rules whose premise depends on
//! graph-level facts (quadrangles, Terwilliger) take those facts as inputs.

mod pipeline;

use alloc::format;
use alloc::vec::Vec;

pub use pipeline::{check_array, theorem2_pipeline, CheckOptions, RatioCap, RatioKind};

use crate::arrays::IntersectionArray;
use crate::catalog;
use crate::rational::Rational;
use crate::report::{Quantity, RuleName, RuleVerdict};

fn q(n: u64) -> Rational {
    Rational::from(n)
}

/// Parameters shared by the bounds: ratio cap `C`, step `t`, the quadrangle cap's
/// `alpha` and the Terwilliger threshold `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundContext {
    pub c: Rational,
    pub t: usize,
    pub alpha: u32,
    pub big_t: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("C must be at least 1/2")]
    CTooSmall,
    #[error("t must be positive")]
    ZeroT,
    #[error("alpha must be at least 2")]
    AlphaTooSmall,
    #[error("T must be at least 1")]
    TTooSmall,
    #[error("cap overflows 128-bit rationals")]
    Overflow,
}

impl BoundContext {
    pub fn new(c: Rational, t: usize, alpha: u32, big_t: u32) -> Result<Self, BoundError> {
        if c < Rational::HALF {
            return Err(BoundError::CTooSmall);
        }
        if t == 0 {
            return Err(BoundError::ZeroT);
        }
        if alpha < 2 {
            return Err(BoundError::AlphaTooSmall);
        }
        if big_t < 1 {
            return Err(BoundError::TTooSmall);
        }
        Ok(BoundContext { c, t, alpha, big_t })
    }

    /// `(8 C^2 t, 2 C)`: either `D` is at most the first or `k` at most the
    /// second.
    pub fn dichotomy_caps(&self) -> Result<(Rational, Rational), BoundError> {
        dichotomy_caps(self.c, self.t).ok_or(BoundError::Overflow)
    }

    pub fn quadrangle_diameter_cap(&self) -> u32 {
        self.alpha + 1
    }

    /// `3 + C + ... + C^{D-2}`.
    pub fn geometric_sum(&self, d: usize) -> Result<Rational, BoundError> {
        geometric_sum(self.c, d).ok_or(BoundError::Overflow)
    }
}

pub(crate) fn dichotomy_caps(c: Rational, t: usize) -> Option<(Rational, Rational)> {
    let d_cap = c.checked_mul(&c)?.checked_mul(&q(8 * t as u64))?;
    let k_cap = c.checked_mul(&q(2))?;
    Some((d_cap, k_cap))
}

/// `3 + C + C^2 + ... + C^{D-2}`; just `3` for `D <= 2`.
pub fn geometric_sum(c: Rational, d: usize) -> Option<Rational> {
    let mut sum = q(3);
    let mut power = Rational::ONE;
    for _ in 1..d.saturating_sub(1) {
        power = power.checked_mul(&c)?;
        sum = sum.checked_add(&power)?;
    }
    Some(sum)
}

/// `D <= 8 C^2 t` or `k <= 2 C`, for `D >= t + 1` and `b_t / c_t <= C`.
pub fn lemma7_dichotomy(arr: &IntersectionArray, t: usize, c: Rational) -> RuleVerdict {
    let rule = RuleName::Dichotomy;
    let d = arr.diameter();
    if t == 0 {
        return RuleVerdict::not_applicable(rule, "t must be positive");
    }
    if d < t + 1 {
        return RuleVerdict::not_applicable(rule, "requires D >= t + 1").with("t", t);
    }
    if c < Rational::HALF {
        return RuleVerdict::not_applicable(rule, "requires C >= 1/2").with("C", c);
    }
    let ratio = arr.b_over_c(t).expect("1 <= t <= D");
    if ratio > c {
        return RuleVerdict::not_applicable(rule, "b_t/c_t exceeds C")
            .with("t", t)
            .with("b_t/c_t", ratio)
            .with("C", c);
    }
    let Some((d_cap, k_cap)) = dichotomy_caps(c, t) else {
        return RuleVerdict::not_applicable(rule, "cap overflow");
    };
    let k = q(arr.valency() as u64);
    let ok = q(d as u64) <= d_cap || k <= k_cap;
    RuleVerdict::check(rule, ok)
        .with("t", t)
        .with("C", c)
        .with("b_t/c_t", ratio)
        .with("D", d)
        .with("8C^2t", d_cap)
        .with("k", arr.valency())
        .with("2C", k_cap)
}

/// The smallest admissible `C` for step `t`: `max(b_t / c_t, 1/2)`.
pub fn lemma7_tightest_c(arr: &IntersectionArray, t: usize) -> Option<Rational> {
    let r = arr.b_over_c(t)?;
    Some(if r < Rational::HALF { Rational::HALF } else { r })
}

/// With `C = b_t / c_t` and `D >= 4t`: `k <= 2C` or
/// `b_{4t} / c_{4t} <= C / 2`. Soft: an intermediate step, not a
/// standalone bound.
pub fn claim1_property(arr: &IntersectionArray, t: usize) -> RuleVerdict {
    let rule = RuleName::Claim1;
    let d = arr.diameter();
    if t == 0 {
        return RuleVerdict::not_applicable(rule, "t must be positive").soft();
    }
    if d < 4 * t {
        return RuleVerdict::not_applicable(rule, "requires D >= 4t")
            .with("t", t)
            .soft();
    }
    let c = arr.b_over_c(t).expect("t <= D");
    let far = arr.b_over_c(4 * t).expect("4t <= D");
    let half_c = c.checked_mul(&Rational::HALF).expect("small");
    let two_c = c.checked_mul(&q(2)).expect("small");
    let ok = q(arr.valency() as u64) <= two_c || far <= half_c;
    RuleVerdict::check(rule, ok)
        .with("t", t)
        .with("C", c)
        .with("k", arr.valency())
        .with("2C", two_c)
        .with("b_4t/c_4t", far)
        .with("C/2", half_c)
        .soft()
}

/// Smallest integer `alpha >= 2` with `b_2 / c_2 < alpha / 2`.
pub fn smallest_alpha(arr: &IntersectionArray) -> Option<u32> {
    if arr.diameter() < 2 {
        return None;
    }
    let twice = (2 * arr.b(2) / arr.c(2)) + 1;
    Some(twice.max(2))
}

/// `D <= alpha + 1` for graphs with a quadrangle, `D >= 3`, `c_2 >= 2` and
/// `b_2 / c_2 < alpha / 2`. Returns the verdict and the cap when it applies.
pub fn lemma9_diameter_cap(
    arr: &IntersectionArray,
    alpha: u32,
    has_quadrangle: bool,
) -> (RuleVerdict, Option<u32>) {
    let rule = RuleName::QuadrangleDiameter;
    let d = arr.diameter();
    let na = |why: &str| (RuleVerdict::not_applicable(rule, why), None);
    if d < 3 {
        return na("requires D >= 3");
    }
    if arr.c(2) < 2 {
        return na("requires c2 >= 2");
    }
    if alpha < 2 {
        return na("requires alpha >= 2");
    }
    if !has_quadrangle {
        return na("no quadrangle");
    }
    let ratio = arr.b_over_c(2).expect("D >= 2");
    let half_alpha = Rational::new(alpha as i128, 2).expect("nonzero");
    if ratio >= half_alpha {
        return (
            RuleVerdict::not_applicable(rule, "b2/c2 >= alpha/2")
                .with("b2/c2", ratio)
                .with("alpha/2", half_alpha),
            None,
        );
    }
    let cap = alpha + 1;
    (
        RuleVerdict::check(rule, d as u64 <= cap as u64)
            .with("alpha", alpha)
            .with("b2/c2", ratio)
            .with("D", d)
            .with("alpha+1", cap),
        Some(cap),
    )
}

/// Second-eigenvalue filters for Terwilliger graphs with `c_2 >= 2`:
/// the soft `theta_1 >= b_1 / T - 1` report and, whenever
/// `theta_1 > b_1 / 2 - 1`, recognition against the three known graphs.
pub fn terwilliger_filter(
    arr: &IntersectionArray,
    theta1: f64,
    big_t: u32,
    eq_tol: f64,
) -> Vec<RuleVerdict> {
    if arr.diameter() < 2 || arr.c(2) < 2 {
        return alloc::vec![
            RuleVerdict::not_applicable(RuleName::Terwilliger, "requires c2 >= 2").soft(),
            RuleVerdict::not_applicable(RuleName::Recognition, "requires c2 >= 2"),
        ];
    }
    let b1 = arr.b(1) as f64;
    let slack = eq_tol * arr.valency() as f64;
    let p5_bound = b1 / big_t.max(1) as f64 - 1.0;
    let p5 = RuleVerdict::check(RuleName::Terwilliger, theta1 >= p5_bound - slack)
        .with("T", big_t)
        .with("theta1", theta1)
        .with("b1/T-1", p5_bound)
        .soft();
    let p10_bound = b1 / 2.0 - 1.0;
    let p10 = if theta1 > p10_bound + slack {
        let known = catalog::terwilliger_exceptions();
        let hit = known.iter().position(|a| a == arr);
        let v = RuleVerdict::check(RuleName::Recognition, hit.is_some())
            .with("theta1", theta1)
            .with("b1/2-1", p10_bound);
        match hit {
            Some(i) => v.with("matches", catalog::TERWILLIGER_EXCEPTION_NAMES[i]),
            None => v.with_note("array is none of the three known graphs"),
        }
    } else {
        RuleVerdict::not_applicable(RuleName::Recognition, "theta1 <= b1/2 - 1")
            .with("theta1", theta1)
            .with("b1/2-1", p10_bound)
    };
    alloc::vec![p5, p10]
}

/// `D <= 4^k` when `h = 1`. Reported, never used to prune.
pub fn h_diameter_cap(arr: &IntersectionArray, h: usize) -> RuleVerdict {
    let rule = RuleName::HeadDiameter;
    if h != 1 {
        return RuleVerdict::not_applicable(rule, "requires h = 1")
            .with("h", h)
            .soft();
    }
    let k = arr.valency();
    let d = arr.diameter();
    let v = match 4u128.checked_pow(k) {
        Some(cap) => RuleVerdict::check(rule, (d as u128) <= cap).with("4^k", Rational::from_int(cap as i128)),
        None => RuleVerdict::pass(rule).with("4^k", Quantity::Text(format!("4^{k}"))),
    };
    v.with("D", d).with("k", k).soft()
}


/// `k <= (m_1 + 2)(m_1 - 1) / 2` for non-complete graphs with `m_1 >= 2`.
pub fn absolute_bound(arr: &IntersectionArray, m1: u64) -> RuleVerdict {
    let rule = RuleName::AbsoluteBound;
    if arr.diameter() < 2 {
        return RuleVerdict::not_applicable(rule, "complete graph");
    }
    if m1 < 2 {
        return RuleVerdict::not_applicable(rule, "requires m1 >= 2").with("m1", m1);
    }
    let rhs = Rational::new(((m1 + 2) as i128) * ((m1 - 1) as i128), 2).expect("nonzero");
    RuleVerdict::check(rule, q(arr.valency() as u64) <= rhs)
        .with("k", arr.valency())
        .with("m1", m1)
        .with("(m1+2)(m1-1)/2", rhs)
}
