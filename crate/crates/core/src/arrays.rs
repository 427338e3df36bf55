//! Intersection arrays, their derived parameters and the elementary
//! feasibility conditions.
//!
//! An array `{b0,...,b_{D-1};c1,...,cD}` is stored with `b_D = c_0 = 0`
//! implied, so [`IntersectionArray::b`] and [`IntersectionArray::c`] accept
//! every index in `0..=D`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::rational::Rational;
use crate::report::{RuleName, RuleVerdict};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArrayError {
    #[error("malformed array literal: {0}")]
    Syntax(String),
    #[error("array halves differ in length (b has {b} entries, c has {c})")]
    UnequalHalves { b: usize, c: usize },
    #[error("entry {half}{index} must be a positive integer")]
    NonPositive { half: char, index: usize },
    #[error("c1 must equal 1, got {0}")]
    FirstCNotOne(u32),
    #[error("array must have diameter at least 1")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DeriveError {
    #[error("a_{0} = k - b_{0} - c_{0} is negative")]
    NegativeA(usize),
    #[error("k_{0} is not an integer")]
    NonIntegralK(usize),
    #[error("k_{0} overflows 64 bits")]
    Overflow(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("c2 = 1 but b1 = {b1} is not divisible by a1 + 1 = {s}")]
    InconsistentOrder { b1: u32, s: u32 },
}

/// The intersection array `{b0,...,b_{D-1}; c1,...,cD}` of a would-be
/// distance-regular graph of diameter `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: Vec<u32>,
    c: Vec<u32>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u32>, c: Vec<u32>) -> Result<Self, ArrayError> {
        if b.len() != c.len() {
            return Err(ArrayError::UnequalHalves {
                b: b.len(),
                c: c.len(),
            });
        }
        if b.is_empty() {
            return Err(ArrayError::Empty);
        }
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return Err(ArrayError::NonPositive { half: 'b', index: i });
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return Err(ArrayError::NonPositive {
                half: 'c',
                index: i + 1,
            });
        }
        if c[0] != 1 {
            return Err(ArrayError::FirstCNotOne(c[0]));
        }
        Ok(IntersectionArray { b, c })
    }

    /// Parses the literal form `{b0,...;c1,...}`; whitespace around
    /// entries is tolerated.
    pub fn parse(text: &str) -> Result<Self, ArrayError> {
        let text = text.trim();
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| ArrayError::Syntax("expected braces around the array".into()))?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| ArrayError::Syntax("missing ';' between the b and c halves".into()))?;
        if cs.contains(';') {
            return Err(ArrayError::Syntax("more than one ';'".into()));
        }
        let b = parse_half(bs, 'b', 0)?;
        let c = parse_half(cs, 'c', 1)?;
        IntersectionArray::new(b, c)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// The valency `k = b0`.
    pub fn valency(&self) -> u32 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u32 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `a_i = k - b_i - c_i`, possibly negative for infeasible arrays.
    pub fn a(&self, i: usize) -> i64 {
        self.valency() as i64 - self.b(i) as i64 - self.c(i) as i64
    }

    pub fn b_entries(&self) -> &[u32] {
        &self.b
    }

    pub fn c_entries(&self) -> &[u32] {
        &self.c
    }

    pub fn derive(&self) -> Result<DerivedParameters, DeriveError> {
        let d = self.diameter();
        let k = self.valency() as u64;
        let mut a = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let ai = self.a(i);
            if ai < 0 {
                return Err(DeriveError::NegativeA(i));
            }
            a.push(ai as u64);
        }
        let mut k_seq = Vec::with_capacity(d + 1);
        k_seq.push(1u64);
        for i in 1..=d {
            let num = k_seq[i - 1]
                .checked_mul(self.b(i - 1) as u64)
                .ok_or(DeriveError::Overflow(i))?;
            let den = self.c(i) as u64;
            if num % den != 0 {
                return Err(DeriveError::NonIntegralK(i));
            }
            k_seq.push(num / den);
        }
        let v = k_seq
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(DeriveError::Overflow(d))?;
        let head = (self.c(1), a[1], self.b(1));
        let h = (1..d).filter(|&i| (self.c(i), a[i], self.b(i)) == head).count();
        Ok(DerivedParameters { k, a, k_seq, v, h })
    }

    /// The three monotonicity conditions every distance-regular array
    /// satisfies, each reported with its first violating index.
    pub fn basic_feasibility(&self) -> Vec<RuleVerdict> {
        let d = self.diameter();
        let mut out = Vec::with_capacity(3);

        let bad_b = (1..d).find(|&i| {
            if i == 1 {
                self.b(1) >= self.b(0)
            } else {
                self.b(i) > self.b(i - 1)
            }
        });
        out.push(match bad_b {
            None => RuleVerdict::pass(RuleName::MonotoneB),
            Some(i) => RuleVerdict::fail(RuleName::MonotoneB)
                .with("index", i)
                .with("b[i-1]", self.b(i - 1))
                .with("b[i]", self.b(i)),
        });

        let bad_c = (2..=d).find(|&i| self.c(i) < self.c(i - 1));
        out.push(match (self.c(1), bad_c) {
            (1, None) => RuleVerdict::pass(RuleName::MonotoneC),
            (c1, None) => RuleVerdict::fail(RuleName::MonotoneC)
                .with("index", 1usize)
                .with("c[1]", c1),
            (_, Some(i)) => RuleVerdict::fail(RuleName::MonotoneC)
                .with("index", i)
                .with("c[i-1]", self.c(i - 1))
                .with("c[i]", self.c(i)),
        });

        let bad_pair = (0..d)
            .flat_map(|i| (1..=d - i).map(move |j| (i, j)))
            .find(|&(i, j)| self.b(i) < self.c(j));
        out.push(match bad_pair {
            None => RuleVerdict::pass(RuleName::BiGeCj),
            Some((i, j)) => RuleVerdict::fail(RuleName::BiGeCj)
                .with("i", i)
                .with("j", j)
                .with("b[i]", self.b(i))
                .with("c[j]", self.c(j)),
        });
        out
    }

    /// Order `(s, t)` forced by `c2 = 1`; `Ok(None)` when `c2 >= 2` or
    /// `D = 1`.
    pub fn order_params(&self) -> Result<Option<OrderParams>, OrderError> {
        if self.diameter() < 2 || self.c(2) != 1 {
            return Ok(None);
        }
        let a1 = self.a(1);
        if a1 < 0 {
            return Err(OrderError::InconsistentOrder {
                b1: self.b(1),
                s: 0,
            });
        }
        let s = a1 as u32 + 1;
        let b1 = self.b(1);
        if b1 % s != 0 {
            return Err(OrderError::InconsistentOrder { b1, s });
        }
        let t = b1 / s;
        Ok(Some(OrderParams {
            s,
            t,
            line_graph: t == 1,
        }))
    }

    /// `k2 / k = b1 / c2`; `None` when `D < 2`.
    pub fn ratio_k2_over_k(&self) -> Option<Rational> {
        if self.diameter() < 2 {
            return None;
        }
        Rational::new(self.b(1) as i128, self.c(2) as i128)
    }

    /// `b_t / c_t` for `1 <= t <= D` (with `b_D = 0`).
    pub fn b_over_c(&self, t: usize) -> Option<Rational> {
        if t == 0 || t > self.diameter() {
            return None;
        }
        Rational::new(self.b(t) as i128, self.c(t) as i128)
    }

    /// Array-level antipodality: `b_i = c_{D-i}` for every `i` other than
    /// `floor(D/2)`. Returns the fibre size `r` when it holds.
    pub fn antipodal_fibre(&self) -> Option<Rational> {
        let d = self.diameter();
        if d < 2 {
            return None;
        }
        let mid = d / 2;
        let symmetric = (0..d)
            .filter(|&i| i != mid)
            .all(|i| self.b(i) == self.c(d - i));
        if !symmetric {
            return None;
        }
        let r = Rational::new(self.b(mid) as i128, self.c(d - mid) as i128)?;
        r.checked_add(&Rational::ONE)
    }

    pub fn is_antipodal(&self) -> bool {
        self.antipodal_fibre().is_some()
    }

    /// The depth-first search key `[k, D, c1, b1, c2, b2, ..., cD]`.
    /// Enumeration output is ordered by this key.
    pub fn search_key(&self) -> Vec<u32> {
        let d = self.diameter();
        let mut key = Vec::with_capacity(2 * d + 1);
        key.push(self.valency());
        key.push(d as u32);
        for i in 1..=d {
            key.push(self.c(i));
            if i < d {
                key.push(self.b(i));
            }
        }
        key
    }

    /// Rebuilds an array from a complete search key.
    pub fn from_search_key(key: &[u32]) -> Option<Self> {
        let (&k, rest) = key.split_first()?;
        let (&d, rest) = rest.split_first()?;
        let d = d as usize;
        if d == 0 || rest.len() != 2 * d - 1 {
            return None;
        }
        let mut b = Vec::with_capacity(d);
        let mut c = Vec::with_capacity(d);
        b.push(k);
        for (n, &x) in rest.iter().enumerate() {
            if n % 2 == 0 {
                c.push(x);
            } else {
                b.push(x);
            }
        }
        IntersectionArray::new(b, c).ok()
    }
}

fn parse_half(text: &str, half: char, first_index: usize) -> Result<Vec<u32>, ArrayError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(n, tok)| {
            let tok = tok.trim();
            let value: i64 = tok
                .parse()
                .map_err(|_| ArrayError::Syntax(alloc::format!("{tok:?} is not an integer")))?;
            if value <= 0 {
                return Err(ArrayError::NonPositive {
                    half,
                    index: n + first_index,
                });
            }
            u32::try_from(value)
                .map_err(|_| ArrayError::Syntax(alloc::format!("{tok} is out of range")))
        })
        .collect()
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.b.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(";")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IntersectionArray::parse(s)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for IntersectionArray {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parameters computed from an array: `a_0..a_D`, `k_0..k_D`, the vertex
/// count `v`, the head length `h` and the valency `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DerivedParameters {
    pub a: Vec<u64>,
    pub k_seq: Vec<u64>,
    pub v: u64,
    pub h: usize,
    pub k: u64,
}

impl DerivedParameters {
    pub fn k2(&self) -> Option<u64> {
        self.k_seq.get(2).copied()
    }
}

/// Clique size minus one (`s`) and clique count minus one (`t`) of a graph
/// whose local graphs are `t + 1` disjoint `s`-cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OrderParams {
    pub s: u32,
    pub t: u32,
    pub line_graph: bool,
}
