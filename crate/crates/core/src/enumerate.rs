//! Exhaustive search over intersection arrays in search-key order.
//!
//! The space is cut into [`WorkUnit`]s, one per `(k, D, b_1)`, listed in
//! increasing key order. Each unit is searched depth first with the
//! combinatorial rules applied as soon as their entries are fixed;
//! spectral rules run on complete arrays only. Concatenating unit outputs
//! in unit order gives the sorted stream whatever the degree of
//! parallelism.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arrays::IntersectionArray;
use crate::bounds::{absolute_bound, check_array, CheckOptions, RatioCap, RatioKind};
use crate::rational::Rational;
use crate::report::{FeasibilityReport, RuleName};
use crate::spectral::{self, SpectralError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("invalid constraints: {0}")]
    InvalidConstraints(&'static str),
}

/// Which optional rule families decide emission. The combinatorial rules
/// and the ratio cap always apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct RuleToggles {
    pub spectral: bool,
    pub absolute_bound: bool,
    /// Hard finiteness-pipeline caps, evaluated with `theorem2_c`.
    pub theorem2: bool,
}

impl Default for RuleToggles {
    fn default() -> Self {
        RuleToggles {
            spectral: true,
            absolute_bound: true,
            theorem2: false,
        }
    }
}

impl RuleToggles {
    pub fn filters(&self, rule: RuleName) -> bool {
        use RuleName::*;
        match rule {
            MonotoneB | MonotoneC | BiGeCj | NonNegativeA | IntegralK | RatioCap => true,
            Spectrum | Multiplicity => self.spectral,
            AbsoluteBound => self.absolute_bound,
            VertexCap | LineGraph | A1Cap | M1Cap | K2Cap => self.theorem2,
            _ => false,
        }
    }

    /// No hard failure among the filtering rules.
    pub fn admits(&self, report: &FeasibilityReport) -> bool {
        !report
            .verdicts
            .iter()
            .any(|v| v.is_hard_failure() && self.filters(v.rule))
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnumerationConstraints {
    pub k_min: u32,
    pub k_max: u32,
    pub d_min: usize,
    pub d_max: usize,
    #[cfg_attr(feature = "serde", serde(default))]
    pub ratio_cap: Option<RatioCap>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub rules: RuleToggles,
    /// Pipeline constant; defaults to `b_2 / c_2` of each array.
    #[cfg_attr(feature = "serde", serde(default))]
    pub theorem2_c: Option<Rational>,
}

pub const MAX_VALENCY: u32 = 1 << 20;
pub const MAX_DIAMETER: usize = 64;

impl EnumerationConstraints {
    pub fn new(k_min: u32, k_max: u32, d_min: usize, d_max: usize) -> Self {
        EnumerationConstraints {
            k_min,
            k_max,
            d_min,
            d_max,
            ratio_cap: None,
            rules: RuleToggles::default(),
            theorem2_c: None,
        }
    }

    pub fn with_ratio_cap(mut self, kind: RatioKind, cap: Rational) -> Self {
        self.ratio_cap = Some(RatioCap { kind, cap });
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.k_min < 3 {
            return Err(EnumError::InvalidConstraints("k_min must be at least 3"));
        }
        if self.d_min < 1 {
            return Err(EnumError::InvalidConstraints("d_min must be at least 1"));
        }
        if self.k_max > MAX_VALENCY {
            return Err(EnumError::InvalidConstraints("k_max above 2^20"));
        }
        if self.d_max > MAX_DIAMETER {
            return Err(EnumError::InvalidConstraints("d_max above 64"));
        }
        Ok(())
    }

    pub fn check_options(&self) -> CheckOptions {
        CheckOptions {
            ratio_cap: self.ratio_cap,
            c: self.theorem2_c,
            ..CheckOptions::default()
        }
    }

    /// Units in increasing key order; empty when a range is empty.
    pub fn work_units(&self) -> Vec<WorkUnit> {
        let mut units = Vec::new();
        for k in self.k_min..=self.k_max {
            for d in self.d_min..=self.d_max {
                if d == 1 {
                    units.push(WorkUnit { k, d, b1: None });
                } else {
                    units.extend((1..k).map(|b1| WorkUnit { k, d, b1: Some(b1) }));
                }
            }
        }
        units
    }
}

/// Arrays with fixed `k`, `D` and, for `D >= 2`, fixed `b_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WorkUnit {
    pub k: u32,
    pub d: usize,
    pub b1: Option<u32>,
}

impl WorkUnit {
    /// Leading entries of every search key in this unit.
    pub fn key_prefix(&self) -> Vec<u32> {
        let mut key = vec![self.k, self.d as u32, 1];
        key.extend(self.b1);
        key
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnumerationStats {
    /// Partial and complete arrays examined.
    pub visited: u64,
    pub emitted: u64,
    pub pruned: BTreeMap<RuleName, u64>,
}

impl EnumerationStats {
    pub fn merge(&mut self, other: &EnumerationStats) {
        self.visited += other.visited;
        self.emitted += other.emitted;
        for (rule, n) in &other.pruned {
            *self.pruned.entry(*rule).or_default() += n;
        }
    }

    fn prune(&mut self, rule: RuleName) {
        *self.pruned.entry(rule).or_default() += 1;
    }
}

#[derive(Clone, Debug)]
pub struct Emitted {
    pub array: IntersectionArray,
    pub report: FeasibilityReport,
}

struct Search<'a, F> {
    cons: &'a EnumerationConstraints,
    opts: CheckOptions,
    k: u32,
    d: usize,
    b: Vec<u32>,
    /// `c[0]` is a placeholder so indices match the array.
    c: Vec<u32>,
    ks: Vec<u64>,
    stats: EnumerationStats,
    sink: F,
}

impl<F: FnMut(Emitted)> Search<'_, F> {
    fn ratio_exceeds(&self, kind: RatioKind, num: u32, den: u32) -> bool {
        match self.cons.ratio_cap {
            Some(cap) if cap.kind == kind => {
                Rational::new(num as i128, den as i128).is_some_and(|r| r > cap.cap)
            }
            _ => false,
        }
    }

    fn choose_c(&mut self, j: usize) {
        let lo = self.c[j - 1];
        for cj in lo..=self.k {
            self.stats.visited += 1;
            if j < self.d && cj >= self.k {
                self.stats.prune(RuleName::NonNegativeA);
                continue;
            }
            if cj > self.b[(j - 1).min(self.d - j)] {
                self.stats.prune(RuleName::BiGeCj);
                continue;
            }
            let num = self.ks[j - 1].checked_mul(self.b[j - 1] as u64);
            let Some(kj) = num.filter(|n| n % cj as u64 == 0).map(|n| n / cj as u64) else {
                self.stats.prune(RuleName::IntegralK);
                continue;
            };
            if j == 2 && self.ratio_exceeds(RatioKind::K2OverK, self.b[1], cj) {
                self.stats.prune(RuleName::RatioCap);
                continue;
            }
            self.c[j] = cj;
            self.ks[j] = kj;
            if j == self.d {
                self.leaf();
            } else {
                self.choose_b(j);
            }
        }
    }

    fn choose_b(&mut self, i: usize) {
        for bi in 1..=self.b[i - 1] {
            self.stats.visited += 1;
            if bi + self.c[i] > self.k {
                self.stats.prune(RuleName::NonNegativeA);
                continue;
            }
            if bi < self.c[i.min(self.d - i)] {
                self.stats.prune(RuleName::BiGeCj);
                continue;
            }
            if i == 2 && self.ratio_exceeds(RatioKind::B2OverC2, bi, self.c[2]) {
                self.stats.prune(RuleName::RatioCap);
                continue;
            }
            self.b[i] = bi;
            self.choose_c(i + 1);
        }
    }

    fn leaf(&mut self) {
        let arr = IntersectionArray::new(self.b.clone(), self.c[1..].to_vec())
            .expect("search keeps entries positive");
        if let Some(rule) = self.fast_rejection(&arr) {
            self.stats.prune(rule);
            return;
        }
        let report = check_array(&arr, &self.opts);
        let toggles = self.cons.rules;
        if let Some(v) = report
            .verdicts
            .iter()
            .find(|v| v.is_hard_failure() && toggles.filters(v.rule))
        {
            self.stats.prune(v.rule);
            return;
        }
        self.stats.emitted += 1;
        (self.sink)(Emitted { array: arr, report });
    }

    /// Cheap rules first so most leaves never build a full report.
    fn fast_rejection(&self, arr: &IntersectionArray) -> Option<RuleName> {
        if let Some(cap) = &self.cons.ratio_cap {
            if cap.verdict(arr).is_hard_failure() {
                return Some(RuleName::RatioCap);
            }
        }
        if !self.cons.rules.spectral {
            return None;
        }
        match spectral::spectrum(arr, &self.opts.tolerances) {
            Err(SpectralError::Derive(_)) => Some(RuleName::IntegralK),
            Err(
                SpectralError::NonConvergence { .. }
                | SpectralError::CoincidentEigenvalues { .. }
                | SpectralError::InvalidMatrix,
            ) => Some(RuleName::Spectrum),
            Err(_) => Some(RuleName::Multiplicity),
            Ok(s) => {
                let m1 = s.multiplicities.get(1).copied().unwrap_or(0);
                (self.cons.rules.absolute_bound && absolute_bound(arr, m1).is_hard_failure())
                    .then_some(RuleName::AbsoluteBound)
            }
        }
    }
}

/// Searches one unit, passing emitted arrays to `sink` in key order.
pub fn enumerate_unit(
    cons: &EnumerationConstraints,
    unit: WorkUnit,
    sink: impl FnMut(Emitted),
) -> EnumerationStats {
    let (k, d) = (unit.k, unit.d);
    let mut s = Search {
        cons,
        opts: cons.check_options(),
        k,
        d,
        b: vec![0; d],
        c: vec![0; d + 1],
        ks: vec![0; d + 1],
        stats: EnumerationStats::default(),
        sink,
    };
    s.b[0] = k;
    s.c[1] = 1;
    s.ks[0] = 1;
    s.ks[1] = k as u64;
    s.stats.visited += 1;
    match unit.b1 {
        None => s.leaf(),
        Some(b1) => {
            s.b[1] = b1;
            s.choose_c(2);
        }
    }
    s.stats
}

#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub emitted: Vec<Emitted>,
    pub stats: EnumerationStats,
}

/// Serial driver over all units.
pub fn enumerate(cons: &EnumerationConstraints) -> Result<Enumeration, EnumError> {
    cons.validate()?;
    let mut out = Enumeration::default();
    for unit in cons.work_units() {
        let stats = enumerate_unit(cons, unit, |e| out.emitted.push(e));
        out.stats.merge(&stats);
    }
    Ok(out)
}

/// First rule the search would reject `arr` with before reaching the
/// spectral stage, replaying the incremental checks along its key.
pub fn prefix_rejection(arr: &IntersectionArray, cap: Option<RatioCap>) -> Option<RuleName> {
    let d = arr.diameter();
    let k = arr.valency();
    let mut kj = k as u64;
    for j in 1..=d {
        let cj = arr.c(j);
        if j > 1 {
            if cj < arr.c(j - 1) {
                return Some(RuleName::MonotoneC);
            }
            if j < d && cj >= k {
                return Some(RuleName::NonNegativeA);
            }
            if cj > arr.b((j - 1).min(d - j)) {
                return Some(RuleName::BiGeCj);
            }
            let Some(num) = kj.checked_mul(arr.b(j - 1) as u64) else {
                return Some(RuleName::IntegralK);
            };
            if num % cj as u64 != 0 {
                return Some(RuleName::IntegralK);
            }
            kj = num / cj as u64;
            if j == 2 && cap.is_some_and(|c| c.kind == RatioKind::K2OverK && Rational::new(arr.b(1) as i128, cj as i128).is_some_and(|r| r > c.cap)) {
                return Some(RuleName::RatioCap);
            }
        }
        if j < d {
            let bj = arr.b(j);
            if bj > arr.b(j - 1) || (j == 1 && bj >= k) {
                return Some(RuleName::MonotoneB);
            }
            if bj + cj > k {
                return Some(RuleName::NonNegativeA);
            }
            if bj < arr.c(j.min(d - j)) {
                return Some(RuleName::BiGeCj);
            }
            if j == 2 && cap.is_some_and(|c| c.kind == RatioKind::B2OverC2 && Rational::new(bj as i128, arr.c(2) as i128).is_some_and(|r| r > c.cap)) {
                return Some(RuleName::RatioCap);
            }
        }
    }
    None
}

/// Emitted arrays per valency for a fixed diameter under the pipeline.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CensusSummary {
    pub c: Rational,
    pub diameter: usize,
    pub k_max: u32,
    /// Whether the pipeline caps were switched on.
    pub in_scope: bool,
    pub per_valency: BTreeMap<u32, u64>,
    pub arrays: Vec<IntersectionArray>,
    pub stats: EnumerationStats,
}

/// Constraints used by [`finiteness_census`]: `3 <= k <= k_max`, the given
/// diameter, `b_2 / c_2 <= C`, and the pipeline caps when `D >= 6`.
pub fn census_constraints(c: Rational, d: usize, k_max: u32) -> EnumerationConstraints {
    let mut cons = EnumerationConstraints::new(3, k_max, d, d).with_ratio_cap(RatioKind::B2OverC2, c);
    cons.theorem2_c = Some(c);
    cons.rules.theorem2 = d >= 6;
    cons
}

impl CensusSummary {
    pub fn from_run(cons: &EnumerationConstraints, run: Enumeration) -> Self {
        let mut per_valency: BTreeMap<u32, u64> = (cons.k_min..=cons.k_max).map(|k| (k, 0)).collect();
        for e in &run.emitted {
            *per_valency.entry(e.array.valency()).or_default() += 1;
        }
        CensusSummary {
            c: cons.theorem2_c.unwrap_or(Rational::ONE),
            diameter: cons.d_min,
            k_max: cons.k_max,
            in_scope: cons.rules.theorem2,
            per_valency,
            arrays: run.emitted.into_iter().map(|e| e.array).collect(),
            stats: run.stats,
        }
    }
}

pub fn finiteness_census(c: Rational, d: usize, k_max: u32) -> Result<CensusSummary, EnumError> {
    if c <= Rational::ZERO {
        return Err(EnumError::InvalidConstraints("C must be positive"));
    }
    let cons = census_constraints(c, d, k_max);
    let run = if k_max < 3 {
        Enumeration::default()
    } else {
        enumerate(&cons)?
    };
    Ok(CensusSummary::from_run(&cons, run))
}
