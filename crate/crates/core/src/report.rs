//! Rule verdicts and feasibility reports.
//!
//! Every rule carries the numbers on both sides of its inequality as
//! [`Witness`] values so a report can be re-checked by hand.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arrays::IntersectionArray;
use crate::rational::Rational;

/// Stable rule identifiers. The string forms are part of the JSON schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleName {
    MonotoneB,
    MonotoneC,
    BiGeCj,
    NonNegativeA,
    IntegralK,
    Spectrum,
    Multiplicity,
    MuBound,
    Theta1Bound,
    RatioCap,
    Dichotomy,
    Claim1,
    QuadrangleDiameter,
    Terwilliger,
    Recognition,
    Pipeline,
    VertexCap,
    LineGraph,
    A1Cap,
    M1Cap,
    K2Cap,
    AbsoluteBound,
    HeadDiameter,
}

impl RuleName {
    pub const ALL: [RuleName; 23] = [
        RuleName::MonotoneB,
        RuleName::MonotoneC,
        RuleName::BiGeCj,
        RuleName::NonNegativeA,
        RuleName::IntegralK,
        RuleName::Spectrum,
        RuleName::Multiplicity,
        RuleName::MuBound,
        RuleName::Theta1Bound,
        RuleName::RatioCap,
        RuleName::Dichotomy,
        RuleName::Claim1,
        RuleName::QuadrangleDiameter,
        RuleName::Terwilliger,
        RuleName::Recognition,
        RuleName::Pipeline,
        RuleName::VertexCap,
        RuleName::LineGraph,
        RuleName::A1Cap,
        RuleName::M1Cap,
        RuleName::K2Cap,
        RuleName::AbsoluteBound,
        RuleName::HeadDiameter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::MonotoneB => "L1.monotone-b",
            RuleName::MonotoneC => "L1.monotone-c",
            RuleName::BiGeCj => "L1.bi-ge-cj",
            RuleName::NonNegativeA => "ARR.a-nonnegative",
            RuleName::IntegralK => "ARR.k-integral",
            RuleName::Spectrum => "SPEC.eigenvalues",
            RuleName::Multiplicity => "SPEC.multiplicity",
            RuleName::MuBound => "SPEC.mu-bound",
            RuleName::Theta1Bound => "L4.theta1",
            RuleName::RatioCap => "CAP.ratio",
            RuleName::Dichotomy => "L7.dichotomy",
            RuleName::Claim1 => "L7.claim1",
            RuleName::QuadrangleDiameter => "L9.diameter",
            RuleName::Terwilliger => "P5.terwilliger",
            RuleName::Recognition => "P10.recognition",
            RuleName::Pipeline => "T2.pipeline",
            RuleName::VertexCap => "T2.v-cap",
            RuleName::LineGraph => "T2.line-graph",
            RuleName::A1Cap => "T2.a1-cap",
            RuleName::M1Cap => "T2.m1-cap",
            RuleName::K2Cap => "T2.k2-cap",
            RuleName::AbsoluteBound => "ABS.valency",
            RuleName::HeadDiameter => "H.4^k",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        RuleName::ALL.into_iter().find(|r| r.as_str() == name)
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        })
    }
}

/// A number recorded alongside a verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Quantity {
    Int(i128),
    Ratio(Rational),
    Real(f64),
    Text(String),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(n) => write!(f, "{n}"),
            Quantity::Ratio(r) => write!(f, "{r}"),
            Quantity::Real(x) => write!(f, "{x}"),
            Quantity::Text(s) => f.write_str(s),
        }
    }
}

impl From<Rational> for Quantity {
    fn from(r: Rational) -> Self {
        Quantity::Ratio(r)
    }
}

impl From<&str> for Quantity {
    fn from(s: &str) -> Self {
        Quantity::Text(s.into())
    }
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::Real(x)
    }
}

macro_rules! quantity_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Quantity {
            fn from(n: $t) -> Self {
                Quantity::Int(n as i128)
            }
        }
    )*};
}
quantity_from_int!(u32, u64, usize, i64);

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub name: &'static str,
    pub value: Quantity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RuleVerdict {
    pub rule: RuleName,
    pub status: Status,
    /// Only hard rules can fail a report; soft rules annotate.
    pub hard: bool,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl RuleVerdict {
    pub fn new(rule: RuleName, status: Status) -> Self {
        RuleVerdict {
            rule,
            status,
            hard: true,
            witnesses: Vec::new(),
            note: None,
        }
    }

    pub fn pass(rule: RuleName) -> Self {
        Self::new(rule, Status::Pass)
    }

    pub fn fail(rule: RuleName) -> Self {
        Self::new(rule, Status::Fail)
    }

    pub fn not_applicable(rule: RuleName, why: impl Into<String>) -> Self {
        Self::new(rule, Status::NotApplicable).with_note(why)
    }

    /// `Pass` when `ok`, `Fail` otherwise.
    pub fn check(rule: RuleName, ok: bool) -> Self {
        Self::new(rule, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn with(mut self, name: &'static str, value: impl Into<Quantity>) -> Self {
        self.witnesses.push(Witness {
            name,
            value: value.into(),
        });
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn soft(mut self) -> Self {
        self.hard = false;
        self
    }

    pub fn witness(&self, name: &str) -> Option<&Quantity> {
        self.witnesses
            .iter()
            .find(|w| w.name == name)
            .map(|w| &w.value)
    }

    pub fn is_hard_failure(&self) -> bool {
        self.hard && self.status == Status::Fail
    }
}

/// Derived caps collected while evaluating the rules.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Caps {
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub diameter: Option<Rational>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub valency: Option<Rational>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub m1: Option<Rational>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub v: Option<Rational>,
}

impl Caps {
    /// Keeps the smaller of two optional caps.
    pub(crate) fn tighten(slot: &mut Option<Rational>, cap: Rational) {
        match slot {
            Some(old) if *old <= cap => {}
            _ => *slot = Some(cap),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeasibilityReport {
    pub array: IntersectionArray,
    pub verdicts: Vec<RuleVerdict>,
    pub caps: Caps,
}

impl FeasibilityReport {
    pub fn new(array: IntersectionArray) -> Self {
        FeasibilityReport {
            array,
            verdicts: Vec::new(),
            caps: Caps::default(),
        }
    }

    pub fn push(&mut self, verdict: RuleVerdict) {
        self.verdicts.push(verdict);
    }

    pub fn extend(&mut self, verdicts: impl IntoIterator<Item = RuleVerdict>) {
        self.verdicts.extend(verdicts);
    }

    /// `Fail` iff some hard rule failed.
    pub fn overall(&self) -> Status {
        if self.verdicts.iter().any(RuleVerdict::is_hard_failure) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.overall() == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&RuleVerdict> {
        self.verdicts.iter().find(|v| v.is_hard_failure())
    }

    pub fn verdict(&self, rule: RuleName) -> Option<&RuleVerdict> {
        self.verdicts.iter().find(|v| v.rule == rule)
    }

    pub fn verdicts_for(&self, rule: RuleName) -> impl Iterator<Item = &RuleVerdict> {
        self.verdicts.iter().filter(move |v| v.rule == rule)
    }
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::*;
    use serde::ser::{SerializeMap, SerializeStruct};
    use serde::{Serialize, Serializer};

    impl Serialize for RuleName {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(self.as_str())
        }
    }

    impl<'de> serde::Deserialize<'de> for RuleName {
        fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let name = <alloc::borrow::Cow<'de, str>>::deserialize(d)?;
            RuleName::from_name(&name)
                .ok_or_else(|| serde::de::Error::custom(alloc::format!("unknown rule {name:?}")))
        }
    }

    impl Serialize for Quantity {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self {
                Quantity::Int(n) => s.serialize_i128(*n),
                other => s.collect_str(other),
            }
        }
    }

    struct Witnesses<'a>(&'a [Witness]);

    impl Serialize for Witnesses<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut map = s.serialize_map(Some(self.0.len()))?;
            for w in self.0 {
                map.serialize_entry(w.name, &w.value)?;
            }
            map.end()
        }
    }

    impl Serialize for RuleVerdict {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut st = s.serialize_struct("RuleVerdict", 5)?;
            st.serialize_field("rule", &self.rule)?;
            st.serialize_field("status", &self.status)?;
            st.serialize_field("hard", &self.hard)?;
            st.serialize_field("witnesses", &Witnesses(&self.witnesses))?;
            if let Some(note) = &self.note {
                st.serialize_field("note", note)?;
            } else {
                st.skip_field("note")?;
            }
            st.end()
        }
    }

    impl Serialize for FeasibilityReport {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut st = s.serialize_struct("FeasibilityReport", 4)?;
            st.serialize_field("array", &self.array)?;
            st.serialize_field("overall", &self.overall())?;
            st.serialize_field("verdicts", &self.verdicts)?;
            st.serialize_field("caps", &self.caps)?;
            st.end()
        }
    }
}
