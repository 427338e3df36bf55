//! The finiteness pipeline and the all-rules array check.

use alloc::format;

use super::{
    absolute_bound, claim1_property, geometric_sum, h_diameter_cap, lemma7_dichotomy,
    lemma7_tightest_c, lemma9_diameter_cap, q, smallest_alpha, terwilliger_filter,
};
use crate::arrays::IntersectionArray;
use crate::rational::Rational;
use crate::report::{Caps, FeasibilityReport, RuleName, RuleVerdict};
use crate::spectral::{self, Spectrum, Theta1Verdict, Tolerances};

/// Which ratio a search cap applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum RatioKind {
    /// `k_2 / k = b_1 / c_2`.
    #[default]
    K2OverK,
    B2OverC2,
}

impl RatioKind {
    pub fn of(self, arr: &IntersectionArray) -> Option<Rational> {
        match self {
            RatioKind::K2OverK => arr.ratio_k2_over_k(),
            RatioKind::B2OverC2 => arr.b_over_c(2),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RatioKind::K2OverK => "k2/k",
            RatioKind::B2OverC2 => "b2/c2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RatioCap {
    pub kind: RatioKind,
    pub cap: Rational,
}

impl RatioCap {
    pub fn verdict(&self, arr: &IntersectionArray) -> RuleVerdict {
        match self.kind.of(arr) {
            None => RuleVerdict::not_applicable(RuleName::RatioCap, "requires D >= 2"),
            Some(r) => RuleVerdict::check(RuleName::RatioCap, r <= self.cap)
                .with(self.kind.label(), r)
                .with("cap", self.cap),
        }
    }
}

/// Inputs to [`check_array`] beyond the array itself.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOptions {
    pub tolerances: Tolerances,
    /// Pipeline ratio cap `C`; defaults to `b_2 / c_2`.
    pub c: Option<Rational>,
    pub ratio_cap: Option<RatioCap>,
    /// Graph-level facts, when known.
    pub terwilliger: Option<bool>,
    pub has_quadrangle: Option<bool>,
    pub alpha: Option<u32>,
    pub big_t: Option<u32>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tolerances: Tolerances::default(),
            c: None,
            ratio_cap: None,
            terwilliger: None,
            has_quadrangle: None,
            alpha: None,
            big_t: None,
        }
    }
}

fn hard_if(v: RuleVerdict, hard: bool) -> RuleVerdict {
    if hard {
        v
    } else {
        v.soft()
    }
}

fn out_of_scope(arr: &IntersectionArray, c: Rational) -> Option<&'static str> {
    if arr.valency() < 3 {
        return Some("requires k >= 3");
    }
    if arr.diameter() < 6 {
        return Some("requires D >= 6");
    }
    if arr.b_over_c(2).expect("D >= 6") > c {
        return Some("b2/c2 exceeds C");
    }
    None
}

/// `b_0 = 2s`, `b_i = s` and `c_i = 1` below `D`, with `D = 2d`.
fn flag_shape(arr: &IntersectionArray) -> Option<u32> {
    let d = arr.diameter();
    let s = arr.b(1);
    let ok = arr.valency() == 2 * s
        && (1..d).all(|i| arr.b(i) == s && arr.c(i) == 1)
        && d % 2 == 0;
    ok.then_some(s)
}

/// The case analysis behind finiteness for `k >= 3`, `D >= 6` and
/// `b_2 / c_2 <= C`.
///
/// Rules that depend only on the array are hard inside that scope. Rules
/// conditioned on the Terwilliger property are hard only when the caller
/// supplies it. Outside the scope everything is evaluated but soft.
pub fn theorem2_pipeline(
    arr: &IntersectionArray,
    spectrum: Option<&Spectrum>,
    c: Rational,
    terwilliger: Option<bool>,
    tol: &Tolerances,
) -> FeasibilityReport {
    let mut rep = FeasibilityReport::new(arr.clone());
    let d = arr.diameter();
    let k = arr.valency();
    let scope = out_of_scope(arr, c);
    let in_scope = scope.is_none();
    let params = arr.derive().ok();
    let m1 = spectrum.and_then(|s| s.multiplicities.get(1).copied());
    let theta1 = spectrum.and_then(Spectrum::theta1);

    let finish = |mut rep: FeasibilityReport| {
        if let Some(m1) = m1 {
            rep.push(absolute_bound(arr, m1));
        }
        let failed = rep.verdicts.iter().find(|v| v.is_hard_failure()).map(|v| v.rule);
        let verdict = match (scope, failed) {
            (Some(why), _) => RuleVerdict::not_applicable(RuleName::Pipeline, why),
            (None, None) => RuleVerdict::pass(RuleName::Pipeline).with("C", c),
            (None, Some(rule)) => RuleVerdict::fail(RuleName::Pipeline)
                .with("C", c)
                .with_note(format!("{rule} failed")),
        };
        rep.verdicts.insert(0, verdict);
        rep
    };

    // Dichotomy at t = 2. With k <= 2C finiteness already follows; the
    // case analysis below is still reported, but softly.
    let two_c = c.checked_mul(&q(2));
    let small_k = two_c.is_some_and(|kc| q(k as u64) <= kc);
    let mut dich = lemma7_dichotomy(arr, 2, c);
    if in_scope && small_k {
        dich = dich.with_note("k <= 2C; finitely many by the valency bound");
    }
    rep.push(hard_if(dich, in_scope));
    if in_scope {
        if let Some(cap) = c.checked_mul(&c).and_then(|c2| c2.checked_mul(&q(16))) {
            if !small_k {
                Caps::tighten(&mut rep.caps.diameter, cap);
            }
        }
        if let Some(kc) = two_c {
            Caps::tighten(&mut rep.caps.valency, kc);
        }
    }
    let branch = in_scope && !small_k;

    // Vertex count.
    let s_sum = geometric_sum(c, d);
    match (&params, s_sum) {
        (Some(p), Some(s)) if d >= 3 => {
            let k2 = p.k2().expect("D >= 2");
            match s.checked_mul(&q(k2)) {
                Some(cap) => {
                    rep.push(hard_if(
                        RuleVerdict::check(RuleName::VertexCap, q(p.v) <= cap)
                            .with("v", p.v)
                            .with("S", s)
                            .with("k2", k2)
                            .with("S*k2", cap),
                        in_scope,
                    ));
                    if in_scope {
                        Caps::tighten(&mut rep.caps.v, cap);
                    }
                }
                None => rep.push(RuleVerdict::not_applicable(RuleName::VertexCap, "cap overflow")),
            }
        }
        _ => rep.push(RuleVerdict::not_applicable(
            RuleName::VertexCap,
            "requires D >= 3 and integral k_i",
        )),
    }
    let s_sum = s_sum.unwrap_or(Rational::ZERO);
    let big_cap = s_sum.checked_mul(&q(576));

    let m1_rule = |cap: Option<Rational>, label: &'static str, hard: bool| match (m1, cap) {
        (Some(m1), Some(cap)) => hard_if(
            RuleVerdict::check(RuleName::M1Cap, q(m1) < cap)
                .with("m1", m1)
                .with(label, cap),
            hard,
        ),
        (None, _) => RuleVerdict::not_applicable(RuleName::M1Cap, "no feasible spectrum"),
        (_, None) => RuleVerdict::not_applicable(RuleName::M1Cap, "cap overflow"),
    };

    if d >= 2 && arr.c(2) == 1 {
        match arr.order_params() {
            Err(e) => rep.push(hard_if(
                RuleVerdict::fail(RuleName::LineGraph).with_note(format!("{e}")),
                branch,
            )),
            Ok(None) => unreachable!("c2 = 1 and D >= 2"),
            Ok(Some(order)) if order.line_graph => {
                let shape = flag_shape(arr);
                let ok = shape.is_some_and(|s| {
                    s >= 2 && (d == 6 || d == 8) && q(s as u64) <= c && s == arr.b(2)
                });
                let mut v = RuleVerdict::check(RuleName::LineGraph, ok)
                    .with("s", order.s)
                    .with("D", d);
                if !ok {
                    v = v.with_note("line graph must be a flag graph of a generalized hexagon or octagon");
                }
                rep.push(hard_if(v, branch));
            }
            Ok(Some(order)) => {
                // k = s(t+1) with t >= 2, hence a1 = s - 1 <= k/3 - 1.
                let a1 = arr.a(1);
                rep.push(hard_if(
                    RuleVerdict::check(RuleName::A1Cap, 3 * (a1 + 1) <= k as i64)
                        .with("a1", a1)
                        .with("k/3-1", Rational::new(k as i128 - 3, 3).expect("nonzero"))
                        .with("t", order.t),
                    branch,
                ));
                let a2c2 = q((arr.a(2) + arr.c(2) as i64) as u64);
                if a2c2 <= c {
                    rep.push(RuleVerdict::not_applicable(RuleName::M1Cap, "a2 + c2 <= C"));
                } else if k <= 12 {
                    rep.push(RuleVerdict::not_applicable(RuleName::M1Cap, "k <= 12"));
                } else {
                    rep.push(m1_rule(big_cap, "576S", branch));
                    if branch {
                        if let Some(cap) = big_cap {
                            Caps::tighten(&mut rep.caps.m1, cap);
                        }
                    }
                }
            }
        }
        return finish(rep);
    }

    if d < 2 {
        return finish(rep);
    }

    // c2 >= 2: Terwilliger graphs.
    if terwilliger != Some(false) {
        let big_t = c
            .checked_add(&Rational::ONE)
            .map(|x| x.floor().max(1) as u32)
            .unwrap_or(u32::MAX);
        match theta1 {
            Some(theta1) => {
                for v in terwilliger_filter(arr, theta1, big_t, tol.equality) {
                    rep.push(hard_if(v, branch && terwilliger == Some(true)));
                }
            }
            None => rep.push(RuleVerdict::not_applicable(
                RuleName::Recognition,
                "no feasible spectrum",
            )),
        }
        if let Some(p) = &params {
            rep.push(h_diameter_cap(arr, p.h));
        }
    }

    // c2 >= 2: graphs with a quadrangle.
    if terwilliger != Some(true) {
        let hard = branch && terwilliger == Some(false);
        let a1 = arr.a(1);
        let rhs = Rational::new(k as i128 + arr.c(d) as i128, 6).expect("nonzero");
        rep.push(hard_if(
            RuleVerdict::check(RuleName::A1Cap, q((a1 + 2) as u64) <= rhs)
                .with("a1+2", a1 + 2)
                .with("(k+c_D)/6", rhs),
            hard,
        ));
        if 2 * arr.b(2) <= k {
            if k <= 24 {
                rep.push(RuleVerdict::not_applicable(RuleName::M1Cap, "k <= 24"));
            } else {
                rep.push(m1_rule(big_cap, "576S", hard));
                if hard {
                    if let Some(cap) = big_cap {
                        Caps::tighten(&mut rep.caps.m1, cap);
                    }
                }
            }
        } else {
            let k2 = params.as_ref().and_then(|p| p.k2());
            let two_ck = c.checked_mul(&q(2 * k as u64));
            if let (Some(k2), Some(cap)) = (k2, two_ck) {
                rep.push(hard_if(
                    RuleVerdict::check(RuleName::K2Cap, q(k2) < cap)
                        .with("k2", k2)
                        .with("2Ck", cap),
                    branch,
                ));
            }
            // m1 <= v / (k u_1^2) with u_1 > 1/(C+1) and v < 2C k S.
            let c1 = c.checked_add(&Rational::ONE);
            let cap = c1
                .and_then(|c1| c1.checked_mul(&c1))
                .and_then(|x| x.checked_mul(&c))
                .and_then(|x| x.checked_mul(&q(2)))
                .and_then(|x| x.checked_mul(&s_sum));
            let mut v = m1_rule(cap, "2C(C+1)^2S", hard);
            if let (Some(m1), Some(lit)) = (m1, c1.and_then(|c1| c1.checked_mul(&s_sum))) {
                v = v.with("(C+1)S", lit).with_note(format!(
                    "m1 < (C+1)S {}",
                    if q(m1) < lit { "also holds" } else { "does not hold" }
                ));
            }
            rep.push(v);
            if hard {
                if let Some(cap) = cap {
                    Caps::tighten(&mut rep.caps.m1, cap);
                }
            }
        }
    }
    finish(rep)
}

/// Every applicable rule for one array, with caps.
pub fn check_array(arr: &IntersectionArray, opts: &CheckOptions) -> FeasibilityReport {
    let tol = &opts.tolerances;
    let d = arr.diameter();
    let mut rep = FeasibilityReport::new(arr.clone());
    rep.extend(arr.basic_feasibility());

    let params = match arr.derive() {
        Ok(p) => {
            rep.push(RuleVerdict::pass(RuleName::NonNegativeA));
            rep.push(RuleVerdict::pass(RuleName::IntegralK).with("v", p.v));
            Some(p)
        }
        Err(crate::arrays::DeriveError::NegativeA(i)) => {
            rep.push(RuleVerdict::fail(RuleName::NonNegativeA).with("index", i).with("a[i]", arr.a(i)));
            rep.push(RuleVerdict::not_applicable(RuleName::IntegralK, "a_i < 0"));
            None
        }
        Err(e) => {
            rep.push(RuleVerdict::pass(RuleName::NonNegativeA));
            let index = match e {
                crate::arrays::DeriveError::NonIntegralK(i) | crate::arrays::DeriveError::Overflow(i) => i,
                crate::arrays::DeriveError::NegativeA(i) => i,
            };
            rep.push(RuleVerdict::fail(RuleName::IntegralK).with("index", index).with_note(format!("{e}")));
            None
        }
    };

    let spectrum = match &params {
        None => {
            rep.push(RuleVerdict::not_applicable(RuleName::Spectrum, "derived parameters failed"));
            None
        }
        Some(p) => match spectral::spectrum_with(arr, p, tol) {
            Ok(s) => {
                rep.push(
                    RuleVerdict::pass(RuleName::Spectrum)
                        .with("distinct", s.eigenvalues.len())
                        .with("theta1", s.theta1().unwrap_or(f64::NAN)),
                );
                rep.push(RuleVerdict::pass(RuleName::Multiplicity).with("m1", s.multiplicities.get(1).copied().unwrap_or(0)));
                let bad = s.mu_violations(arr);
                rep.push(match bad.first() {
                    None => RuleVerdict::pass(RuleName::MuBound).soft(),
                    Some(&i) => RuleVerdict::fail(RuleName::MuBound)
                        .with("index", i)
                        .with("mu_i", s.mu[i])
                        .with("a_i+c_i", arr.a(i) + arr.c(i) as i64)
                        .soft(),
                });
                Some(s)
            }
            Err(e @ (spectral::SpectralError::NonConvergence { .. }
            | spectral::SpectralError::CoincidentEigenvalues { .. }
            | spectral::SpectralError::InvalidMatrix)) => {
                rep.push(RuleVerdict::fail(RuleName::Spectrum).with_note(format!("{e}")));
                None
            }
            Err(e) => {
                rep.push(RuleVerdict::pass(RuleName::Spectrum).with("distinct", d + 1));
                let mut v = RuleVerdict::fail(RuleName::Multiplicity).with_note(format!("{e}"));
                if let spectral::SpectralError::NonIntegralMultiplicity { index, value } = e {
                    v = v.with("index", index).with("m", value);
                }
                rep.push(v);
                None
            }
        },
    };

    if let Some(cap) = &opts.ratio_cap {
        rep.push(cap.verdict(arr));
    }

    // theta_1 >= mu_t, with equality only in the antipodal shape.
    for t in 1..=d.saturating_sub(2) / 2 {
        if let Ok(chk) = spectral::theta1_lower_bound_check(arr, t, tol) {
            let ok = matches!(
                chk.verdict,
                Theta1Verdict::Strict | Theta1Verdict::Equality { signature_holds: true }
            );
            let kind = match chk.verdict {
                Theta1Verdict::Strict => "strict",
                Theta1Verdict::Equality { .. } => "equality",
                Theta1Verdict::Below => "below",
            };
            rep.push(
                RuleVerdict::check(RuleName::Theta1Bound, ok)
                    .with("t", t)
                    .with("theta1", chk.theta1)
                    .with("mu_t", chk.mu_t)
                    .with("verdict", crate::report::Quantity::Text(kind.into()))
                    .soft(),
            );
        }
    }

    for t in 1..d {
        let c = lemma7_tightest_c(arr, t).expect("t <= D");
        let v = lemma7_dichotomy(arr, t, c);
        if let Some(cap) = v.witness("8C^2t").and_then(|x| match x {
            crate::report::Quantity::Ratio(r) => Some(*r),
            _ => None,
        }) {
            if q(arr.valency() as u64) > c.checked_mul(&q(2)).unwrap_or(Rational::ZERO) {
                Caps::tighten(&mut rep.caps.diameter, cap);
            }
        }
        rep.push(v);
        if 4 * t <= d {
            rep.push(claim1_property(arr, t));
        }
    }

    if let Some(quad) = opts.has_quadrangle {
        let alpha = opts.alpha.or_else(|| smallest_alpha(arr)).unwrap_or(2);
        let (v, cap) = lemma9_diameter_cap(arr, alpha, quad);
        if let Some(cap) = cap {
            Caps::tighten(&mut rep.caps.diameter, q(cap as u64));
        }
        rep.push(v);
    }

    if opts.terwilliger == Some(true) && d >= 2 && arr.c(2) >= 2 {
        if let Some(theta1) = spectrum.as_ref().and_then(Spectrum::theta1) {
            rep.extend(terwilliger_filter(arr, theta1, opts.big_t.unwrap_or(2), tol.equality));
        }
    }

    if let Some(p) = &params {
        rep.push(h_diameter_cap(arr, p.h));
    }

    if d >= 2 {
        let c = opts.c.unwrap_or_else(|| arr.b_over_c(2).expect("D >= 2"));
        let pipe = theorem2_pipeline(arr, spectrum.as_ref(), c, opts.terwilliger, tol);
        for verdict in pipe.verdicts {
            let duplicate = matches!(
                verdict.rule,
                RuleName::Terwilliger | RuleName::Recognition | RuleName::HeadDiameter
            ) && rep.verdict(verdict.rule).is_some();
            if !duplicate {
                rep.push(verdict);
            }
        }
        for (slot, cap) in [
            (&mut rep.caps.diameter, pipe.caps.diameter),
            (&mut rep.caps.valency, pipe.caps.valency),
            (&mut rep.caps.m1, pipe.caps.m1),
            (&mut rep.caps.v, pipe.caps.v),
        ] {
            if let Some(cap) = cap {
                Caps::tighten(slot, cap);
            }
        }
    } else if let Some(m1) = spectrum.as_ref().and_then(|s| s.multiplicities.get(1).copied()) {
        rep.push(absolute_bound(arr, m1));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn pipeline(s: &str, c: Rational, terw: Option<bool>) -> FeasibilityReport {
        let a = arr(s);
        let spec = spectral::spectrum(&a, &Tolerances::default()).ok();
        theorem2_pipeline(&a, spec.as_ref(), c, terw, &Tolerances::default())
    }

    #[test]
    fn short_diameter_is_out_of_scope() {
        let r = pipeline("{4,3,2,1;1,2,3,4}", Rational::ONE, None);
        let v = r.verdict(RuleName::Pipeline).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
        assert!(r.verdict(RuleName::VertexCap).is_some());
        assert!(r.passed());
    }

    #[test]
    fn hexagon_flag_graph_is_recognised() {
        let r = pipeline("{4,2,2,2,2,2;1,1,1,1,1,2}", q(2), None);
        assert_eq!(r.verdict(RuleName::Pipeline).unwrap().status, Status::Pass);
        assert_eq!(r.verdict(RuleName::LineGraph).unwrap().status, Status::Pass);
        // The all-ones literal has the same shape.
        let r = pipeline("{4,2,2,2,2,2;1,1,1,1,1,1}", q(2), None);
        assert_eq!(r.verdict(RuleName::LineGraph).unwrap().status, Status::Pass);
    }

    #[test]
    fn line_graph_of_wrong_diameter_fails() {
        let r = pipeline("{4,2,2,2,2,2,2;1,1,1,1,1,1,2}", q(2), None);
        let v = r.verdict(RuleName::LineGraph).unwrap();
        assert_eq!(v.status, Status::Fail);
        // k = 2s <= 2C, so the valency branch already covers it.
        assert!(!v.hard);
        assert_eq!(r.verdict(RuleName::Pipeline).unwrap().status, Status::Pass);
    }

    #[test]
    fn polygon_short_circuits() {
        let r = pipeline("{2,1,1,1,1,1;1,1,1,1,1,2}", Rational::ONE, None);
        // k = 2 is outside the k >= 3 scope; the dichotomy still passes.
        assert_eq!(r.verdict(RuleName::Dichotomy).unwrap().status, Status::Pass);
        assert!(r.passed());
        let r = pipeline("{3,2,2,2,2,2;1,1,1,1,1,3}", q(2), None);
        assert_eq!(r.verdict(RuleName::Pipeline).unwrap().status, Status::Pass);
        assert!(r.verdicts.iter().any(|v| v.note.as_deref().is_some_and(|n| n.contains("k <= 2C"))));
    }

    #[test]
    fn vertex_cap_witnesses() {
        let a = arr("{4,2,2,2,2,2;1,1,1,1,1,2}");
        let r = pipeline("{4,2,2,2,2,2;1,1,1,1,1,2}", q(2), None);
        let v = r.verdict(RuleName::VertexCap).unwrap();
        assert_eq!(v.status, Status::Pass);
        // S = 3 + 2 + 4 + 8 + 16 = 33, k2 = 8.
        assert_eq!(v.witness("S*k2"), Some(&crate::report::Quantity::Ratio(q(264))));
        assert_eq!(a.derive().unwrap().v, 189);
    }

    #[test]
    fn monotone_in_c() {
        for s in ["{4,2,2,2,2,2;1,1,1,1,1,2}", "{3,2,2,2,2,2;1,1,1,1,1,3}", "{4,3,2,1;1,2,3,4}"] {
            let mut last_pass = false;
            for n in 1..12 {
                let c = Rational::new(n, 2).unwrap();
                let ok = pipeline(s, c, None).passed();
                assert!(ok || !last_pass, "{s} at C = {c}");
                last_pass = ok;
            }
        }
    }

    #[test]
    fn check_array_collects_everything() {
        let r = check_array(&arr("{3,2;1,1}"), &CheckOptions::default());
        assert!(r.passed());
        assert!(r.verdict(RuleName::Spectrum).is_some());
        assert_eq!(r.verdict(RuleName::AbsoluteBound).unwrap().status, Status::Pass);

        let r = check_array(&arr("{3,3;1,1}"), &CheckOptions::default());
        assert_eq!(r.first_failure().unwrap().rule, RuleName::MonotoneB);

        let r = check_array(&arr("{5,3;1,2}"), &CheckOptions::default());
        assert_eq!(r.verdict(RuleName::IntegralK).unwrap().status, Status::Fail);

        let r = check_array(&arr("{4,2,2,2,2,2;1,1,1,1,1,1}"), &CheckOptions::default());
        assert_eq!(r.first_failure().unwrap().rule, RuleName::Multiplicity);

        let q4 = check_array(&arr("{4,3,2,1;1,2,3,4}"), &CheckOptions {
            has_quadrangle: Some(true),
            terwilliger: Some(false),
            ..CheckOptions::default()
        });
        assert!(q4.passed());
        assert_eq!(q4.verdict(RuleName::QuadrangleDiameter).unwrap().status, Status::Pass);
        assert_eq!(q4.verdict(RuleName::Theta1Bound).unwrap().status, Status::Pass);
    }

    #[test]
    fn recognition_fires_only_when_asserted() {
        let opts = CheckOptions {
            terwilliger: Some(true),
            ..CheckOptions::default()
        };
        assert!(check_array(&arr("{5,2,1;1,2,5}"), &opts).passed());
        let r = check_array(&arr("{4,3,2,1;1,2,3,4}"), &opts);
        assert_eq!(r.first_failure().unwrap().rule, RuleName::Recognition);
        assert!(check_array(&arr("{4,3,2,1;1,2,3,4}"), &CheckOptions::default()).passed());
    }

    #[test]
    fn ratio_cap_verdicts() {
        let cap = RatioCap { kind: RatioKind::K2OverK, cap: q(1) };
        assert_eq!(cap.verdict(&arr("{4,3,2,1;1,2,3,4}")).status, Status::Fail);
        let cap = RatioCap { kind: RatioKind::B2OverC2, cap: q(1) };
        assert_eq!(cap.verdict(&arr("{4,3,2,1;1,2,3,4}")).status, Status::Pass);
        assert_eq!(cap.verdict(&arr("{4;1}")).status, Status::NotApplicable);
    }
}
