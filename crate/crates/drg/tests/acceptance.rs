//! One line per acceptance criterion. Exits non-zero when any line fails.

use std::time::{Duration, Instant};

use drg::driver::{parallel_enumerate, run_to_writer};
use drg::json::ArrayRecord;
use drg_core::bounds::{check_array, geometric_sum, lemma9_diameter_cap, smallest_alpha};
use drg_core::catalog::{self, hadamard_family};
use drg_core::enumerate::{finiteness_census, EnumerationConstraints};
use drg_core::graphcheck::linalg::{group_eigenvalues, jacobi_eigenvalues};
use drg_core::graphcheck::{certify, generators, terwilliger_scan, Graph};
use drg_core::report::RuleName;
use drg_core::spectral::{
    spectrum, standard_sequence, theta1_lower_bound_check, SpectralError, Theta1Verdict,
};
use drg_core::{IntersectionArray, Rational, Status, Tolerances};

const MULT_ROUNDING: f64 = 1e-6;
const EIG_MATCH: f64 = 1e-6;
const EQUALITY: f64 = 1e-9;
const SEQUENCE: f64 = 1e-12;
const TRACE_REL: f64 = 1e-6;
const ORTHO_REL: f64 = 1e-6;

type Outcome = Result<String, String>;

fn arr(s: &str) -> IntersectionArray {
    s.parse().expect("literal")
}

fn rat(p: i128, q: i128) -> Rational {
    Rational::new(p, q).expect("nonzero")
}

fn fixture(name: &str) -> (Graph, IntersectionArray) {
    let e = catalog::lookup(name).expect("catalog entry");
    (e.graph().expect("fixture graph"), e.array)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let names = ["petersen", "icosahedron", "4-cube", "pentagon", "johnson-7-3", "conway-smith", "doro"];
    for name in names {
        let (g, want) = fixture(name);
        let got = certify(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(got.array.as_ref() == Some(&want), || format!("{name}: certified {:?}", got.array))?;
        let s = spectrum(&want, &Tolerances::default()).map_err(|e| format!("{name}: {e}"))?;
        let dense = group_eigenvalues(&jacobi_eigenvalues(&g.adjacency_matrix(), g.order()), EIG_MATCH);
        ensure(dense.len() == s.eigenvalues.len(), || format!("{name}: {} distinct eigenvalues", dense.len()))?;
        for (i, &(theta, m)) in dense.iter().enumerate() {
            let raw = s.raw_multiplicities[i];
            let rounded = raw.round();
            ensure((raw - rounded).abs() <= MULT_ROUNDING, || format!("{name}: m_{i} = {raw}"))?;
            ensure((theta - s.eigenvalues[i]).abs() <= EIG_MATCH && m as f64 == rounded, || {
                format!("{name}: theta_{i} dense ({theta}, {m}) vs ({}, {rounded})", s.eigenvalues[i])
            })?;
        }
    }
    let el = start.elapsed();
    ensure(el < Duration::from_secs(60), || format!("took {el:?}"))?;
    Ok(format!("{} fixtures certified, multiplicities exact, {:.2?}", names.len(), el))
}

fn criterion_2() -> Outcome {
    let two = Rational::from(2u64);
    for mu in [1u32, 2, 4, 8] {
        let f = hadamard_family(mu).map_err(|e| e.to_string())?;
        let want = rat(2 * mu as i128 - 1, mu as i128);
        let got = f.array.ratio_k2_over_k();
        ensure(got == Some(want) && want < two, || format!("mu = {mu}: ratio {got:?}"))?;
    }
    Ok("k2/k = (2mu-1)/mu < 2 for mu in {1,2,4,8}".into())
}

fn criterion_3(sweep: &[IntersectionArray]) -> Outcome {
    let tol = Tolerances::default();
    let q4 = arr("{4,3,2,1;1,2,3,4}");
    let c = theta1_lower_bound_check(&q4, 1, &tol).map_err(|e| e.to_string())?;
    ensure(
        matches!(c.verdict, Theta1Verdict::Equality { signature_holds: true })
            && (c.theta1 - c.mu_t).abs() < EQUALITY,
        || format!("4-cube: {c:?}"),
    )?;
    ensure(q4.c(4) == 4 && q4.b(3) == 1 && q4.a(1) == q4.a(3), || "4-cube signature".into())?;
    let u = standard_sequence(&q4, c.theta1);
    for (x, y) in u.u.iter().zip([1.0, 0.5, 0.0, -0.5, -1.0]) {
        ensure((x - y).abs() < SEQUENCE, || format!("4-cube sequence {:?}", u.u))?;
    }
    ensure(u.zero_then_decreasing(1, SEQUENCE), || "4-cube sequence shape".into())?;
    let pet = theta1_lower_bound_check(&arr("{3,2;1,1}"), 1, &tol);
    ensure(matches!(pet, Err(SpectralError::PreconditionViolated { .. })), || format!("petersen: {pet:?}"))?;
    let mut strict = 0;
    for a in sweep.iter().filter(|a| a.diameter() >= 4 && !a.is_antipodal()) {
        for t in 1..=(a.diameter() - 2) / 2 {
            let c = theta1_lower_bound_check(a, t, &tol).map_err(|e| format!("{a}: {e}"))?;
            ensure(c.verdict == Theta1Verdict::Strict, || format!("{a} t={t}: {c:?}"))?;
            strict += 1;
        }
    }
    Ok(format!("4-cube equality, petersen precondition, {strict} strict non-antipodal checks"))
}

/// `D <= 8 C^2 t` or `k <= 2C` with `C = max(b_t / c_t, 1/2)`, the least
/// constant the dichotomy admits, in exact arithmetic.
fn dichotomy_holds(a: &IntersectionArray, t: usize) -> bool {
    let c = rat(a.b(t) as i128, a.c(t) as i128).max(rat(1, 2));
    let d = Rational::from(a.diameter() as u64);
    let k = Rational::from(a.valency() as u64);
    let d_cap = c.checked_mul(&c).and_then(|x| x.checked_mul(&Rational::from(8 * t as u64)));
    let k_cap = c.checked_add(&c);
    d_cap.is_some_and(|cap| d <= cap) || k_cap.is_some_and(|cap| k <= cap)
}

fn criterion_4(sweep: &[IntersectionArray], elapsed: Duration) -> Outcome {
    let mut checks = 0;
    let mut bad = Vec::new();
    for a in sweep {
        for t in 1..a.diameter() {
            checks += 1;
            if !dichotomy_holds(a, t) {
                bad.push(format!("{a} t={t}"));
            }
        }
        let rep = check_array(a, &Default::default());
        if rep.verdicts_for(RuleName::Dichotomy).any(|v| v.status == Status::Fail) {
            bad.push(format!("{a}: checker disagrees"));
        }
    }
    ensure(bad.is_empty(), || format!("counterexamples: {}", bad.join("; ")))?;
    Ok(format!("{} arrays, {checks} (array, t) pairs, 0 counterexamples, sweep {elapsed:.2?}", sweep.len()))
}

fn criterion_5() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = catalog::list()
        .into_iter()
        .filter_map(|e| e.graph().map(|g| (e.name.to_string(), g)))
        .collect();
    for n in 3..=7 {
        graphs.push((format!("hypercube-{n}"), generators::hypercube(n).expect("cube")));
    }
    graphs.push(("johnson-8-3".into(), generators::johnson(8, 3).expect("johnson")));
    graphs.push(("johnson-8-4".into(), generators::johnson(8, 4).expect("johnson")));
    let mut applied = Vec::new();
    for (name, g) in graphs {
        let a = certify(&g).map_err(|e| e.to_string())?.array.ok_or(format!("{name} not distance-regular"))?;
        if a.diameter() < 3 || a.c(2) < 2 {
            continue;
        }
        let scan = terwilliger_scan(&g).map_err(|e| e.to_string())?;
        if !scan.has_quadrangle {
            continue;
        }
        let alpha = smallest_alpha(&a).expect("D >= 2");
        let below = |x: u32| rat(a.b(2) as i128, a.c(2) as i128) < rat(x as i128, 2);
        ensure(below(alpha) && (alpha == 2 || !below(alpha - 1)), || format!("{name}: alpha {alpha}"))?;
        ensure(a.diameter() as u32 <= alpha + 1, || format!("{name}: D = {} > {}", a.diameter(), alpha + 1))?;
        let (v, cap) = lemma9_diameter_cap(&a, alpha, true);
        ensure(v.status == Status::Pass && cap == Some(alpha + 1), || format!("{name}: checker {v:?}"))?;
        applied.push(format!("{name} (D={}, cap {})", a.diameter(), alpha + 1));
    }
    ensure(applied.iter().any(|s| s.starts_with("4-cube (D=4, cap 4)")), || "4-cube missing".into())?;
    Ok(applied.join(", "))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let cons = EnumerationConstraints::new(3, 4, 1, 3);
    let opts = cons.check_options();
    let mut naive: Vec<(Vec<u32>, String)> = Vec::new();
    for k in 3..=4u32 {
        for d in 1..=3usize {
            let free = 2 * (d - 1);
            for code in 0..(k as u64).pow(free as u32) {
                let mut digits = Vec::with_capacity(free);
                let mut x = code;
                for _ in 0..free {
                    digits.push((x % k as u64) as u32 + 1);
                    x /= k as u64;
                }
                let mut b = vec![k];
                b.extend_from_slice(&digits[..d - 1]);
                let mut c = vec![1];
                c.extend_from_slice(&digits[d - 1..]);
                let a = IntersectionArray::new(b, c).map_err(|e| e.to_string())?;
                let report = check_array(&a, &opts);
                if cons.rules.admits(&report) {
                    let e = drg_core::enumerate::Emitted { array: a.clone(), report };
                    naive.push((a.search_key(), ArrayRecord::line(&e)));
                }
            }
        }
    }
    naive.sort();
    let naive: String = naive.into_iter().map(|(_, l)| l).collect();
    let mut one = Vec::new();
    run_to_writer(&cons, &mut one, 1).map_err(|e| e.to_string())?;
    let mut four = Vec::new();
    run_to_writer(&cons, &mut four, 4).map_err(|e| e.to_string())?;
    ensure(one == naive.as_bytes(), || "pruned output differs from naive".into())?;
    ensure(one == four, || "4 workers differ from 1 worker".into())?;
    let el = start.elapsed();
    ensure(el < Duration::from_secs(30), || format!("took {el:?}"))?;
    Ok(format!("{} lines, {} bytes identical across naive, 1 and 4 workers, {el:.2?}", naive.lines().count(), one.len()))
}

/// Checks the vertex and multiplicity caps on every array of one census.
fn census_caps(c: Rational) -> Result<(usize, usize), String> {
    let summary = finiteness_census(c, 6, 10).map_err(|e| e.to_string())?;
    ensure(summary.in_scope, || "pipeline caps were off".into())?;
    let s = geometric_sum(c, 6).expect("small");
    let m1_cap = s.checked_mul(&Rational::from(576u64)).expect("small");
    let mut m1_checked = 0;
    for a in &summary.arrays {
        let p = a.derive().map_err(|e| format!("{a}: {e}"))?;
        let k2 = Rational::from(p.k2().expect("D >= 2"));
        ensure(Rational::from(p.v) <= s.checked_mul(&k2).expect("small"), || format!("{a}: v = {}", p.v))?;
        let rep = check_array(a, &Default::default());
        if rep.verdicts_for(RuleName::M1Cap).any(|v| v.status != Status::NotApplicable) {
            let m1 = spectrum(a, &Tolerances::default()).map_err(|e| e.to_string())?.multiplicities[1];
            let k = a.valency() as u64;
            ensure(k <= (m1 + 2) * (m1 - 1) / 2 && Rational::from(m1) <= m1_cap, || format!("{a}: m1 = {m1}"))?;
            m1_checked += 1;
        }
    }
    Ok((summary.arrays.len(), m1_checked))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let (n, m) = census_caps(Rational::ONE)?;
    // C = 1 leaves nothing at k <= 10; larger C exercises the same checks on a non-empty list
    let (n2, m2) = census_caps(Rational::from(2u64))?;
    let (n3, m3) = census_caps(Rational::from(3u64))?;
    Ok(format!(
        "C=1: {n} arrays, m1 cap applied to {m}; C=2: {n2} arrays ({m2}); C=3: {n3} arrays ({m3}); all within v <= S k2, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_8() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = catalog::list()
        .into_iter()
        .filter_map(|e| e.graph().map(|g| (e.name.to_string(), g)))
        .collect();
    graphs.push(("johnson-8-3".into(), generators::johnson(8, 3).expect("johnson")));
    graphs.push(("multipartite-3x3".into(), generators::complete_multipartite(3, 3).expect("k333")));
    let mut found = Vec::new();
    for (name, g) in &graphs {
        let a = certify(g).map_err(|e| e.to_string())?.array.ok_or(format!("{name}"))?;
        if a.diameter() < 2 || a.c(2) < 2 {
            continue;
        }
        if !terwilliger_scan(g).map_err(|e| e.to_string())?.is_terwilliger {
            continue;
        }
        let theta1 = spectrum(&a, &Tolerances::default()).map_err(|e| e.to_string())?.eigenvalues[1];
        if theta1 > a.b(1) as f64 / 2.0 - 1.0 {
            found.push(a);
        }
    }
    found.sort();
    let mut want = catalog::terwilliger_exceptions().to_vec();
    want.sort();
    let expected = ["icosahedron", "conway-smith", "doro"].map(|n| catalog::lookup(n).expect("entry").array);
    ensure(want.iter().all(|a| expected.contains(a)), || "exception list".into())?;
    ensure(found == want, || format!("found {found:?}"))?;
    Ok(format!("{} graphs scanned, exactly icosahedron, conway-smith, doro", graphs.len()))
}

fn criterion_9(sweep: &[IntersectionArray]) -> Outcome {
    for a in sweep {
        let p = a.derive().map_err(|e| format!("{a}: {e}"))?;
        let s = spectrum(a, &Tolerances::default()).map_err(|e| format!("{a}: {e}"))?;
        let v = p.v as f64;
        ensure(s.multiplicities.iter().sum::<u64>() == p.v, || format!("{a}: sum m_i"))?;
        let trace: f64 = s.eigenvalues.iter().zip(&s.multiplicities).map(|(t, &m)| t * m as f64).sum();
        ensure(trace.abs() < TRACE_REL * v * a.valency() as f64, || format!("{a}: trace {trace}"))?;
        for i in 0..s.eigenvalues.len() {
            let ui = standard_sequence(a, s.eigenvalues[i]).u;
            for j in i + 1..s.eigenvalues.len() {
                let uj = standard_sequence(a, s.eigenvalues[j]).u;
                let dot: f64 = (0..ui.len()).map(|l| p.k_seq[l] as f64 * ui[l] * uj[l]).sum();
                ensure(dot.abs() < ORTHO_REL * v, || format!("{a}: <u_{i}, u_{j}> = {dot}"))?;
            }
        }
        for i in 1..a.diameter() {
            let bound = (a.a(i) + a.c(i) as i64) as f64;
            ensure(s.mu[i] > bound, || format!("{a}: mu_{i} = {} <= {bound}", s.mu[i]))?;
        }
    }
    Ok(format!("{} arrays: sum m = v, trace 0, orthogonality, mu_i > a_i + c_i", sweep.len()))
}

fn main() {
    let sweep_start = Instant::now();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let sweep: Vec<IntersectionArray> = parallel_enumerate(&EnumerationConstraints::new(3, 8, 1, 10), workers)
        .expect("sweep")
        .emitted
        .into_iter()
        .map(|e| e.array)
        .collect();
    let sweep_time = sweep_start.elapsed();

    let results: Vec<(&str, Outcome)> = vec![
        ("catalog round-trip", criterion_1()),
        ("hadamard ratio", criterion_2()),
        ("theta1 lower bound equality", criterion_3(&sweep)),
        ("dichotomy sweep k<=8 D<=10, C = max(b_t/c_t, 1/2)", criterion_4(&sweep, sweep_time)),
        ("quadrangle diameter cap", criterion_5()),
        ("oracle equivalence", criterion_6()),
        ("finiteness census C=1 D=6 k<=10", criterion_7()),
        ("terwilliger recognition", criterion_8()),
        ("spectral identities", criterion_9(&sweep)),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(msg) => println!("criterion {} [{name}]: PASS: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
