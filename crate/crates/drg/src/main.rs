use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use drg::driver::{self, RunOptions};
use drg::io::{read_graph, read_json};
use drg::json::{catalog_document, compare_spectra, CatalogView, SpectrumView, VerifyReport};
use drg::DrgError;
use drg_core::bounds::{check_array, geometric_sum, BoundContext, CheckOptions, RatioCap, RatioKind};
use drg_core::catalog;
use drg_core::enumerate::EnumerationConstraints;
use drg_core::graphcheck::{
    adjacency_spectrum, antipodal_check, distance_partition_quotient, format_edge_list,
    generators, terwilliger_scan, Graph,
};
use drg_core::report::Status;
use drg_core::spectral::{spectrum, Tolerances};
use drg_core::{FeasibilityReport, IntersectionArray, Rational};
use serde::Serialize;

const VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (",
    env!("DRG_BUILD_TARGET"),
    ", ",
    env!("DRG_BUILD_PROFILE"),
    ")"
);

#[derive(Parser)]
#[command(name = "drg", version = VERSION, about = "Feasibility checks and search for distance-regular graph intersection arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable rule on an array.
    Check(CheckArgs),
    /// Print eigenvalues, multiplicities and standard sequences.
    Spectrum(SpectrumArgs),
    /// Stream feasible arrays as JSON lines.
    Enumerate(EnumerateArgs),
    /// Count pipeline survivors per valency at a fixed diameter.
    Census(CensusArgs),
    /// Certify a graph file as distance-regular.
    Verify(VerifyArgs),
    /// Print the caps implied by C, t and alpha.
    Bounds(BoundsArgs),
    /// Write a named graph as an edge list.
    Generate(GenerateArgs),
    /// Named arrays.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args)]
struct CheckArgs {
    /// Array literal such as "{3,2;1,1}".
    array: String,
    #[arg(long)]
    json: bool,
    /// Pipeline constant; defaults to b2/c2.
    #[arg(long = "C")]
    c: Option<Rational>,
    #[arg(long)]
    ratio_cap: Option<Rational>,
    #[arg(long, value_enum, default_value = "k2-over-k")]
    ratio_kind: RatioArg,
    /// Assert whether the graph is a Terwilliger graph.
    #[arg(long)]
    terwilliger: Option<bool>,
    /// Assert whether the graph contains an induced quadrangle.
    #[arg(long)]
    quadrangle: Option<bool>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long = "T")]
    big_t: Option<u32>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum RatioArg {
    K2OverK,
    B2OverC2,
}

impl From<RatioArg> for RatioKind {
    fn from(r: RatioArg) -> Self {
        match r {
            RatioArg::K2OverK => RatioKind::K2OverK,
            RatioArg::B2OverC2 => RatioKind::B2OverC2,
        }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    array: String,
    /// Relative eigenvalue tolerance.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long)]
    sequences: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Job file mirroring the constraint flags; flags are then ignored.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    k_min: u32,
    #[arg(long, required_unless_present = "config")]
    k_max: Option<u32>,
    /// Diameter or inclusive range, e.g. "6" or "1..3".
    #[arg(short = 'D', long, required_unless_present = "config")]
    diameter: Option<String>,
    #[arg(long)]
    ratio_cap: Option<Rational>,
    #[arg(long, value_enum, default_value = "k2-over-k")]
    ratio_kind: RatioArg,
    /// Also filter by the hard finiteness caps with this constant.
    #[arg(long = "C")]
    c: Option<Rational>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Checkpoint file; defaults to a file under $DRG_CHECKPOINT_DIR.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    resume: bool,
    #[arg(long)]
    workers: Option<usize>,
    /// Stop after this many work units, leaving a checkpoint.
    #[arg(long, hide = true)]
    stop_after_units: Option<usize>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long = "C")]
    c: Rational,
    #[arg(short = 'D', long)]
    diameter: usize,
    #[arg(long)]
    k_max: u32,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file, or "-" for stdin.
    graph: PathBuf,
    #[arg(long)]
    expect_array: Option<String>,
    /// Also check every vertex's quotient and the dense spectrum.
    #[arg(long)]
    full: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long = "C")]
    c: Rational,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = 2)]
    alpha: u32,
    /// Diameter used for the vertex and multiplicity caps.
    #[arg(short = 'D', long, default_value_t = 6)]
    diameter: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// hypercube, johnson, kneser, petersen, icosahedron, cycle, complete,
    /// multipartite, or a catalog entry with a graph.
    name: String,
    params: Vec<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CatalogCommand {
    List {
        #[arg(long)]
        json: bool,
    },
    Get {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

/// Exit 2: the input was understood and failed a check.
struct DomainFailure;

type Outcome = Result<Result<(), DomainFailure>, DrgError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Check(a) => check(a),
        Command::Spectrum(a) => spectrum_cmd(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Census(a) => census(a),
        Command::Verify(a) => verify(a),
        Command::Bounds(a) => bounds(a),
        Command::Generate(a) => generate(a),
        Command::Catalog(c) => catalog_cmd(c),
    };
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(DomainFailure)) => ExitCode::from(2),
        Err(DrgError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                DrgError::Catalog(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn workers(n: Option<usize>) -> usize {
    n.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn parse_array(s: &str) -> Result<IntersectionArray, DrgError> {
    Ok(s.parse()?)
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serialises"));
}

fn verdict(pass: bool) -> Result<(), DomainFailure> {
    if pass {
        Ok(())
    } else {
        Err(DomainFailure)
    }
}

fn render_report(rep: &FeasibilityReport) -> String {
    let mut out = String::new();
    let overall = match rep.overall() {
        Status::Pass => "pass",
        _ => "FAIL",
    };
    let _ = writeln!(out, "{}: {overall}", rep.array);
    for v in &rep.verdicts {
        let status = match v.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        };
        let kind = if v.hard { "" } else { " (soft)" };
        let witnesses: Vec<String> = v.witnesses.iter().map(|w| format!("{}={}", w.name, w.value)).collect();
        let _ = write!(out, "  {:<18} {status}{kind}", v.rule.as_str());
        if !witnesses.is_empty() {
            let _ = write!(out, "  [{}]", witnesses.join(", "));
        }
        if let Some(note) = &v.note {
            let _ = write!(out, "  {note}");
        }
        out.push('\n');
    }
    if let Some(f) = rep.first_failure() {
        let _ = writeln!(out, "first failure: {}", f.rule);
    }
    out
}

fn check(a: CheckArgs) -> Outcome {
    let arr = parse_array(&a.array)?;
    let opts = CheckOptions {
        c: a.c,
        ratio_cap: a.ratio_cap.map(|cap| RatioCap {
            kind: a.ratio_kind.into(),
            cap,
        }),
        terwilliger: a.terwilliger,
        has_quadrangle: a.quadrangle,
        alpha: a.alpha,
        big_t: a.big_t,
        ..CheckOptions::default()
    };
    let rep = check_array(&arr, &opts);
    if a.json {
        print_json(&rep);
    } else {
        print!("{}", render_report(&rep));
    }
    Ok(verdict(rep.passed()))
}

fn spectrum_cmd(a: SpectrumArgs) -> Outcome {
    let arr = parse_array(&a.array)?;
    if !(a.tol > 0.0 && a.tol < 1e-3) {
        return Err(DrgError::Usage("--tol must lie in (0, 1e-3)".into()));
    }
    let tol = Tolerances {
        eigenvalue: a.tol,
        ..Tolerances::default()
    };
    let s = match spectrum(&arr, &tol) {
        Ok(s) => s,
        Err(e) => {
            println!("{arr}: {e}");
            return Ok(Err(DomainFailure));
        }
    };
    let view = SpectrumView::new(&arr, &s, &tol, a.sequences);
    if a.json {
        print_json(&view);
        return Ok(Ok(()));
    }
    println!("{arr}: v = {}", view.v);
    for (i, (theta, m)) in view.eigenvalues.iter().zip(&view.multiplicities).enumerate() {
        let shown = match view.integral[i] {
            Some(n) => n.to_string(),
            None => format!("{theta:.12}"),
        };
        println!("  theta_{i} = {shown:>18}  m = {m}");
    }
    if let Some(seqs) = &view.sequences {
        for (i, u) in seqs.iter().enumerate() {
            let cells: Vec<String> = u.iter().map(|x| format!("{x:.9}")).collect();
            println!("  u(theta_{i}) = ({})", cells.join(", "));
        }
    }
    Ok(Ok(()))
}

fn parse_range(s: &str) -> Result<(usize, usize), DrgError> {
    let bad = || DrgError::Usage(format!("bad diameter range {s:?}"));
    let (lo, hi) = match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| bad())?;
    let hi: usize = hi.parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn enumerate(a: EnumerateArgs) -> Outcome {
    let cons = match &a.config {
        Some(path) => read_json::<EnumerationConstraints>(path)?,
        None => {
            let (d_min, d_max) = parse_range(a.diameter.as_deref().expect("required"))?;
            let mut cons = EnumerationConstraints::new(a.k_min, a.k_max.expect("required"), d_min, d_max);
            if let Some(cap) = a.ratio_cap {
                cons = cons.with_ratio_cap(a.ratio_kind.into(), cap);
            }
            if let Some(c) = a.c {
                cons.theorem2_c = Some(c);
                cons.rules.theorem2 = true;
            }
            cons
        }
    };
    cons.validate()?;
    let workers = workers(a.workers);
    let stats = match &a.out {
        None => {
            if a.resume || a.checkpoint.is_some() {
                return Err(DrgError::Usage("checkpointing needs --out".into()));
            }
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            driver::run_to_writer(&cons, &mut lock, workers)?
        }
        Some(out) => {
            let opts = RunOptions {
                workers,
                checkpoint: driver::default_checkpoint(&cons, a.checkpoint.clone()),
                resume: a.resume,
                unit_limit: a.stop_after_units,
                ..RunOptions::default()
            };
            let summary = driver::run_to_file(&cons, out, &opts)?;
            if !summary.complete {
                eprintln!("stopped after {} of {} units", summary.units_done, summary.total_units);
            }
            summary.stats
        }
    };
    eprintln!("{}", serde_json::to_string(&stats).expect("stats serialise"));
    Ok(Ok(()))
}

fn census(a: CensusArgs) -> Outcome {
    let summary = driver::run_census(a.c, a.diameter, a.k_max, workers(a.workers))?;
    if a.json {
        print_json(&summary);
        return Ok(Ok(()));
    }
    let scope = if summary.in_scope { "caps on" } else { "out of scope, caps off" };
    println!("C = {}, D = {}, k <= {} ({scope})", summary.c, summary.diameter, summary.k_max);
    for (k, n) in &summary.per_valency {
        println!("  k = {k:>3}: {n}");
    }
    println!("visited {}, emitted {}", summary.stats.visited, summary.stats.emitted);
    for (rule, n) in &summary.stats.pruned {
        println!("  pruned by {rule}: {n}");
    }
    for arr in &summary.arrays {
        println!("{arr}");
    }
    Ok(Ok(()))
}

fn verify(a: VerifyArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    let expected = a.expect_array.as_deref().map(parse_array).transpose()?;
    let cert = driver::certify_parallel(&g, workers(a.workers))?;
    let mut rep = VerifyReport::new(g.order(), g.edge_count(), &cert);
    if let Some(exp) = expected {
        rep.matches_expected = Some(cert.array.as_ref() == Some(&exp));
        rep.expected_array = Some(exp);
    }
    if let Some(arr) = cert.array.clone() {
        rep.terwilliger = terwilliger_scan(&g).ok();
        rep.antipodal = antipodal_check(&g, &cert).ok();
        let sources: Vec<usize> = if a.full { (0..g.order()).collect() } else { vec![0] };
        let rows = |q: &drg_core::graphcheck::Quotient| {
            q.rows.iter().enumerate().all(|(i, &(c, a_, b))| {
                c == if i == 0 { 0 } else { arr.c(i) }
                    && b == if i == arr.diameter() { 0 } else { arr.b(i) }
                    && a_ as i64 == arr.a(i)
            })
        };
        let mut all = true;
        for x in sources {
            match distance_partition_quotient(&g, x, 1e-6) {
                Ok(q) => {
                    all &= rows(&q) && q.contained_in_spectrum;
                    if x == 0 {
                        rep.quotient = Some(q);
                    }
                }
                Err(_) => all = false,
            }
        }
        rep.quotients_match = Some(all);
        if a.full {
            let s = spectrum(&arr, &Tolerances::default());
            rep.spectrum = match s {
                Ok(s) => Some(compare_spectra(adjacency_spectrum(&g, 1e-6)?, &s, 1e-6)),
                Err(_) => None,
            };
        }
    }
    if a.json {
        print_json(&rep);
    } else {
        println!("{} vertices, {} edges", rep.vertices, rep.edges);
        match (&rep.array, &rep.witness) {
            (Some(arr), _) => println!("distance-regular: {arr}"),
            (None, Some(w)) => println!(
                "not distance-regular: vertices {} and {} at distance {}: {:?} expected {} found {}",
                w.x, w.y, w.distance, w.kind, w.expected, w.found
            ),
            (None, None) => println!("not distance-regular"),
        }
        if let Some(m) = rep.matches_expected {
            println!("matches expected array: {m}");
        }
        if let Some(t) = &rep.terwilliger {
            println!(
                "terwilliger: {}, quadrangle: {}, mu: {}",
                t.is_terwilliger,
                t.has_quadrangle,
                t.mu.map_or("varies".into(), |m| m.to_string())
            );
        }
        if let Some(ap) = &rep.antipodal {
            match ap.r {
                Some(r) if ap.is_antipodal => println!("antipodal: classes of size {r}"),
                _ => println!("antipodal: no"),
            }
        }
        if let Some(q) = rep.quotients_match {
            println!("quotient matrices match: {q}");
        }
        if let Some(s) = &rep.spectrum {
            println!("adjacency spectrum matches multiplicities: {}", s.matches);
        }
    }
    Ok(verdict(rep.passed()))
}

#[derive(Serialize)]
struct BoundsView {
    c: Rational,
    t: usize,
    alpha: u32,
    diameter: usize,
    big_t: u32,
    dichotomy_diameter_cap: Rational,
    dichotomy_valency_cap: Rational,
    quadrangle_diameter_cap: u32,
    geometric_sum: Rational,
    m1_cap: Rational,
    m1_cap_large_b2: Rational,
}

fn bounds(a: BoundsArgs) -> Outcome {
    let big_t = u32::try_from(a.c.floor() + 1).map_err(|_| DrgError::Usage("C too large".into()))?;
    let ctx = BoundContext::new(a.c, a.t, a.alpha, big_t).map_err(|e| DrgError::Usage(e.to_string()))?;
    let overflow = || DrgError::Usage("caps overflow".into());
    let (d_cap, k_cap) = ctx.dichotomy_caps().map_err(|_| overflow())?;
    let s = geometric_sum(a.c, a.diameter).ok_or_else(overflow)?;
    let m1 = s.checked_mul(&Rational::from(576u64)).ok_or_else(overflow)?;
    let c1 = a.c.checked_add(&Rational::ONE).ok_or_else(overflow)?;
    let m1_large = Rational::from(2u64)
        .checked_mul(&a.c)
        .and_then(|x| x.checked_mul(&c1))
        .and_then(|x| x.checked_mul(&c1))
        .and_then(|x| x.checked_mul(&s))
        .ok_or_else(overflow)?;
    let view = BoundsView {
        c: a.c,
        t: a.t,
        alpha: a.alpha,
        diameter: a.diameter,
        big_t,
        dichotomy_diameter_cap: d_cap,
        dichotomy_valency_cap: k_cap,
        quadrangle_diameter_cap: ctx.quadrangle_diameter_cap(),
        geometric_sum: s,
        m1_cap: m1,
        m1_cap_large_b2: m1_large,
    };
    if a.json {
        print_json(&view);
        return Ok(Ok(()));
    }
    println!("C = {}, t = {}, alpha = {}, D = {}", view.c, view.t, view.alpha, view.diameter);
    println!("dichotomy (b_t/c_t <= C): D <= {} or k <= {}", view.dichotomy_diameter_cap, view.dichotomy_valency_cap);
    println!("quadrangle, c2 >= 2, b2/c2 < alpha/2: D <= {}", view.quadrangle_diameter_cap);
    println!("S = 3 + C + ... + C^(D-2) = {}", view.geometric_sum);
    println!("vertices: v <= {} k2", view.geometric_sum);
    println!("multiplicity: m1 < {} (c2 = 1, or 2 b2 <= k)", view.m1_cap);
    println!("multiplicity: m1 < {} (c2 >= 2, 2 b2 > k)", view.m1_cap_large_b2);
    println!("Terwilliger threshold T = {}", view.big_t);
    Ok(Ok(()))
}

fn named_graph(name: &str, p: &[u32]) -> Result<Graph, DrgError> {
    let arity = |n: usize| {
        if p.len() == n {
            Ok(())
        } else {
            Err(DrgError::Usage(format!("{name} takes {n} parameter(s)")))
        }
    };
    let g = match name {
        "hypercube" => {
            arity(1)?;
            generators::hypercube(p[0])?
        }
        "johnson" => {
            arity(2)?;
            generators::johnson(p[0], p[1])?
        }
        "kneser" => {
            arity(2)?;
            generators::kneser(p[0], p[1])?
        }
        "petersen" => {
            arity(0)?;
            generators::petersen()
        }
        "icosahedron" => {
            arity(0)?;
            generators::icosahedron()
        }
        "cycle" => {
            arity(1)?;
            generators::cycle(p[0] as usize)?
        }
        "complete" => {
            arity(1)?;
            generators::complete(p[0] as usize)?
        }
        "multipartite" => {
            arity(2)?;
            generators::complete_multipartite(p[0] as usize, p[1] as usize)?
        }
        other => {
            arity(0)?;
            catalog::lookup(other)?
                .graph()
                .ok_or_else(|| DrgError::Usage(format!("catalog entry {other} has no graph")))?
        }
    };
    Ok(g)
}

fn generate(a: GenerateArgs) -> Outcome {
    let g = named_graph(&a.name, &a.params)?;
    let text = format_edge_list(&g);
    match &a.out {
        Some(path) => std::fs::write(path, text).map_err(drg_io(path))?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(drg_io(&PathBuf::from("<stdout>")))?,
    }
    Ok(Ok(()))
}

fn drg_io(path: &PathBuf) -> impl FnOnce(std::io::Error) -> DrgError + '_ {
    move |source| DrgError::Io {
        path: path.clone(),
        source,
    }
}

fn catalog_cmd(c: CatalogCommand) -> Outcome {
    match c {
        CatalogCommand::List { json } => {
            if json {
                print!("{}", catalog_document());
            } else {
                for e in catalog::list() {
                    println!("{:<16} {}", e.name, e.array);
                }
            }
        }
        CatalogCommand::Get { name, json } => {
            let e = catalog::lookup(&name)?;
            if json {
                print_json(&CatalogView::new(&e));
            } else {
                println!("{}: {}", e.name, e.array);
                println!("provenance: {:?}", e.provenance);
                if !e.notes.is_empty() {
                    println!("notes: {}", e.notes);
                }
            }
        }
    }
    Ok(Ok(()))
}
