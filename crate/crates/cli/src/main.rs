use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde::Serialize;

use coxgrowth::catalog::{self, Source};
use coxgrowth::coxeter::{enumerate_finite_subsets, parse_system};
use coxgrowth::growth::{
    euler_and_volume, rebase_numerator, recursion_coefficients, steinberg_series, taylor_coefficients, GrowthSeries,
};
use coxgrowth::oracle::{oracle_compare_with, BfsLimits};
use coxgrowth::poly::{IsolatedRoot, RationalFunction};
use coxgrowth::right_angled::{
    f_vector_estimate, ra3_series, ra4_poles, ra4_q_at_minus_one, ra4_series, ra4_volume, ra_coefficients, FVector,
};
use coxgrowth::spectral::{
    check_conjecture, classify_rate, fixture_denominator, help_profile, pole_report, Family, PoleReport,
};
use coxgrowth::{classify_finite, CoxeterSystem, Error, IntPolynomial};

#[derive(Parser)]
#[command(name = "coxgrowth", version, about = "Exact growth series of Coxeter groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Coxeter system in the line-oriented text format.
    file: Option<PathBuf>,
    /// Built-in entry; see `coxgrowth catalog`.
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
    /// Right-angled polytope given by its f-vector, e.g. 600,1200,720,120.
    #[arg(long, conflicts_with_all = ["file", "catalog"])]
    fvector: Option<FVector>,
    /// Dimension of the hyperbolic space the group acts on.
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in catalog.
    Catalog,
    /// System summary and finite-subgroup statistics.
    Info(Input),
    /// Reduced, virgin, extended and complete forms.
    Growth(Input),
    /// Denominator coefficients by the block recursion, checked against exact division.
    Recursion {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Taylor coefficients a_0..a_N.
    Taylor {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10)]
        upto: usize,
    },
    /// Real and complex poles with the growth rate.
    Poles(Input),
    /// Pole-layout conjecture for a group acting on H^dim.
    Conjecture(Input),
    /// Salem or Perron classification of the growth rate.
    Classify(Input),
    /// Euler characteristic and covolume.
    Euler(Input),
    /// Closed forms for right-angled groups.
    Rightangled {
        #[command(flatten)]
        input: Input,
        /// Number of facets of a right-angled 3-polytope.
        #[arg(long, conflicts_with_all = ["file", "catalog", "fvector"])]
        facets: Option<u64>,
    },
    /// Help-function decomposition of a Lanner, Esselmann or Kaplinskaya group.
    Helpfn {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        family: Family,
    },
    /// Word counts by breadth-first search against the Taylor coefficients.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        upto: usize,
        /// Largest word length the search may reach.
        #[arg(long, default_value_t = BfsLimits::default().max_length)]
        max_length: usize,
    },
    /// Rewrite P/Q over a larger block product.
    Rebase {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<u32>,
    },
}

enum Failure {
    Input(String),
    Integrity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) | Error::InexactDivision | Error::DivisionByZero => Failure::Integrity(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

enum Loaded {
    System { system: CoxeterSystem, dim: Option<usize> },
    FVector(FVector),
    Denominator(IntPolynomial),
}

impl Input {
    fn load(&self) -> Result<Loaded, Failure> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            let system = parse_system(&text)?;
            return Ok(Loaded::System { system, dim: self.dim });
        }
        if let Some(key) = &self.catalog {
            let entry = catalog::lookup(key)?;
            let dim = self.dim.or(entry.dimension);
            return Ok(match entry.source {
                Source::System(system) => Loaded::System { system, dim },
                Source::FVector(fv) => Loaded::FVector(fv),
                Source::Denominator(q) => Loaded::Denominator(q),
            });
        }
        if let Some(fv) = &self.fvector {
            if let Some(d) = self.dim {
                if d != fv.dim() {
                    return Err(Failure::Input(format!(
                        "--dim {d} but the f-vector has {} entries",
                        fv.dim()
                    )));
                }
            }
            return Ok(Loaded::FVector(fv.clone()));
        }
        Err(Failure::Input("give a system FILE, --catalog KEY or --fvector".into()))
    }

    fn dim(&self, loaded: &Loaded) -> Option<usize> {
        match loaded {
            Loaded::System { dim, .. } => *dim,
            Loaded::FVector(fv) => Some(fv.dim()),
            Loaded::Denominator(_) => self.dim,
        }
    }

    fn require_dim(&self, loaded: &Loaded) -> Result<usize, Failure> {
        self.dim(loaded)
            .ok_or_else(|| Failure::Input("this command needs --dim N".into()))
    }
}

fn system_of(loaded: &Loaded) -> Result<&CoxeterSystem, Failure> {
    match loaded {
        Loaded::System { system, .. } => Ok(system),
        _ => Err(Failure::Input(
            "this command needs a Coxeter system, not an f-vector or fixture".into(),
        )),
    }
}

fn series_of(loaded: &Loaded, dim: Option<usize>) -> Result<GrowthSeries, Failure> {
    let s = match loaded {
        Loaded::System { system, .. } => steinberg_series(system)?,
        Loaded::FVector(fv) if fv.dim() == 4 => ra4_series(fv)?,
        Loaded::FVector(fv) => {
            return Err(Failure::Input(format!(
                "growth series from an f-vector needs dimension 4, got {}",
                fv.dim()
            )))
        }
        Loaded::Denominator(_) => {
            return Err(Failure::Input("a denominator fixture has no growth series".into()));
        }
    };
    Ok(match dim {
        Some(n) => s.with_dimension(n),
        None => s,
    })
}

fn poles_of(loaded: &Loaded) -> Result<PoleReport, Failure> {
    match loaded {
        Loaded::Denominator(q) => Ok(fixture_denominator(q)?),
        _ => Ok(pole_report(&series_of(loaded, None)?)?),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Outcome {
    if json {
        let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Integrity(e.to_string()))?;
        println!("{s}");
    } else {
        print!("{}", text());
    }
    Ok(())
}

fn ratfunc(f: &RationalFunction) -> String {
    if f.den().is_one() {
        format!("{}", f.num())
    } else {
        format!("({}) / ({})", f.num(), f.den())
    }
}

fn interval(iv: &IsolatedRoot) -> String {
    let (lo, hi) = (iv.lo.to_f64().unwrap_or(f64::NAN), iv.hi.to_f64().unwrap_or(f64::NAN));
    let m = if iv.multiplicity > 1 {
        format!(" (multiplicity {})", iv.multiplicity)
    } else {
        String::new()
    };
    if iv.lo == iv.hi {
        format!("{lo}{m}")
    } else {
        format!("[{lo:.12}, {hi:.12}]{m}")
    }
}

fn blocks(b: &[u32]) -> String {
    let parts: Vec<String> = b.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Serialize)]
struct CatalogRow {
    key: String,
    kind: &'static str,
    dimension: Option<usize>,
    verified: bool,
    provenance: String,
}

fn cmd_catalog(json: bool) -> Outcome {
    let rows: Vec<CatalogRow> = catalog::catalog()
        .into_iter()
        .map(|e| CatalogRow {
            kind: match e.source {
                Source::System(_) => "system",
                Source::FVector(_) => "fvector",
                Source::Denominator(_) => "denominator",
            },
            key: e.key,
            dimension: e.dimension,
            verified: e.verified,
            provenance: e.provenance,
        })
        .collect();
    emit(json, &rows, || {
        let mut s = String::new();
        for r in &rows {
            let dim = r.dimension.map_or("-".into(), |d| d.to_string());
            let flag = if r.verified { "" } else { "  [unverified]" };
            let _ = writeln!(s, "{:<24} {:<12} n={dim:<2} {}{flag}", r.key, r.kind, r.provenance);
        }
        s.push_str("prism-P-Q-R              system       n=3  generated on demand\n");
        s
    })
}

#[derive(Serialize)]
struct MaximalRow {
    /// 1-based.
    subset: Vec<usize>,
    types: String,
    order: String,
}

#[derive(Serialize)]
struct SystemInfo {
    rank: usize,
    /// 1-based `(i, j, m)` for every `m != 2`.
    edges: Vec<(usize, usize, String)>,
    right_angled: bool,
    finite: bool,
    classification: String,
    finite_subsets: usize,
    size_counts: Vec<usize>,
    maximal: Vec<MaximalRow>,
}

#[derive(Serialize)]
struct FVectorInfo {
    fvector: FVector,
    dimension: usize,
    euler_holds: bool,
    simple: bool,
}

fn cmd_info(json: bool, input: &Input) -> Outcome {
    match input.load()? {
        Loaded::System { system, .. } => {
            let lattice = enumerate_finite_subsets(&system)?;
            let c = classify_finite(&system);
            let info = SystemInfo {
                rank: system.rank(),
                edges: system
                    .off_diagonal()
                    .filter(|(_, _, m)| m.finite() != Some(2))
                    .map(|(i, j, m)| (i + 1, j + 1, m.to_string()))
                    .collect(),
                right_angled: system.is_right_angled(),
                finite: c.is_finite(),
                classification: c.describe(),
                finite_subsets: lattice.entries.len(),
                size_counts: lattice.size_counts(),
                maximal: lattice
                    .maximal()
                    .map(|e| MaximalRow {
                        subset: e.subset.iter().map(|i| i + 1).collect(),
                        types: e.describe(),
                        order: e.order().to_string(),
                    })
                    .collect(),
            };
            emit(json, &info, || {
                let mut s = format!("rank {}\n", info.rank);
                for (i, j, m) in &info.edges {
                    let _ = writeln!(s, "  m({i},{j}) = {m}");
                }
                let _ = writeln!(s, "classification: {}", info.classification);
                let _ = writeln!(s, "right-angled: {}", info.right_angled);
                let _ = writeln!(
                    s,
                    "finite subsets: {} by size {:?}",
                    info.finite_subsets, info.size_counts
                );
                let _ = writeln!(s, "maximal finite subsets: {}", info.maximal.len());
                for m in &info.maximal {
                    let _ = writeln!(s, "  {:?} {} (order {})", m.subset, m.types, m.order);
                }
                s
            })
        }
        Loaded::FVector(fv) => {
            let info = FVectorInfo {
                dimension: fv.dim(),
                euler_holds: fv.euler_holds(),
                simple: fv.is_simple(),
                fvector: fv,
            };
            emit(json, &info, || {
                format!(
                    "f-vector {} in dimension {}\nEuler relation: {}\nsimple: {}\n",
                    info.fvector, info.dimension, info.euler_holds, info.simple
                )
            })
        }
        Loaded::Denominator(q) => emit(json, &q, || format!("denominator fixture: {q}\n")),
    }
}

fn cmd_growth(json: bool, input: &Input) -> Outcome {
    let loaded = input.load()?;
    let s = series_of(&loaded, input.dim(&loaded))?;
    emit(json, &s, || {
        let mut t = format!("reduced: {}\n", ratfunc(&s.reduced));
        let _ = writeln!(t, "Virg: {} = {}", s.virgin, s.virgin_factorization.describe());
        if let Some(e) = &s.extended {
            let _ = writeln!(t, "Ext: {}  R = {}", blocks(&e.blocks), e.r);
        }
        if let Some(c) = &s.complete {
            let _ = writeln!(t, "blocks: {}", blocks(&c.blocks));
            let _ = writeln!(t, "P: {}", c.numerator);
            let _ = writeln!(t, "Q: {}", c.denominator);
            let _ = writeln!(t, "deg P = deg Q: {}", c.degrees_match);
        }
        for n in &s.notes {
            let _ = writeln!(t, "note: {n}");
        }
        t
    })
}

fn cmd_recursion(json: bool, input: &Input, upto: Option<usize>) -> Outcome {
    let loaded = input.load()?;
    let s = series_of(&loaded, input.dim(&loaded))?;
    let d = s
        .complete
        .as_ref()
        .map(|c| c.denominator.deg())
        .ok_or_else(|| Failure::Input("no complete form: recursion needs blocks".into()))?;
    let upto = upto.unwrap_or(d);
    let rep = recursion_coefficients(&s, upto)?;
    emit(json, &rep, || {
        let mut t = format!("parity of n: {}\n", rep.parity);
        for (k, b) in rep.coefficients.iter().enumerate() {
            let _ = writeln!(t, "b_{k} = {b}");
        }
        let _ = writeln!(t, "agrees with exact division: {}", rep.agrees_with_direct);
        let _ = writeln!(t, "closed forms for b_1..b_3 agree: {}", rep.closed_form_agrees);
        t
    })?;
    if !rep.closed_form_agrees {
        eprintln!("warning: closed forms for b_1..b_3 give {:?}", rep.closed_form);
    }
    if !rep.agrees_with_direct {
        return Err(Failure::Integrity(
            "recursion disagrees with the complete-form denominator".into(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct TaylorReport {
    coefficients: Vec<String>,
}

fn cmd_taylor(json: bool, input: &Input, upto: usize) -> Outcome {
    let loaded = input.load()?;
    let s = series_of(&loaded, None)?;
    let a = taylor_coefficients(&s, upto)?;
    let rep = TaylorReport {
        coefficients: a.iter().map(ToString::to_string).collect(),
    };
    emit(json, &rep, || {
        let mut t = String::new();
        for (k, c) in rep.coefficients.iter().enumerate() {
            let _ = writeln!(t, "{k:>4} {c}");
        }
        t
    })
}

fn pole_text(r: &PoleReport) -> String {
    let mut t = format!("denominator: {}\n", r.reduced_den);
    let _ = writeln!(t, "factorization: {}", r.cyclotomic_part.describe());
    let _ = writeln!(t, "real poles:");
    for iv in &r.real_poles.intervals {
        let _ = writeln!(t, "  {}", interval(iv));
    }
    let _ = writeln!(t, "poles in (0,1): {}", r.unit_interval.distinct());
    let _ = writeln!(t, "order of the pole at 1: {}", r.pole_at_one);
    let _ = writeln!(t, "all poles simple (gcd(q, q') = 1): {}", r.simple);
    let _ = writeln!(t, "inversion symmetric: {}", r.inversion_symmetric());
    let _ = writeln!(
        t,
        "non-real poles: {} (certified: {})",
        r.complex_poles.len(),
        r.complex_certified
    );
    if let Some(g) = &r.growth_rate {
        let _ = writeln!(t, "growth rate: {:.12}", g.tau);
    }
    let _ = writeln!(t, "classification: {:?}", r.classification);
    if let Some(a) = &r.annulus {
        let _ = writeln!(
            t,
            "annulus: [x_{0}, 1/x_{0}] = [{1:.12}, {2:.12}]",
            a.star, a.inner, a.outer
        );
    }
    t
}

fn cmd_poles(json: bool, input: &Input) -> Outcome {
    let r = poles_of(&input.load()?)?;
    emit(json, &r, || pole_text(&r))
}

fn cmd_conjecture(json: bool, input: &Input) -> Outcome {
    let loaded = input.load()?;
    let n = input.require_dim(&loaded)?;
    let r = poles_of(&loaded)?;
    let v = check_conjecture(&r, n);
    emit(json, &v, || {
        let mut t = String::new();
        for c in &v.clauses {
            let _ = writeln!(
                t,
                "{:<5} {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        let _ = writeln!(t, "verdict for n = {n}: {}", if v.pass { "holds" } else { "fails" });
        t
    })
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    classification: coxgrowth::spectral::RateClass,
    growth_rate: Option<f64>,
    evidence: &'a coxgrowth::spectral::RateEvidence,
}

fn cmd_classify(json: bool, input: &Input) -> Outcome {
    let r = poles_of(&input.load()?)?;
    let (class, evidence) = classify_rate(&r);
    let rep = ClassifyReport {
        classification: class,
        growth_rate: r.growth_rate.as_ref().map(|g| g.tau),
        evidence,
    };
    emit(json, &rep, || {
        let mut t = format!("{:?}\n", rep.classification);
        if let Some(tau) = rep.growth_rate {
            let _ = writeln!(t, "growth rate: {tau:.12}");
        }
        let _ = writeln!(t, "{}", rep.evidence.note);
        t
    })
}

fn cmd_euler(json: bool, input: &Input) -> Outcome {
    let loaded = input.load()?;
    let n = input.require_dim(&loaded)?;
    let s = series_of(&loaded, Some(n))?;
    let r = euler_and_volume(&s, n)?;
    emit(json, &r, || {
        let mut t = format!("chi = {}\n", r.chi);
        if let Some(f) = &r.f_at_one {
            let _ = writeln!(t, "f(1) = {f}");
        }
        if r.pole_at_one > 0 {
            let _ = writeln!(t, "pole of order {} at 1", r.pole_at_one);
        }
        if let Some(v) = &r.volume {
            let _ = writeln!(t, "volume = {v}");
        }
        t
    })
}

#[derive(Serialize)]
struct Ra4Report {
    series: GrowthSeries,
    volume: coxgrowth::growth::Volume,
    poles: coxgrowth::right_angled::RaQuarticPoles,
    q_at_minus_one: String,
}

#[derive(Serialize)]
struct RaSystemReport {
    coefficients: coxgrowth::right_angled::RaCoefficients,
    estimate: coxgrowth::right_angled::FVectorEstimate,
}

fn cmd_rightangled(json: bool, input: &Input, facets: Option<u64>) -> Outcome {
    if let Some(k) = facets {
        if input.dim.is_some_and(|d| d != 3) {
            return Err(Failure::Input("--facets describes a 3-polytope; use --dim 3".into()));
        }
        let r = ra3_series(k)?;
        return emit(json, &r, || {
            let d = &r.discrepancy;
            format!(
                "reduced: {}\ngrowth rate: {} in [{:.12}, {:.12}]\nparameter: facet reading {}, vertex reading {} (a_1 = {} vs {})\n",
                ratfunc(&r.series.reduced),
                r.tau_surd,
                r.tau_lo.to_f64().unwrap_or(f64::NAN),
                r.tau_hi.to_f64().unwrap_or(f64::NAN),
                d.facet_reading,
                d.vertex_reading,
                d.facet_reading_a1,
                d.vertex_reading_a1,
            )
        });
    }
    match input.load()? {
        Loaded::FVector(fv) if fv.dim() == 4 => {
            let r = Ra4Report {
                series: ra4_series(&fv)?,
                volume: ra4_volume(&fv)?,
                poles: ra4_poles(&fv)?,
                q_at_minus_one: ra4_q_at_minus_one(&fv)?.to_string(),
            };
            emit(json, &r, || {
                let mut t = format!("reduced: {}\n", ratfunc(&r.series.reduced));
                let _ = writeln!(t, "volume = {}", r.volume);
                for p in &r.poles.poles {
                    let _ = writeln!(t, "pole {:.12} = {}", p.value, p.surd);
                }
                let _ = writeln!(
                    t,
                    "simple: {}, inversive: {}, surds agree: {}",
                    r.poles.simple, r.poles.inversive, r.poles.surds_agree
                );
                let _ = writeln!(t, "Q(-1) = {}", r.q_at_minus_one);
                t
            })
        }
        Loaded::FVector(fv) => Err(Failure::Input(format!(
            "closed forms from an f-vector exist for dimension 4; got {} (use --facets for n = 3)",
            fv.dim()
        ))),
        loaded @ Loaded::System { .. } => {
            let n = input.require_dim(&loaded)?;
            let system = system_of(&loaded)?;
            let r = RaSystemReport {
                coefficients: ra_coefficients(system, n)?,
                estimate: f_vector_estimate(system, n)?,
            };
            emit(json, &r, || {
                let c = &r.coefficients;
                let mut t = format!("b_1 = {}\n", c.b1);
                if let Some(b2) = &c.b2 {
                    let _ = writeln!(t, "b_2 = {b2}");
                }
                let _ = writeln!(
                    t,
                    "f-vector {} (Euler relation: {})",
                    r.estimate.fvector, r.estimate.euler_holds
                );
                t
            })
        }
        Loaded::Denominator(_) => Err(Failure::Input(
            "a denominator fixture is not a right-angled group".into(),
        )),
    }
}

fn cmd_helpfn(json: bool, input: &Input, family: Family) -> Outcome {
    let loaded = input.load()?;
    let p = help_profile(system_of(&loaded)?, family)?;
    emit(json, &p, || {
        let mut t = format!("family {:?}, Lanner subdiagrams {:?}\n", p.family, p.lanner);
        for h in &p.functions {
            let _ = writeln!(t, "h_{:?} ({}): -x ({}) / ({})", h.nodes, h.types, h.n, h.d);
            let _ = writeln!(t, "    algebraic facts: {}", h.algebraic_facts_hold());
        }
        let _ = writeln!(t, "decomposition verified: {}", p.decomposition_verified);
        if let (Some(x), Some(v)) = (p.smallest_pole, p.value_at_smallest_pole) {
            let _ = writeln!(t, "H({x:.12}) = {v:.12}");
        }
        t
    })?;
    if !p.decomposition_verified {
        return Err(Failure::Integrity(format!(
            "decomposition residual {}",
            ratfunc(&p.residual)
        )));
    }
    Ok(())
}

fn cmd_oracle(json: bool, input: &Input, upto: usize, max_length: usize) -> Outcome {
    let loaded = input.load()?;
    let limits = BfsLimits {
        max_length,
        ..BfsLimits::default()
    };
    let v = oracle_compare_with(system_of(&loaded)?, upto, limits)?;
    emit(json, &v, || {
        let mut t = String::from("   k          bfs       series\n");
        for r in &v.rows {
            let _ = writeln!(
                t,
                "{:>4} {:>12} {:>12}{}",
                r.k,
                r.bfs,
                r.series,
                if r.agree { "" } else { "  MISMATCH" }
            );
        }
        if let Some(c) = &v.bfs.cutoff {
            let _ = writeln!(t, "cutoff: {c}");
        }
        if v.bfs.exhausted {
            let _ = writeln!(t, "group exhausted: {} elements", v.bfs.total());
        }
        t
    })?;
    if let Some(k) = v.mismatch {
        return Err(Failure::Integrity(format!(
            "word count differs from the series at length {k}"
        )));
    }
    if let Some(c) = v.bfs.cutoff {
        return Err(Failure::Input(c));
    }
    Ok(())
}

fn cmd_rebase(json: bool, input: &Input, target: &[u32]) -> Outcome {
    let loaded = input.load()?;
    let s = series_of(&loaded, None)?;
    let r = rebase_numerator(&s, target)?;
    emit(json, &r, || {
        format!(
            "R = {} = {}\nS = {}\nmultiplier = {}\n",
            blocks(target),
            r.numerator,
            r.denominator,
            r.multiplier
        )
    })
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Catalog => cmd_catalog(json),
        Command::Info(i) => cmd_info(json, &i),
        Command::Growth(i) => cmd_growth(json, &i),
        Command::Recursion { input, upto } => cmd_recursion(json, &input, upto),
        Command::Taylor { input, upto } => cmd_taylor(json, &input, upto),
        Command::Poles(i) => cmd_poles(json, &i),
        Command::Conjecture(i) => cmd_conjecture(json, &i),
        Command::Classify(i) => cmd_classify(json, &i),
        Command::Euler(i) => cmd_euler(json, &i),
        Command::Rightangled { input, facets } => cmd_rightangled(json, &input, facets),
        Command::Helpfn { input, family } => cmd_helpfn(json, &input, family),
        Command::Oracle {
            input,
            upto,
            max_length,
        } => cmd_oracle(json, &input, upto, max_length),
        Command::Rebase { input, blocks } => cmd_rebase(json, &input, &blocks),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Integrity(msg)) => {
            eprintln!("integrity failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
