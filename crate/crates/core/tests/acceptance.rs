//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints a line whether it passes or not.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use coxgrowth::catalog::{catalog, lookup, Source};
use coxgrowth::growth::{
    euler_and_volume, recursion_coefficients, steinberg_series, subgroup_distribution, taylor_coefficients,
};
use coxgrowth::oracle::{bfs_counts_with, oracle_compare_with, BfsLimits};
use coxgrowth::poly::{block_product, cyclotomic, refine_root, IntPolynomial};
use coxgrowth::right_angled::{ra3_series, ra4_series, ra4_volume, FVector};
use coxgrowth::spectral::{
    check_conjecture, fixture_denominator, help_profile, minus_one_multiplicity, pole_report, Family, RateClass,
};
use coxgrowth::{CoxeterSystem, GrowthSeries};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn system(key: &str) -> Result<CoxeterSystem, String> {
    let e = lookup(key).map_err(|e| e.to_string())?;
    e.system()
        .cloned()
        .ok_or_else(|| format!("{key} is not a Coxeter system"))
}

fn series(key: &str) -> Result<GrowthSeries, String> {
    steinberg_series(&system(key)?).map_err(|e| e.to_string())
}

fn cell_120() -> FVector {
    "600,1200,720,120".parse().expect("valid f-vector")
}

fn example_1() -> Check {
    let s = series("lanner-5334")?;
    let want_virg = &block_product(&[2, 12, 20, 30]).unwrap() * &cyclotomic(8);
    ensure!(s.virgin == want_virg, "Virg = {}", s.virgin);
    let ext = s.extended.as_ref().ok_or("no extended form")?;
    ensure!(ext.blocks == [2, 8, 12, 20, 30], "Ext blocks {:?}", ext.blocks);
    ensure!(
        block_product(&ext.blocks).unwrap() == block_product(&[2, 8, 12, 20, 30]).unwrap(),
        "Ext polynomial differs"
    );
    Ok("Virg = [2,12,20,30] Phi_8, Ext = [2,8,12,20,30]".into())
}

fn cell_120_complete() -> Check {
    let s = ra4_series(&cell_120()).map_err(|e| e.to_string())?;
    let c = s.complete.as_ref().ok_or("no complete form")?;
    ensure!(c.denominator == p(&[1, -116, 366, -116, 1]), "Q = {}", c.denominator);
    ensure!(c.numerator == p(&[1, 2, 1]).pow(2), "P = {}", c.numerator);
    let vol = ra4_volume(&cell_120()).map_err(|e| e.to_string())?;
    ensure!(
        vol.pi_power == 2 && vol.coefficient == BigRational::new(34.into(), 3.into()),
        "volume {vol}"
    );
    let eu = euler_and_volume(&s, 4).map_err(|e| e.to_string())?;
    ensure!(eu.chi == BigRational::new(17.into(), 2.into()), "chi = {}", eu.chi);
    ensure!(eu.volume.as_ref() == Some(&vol), "volume paths disagree");
    Ok(format!("Q = {}, vol = {vol}, chi = 17/2", c.denominator))
}

fn hexagon_taylor() -> Check {
    let a = taylor_coefficients(&series("ra-hexagon")?, 10).map_err(|e| e.to_string())?;
    let want = [1i64, 6, 24, 90, 336, 1254, 4680, 17466, 65184, 243270, 907896];
    ensure!(a == want.map(BigInt::from), "got {a:?}");
    Ok("a_0..a_10 match".into())
}

fn recursion_vs_direct() -> Check {
    let mut done = Vec::new();
    for e in catalog().into_iter().filter(|e| e.verified) {
        let s = match &e.source {
            Source::System(sys) => steinberg_series(sys),
            Source::FVector(fv) => ra4_series(fv),
            Source::Denominator(_) => continue,
        }
        .map_err(|err| format!("{}: {err}", e.key))?;
        let s = match e.dimension {
            Some(n) => s.with_dimension(n),
            None => s,
        };
        let Some(c) = &s.complete else { continue };
        if c.denominator.deg() == 0 {
            continue;
        }
        let d = c.denominator.deg();
        let rep = recursion_coefficients(&s, d).map_err(|err| format!("{}: {err}", e.key))?;
        ensure!(
            rep.agrees_with_direct,
            "{}: recursion {:?} vs {:?}",
            e.key,
            rep.coefficients,
            rep.direct
        );
        let b1 = BigInt::from(c.blocks.len() as i64 - s.generators as i64);
        ensure!(rep.coefficients[1] == b1, "{}: b_1 != r - |S|", e.key);
        done.push(format!("{}(d={d})", e.key));
    }
    ensure!(done.len() >= 6, "only {} systems had blocks", done.len());
    Ok(done.join(" "))
}

fn reciprocity() -> Check {
    for (key, n) in [
        ("lanner-5334", 4),
        ("lanner-5333", 4),
        ("ra-dodecahedron", 3),
        ("prism-5-3-7", 3),
    ] {
        let s = series(key)?;
        ensure!(s.reciprocity_holds(n), "{key}: f(1/x) != (-1)^{n} f(x)");
        let q = s.reduced.den();
        let shape = if n % 2 == 0 {
            q.is_palindromic()
        } else {
            q.is_antipalindromic()
        };
        ensure!(shape, "{key}: denominator has the wrong symmetry");
    }
    Ok("4 systems".into())
}

fn distribution() -> Check {
    let mut n_checked = 0;
    for e in catalog().into_iter().filter(|e| e.verified) {
        let (Some(sys), Some(n)) = (e.system(), e.dimension) else {
            continue;
        };
        let r = subgroup_distribution(sys, n).map_err(|err| format!("{}: {err}", e.key))?;
        ensure!(
            r.check,
            "{}: finite {} infinite {}",
            e.key,
            r.finite_sum,
            r.infinite_sum
        );
        n_checked += 1;
    }
    let r = subgroup_distribution(&system("prism-3-3-7")?, 3).map_err(|e| e.to_string())?;
    let terms: Vec<(usize, u64)> = r
        .terms
        .iter()
        .filter(|t| t.infinite > 0)
        .map(|t| (t.size, t.infinite))
        .collect();
    ensure!(terms == [(2, 1), (3, 4), (4, 5), (5, 1)], "prism terms {terms:?}");
    ensure!(r.infinite_sum == 5, "prism infinite sum {}", r.infinite_sum);
    Ok(format!("{n_checked} systems; prism: {} = 5", r.infinite_expansion()))
}

fn theorem_checks() -> Check {
    let mut out = Vec::new();
    for key in ["lanner-5334", "lanner-5333"] {
        let s = series(key)?;
        let rep = pole_report(&s).map_err(|e| e.to_string())?;
        let pos: Vec<_> = rep.positive_poles().collect();
        ensure!(pos.len() == 4, "{key}: {} positive poles", pos.len());
        ensure!(
            pos.iter().all(|iv| iv.multiplicity == 1),
            "{key}: repeated positive pole"
        );
        ensure!(
            rep.unit_interval.distinct() == 2,
            "{key}: {} poles in (0,1)",
            rep.unit_interval.distinct()
        );
        ensure!(rep.inversion_symmetric(), "{key}: poles not closed under x -> 1/x");
        ensure!(rep.simple, "{key}: gcd(q, q') != 1");
        ensure!(rep.negative_poles() == 0, "{key}: negative poles");
        ensure!(
            rep.classification == RateClass::PerronVerified,
            "{key}: classified {:?}",
            rep.classification
        );
        ensure!(check_conjecture(&rep, 4).pass, "{key}: conjecture clauses fail");
        let x2 = &rep.unit_interval.intervals[1];
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(15));
        let q = s.reduced.den().square_free_part();
        let x2 = refine_root(&q, &x2.lo, &x2.hi, &eps).map_err(|e| e.to_string())?;
        let x2 = x2.to_f64().unwrap();
        let tol = 1e-9;
        for z in &rep.complex_poles {
            let r = z.modulus();
            ensure!(
                r + z.radius >= x2 - tol && r - z.radius <= 1.0 / x2 + tol,
                "{key}: pole of modulus {r} outside [{x2}, {}]",
                1.0 / x2
            );
        }
        let tau = rep.growth_rate.as_ref().unwrap().tau;
        out.push(format!(
            "{key}: tau = {tau:.9}, {} non-real poles",
            rep.complex_poles.len()
        ));
    }
    Ok(out.join("; "))
}

fn minus_one() -> Check {
    let mut out = Vec::new();
    for key in ["lanner-5334", "lanner-5333"] {
        let m = minus_one_multiplicity(&series(key)?);
        ensure!(m.multiplicity() >= 1, "{key}: order {} at -1", m.order());
        out.push(format!("{key}: {}", m.multiplicity()));
    }
    let s = ra4_series(&cell_120()).map_err(|e| e.to_string())?;
    let m = minus_one_multiplicity(&s);
    ensure!(m.multiplicity() == 4, "120-cell: multiplicity {}", m.multiplicity());
    out.push("120-cell: 4".into());
    Ok(out.join(", "))
}

fn oracle() -> Check {
    let mut out = Vec::new();
    for (key, len) in [("ra-hexagon", 8), ("triangle-2-3-7", 10), ("lanner-5334", 7)] {
        let v = oracle_compare_with(&system(key)?, len, BfsLimits::default()).map_err(|e| e.to_string())?;
        ensure!(v.pass && v.rows.len() == len + 1, "{key}: mismatch at {:?}", v.mismatch);
        out.push(format!("{key} L={len}"));
    }
    let h4 = system("finite-h4")?;
    let limits = BfsLimits {
        max_length: 60,
        ..BfsLimits::default()
    };
    let c = bfs_counts_with(&h4, 60, limits, None).map_err(|e| e.to_string())?;
    ensure!(c.exhausted && c.total() == 14400, "H4 total {}", c.total());
    let v = oracle_compare_with(&h4, 60, limits).map_err(|e| e.to_string())?;
    ensure!(v.pass, "H4: mismatch at {:?}", v.mismatch);
    out.push("H4 total 14400".into());
    Ok(out.join(", "))
}

fn three_dim() -> Check {
    let s = series("ra-dodecahedron")?;
    let r3 = ra3_series(12).map_err(|e| e.to_string())?;
    ensure!(
        s.reduced == r3.series.reduced,
        "Steinberg {} vs closed form {}",
        s.reduced.den(),
        r3.series.reduced.den()
    );
    let c = r3.series.complete.as_ref().ok_or("no complete form")?;
    ensure!(c.denominator == p(&[1, -9, 9, -1]), "Q = {}", c.denominator);
    let width = (&r3.tau_hi - &r3.tau_lo).to_f64().unwrap();
    ensure!(width <= 1e-8, "tau interval width {width}");
    let tau = 4.0 + 15f64.sqrt();
    ensure!(
        r3.tau_lo.to_f64().unwrap() <= tau + 1e-12 && tau - 1e-12 <= r3.tau_hi.to_f64().unwrap(),
        "4 + sqrt(15) outside the interval"
    );
    ensure!(r3.tau_surd == "4 + sqrt(15)", "surd {}", r3.tau_surd);
    let d = &r3.discrepancy;
    ensure!(!d.readings_agree, "discrepancy report missing");
    Ok(format!(
        "Q = {}, tau in [{:.10}, {:.10}], vertex reading gives a_1 = {}",
        c.denominator,
        r3.tau_lo.to_f64().unwrap(),
        r3.tau_hi.to_f64().unwrap(),
        d.vertex_reading_a1
    ))
}

fn salem() -> Check {
    let den = |key: &str| match lookup(key).map_err(|e| e.to_string())?.source {
        Source::Denominator(q) => Ok::<_, String>(q),
        _ => Err(format!("{key} is not a denominator fixture")),
    };
    let rep = fixture_denominator(&den("lehmer-fixture")?).map_err(|e| e.to_string())?;
    ensure!(
        rep.classification == RateClass::SalemLayout,
        "Lehmer classified {:?}",
        rep.classification
    );
    let g = rep.growth_rate.as_ref().ok_or("no growth rate")?;
    let (lo, hi) = (g.tau_lo.to_f64().unwrap(), g.tau_hi.to_f64().unwrap());
    ensure!(lo >= 1.17627 && hi <= 1.17629, "tau in [{lo}, {hi}]");
    let neg = fixture_denominator(&den("salem-negative-control")?).map_err(|e| e.to_string())?;
    ensure!(
        neg.classification != RateClass::SalemLayout,
        "negative control accepted as a Salem layout"
    );
    Ok(format!("Lehmer tau = {:.9}; control: {:?}", g.tau, neg.classification))
}

fn help_functions() -> Check {
    let prof = help_profile(&system("lanner-5334")?, Family::L).map_err(|e| e.to_string())?;
    ensure!(
        prof.decomposition_verified,
        "identity fails, residual {:?}",
        prof.residual
    );
    ensure!(prof.functions.len() == 5, "{} help functions", prof.functions.len());
    for h in &prof.functions {
        ensure!(h.n_palindromic && h.d_palindromic, "{:?}: not palindromic", h.nodes);
        ensure!(h.d_cyclotomic, "{:?}: d not cyclotomic", h.nodes);
        ensure!(h.d.deg() == h.n.deg() + 2, "{:?}: deg d != deg n + 2", h.nodes);
        ensure!(h.vanishes_at_zero, "{:?}: h(0) != 0", h.nodes);
        ensure!(h.algebraic_facts_hold(), "{:?}: facts fail", h.nodes);
    }
    Ok("5 help functions, identity exact".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "1 virgin and extended forms of lanner-5334",
            example_1,
            Duration::from_secs(1),
        ),
        (
            "2 120-cell complete form, volume, chi",
            cell_120_complete,
            Duration::from_secs(1),
        ),
        ("3 hexagon Taylor coefficients", hexagon_taylor, Duration::from_secs(1)),
        (
            "4 recursion agrees with exact division",
            recursion_vs_direct,
            Duration::from_secs(10),
        ),
        ("5 reciprocity", reciprocity, Duration::from_secs(10)),
        ("6 subgroup distribution", distribution, Duration::from_secs(30)),
        (
            "7 pole layout of the Lanner groups",
            theorem_checks,
            Duration::from_secs(30),
        ),
        ("8 order at -1", minus_one, Duration::from_secs(10)),
        ("9 word counts by BFS", oracle, Duration::from_secs(300)),
        ("10 right-angled dodecahedron", three_dim, Duration::from_secs(10)),
        ("11 Salem fixtures", salem, Duration::from_secs(10)),
        (
            "12 help-function decomposition",
            help_functions,
            Duration::from_secs(10),
        ),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took <= budget => Ok(detail),
            Ok(_) => Err(format!("took {took:.2?}, budget {budget:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({took:.2?}): {detail}"),
            Err(e) => {
                failed += 1;
                println!("FAIL  criterion {name} ({took:.2?}): {e}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
