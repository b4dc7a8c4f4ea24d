//! Poles of growth functions: exact real-root isolation, approximate
//! non-real roots, growth rate, and Salem / Perron root-layout tests.

mod help;

pub use help::{help_profile, help_profile_with, Family, GridScan, HelpFunction, HelpFunctionProfile, PrismPairs};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth::GrowthSeries;
use crate::poly::complex::{aberth_roots, ComplexRoot};
use crate::poly::roots::cauchy_bound;
use crate::poly::{
    cyclotomic_factor, refine_root, serde_exact, sturm_real_roots, Bound, CycFactorization, IntPolynomial,
    RootIsolation,
};

/// Tolerances used by the numeric parts of the analysis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Allowed `| |z| - 1 |` for a root to count as on the unit circle.
    pub unit_circle: f64,
    /// A numeric modulus gap must exceed the inclusion radius by this factor.
    pub margin_ratio: f64,
    /// Slack for the annulus test.
    pub annulus: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            unit_circle: 1e-9,
            margin_ratio: 1e3,
            annulus: 1e-9,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RateClass {
    PerronVerified,
    SalemLayout,
    Indeterminate,
}

/// `tau = 1/x_1` with `x_1` the smallest positive pole.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRate {
    #[serde(serialize_with = "serde_exact::rational")]
    pub x1_lo: BigRational,
    #[serde(serialize_with = "serde_exact::rational")]
    pub x1_hi: BigRational,
    #[serde(serialize_with = "serde_exact::rational")]
    pub tau_lo: BigRational,
    #[serde(serialize_with = "serde_exact::rational")]
    pub tau_hi: BigRational,
    pub tau: f64,
    pub x1_multiplicity: u32,
}

/// Non-real poles lie in `x_star <= |z| <= 1/x_star`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Annulus {
    /// 1-based index into the ascending poles in `(0, 1)`.
    pub star: usize,
    pub inner: f64,
    pub outer: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoleReport {
    pub reduced_den: IntPolynomial,
    pub cyclotomic_part: CycFactorization,
    /// Negative poles then positive poles, each ascending.
    pub real_poles: RootIsolation,
    /// Distinct poles in the open interval `(0, 1)`, ascending.
    pub unit_interval: RootIsolation,
    pub pole_at_one: u32,
    /// `gcd(q, q') = 1`.
    pub simple: bool,
    /// Non-real roots of the square-free non-cyclotomic part.
    pub complex_poles: Vec<ComplexRoot>,
    /// The non-real approximations have inclusion disks off the real axis.
    pub complex_certified: bool,
    pub growth_rate: Option<GrowthRate>,
    pub classification: RateClass,
    pub evidence: RateEvidence,
    pub annulus: Option<Annulus>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SalemCheck {
    pub palindromic: bool,
    pub unit_constant: bool,
    pub square_free: bool,
    pub real_roots: usize,
    pub inversive_pair: bool,
    pub max_unit_circle_deviation: Option<f64>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronCheck {
    pub tau_simple: bool,
    pub monic: bool,
    /// All real competitors were excluded exactly.
    pub real_exclusion_exact: bool,
    /// Smallest `(|z| - x_1) / radius` over non-real poles.
    pub complex_margin_ratio: Option<f64>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateEvidence {
    pub salem: SalemCheck,
    pub perron: PerronCheck,
    pub note: String,
}

fn inversion_partner(iv: &crate::poly::IsolatedRoot, all: &RootIsolation) -> bool {
    // Endpoints are nonzero, see `pole_report_with`.
    let one = BigRational::one();
    let (a, b) = (&one / &iv.hi, &one / &iv.lo);
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    all.intervals
        .iter()
        .any(|j| j.multiplicity == iv.multiplicity && j.lo <= b && a <= j.hi)
}

impl PoleReport {
    /// Every real isolating interval maps onto one of equal multiplicity under `x -> 1/x`.
    pub fn inversion_symmetric(&self) -> bool {
        self.real_poles
            .intervals
            .iter()
            .all(|iv| inversion_partner(iv, &self.real_poles))
    }

    pub fn positive_poles(&self) -> impl Iterator<Item = &crate::poly::IsolatedRoot> {
        self.real_poles.intervals.iter().filter(|iv| iv.lo.is_positive())
    }

    pub fn negative_poles(&self) -> usize {
        self.real_poles
            .intervals
            .iter()
            .filter(|iv| iv.hi.is_negative())
            .count()
    }
}

pub fn pole_report(series: &GrowthSeries) -> Result<PoleReport> {
    pole_report_with(series.reduced.den(), Tolerances::default())
}

/// Analysis of the zeros of a growth-function denominator `q` with `q(0) != 0`.
pub fn pole_report_with(q: &IntPolynomial, tol: Tolerances) -> Result<PoleReport> {
    if q.deg() == 0 {
        return Err(Error::InvalidInput(
            "the growth function is a polynomial: no poles".into(),
        ));
    }
    if q.coeff(0).is_zero() {
        return Err(Error::InvalidInput("denominator vanishes at 0".into()));
    }
    let zero = Bound::int(0);
    let cyc = cyclotomic_factor(q)?;
    let negative = sturm_real_roots(q, Bound::NegInf, zero.clone())?;
    let positive = sturm_real_roots(q, zero.clone(), Bound::PosInf)?;
    let mut real_poles = negative;
    real_poles.intervals.extend(positive.intervals);
    // Every root has modulus above 1/B with B a root bound of the reversal.
    let r = BigRational::one() / cauchy_bound(&q.reverse());
    for iv in &mut real_poles.intervals {
        if iv.lo.is_zero() {
            iv.lo = r.clone();
        }
        if iv.hi.is_zero() {
            iv.hi = -r.clone();
        }
    }
    let unit_interval = sturm_real_roots(q, zero, Bound::int(1))?;
    let pole_at_one = q.root_multiplicity(&IntPolynomial::from_i64(&[-1, 1]));
    let simple = q.gcd(&q.derivative()).deg() == 0;

    let rest = cyc.remainder.square_free_part();
    let (complex_poles, complex_certified) = if rest.deg() >= 1 {
        let real_count = sturm_real_roots(&rest, Bound::NegInf, Bound::PosInf)?.distinct();
        let mut all = aberth_roots(&rest, 2000)?;
        all.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
        let nonreal: Vec<ComplexRoot> = all.into_iter().take(rest.deg() - real_count).collect();
        let ok = nonreal.iter().all(|z| z.im.abs() > z.radius);
        let mut nonreal = nonreal;
        nonreal.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        (nonreal, ok)
    } else {
        (Vec::new(), true)
    };

    let growth_rate = match unit_interval.intervals.first() {
        Some(iv) => {
            let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(24));
            let c = if iv.is_exact() {
                iv.lo.clone()
            } else {
                refine_root(&q.square_free_part(), &iv.lo, &iv.hi, &eps)?
            };
            let (lo, hi) = if iv.is_exact() {
                (c.clone(), c.clone())
            } else {
                (&c - &eps, &c + &eps)
            };
            let one = BigRational::one();
            Some(GrowthRate {
                tau_lo: &one / &hi,
                tau_hi: &one / &lo,
                tau: (&one / &c).to_f64().unwrap_or(f64::NAN),
                x1_lo: lo,
                x1_hi: hi,
                x1_multiplicity: iv.multiplicity,
            })
        }
        None => None,
    };

    let salem = salem_check(&cyc, tol)?;
    let perron = perron_check(q, growth_rate.as_ref(), &complex_poles, complex_certified, tol)?;
    let (classification, note) = if salem.pass && growth_rate.is_some() {
        (
            RateClass::SalemLayout,
            "root layout of a Salem polynomial; irreducibility is not certified, so this is a layout, not a proved Salem number".to_string(),
        )
    } else if perron.pass {
        (
            RateClass::PerronVerified,
            "tau is simple and strictly dominates every other root of the reversed denominator; this set contains all conjugates, so tau is a Perron number".to_string(),
        )
    } else {
        (
            RateClass::Indeterminate,
            "neither layout could be certified".to_string(),
        )
    };

    let mut report = PoleReport {
        reduced_den: q.clone(),
        cyclotomic_part: cyc,
        real_poles,
        unit_interval,
        pole_at_one,
        simple,
        complex_poles,
        complex_certified,
        growth_rate,
        classification,
        evidence: RateEvidence { salem, perron, note },
        annulus: None,
    };
    report.annulus = tightest_annulus(&report, tol.annulus);
    Ok(report)
}

fn salem_check(cyc: &CycFactorization, tol: Tolerances) -> Result<SalemCheck> {
    let r = &cyc.remainder;
    let palindromic = r.deg() >= 2 && (r.is_palindromic() || r.is_antipalindromic());
    let unit_constant = r.coeff(0).abs().is_one();
    let square_free = r.deg() >= 1 && r.gcd(&r.derivative()).deg() == 0;
    if r.deg() < 2 {
        return Ok(SalemCheck {
            palindromic,
            unit_constant,
            square_free,
            real_roots: 0,
            inversive_pair: false,
            max_unit_circle_deviation: None,
            pass: false,
        });
    }
    let reals = sturm_real_roots(r, Bound::NegInf, Bound::PosInf)?;
    let below = sturm_real_roots(r, Bound::int(0), Bound::int(1))?.distinct();
    let above = sturm_real_roots(r, Bound::int(1), Bound::PosInf)?.distinct();
    let inversive_pair = reals.distinct() == 2 && below == 1 && above == 1 && reals.all_simple();
    let mut deviation = None;
    if square_free && r.deg() > 2 {
        let roots = aberth_roots(r, 2000)?;
        let mut others: Vec<&ComplexRoot> = roots.iter().collect();
        // Drop the two real roots off the circle.
        others.sort_by(|a, b| (a.modulus() - 1.0).abs().total_cmp(&(b.modulus() - 1.0).abs()));
        others.truncate(r.deg() - 2);
        deviation = Some(
            others
                .iter()
                .map(|z| (z.modulus() - 1.0).abs() + z.radius)
                .fold(0.0, f64::max),
        );
    } else if square_free {
        deviation = Some(0.0);
    }
    let pass = palindromic
        && unit_constant
        && square_free
        && inversive_pair
        && deviation.is_some_and(|d| d <= tol.unit_circle);
    Ok(SalemCheck {
        palindromic,
        unit_constant,
        square_free,
        real_roots: reals.distinct(),
        inversive_pair,
        max_unit_circle_deviation: deviation,
        pass,
    })
}

fn perron_check(
    q: &IntPolynomial,
    rate: Option<&GrowthRate>,
    complex: &[ComplexRoot],
    complex_certified: bool,
    tol: Tolerances,
) -> Result<PerronCheck> {
    let monic = q.coeff(0).abs().is_one();
    let Some(rate) = rate else {
        return Ok(PerronCheck {
            tau_simple: false,
            monic,
            real_exclusion_exact: false,
            complex_margin_ratio: None,
            pass: false,
        });
    };
    let tau_simple = rate.x1_multiplicity == 1;
    // No negative root of modulus <= x_1: q has no root in (-x1_hi, 0) and none at -x1_hi.
    let neg = -rate.x1_hi.clone();
    let near = sturm_real_roots(q, Bound::Finite(neg.clone()), Bound::int(0))?.distinct();
    let real_exclusion_exact = near == 0 && !q.eval_rational(&neg).is_zero();
    let x1 = rate.x1_hi.to_f64().unwrap_or(f64::NAN);
    let complex_margin_ratio = complex
        .iter()
        .map(|z| (z.modulus() - x1) / z.radius.max(f64::MIN_POSITIVE))
        .reduce(f64::min);
    let complex_ok = complex_certified && complex_margin_ratio.is_none_or(|m| m > tol.margin_ratio);
    Ok(PerronCheck {
        tau_simple,
        monic,
        real_exclusion_exact,
        complex_margin_ratio,
        pass: tau_simple && monic && real_exclusion_exact && complex_ok,
    })
}

fn tightest_annulus(report: &PoleReport, tol: f64) -> Option<Annulus> {
    let xs: Vec<f64> = report
        .unit_interval
        .intervals
        .iter()
        .map(|iv| iv.midpoint_f64())
        .collect();
    for (i, &x) in xs.iter().enumerate().rev() {
        let (inner, outer) = (x, 1.0 / x);
        let inside = report
            .complex_poles
            .iter()
            .all(|z| z.modulus() - z.radius >= inner - tol && z.modulus() + z.radius <= outer + tol);
        if inside {
            return Some(Annulus {
                star: i + 1,
                inner,
                outer,
            });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub dimension: usize,
    pub clauses: Vec<Clause>,
    pub pass: bool,
}

/// Poles in `(0, 1)`: exactly `n/2` of them, plus a pole at 1 when `n` is odd;
/// all poles simple; non-real poles inside an annulus `[x_star, 1/x_star]`.
pub fn check_conjecture(report: &PoleReport, n: usize) -> ConjectureVerdict {
    let mut clauses = Vec::new();
    let k = report.unit_interval.distinct();
    clauses.push(Clause {
        name: "poles in (0,1)".into(),
        pass: k == n / 2,
        detail: format!("{k} distinct, expected {}", n / 2),
    });
    let want_one = if n % 2 == 1 { 1 } else { 0 };
    clauses.push(Clause {
        name: "pole at 1".into(),
        pass: report.pole_at_one == want_one,
        detail: format!("order {}, expected {want_one}", report.pole_at_one),
    });
    clauses.push(Clause {
        name: "simple".into(),
        pass: report.simple,
        detail: if report.simple {
            "gcd(q, q') = 1".into()
        } else {
            "q has a repeated factor".into()
        },
    });
    let (pass, detail) = match &report.annulus {
        Some(a) => (
            true,
            format!(
                "{} non-real poles within [x_{}, 1/x_{}] = [{:.12}, {:.12}]",
                report.complex_poles.len(),
                a.star,
                a.star,
                a.inner,
                a.outer
            ),
        ),
        None => (false, "no annulus [x_i, 1/x_i] contains the non-real poles".into()),
    };
    clauses.push(Clause {
        name: "annulus".into(),
        pass,
        detail,
    });
    let pass = clauses.iter().all(|c| c.pass);
    ConjectureVerdict {
        dimension: n,
        clauses,
        pass,
    }
}

pub fn classify_rate(report: &PoleReport) -> (RateClass, &RateEvidence) {
    (report.classification, &report.evidence)
}

/// Order of `f_S` at `-1`: zeros of the numerator minus zeros of the denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinusOne {
    pub numerator: u32,
    pub denominator: u32,
}

impl MinusOne {
    pub fn order(&self) -> i64 {
        self.numerator as i64 - self.denominator as i64
    }

    /// The multiplicity of `-1` as a root, or 0 at a pole.
    pub fn multiplicity(&self) -> u32 {
        self.order().max(0) as u32
    }
}

pub fn minus_one_multiplicity(series: &GrowthSeries) -> MinusOne {
    MinusOne {
        numerator: series.reduced.num().multiplicity_at_minus_one(),
        denominator: series.reduced.den().multiplicity_at_minus_one(),
    }
}

/// A growth-like series `[2]^k / den`, used for fixtures given by a denominator only.
pub fn fixture_denominator(den: &IntPolynomial) -> Result<PoleReport> {
    pole_report_with(den, Tolerances::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::steinberg_series;
    use crate::right_angled::{ra3_series, ra4_series};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rat(x: f64) -> BigRational {
        BigRational::from_float(x).unwrap()
    }

    #[test]
    fn cell_120() {
        let s = ra4_series(&"600,1200,720,120".parse().unwrap()).unwrap();
        let r = pole_report(&s).unwrap();
        assert_eq!(r.real_poles.distinct(), 4);
        assert!(r.real_poles.all_simple() && r.simple);
        assert!(r.complex_poles.is_empty());
        assert_eq!(r.classification, RateClass::PerronVerified);
        let t = r.growth_rate.as_ref().unwrap();
        assert!((t.tau - 112.7633876).abs() < 1e-6);
        assert!(r.inversion_symmetric());
        assert!(check_conjecture(&r, 4).pass);
        assert_eq!(minus_one_multiplicity(&s).multiplicity(), 4);
    }

    #[test]
    fn dodecahedron_is_a_salem_layout() {
        let s = ra3_series(12).unwrap().series;
        let r = pole_report(&s).unwrap();
        assert_eq!(r.classification, RateClass::SalemLayout);
        assert_eq!(r.pole_at_one, 1);
        let t = r.growth_rate.as_ref().unwrap();
        assert!((t.tau - (4.0 + 15f64.sqrt())).abs() < 1e-12);
        assert!(check_conjecture(&r, 3).pass);
        assert!(minus_one_multiplicity(&s).multiplicity() >= 1);
    }

    #[test]
    fn hexagon_conjecture() {
        let s = steinberg_series(&crate::growth::tests::hexagon()).unwrap();
        let r = pole_report(&s).unwrap();
        assert!(check_conjecture(&r, 2).pass);
        assert!(!check_conjecture(&r, 4).pass);
    }

    #[test]
    fn lehmer_fixture() {
        let l = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let r = fixture_denominator(&l).unwrap();
        assert_eq!(r.classification, RateClass::SalemLayout);
        let t = r.growth_rate.as_ref().unwrap();
        assert!(t.tau_lo > rat(1.17627) && t.tau_hi < rat(1.17629));
        assert_eq!(r.complex_poles.len(), 8);
        assert!(r.evidence.salem.max_unit_circle_deviation.unwrap() < 1e-9);
    }

    #[test]
    fn negative_control_fails() {
        let q = p(&[1, -3, 1]);
        let r = fixture_denominator(&(&q * &q)).unwrap();
        assert_eq!(r.classification, RateClass::Indeterminate);
        assert!(!r.simple);
    }

    #[test]
    fn polynomial_has_no_poles() {
        assert!(fixture_denominator(&p(&[1])).is_err());
    }
}
