//! Right-angled cocompact groups: closed forms from the f-vector of the
//! fundamental polytope in dimensions 3 and 4.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::coxeter::{enumerate_finite_subsets, CoxeterSystem};
use crate::error::{Error, Result};
use crate::growth::{GrowthSeries, SubgroupProfile, Volume};
use crate::poly::{refine_root, serde_exact, sturm_real_roots, Bound, IntPolynomial};

/// Face numbers `(f_0, ..., f_{n-1})` of an `n`-polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub f: Vec<u64>,
}

impl FVector {
    pub fn new(f: Vec<u64>) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::InvalidInput("empty f-vector".into()));
        }
        Ok(FVector { f })
    }

    pub fn dim(&self) -> usize {
        self.f.len()
    }

    /// Number of facets, which is `|S|`.
    pub fn facets(&self) -> u64 {
        self.f[self.dim() - 1]
    }

    /// `sum (-1)^i f_i`.
    pub fn alternating_sum(&self) -> i128 {
        self.f
            .iter()
            .enumerate()
            .map(|(i, &v)| if i % 2 == 0 { v as i128 } else { -(v as i128) })
            .sum()
    }

    /// Euler: `sum (-1)^i f_i = 1 - (-1)^n`.
    pub fn euler_holds(&self) -> bool {
        let rhs = if self.dim().is_multiple_of(2) { 0 } else { 2 };
        self.alternating_sum() == rhs
    }

    /// A simple polytope has `n` edges at every vertex: `n f_0 = 2 f_1`.
    pub fn is_simple(&self) -> bool {
        self.dim() < 2 || self.dim() as u64 * self.f[0] == 2 * self.f[1]
    }
}

impl FromStr for FVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInput(format!("bad f-vector entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FVector::new(f)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.f.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn is_right_angled(system: &CoxeterSystem) -> bool {
    system.is_right_angled()
}

/// `b_1` and `b_2` of `Q` for a right-angled group acting on `H^n`, `n <= 4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaCoefficients {
    pub dimension: usize,
    #[serde(serialize_with = "serde_exact::bigint")]
    pub b1: BigInt,
    /// Only for `n >= 2`.
    #[serde(serialize_with = "serde_exact::opt_bigint")]
    pub b2: Option<BigInt>,
    /// `sum over finite T with |T| >= 2 of (-1)^|T| |T| (|T| + 1)`.
    pub weighted_sum: i64,
}

pub fn ra_coefficients(system: &CoxeterSystem, n: usize) -> Result<RaCoefficients> {
    if !system.is_right_angled() {
        return Err(Error::InvalidInput("system is not right-angled".into()));
    }
    if n == 0 || n > 4 {
        return Err(Error::InvalidInput(format!("dimension {n} outside 1..=4")));
    }
    let lattice = enumerate_finite_subsets(system)?;
    let s = system.rank() as i64;
    let weighted_sum: i64 = lattice
        .entries
        .iter()
        .filter(|e| e.size() >= 2)
        .map(|e| {
            let t = e.size() as i64;
            let v = t * (t + 1);
            if t % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum();
    let ni = n as i64;
    let b1 = BigInt::from(ni - s);
    let b2 = (n >= 2)
        .then(|| {
            // n/2 (n - 2|S| - 1) + (-1)^n/2 (sum - 2|S|)
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let twice = ni * (ni - 2 * s - 1) + sign * (weighted_sum - 2 * s);
            if twice % 2 != 0 {
                return Err(Error::Integrity(format!("b_2 = {twice}/2 is not an integer")));
            }
            Ok(BigInt::from(twice / 2))
        })
        .transpose()?;
    Ok(RaCoefficients {
        dimension: n,
        b1,
        b2,
        weighted_sum,
    })
}

/// `Q = 1 + (4 - f_3) x + (f_0 - 2 f_3 + 6) x^2 + (4 - f_3) x^3 + x^4`.
pub fn ra4_denominator(fv: &FVector) -> Result<IntPolynomial> {
    if fv.dim() != 4 {
        return Err(Error::InvalidInput(format!(
            "expected a 4-dimensional f-vector, got {fv}"
        )));
    }
    let (f0, f3) = (BigInt::from(fv.f[0]), BigInt::from(fv.f[3]));
    let b1 = BigInt::from(4) - &f3;
    let b2 = &f0 - BigInt::from(2) * &f3 + BigInt::from(6);
    Ok(IntPolynomial::from_coeffs(vec![
        BigInt::one(),
        b1.clone(),
        b2,
        b1,
        BigInt::one(),
    ]))
}

fn check_fvector(fv: &FVector, n: usize) -> Result<Vec<String>> {
    if fv.dim() != n {
        return Err(Error::InvalidInput(format!(
            "expected a {n}-dimensional f-vector, got {fv}"
        )));
    }
    if !fv.euler_holds() {
        return Err(Error::InvalidInput(format!(
            "f-vector {fv} violates Euler's relation: alternating sum {}",
            fv.alternating_sum()
        )));
    }
    let mut lints = Vec::new();
    if !fv.is_simple() {
        lints.push(format!(
            "f-vector {fv} is not that of a simple polytope ({n} f_0 != 2 f_1)"
        ));
    }
    if n == 4 && fv.f[0] < 5 * fv.f[3] {
        lints.push(format!(
            "f_0 = {} < 5 f_3 = {}: some 2-face is not at least pentagonal",
            fv.f[0],
            5 * fv.f[3]
        ));
    }
    Ok(lints)
}

/// Growth series `[2]^4 / Q` of a right-angled group on `H^4`, cross-checked
/// against the Steinberg sum over the face lattice.
pub fn ra4_series(fv: &FVector) -> Result<GrowthSeries> {
    let lints = check_fvector(fv, 4)?;
    let q = ra4_denominator(fv)?;
    let mut s = GrowthSeries::from_complete(SubgroupProfile::right_angled(&fv.f)?, vec![2; 4], q)?.with_dimension(4);
    s.notes.extend(lints);
    Ok(s)
}

/// `vol = (f_0 - 4 f_3 + 16) pi^2 / 12`.
pub fn ra4_volume(fv: &FVector) -> Result<Volume> {
    check_fvector(fv, 4)?;
    let c = BigInt::from(fv.f[0]) - BigInt::from(4 * fv.f[3]) + BigInt::from(16);
    Ok(Volume {
        pi_power: 2,
        coefficient: BigRational::new(c, BigInt::from(12)),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuarticPole {
    #[serde(serialize_with = "serde_exact::rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "serde_exact::rational")]
    pub hi: BigRational,
    pub value: f64,
    /// The nested radical, e.g. `(a + sqrt(g) + sqrt(b + 2a*sqrt(g)))/4`.
    pub surd: String,
    /// The radical evaluated in floating point.
    pub surd_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RaQuarticPoles {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    /// Roots of `y^2 - alpha y + (b_2 - 2)`, `y = x + 1/x`.
    pub y: [f64; 2],
    /// Ascending; `poles[i] * poles[3 - i] = 1`.
    pub poles: Vec<QuarticPole>,
    /// `gcd(Q, Q') = 1`.
    pub simple: bool,
    /// Every isolating interval maps onto another under `x -> 1/x`.
    pub inversive: bool,
    /// The radicals agree with the certified roots to `1e-9`.
    pub surds_agree: bool,
}

fn reciprocal_overlaps(a: &QuarticPole, b: &QuarticPole) -> bool {
    // [1/a.hi, 1/a.lo] meets [b.lo, b.hi]
    let one = BigRational::one();
    let ilo = &one / &a.hi;
    ilo <= b.hi && (a.lo.is_zero() || b.lo <= &one / &a.lo)
}

/// The four real poles of the 4-dimensional closed form.
///
/// With `y = x + 1/x` the palindromic quartic becomes `y^2 - alpha y + (b_2 - 2)`,
/// so `y = (alpha +- sqrt(gamma)) / 2` and `x = (y +- sqrt(y^2 - 4)) / 2`.
pub fn ra4_poles(fv: &FVector) -> Result<RaQuarticPoles> {
    check_fvector(fv, 4)?;
    let (f0, f3) = (fv.f[0] as i64, fv.f[3] as i64);
    let alpha = f3 - 4;
    let beta = 2 * alpha * f3 - 4 * f0;
    let gamma = f3 * f3 - 4 * f0;
    if gamma <= 0 {
        return Err(Error::InvalidInput(format!(
            "gamma = f_3^2 - 4 f_0 = {gamma} is not positive; no compact right-angled 4-polytope has this f-vector"
        )));
    }
    let q = ra4_denominator(fv)?;
    let iso = sturm_real_roots(&q, Bound::int(0), Bound::PosInf)?;
    if iso.distinct() != 4 {
        return Err(Error::InvalidInput(format!(
            "Q has {} distinct positive roots, expected 4",
            iso.distinct()
        )));
    }
    let simple = q.gcd(&q.derivative()).deg() == 0;
    let sg = (gamma as f64).sqrt();
    let y = [(alpha as f64 + sg) / 2.0, (alpha as f64 - sg) / 2.0];
    let inner = |sign: f64| (beta as f64 + sign * 2.0 * alpha as f64 * sg).sqrt();
    let radicals = [
        (
            format!(
                "({alpha} - sqrt({gamma}) - sqrt({beta} - {}*sqrt({gamma})))/4",
                2 * alpha
            ),
            (alpha as f64 - sg - inner(-1.0)) / 4.0,
        ),
        (
            format!(
                "({alpha} + sqrt({gamma}) - sqrt({beta} + {}*sqrt({gamma})))/4",
                2 * alpha
            ),
            (alpha as f64 + sg - inner(1.0)) / 4.0,
        ),
        (
            format!(
                "({alpha} - sqrt({gamma}) + sqrt({beta} - {}*sqrt({gamma})))/4",
                2 * alpha
            ),
            (alpha as f64 - sg + inner(-1.0)) / 4.0,
        ),
        (
            format!(
                "({alpha} + sqrt({gamma}) + sqrt({beta} + {}*sqrt({gamma})))/4",
                2 * alpha
            ),
            (alpha as f64 + sg + inner(1.0)) / 4.0,
        ),
    ];
    let mut radicals = radicals.to_vec();
    radicals.sort_by(|a, b| a.1.total_cmp(&b.1));
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    let mut poles = Vec::with_capacity(4);
    for (r, (surd, surd_value)) in iso.intervals.iter().zip(radicals) {
        let value = refine_root(&q, &r.lo, &r.hi, &eps)?.to_f64().unwrap_or(f64::NAN);
        poles.push(QuarticPole {
            lo: r.lo.clone(),
            hi: r.hi.clone(),
            value,
            surd,
            surd_value,
        });
    }
    let inversive = (0..4).all(|i| reciprocal_overlaps(&poles[i], &poles[3 - i]));
    let surds_agree = poles
        .iter()
        .all(|p| (p.value - p.surd_value).abs() <= 1e-9 * p.value.max(1.0));
    Ok(RaQuarticPoles {
        alpha,
        beta,
        gamma,
        y,
        poles,
        simple,
        inversive,
        surds_agree,
    })
}

/// The printed 3-dimensional formula read with its parameter as `f_0`,
/// set against the facet-count reading that matches Steinberg's formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterDiscrepancy {
    pub facets: u64,
    pub vertices: u64,
    /// Denominator with the parameter read as the vertex count.
    pub vertex_reading: IntPolynomial,
    /// `a_1` of that reading; equals `f_0`.
    pub vertex_reading_a1: u64,
    pub facet_reading: IntPolynomial,
    pub facet_reading_a1: u64,
    pub readings_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ra3Report {
    pub series: GrowthSeries,
    pub facets: u64,
    /// `tau = ((k - 4) + sqrt((k - 4)^2 - 4)) / 2`.
    pub tau_surd: String,
    #[serde(serialize_with = "serde_exact::rational")]
    pub tau_lo: BigRational,
    #[serde(serialize_with = "serde_exact::rational")]
    pub tau_hi: BigRational,
    pub tau: f64,
    pub discrepancy: ParameterDiscrepancy,
}

fn ra3_denominator(param: u64) -> IntPolynomial {
    let c = BigInt::from(param) - BigInt::from(3);
    IntPolynomial::from_coeffs(vec![BigInt::one(), -c.clone(), c, -BigInt::one()])
}

/// Growth series `[2]^3 / (1 - (k-3)x + (k-3)x^2 - x^3)` of a right-angled
/// group on `H^3` whose polytope has `k` facets.
pub fn ra3_series(facets: u64) -> Result<Ra3Report> {
    if facets < 12 {
        return Err(Error::InvalidInput(format!(
            "{facets} facets: no compact right-angled 3-polytope has fewer than 12"
        )));
    }
    // Simple 3-polytope: f_0 = 2k - 4, f_1 = 3k - 6.
    let fv = FVector::new(vec![2 * facets - 4, 3 * facets - 6, facets])?;
    check_fvector(&fv, 3)?;
    let q = ra3_denominator(facets);
    let series = GrowthSeries::from_complete(SubgroupProfile::right_angled(&fv.f)?, vec![2; 3], q)?.with_dimension(3);

    let c = facets as i64 - 4;
    let quad = IntPolynomial::from_i64(&[1, -c, 1]);
    let iso = sturm_real_roots(&quad, Bound::int(1), Bound::PosInf)?;
    let root = iso
        .intervals
        .first()
        .ok_or_else(|| Error::Integrity("no real pole above 1".into()))?;
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(10)));
    let mid = refine_root(&quad, &root.lo, &root.hi, &eps)?;
    let (tau_lo, tau_hi) = (&mid - &eps, &mid + &eps);
    if quad.sign_at(&tau_lo) == quad.sign_at(&tau_hi) {
        return Err(Error::Integrity("tau enclosure lacks a sign change".into()));
    }
    let disc = c * c - 4;
    let tau_surd = if disc % 4 == 0 && c % 2 == 0 {
        format!("{} + sqrt({})", c / 2, disc / 4)
    } else {
        format!("({c} + sqrt({disc}))/2")
    };
    let vertex_reading = ra3_denominator(fv.f[0]);
    let discrepancy = ParameterDiscrepancy {
        facets,
        vertices: fv.f[0],
        readings_agree: vertex_reading == *series.reduced.den() || fv.f[0] == facets,
        vertex_reading,
        vertex_reading_a1: fv.f[0],
        facet_reading: ra3_denominator(facets),
        facet_reading_a1: facets,
    };
    Ok(Ra3Report {
        series,
        facets,
        tau_surd,
        tau: mid.to_f64().unwrap_or(f64::NAN),
        tau_lo,
        tau_hi,
        discrepancy,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVectorEstimate {
    pub fvector: FVector,
    pub euler_holds: bool,
    /// For `n = 4`: `sum (-1)^|T| |T|(|T|+1)` over `|T| >= 2`, and `6 f_3 + 2 f_0`.
    pub weighted_identity: Option<(i64, i64)>,
}

impl FVectorEstimate {
    pub fn weighted_identity_holds(&self) -> Option<bool> {
        self.weighted_identity.map(|(a, b)| a == b)
    }
}

/// `f_(n-l)` read off as the number of finite subsets of size `l`.
pub fn f_vector_estimate(system: &CoxeterSystem, n: usize) -> Result<FVectorEstimate> {
    if !system.is_right_angled() {
        return Err(Error::InvalidInput("system is not right-angled".into()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    let lattice = enumerate_finite_subsets(system)?;
    let counts = lattice.size_counts();
    let count = |l: usize| counts.get(l).copied().unwrap_or(0) as u64;
    let f: Vec<u64> = (0..n).map(|i| count(n - i)).collect();
    let fvector = FVector::new(f)?;
    let weighted_identity = (n == 4).then(|| {
        let lhs = ra_coefficients(system, 4).map(|c| c.weighted_sum).unwrap_or(0);
        (lhs, 6 * fvector.f[3] as i64 + 2 * fvector.f[0] as i64)
    });
    Ok(FVectorEstimate {
        euler_holds: fvector.euler_holds(),
        fvector,
        weighted_identity,
    })
}

/// `Q(-1) = f_0`, nonzero, so `-1` is a zero of order 4 of `[2]^4 / Q`.
pub fn ra4_q_at_minus_one(fv: &FVector) -> Result<BigInt> {
    let v = ra4_denominator(fv)?.eval_rational(&BigRational::from_integer(BigInt::from(-1)));
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{euler_and_volume, steinberg_series, taylor_coefficients};

    fn cell120() -> FVector {
        "600,1200,720,120".parse().unwrap()
    }

    #[test]
    fn cell_120_closed_form() {
        let fv = cell120();
        assert!(fv.euler_holds() && fv.is_simple());
        let s = ra4_series(&fv).unwrap();
        let c = s.complete.as_ref().unwrap();
        assert_eq!(c.denominator, IntPolynomial::from_i64(&[1, -116, 366, -116, 1]));
        assert_eq!(c.blocks, [2, 2, 2, 2]);
        let e = euler_and_volume(&s, 4).unwrap();
        assert_eq!(e.chi, BigRational::new(17.into(), 2.into()));
        let v = e.volume.unwrap();
        assert_eq!(v.coefficient, BigRational::new(34.into(), 3.into()));
        assert_eq!(ra4_volume(&fv).unwrap(), v);
        assert_eq!(taylor_coefficients(&s, 1).unwrap()[1], BigInt::from(120));
    }

    #[test]
    fn cell_120_poles() {
        let p = ra4_poles(&cell120()).unwrap();
        assert_eq!((p.alpha, p.beta, p.gamma), (116, 25440, 12000));
        assert!(p.simple && p.inversive && p.surds_agree);
        let v: Vec<f64> = p.poles.iter().map(|q| q.value).collect();
        for (got, want) in v.iter().zip([0.0088681, 0.3471507, 2.8805936, 112.7633876]) {
            assert!((got - want).abs() < 1e-6, "{got} vs {want}");
        }
        assert!((p.y[0] - (58.0 + 3000f64.sqrt())).abs() < 1e-9);
        assert!((v.iter().product::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn euler_violation_is_rejected() {
        assert!(ra4_series(&"600,1200,721,120".parse().unwrap()).is_err());
        assert!(ra3_series(11).is_err());
    }

    #[test]
    fn gamma_must_be_positive() {
        // Euler holds, but f_3^2 <= 4 f_0.
        let fv: FVector = "100,200,110,10".parse().unwrap();
        assert!(fv.euler_holds());
        assert!(ra4_poles(&fv).is_err());
    }

    #[test]
    fn dodecahedron_closed_form() {
        let r = ra3_series(12).unwrap();
        assert_eq!(*r.series.reduced.den(), IntPolynomial::from_i64(&[1, -9, 9, -1]));
        assert_eq!(r.tau_surd, "4 + sqrt(15)");
        let tau = 4.0 + 15f64.sqrt();
        assert!(r.tau_lo.to_f64().unwrap() < tau && tau < r.tau_hi.to_f64().unwrap());
        assert!((&r.tau_hi - &r.tau_lo) < BigRational::new(1.into(), 100_000_000.into()));
        assert!(!r.discrepancy.readings_agree);
        assert_eq!(r.discrepancy.vertex_reading_a1, 20);
        assert_eq!(r.discrepancy.vertex_reading, IntPolynomial::from_i64(&[1, -17, 17, -1]));
        assert_eq!(euler_and_volume(&r.series, 3).unwrap().pole_at_one, 1);
    }

    #[test]
    fn hexagon_coefficients_and_fvector() {
        let h = crate::growth::tests::hexagon();
        let c = ra_coefficients(&h, 2).unwrap();
        assert_eq!(c.b1, BigInt::from(-4));
        assert_eq!(c.b2, Some(BigInt::one()));
        let e = f_vector_estimate(&h, 2).unwrap();
        assert_eq!(e.fvector.f, [6, 6]);
        assert!(e.euler_holds);
        assert!(is_right_angled(&h));
        let s = steinberg_series(&h).unwrap();
        assert!(s.reciprocity_holds(2));
    }

    #[test]
    fn minus_one_value() {
        assert_eq!(ra4_q_at_minus_one(&cell120()).unwrap(), BigInt::from(600));
    }
}
