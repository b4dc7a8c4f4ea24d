//! Euler characteristic, covolume, and the alternating subgroup-size sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::GrowthSeries;
use crate::coxeter::{enumerate_finite_subsets, CoxeterSystem};
use crate::error::{Error, Result};
use crate::poly::{serde_exact, IntPolynomial};

/// `vol = coefficient * pi^pi_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Volume {
    pub pi_power: u32,
    #[serde(serialize_with = "serde_exact::rational")]
    pub coefficient: BigRational,
}

impl std::fmt::Display for Volume {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pi = match self.pi_power {
            0 => String::new(),
            1 => "pi".into(),
            k => format!("pi^{k}"),
        };
        let c = &self.coefficient;
        match (c.numer().is_one(), c.denom().is_one()) {
            (true, true) => write!(f, "{pi}"),
            (false, true) => write!(f, "{}*{pi}", c.numer()),
            (true, false) => write!(f, "{pi}/{}", c.denom()),
            (false, false) => write!(f, "{}*{pi}/{}", c.numer(), c.denom()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub dimension: usize,
    /// `f_S(1)`, absent when `f_S` has a pole at 1.
    #[serde(serialize_with = "serde_exact::opt_rational")]
    pub f_at_one: Option<BigRational>,
    #[serde(serialize_with = "serde_exact::rational")]
    pub chi: BigRational,
    /// Order of the pole of `f_S` at 1 (0 when regular).
    pub pole_at_one: u32,
    pub volume: Option<Volume>,
}

fn double_factorial_odd(m: u32) -> BigInt {
    // (2m - 1)!!
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k - 1))
}

/// `chi = 1 / f_S(1)`; for even `n = 2m`, `vol = (-1)^m chi vol(S^n) / 2`
/// with `vol(S^2m) = 2^(m+1) pi^m / (2m-1)!!`. Odd `n` requires a pole at 1.
pub fn euler_and_volume(series: &GrowthSeries, n: usize) -> Result<EulerReport> {
    let one = BigRational::one();
    let (p, q) = (series.reduced.num(), series.reduced.den());
    let x_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
    let pole = q.root_multiplicity(&x_minus_1) as i64 - p.root_multiplicity(&x_minus_1) as i64;
    let pole_at_one = pole.max(0) as u32;
    if n % 2 == 1 {
        if pole_at_one == 0 {
            return Err(Error::Integrity(format!("odd dimension {n} but f_S has no pole at 1")));
        }
        return Ok(EulerReport {
            dimension: n,
            f_at_one: None,
            chi: BigRational::zero(),
            pole_at_one,
            volume: None,
        });
    }
    if pole_at_one > 0 {
        return Err(Error::Integrity(format!("even dimension {n} but f_S has a pole at 1")));
    }
    let f1 = series.reduced.eval_rational(&one)?;
    if f1.is_zero() {
        return Err(Error::Integrity("f_S(1) = 0".into()));
    }
    let chi = one / &f1;
    let m = (n / 2) as u32;
    let volume = (m > 0).then(|| {
        let sphere = BigRational::new(BigInt::from(2).pow(m + 1), double_factorial_odd(m));
        let mut coefficient = &chi * sphere / BigRational::from_integer(2.into());
        if m % 2 == 1 {
            coefficient = -coefficient;
        }
        Volume {
            pi_power: m,
            coefficient,
        }
    });
    Ok(EulerReport {
        dimension: n,
        f_at_one: Some(f1),
        chi,
        pole_at_one,
        volume,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeTerm {
    pub size: usize,
    pub finite: u64,
    pub infinite: u64,
    /// `(-1)^size * size * infinite`.
    pub infinite_term: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributionReport {
    pub terms: Vec<SizeTerm>,
    pub finite_sum: i64,
    pub infinite_sum: i64,
    /// `finite_sum = (-1)^n |S|` and `infinite_sum = (-1)^(n+1) |S|`.
    pub check: bool,
}

impl DistributionReport {
    /// Renders the nonzero infinite terms, e.g. `2*1 - 3*4 + 4*5 - 5*1 = 5`.
    pub fn infinite_expansion(&self) -> String {
        let mut s = String::new();
        for t in self.terms.iter().filter(|t| t.infinite > 0) {
            let neg = t.size % 2 == 1;
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&format!("{}*{}", t.size, t.infinite));
        }
        if s.is_empty() {
            s.push('0');
        }
        format!("{s} = {}", self.infinite_sum)
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Sums of `(-1)^|T| |T|` over finite and over infinite `G_T`.
pub fn subgroup_distribution(system: &CoxeterSystem, n: usize) -> Result<DistributionReport> {
    let lattice = enumerate_finite_subsets(system)?;
    let s = system.rank();
    let counts = lattice.size_counts();
    let sign = |k: usize| if k.is_multiple_of(2) { 1i64 } else { -1 };
    let terms: Vec<SizeTerm> = (0..=s)
        .map(|k| {
            let finite = counts[k] as u64;
            let infinite = binomial(s, k) - finite;
            SizeTerm {
                size: k,
                finite,
                infinite,
                infinite_term: sign(k) * k as i64 * infinite as i64,
            }
        })
        .collect();
    let finite_sum = terms
        .iter()
        .map(|t| sign(t.size) * t.size as i64 * t.finite as i64)
        .sum();
    let infinite_sum = terms.iter().map(|t| t.infinite_term).sum();
    let s = s as i64;
    Ok(DistributionReport {
        check: finite_sum == sign(n) * s && infinite_sum == -sign(n) * s,
        terms,
        finite_sum,
        infinite_sum,
    })
}
