//! Blocks `[k] = 1 + x + ... + x^(k-1)`, cyclotomic polynomials and
//! stripping of cyclotomic factors.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// The block `[k]`, the polynomial with `k` coefficients all equal to 1.
pub fn block(k: u32) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(Error::InvalidInput("block size must be at least 1".into()));
    }
    Ok(IntPolynomial::from_coeffs(vec![BigInt::one(); k as usize]))
}

/// Product of blocks `[n_1] ... [n_r]`.
pub fn block_product(blocks: &[u32]) -> Result<IntPolynomial> {
    blocks.iter().map(|&k| block(k)).product()
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn table() -> &'static Mutex<HashMap<u64, IntPolynomial>> {
    static TABLE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, `(x^d - 1) / prod_{e | d, e < d} Phi_e`.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = table().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut num = IntPolynomial::monomial(BigInt::one(), d as usize);
    num = &num - &IntPolynomial::one();
    for e in divisors(d) {
        if e < d {
            num = num.exact_div(&cyclotomic(e)).expect("Phi_e divides x^d - 1");
        }
    }
    table().lock().unwrap().insert(d, num.clone());
    num
}

/// `unit * prod_d Phi_d^exponents[d] * remainder`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycFactorization {
    pub exponents: BTreeMap<u64, u32>,
    pub remainder: IntPolynomial,
    pub unit: i8,
}

impl CycFactorization {
    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut acc = self.cyclotomic_part();
        acc = &acc * &self.remainder;
        if self.unit < 0 {
            acc = -acc;
        }
        acc
    }

    pub fn cyclotomic_part(&self) -> IntPolynomial {
        self.exponents.iter().map(|(&d, &e)| cyclotomic(d).pow(e)).product()
    }

    pub fn exponent(&self, d: u64) -> u32 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    /// Renders e.g. `Phi_2^4 Phi_8`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(d, e)| {
                if *e == 1 {
                    format!("Phi_{d}")
                } else {
                    format!("Phi_{d}^{e}")
                }
            })
            .collect();
        if !self.remainder.is_one() {
            parts.push(format!("({})", self.remainder));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        let body = parts.join(" ");
        if self.unit < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// Cyclotomic exponent vector of a block product: `Phi_d` appears once for
/// every block `[n]` with `d | n`, `d > 1`.
pub fn block_exponents(blocks: &[u32]) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for &n in blocks {
        for d in divisors(n as u64) {
            if d > 1 {
                *out.entry(d).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Strips every cyclotomic factor, greedily by ascending index.
///
/// Candidates are all `d` with `phi(d) <= deg`; since `phi(d) >= sqrt(d/2)`
/// it suffices to scan `d <= 2 deg^2`.
pub fn cyclotomic_factor(p: &IntPolynomial) -> Result<CycFactorization> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let mut rest = p.clone();
    let mut exponents = BTreeMap::new();
    let bound = 2 * (p.deg() as u64).pow(2);
    let mut d = 1;
    while d <= bound && rest.deg() > 0 {
        if euler_phi(d) as usize <= rest.deg() {
            let phi_d = cyclotomic(d);
            while rest.deg() >= phi_d.deg() {
                match rest.exact_div(&phi_d) {
                    Ok(q) => {
                        rest = q;
                        *exponents.entry(d).or_insert(0) += 1;
                    }
                    Err(_) => break,
                }
            }
        }
        d += 1;
    }
    let unit = if rest.leading().is_some_and(|c| c.is_negative()) {
        rest = -rest;
        -1
    } else {
        1
    };
    Ok(CycFactorization {
        exponents,
        remainder: rest,
        unit,
    })
}
