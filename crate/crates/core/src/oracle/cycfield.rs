//! The ring `Z[zeta_N]` with elements reduced modulo `Phi_N`.
//!
//! Entries of the reflection matrices are integer combinations of
//! `2 cos(pi/m) = zeta_2m + zeta_2m^-1`, so integer coefficients suffice.
//! Arithmetic is checked `i64`; overflow is reported as a limit error.

use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{cyclotomic, euler_phi};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycField {
    conductor: u64,
    /// `Phi_N` without its leading 1, ascending.
    modulus: Arc<Vec<i64>>,
}

/// Coefficients on `1, zeta, ..., zeta^(phi(N)-1)`.
pub type Elem = Vec<i64>;

fn overflow() -> Error {
    Error::Limit("integer overflow in cyclotomic arithmetic".into())
}

impl CycField {
    pub fn new(conductor: u64) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidInput("conductor must be positive".into()));
        }
        let phi = cyclotomic(conductor);
        let modulus = phi.coeffs()[..phi.deg()]
            .iter()
            .map(|c| c.to_i64().ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycField {
            conductor,
            modulus: Arc::new(modulus),
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len()
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.degree()]
    }

    pub fn int(&self, v: i64) -> Elem {
        let mut e = self.zero();
        e[0] = v;
        e
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Result<Elem> {
        let n = self.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let mut raw = vec![0i64; k + 1];
        raw[k] = 1;
        self.reduce(raw)
    }

    /// `2 cos(pi/m) = zeta_2m + zeta_2m^-1`; needs `2m | N`.
    pub fn two_cos_pi_over(&self, m: u64) -> Result<Elem> {
        if !self.conductor.is_multiple_of(2 * m) {
            return Err(Error::InvalidInput(format!(
                "2cos(pi/{m}) is not in Q(zeta_{})",
                self.conductor
            )));
        }
        let step = (self.conductor / (2 * m)) as i64;
        self.add(&self.zeta_pow(step)?, &self.zeta_pow(-step)?)
    }

    fn reduce(&self, mut raw: Vec<i64>) -> Result<Elem> {
        let d = self.degree();
        // x^d = -sum modulus[i] x^i
        for top in (d..raw.len()).rev() {
            let c = raw[top];
            if c == 0 {
                continue;
            }
            raw[top] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                if m != 0 {
                    let t = c.checked_mul(m).ok_or_else(overflow)?;
                    raw[top - d + i] = raw[top - d + i].checked_sub(t).ok_or_else(overflow)?;
                }
            }
        }
        raw.resize(d, 0);
        Ok(raw)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_add(*y).ok_or_else(overflow))
            .collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_sub(*y).ok_or_else(overflow))
            .collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        let d = self.degree();
        let mut raw = vec![0i64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let t = x.checked_mul(y).ok_or_else(overflow)?;
                    raw[i + j] = raw[i + j].checked_add(t).ok_or_else(overflow)?;
                }
            }
        }
        self.reduce(raw)
    }

    /// `a + c * b`.
    pub fn mul_add(&self, a: &Elem, c: &Elem, b: &Elem) -> Result<Elem> {
        self.add(a, &self.mul(c, b)?)
    }
}

/// Smallest conductor containing `2 cos(pi/m)` for all given `m`: `lcm(2m)`,
/// dropping the labels 2, whose cosine is 0.
pub fn conductor_for(labels: impl IntoIterator<Item = u64>) -> u64 {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    labels
        .into_iter()
        .filter(|&m| m >= 3)
        .fold(1, |acc, m| acc / gcd(acc, 2 * m) * (2 * m))
}

pub fn field_degree(conductor: u64) -> u64 {
    euler_phi(conductor)
}
