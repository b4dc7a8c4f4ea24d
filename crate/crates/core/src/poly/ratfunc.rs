//! Reduced rational functions `num / den` with integer polynomial parts.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Always reduced: `gcd(num, den)` is a unit and the integer contents are
/// coprime. Sign convention: `den(0) > 0` if `den(0) != 0`, otherwise the
/// leading coefficient of `den` is positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        let c = num.content().gcd(&den.content());
        if c > BigInt::from(1) {
            num = num.exact_div(&IntPolynomial::constant(c.clone()))?;
            den = den.exact_div(&IntPolynomial::constant(c))?;
        }
        let flip = match den.coeffs().first() {
            Some(c0) if !c0.is_zero() => c0.is_negative(),
            _ => den.leading().is_some_and(|l| l.is_negative()),
        };
        if flip {
            num = -num;
            den = -den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    /// `c / p`.
    pub fn reciprocal_of(p: &IntPolynomial) -> Result<Self> {
        Self::new(IntPolynomial::one(), p.clone())
    }

    /// `a / b` with integer constants.
    pub fn constant(a: i64, b: i64) -> Result<Self> {
        Self::new(IntPolynomial::from_i64(&[a]), IntPolynomial::from_i64(&[b]))
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `f(1/x)`, via coefficient reversal with a shared degree shift.
    pub fn at_reciprocal(&self) -> Result<Self> {
        let d = self.num.deg().max(self.den.deg());
        Self::new(self.num.substitute_reciprocal(d)?, self.den.substitute_reciprocal(d)?)
    }

    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_rational(x) / d)
    }

    /// Value at 0 (requires `den(0) != 0`).
    pub fn at_zero(&self) -> Result<BigRational> {
        self.eval_rational(&BigRational::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn scale(&self, a: i64, b: i64) -> Result<Self> {
        Self::new(self.num.scale(&BigInt::from(a)), self.den.scale(&BigInt::from(b)))
    }

    /// First `n` power-series coefficients at 0; requires `den(0) != 0`.
    pub fn series(&self, n: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::InvalidInput("denominator vanishes at 0".into()));
        }
        let d0 = BigRational::from_integer(d0);
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for j in 1..=k.min(self.den.deg()) {
                acc -= &out[k - j] * BigRational::from_integer(self.den.coeff(j));
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let n = if sign > 0 {
            &(&self.num * &other.den) + &(&other.num * &self.den)
        } else {
            &(&self.num * &other.den) - &(&other.num * &self.den)
        };
        Self::new(n, &self.den * &other.den).expect("product of nonzero denominators")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, 1)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, -1)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

/// Panics on division by the zero function.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("division by zero function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, f| &acc + &f)
    }
}
