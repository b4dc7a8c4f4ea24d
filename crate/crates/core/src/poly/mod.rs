//! Exact univariate polynomials with arbitrary-precision integer coefficients.
//!
//! `IntPolynomial` stores coefficients in ascending degree order. The zero
//! polynomial is the empty vector; otherwise the last coefficient is nonzero.

pub mod complex;
pub mod cyclotomic;
pub mod ratfunc;
pub mod roots;

pub use cyclotomic::{
    block, block_exponents, block_product, cyclotomic, cyclotomic_factor, divisors, euler_phi, CycFactorization,
};
pub use ratfunc::RationalFunction;
pub use roots::{refine_root, sturm_real_roots, Bound, IsolatedRoot, RootIsolation};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * x^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `p(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Quotient and remainder over the integers.
    ///
    /// Fails with `InexactDivision` as soon as a quotient coefficient would be
    /// non-integral; callers that only need the remainder over Q should use
    /// `pseudo_rem`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lc = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.deg() - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, always with
    /// exactly that power of the leading coefficient.
    pub fn pseudo_rem(&self, b: &Self) -> Result<Self> {
        let lc = b.leading().ok_or(Error::DivisionByZero)?.clone();
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return Ok(self.clone());
        }
        let mut r = self.coeffs.clone();
        for i in (db..=self.deg()).rev() {
            let top = r[i].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            if !top.is_zero() {
                for (j, d) in b.coeffs.iter().enumerate() {
                    r[i - db + j] -= &top * d;
                }
            }
        }
        Ok(Self::from_coeffs(r))
    }

    /// Gcd of all coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Divides out the positive content, keeping the sign.
    pub(crate) fn content_free(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Polynomial gcd, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficients reversed: `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// `x^total_deg * p(1/x)` as a polynomial; requires `total_deg >= deg p`.
    pub fn substitute_reciprocal(&self, total_deg: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if total_deg < self.deg() {
            return Err(Error::InvalidInput(format!(
                "reciprocal substitution degree {total_deg} is below the polynomial degree {}",
                self.deg()
            )));
        }
        Ok(self.reverse().shift(total_deg - self.deg()))
    }

    /// `p = x^deg p(1/x)`.
    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `p = -x^deg p(1/x)`.
    pub fn is_antipalindromic(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().zip(self.coeffs.iter().rev()).all(|(a, b)| a == &-b)
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(x)` at a rational point, via the homogenized integer
    /// value `den^deg * p(num/den)` (den > 0).
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (k, c) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                den_pow *= den;
            }
            acc = acc * num + c * &den_pow;
        }
        match acc.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Multiplicity of `root` as a root, for a rational root `num/den`.
    pub fn root_multiplicity(&self, linear: &Self) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut m = 0;
        while let Ok(q) = p.exact_div(linear) {
            p = q;
            m += 1;
        }
        m
    }

    /// Multiplicity of `-1` as a root.
    pub fn multiplicity_at_minus_one(&self) -> u32 {
        self.root_multiplicity(&Self::from_i64(&[1, 1]))
    }

    /// Square-free decomposition `p = c * prod q_i^i` (Yun); entry `i-1` holds `q_i`.
    ///
    /// Every divisor used is primitive, so all quotients stay integral.
    pub fn square_free_decomposition(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.exact_div(&a).expect("gcd divides f");
        let mut c = df.exact_div(&a).expect("gcd divides f'");
        while b.deg() > 0 {
            let d = &c - &b.derivative();
            let g = b.gcd(&d);
            b = b.exact_div(&g).expect("gcd divides b");
            c = d.exact_div(&g).expect("gcd divides d");
            out.push(g);
        }
        while out.last().is_some_and(|q| q.deg() == 0) {
            out.pop();
        }
        out
    }

    /// Square-free part `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.deg() == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .exact_div(&g)
            .expect("gcd divides p")
            .primitive_part()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Renders `1 - 116*x + 366*x^2 - 116*x^3 + x^4` style.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs(
            (0..n)
                .map(|i| {
                    let mut c = self.coeff(i);
                    if let Some(d) = rhs.coeffs.get(i) {
                        c += d;
                    }
                    c
                })
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

/// Serializes a big integer as an exact JSON number.
pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Number {
    c.to_string().parse().expect("integer literal is a valid JSON number")
}

pub(crate) fn bigint_from_json(n: &serde_json::Number) -> Option<BigInt> {
    n.to_string().parse().ok()
}

/// JSON: ascending coefficient array of exact integers.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&bigint_to_json(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IntPolynomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(n) = seq.next_element::<serde_json::Number>()? {
                    let c =
                        bigint_from_json(&n).ok_or_else(|| serde::de::Error::custom(format!("not an integer: {n}")))?;
                    coeffs.push(c);
                }
                Ok(IntPolynomial::from_coeffs(coeffs))
            }
        }
        d.deserialize_seq(V)
    }
}

/// Serde helpers for big integers and rationals as exact JSON values.
pub mod serde_exact {
    use super::*;

    pub fn bigint<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        bigint_to_json(c).serialize(s)
    }

    pub fn bigint_vec<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for c in v {
            seq.serialize_element(&bigint_to_json(c))?;
        }
        seq.end()
    }

    pub fn opt_bigint<S: Serializer>(c: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match c {
            Some(c) => bigint_to_json(c).serialize(s),
            None => s.serialize_none(),
        }
    }

    /// Rationals render as `"p/q"` strings (or `"p"` for integers).
    pub fn rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn opt_rational<S: Serializer>(q: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&q.to_string()),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display_matches_report_style() {
        assert_eq!(
            p(&[1, -116, 366, -116, 1]).to_string(),
            "1 - 116*x + 366*x^2 - 116*x^3 + x^4"
        );
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn exact_div_rejects_remainder() {
        assert_eq!(p(&[1, 1, 1]).exact_div(&p(&[1, 1])), Err(Error::InexactDivision));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn reverse_of_palindrome() {
        let q = p(&[1, -116, 366, -116, 1]);
        assert_eq!(q.reverse(), q);
        assert!(q.is_palindromic());
        assert!(p(&[1, -9, 9, -1]).is_antipalindromic());
    }

    #[test]
    fn substitute_reciprocal_pads_degree() {
        let q = p(&[1, 2]);
        assert_eq!(q.substitute_reciprocal(3).unwrap(), p(&[0, 0, 2, 1]));
        assert!(q.substitute_reciprocal(0).is_err());
    }

    #[test]
    fn gcd_is_primitive_positive() {
        let a = &p(&[-1, 1]) * &p(&[2, 3]);
        let b = &p(&[-1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(a.scale(&BigInt::from(-6)).gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[4]).gcd(&p(&[6])), p(&[1]));
    }

    #[test]
    fn sign_at_rational_points() {
        let q = p(&[1, -4, 1]);
        let quarter = BigRational::new(1.into(), 4.into());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(q.sign_at(&quarter), Ordering::Greater);
        assert_eq!(q.sign_at(&half), Ordering::Less);
        assert_eq!(p(&[-1, 2]).sign_at(&half), Ordering::Equal);
        assert_eq!(q.eval_rational(&half), BigRational::new((-3).into(), 4.into()));
    }

    #[test]
    fn square_free_decomposition_recovers_powers() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 0, 1]);
        let f = &(&a * &b.pow(2)) * &p(&[2, 1]).pow(3);
        let dec = f.square_free_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], a);
        assert_eq!(dec[1], b);
        assert_eq!(dec[2], p(&[2, 1]));
        assert_eq!(f.square_free_part(), &(&a * &b) * &p(&[2, 1]));
    }

    #[test]
    fn json_round_trip_keeps_big_coefficients() {
        let big = IntPolynomial::from_coeffs(vec![BigInt::from(10).pow(40), BigInt::from(-3)]);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[10000000000000000000000000000000000000000,-3]");
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
    }
}
