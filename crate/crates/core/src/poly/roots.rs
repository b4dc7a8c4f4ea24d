//! Exact real-root isolation by Sturm sequences, and certified refinement.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{serde_exact, IntPolynomial};
use crate::error::{Error, Result};

/// Interval endpoint; infinite endpoints are replaced by a Cauchy bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Self {
        Bound::Finite(BigRational::from_integer(v.into()))
    }
}

/// One distinct real root inside `[lo, hi]`; `lo == hi` pins an exact rational root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    #[serde(serialize_with = "serde_exact::rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "serde_exact::rational")]
    pub hi: BigRational,
    pub multiplicity: u32,
}

impl IsolatedRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    pub intervals: Vec<IsolatedRoot>,
}

impl RootIsolation {
    pub fn distinct(&self) -> usize {
        self.intervals.len()
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.intervals.iter().map(|r| r.multiplicity).sum()
    }

    pub fn all_simple(&self) -> bool {
        self.intervals.iter().all(|r| r.multiplicity == 1)
    }
}

/// `1 + max |a_i / a_n|`; every root has modulus strictly below it.
pub fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let mut m = BigRational::zero();
    for c in &p.coeffs()[..p.deg()] {
        let v = BigRational::new(c.abs(), lc.clone());
        if v > m {
            m = v;
        }
    }
    m + BigRational::one()
}

fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].deg() == 0 {
            break;
        }
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        let delta = a.deg() - b.deg();
        let prem = a.pseudo_rem(b).expect("nonzero divisor");
        // prem = lc^(delta+1) * rem, so -rem has the sign of -sign(lc)^(delta+1) * prem.
        let flip = b.leading().unwrap().is_negative() && delta % 2 == 0;
        let next = if flip { prem } else { -prem };
        if next.is_zero() {
            break;
        }
        seq.push(next.content_free());
    }
    seq
}

fn variations(seq: &[IntPolynomial], x: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut v = 0;
    for q in seq {
        let s = q.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn linear_factor(r: &BigRational) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![-r.numer().clone(), r.denom().clone()])
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Distinct roots of a square-free polynomial in the open interval `(lo, hi)`.
fn isolate_square_free(s: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Vec<(BigRational, BigRational)> {
    let mut s = s.clone();
    let mut out = Vec::new();
    for end in [lo, hi] {
        if s.deg() > 0 && s.sign_at(end) == Ordering::Equal {
            s = s.exact_div(&linear_factor(end)).expect("rational root divides");
        }
    }
    let mut seq = sturm_sequence(&s);
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        if s.deg() == 0 {
            break;
        }
        let count = variations(&seq, &a) - variations(&seq, &b);
        match count {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let m = half(&a, &b);
                if s.sign_at(&m) == Ordering::Equal {
                    s = s.exact_div(&linear_factor(&m)).expect("rational root divides");
                    seq = sturm_sequence(&s);
                    out.push((m.clone(), m.clone()));
                }
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    let pinned = out.into_iter().map(|(a, b)| pin_rational(&s, a, b));
    let mut out: Vec<_> = pinned.collect();
    out.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
    out
}

const PIN_LC_LIMIT: u64 = 1 << 20;

/// Collapses an isolating interval of a square-free `s` onto its root when
/// that root is rational. A rational root `u/v` has `v | lc(s)`; once the
/// interval is narrower than `1/|lc|` it holds at most one such candidate per
/// denominator `v`.
fn pin_rational(s: &IntPolynomial, mut a: BigRational, mut b: BigRational) -> (BigRational, BigRational) {
    if a == b {
        return (a, b);
    }
    let Some(lc) = s.leading().and_then(|c| c.abs().to_u64()) else {
        return (a, b);
    };
    if lc > PIN_LC_LIMIT {
        return (a, b);
    }
    let limit = BigRational::new(BigInt::one(), BigInt::from(lc));
    let sa = s.sign_at(&a);
    while &b - &a >= limit {
        let m = half(&a, &b);
        match s.sign_at(&m) {
            Ordering::Equal => return (m.clone(), m),
            sm if sm == sa => a = m,
            _ => b = m,
        }
    }
    for v in (1..=lc).filter(|v| lc % v == 0) {
        let v = BigInt::from(v);
        let u = (&a * BigRational::from_integer(v.clone())).floor().to_integer() + BigInt::one();
        let c = BigRational::new(u, v);
        if c > a && c < b && s.sign_at(&c) == Ordering::Equal {
            return (c.clone(), c);
        }
    }
    (a, b)
}

fn resolve(b: &Bound, cauchy: &BigRational) -> BigRational {
    match b {
        Bound::NegInf => -cauchy.clone(),
        Bound::PosInf => cauchy.clone(),
        Bound::Finite(x) => x.clone(),
    }
}

struct Candidate {
    lo: BigRational,
    hi: BigRational,
    factor: usize,
}

impl Candidate {
    /// Halves the interval of a simple root of `q`, pinning it if the midpoint is the root.
    fn halve(&mut self, q: &IntPolynomial) {
        if self.lo == self.hi {
            return;
        }
        let m = half(&self.lo, &self.hi);
        match q.sign_at(&m) {
            Ordering::Equal => {
                self.lo = m.clone();
                self.hi = m;
            }
            s if s == q.sign_at(&self.lo) => self.lo = m,
            _ => self.hi = m,
        }
    }
}

/// All real roots of `p` in the open interval `(lo, hi)` with multiplicities.
///
/// Each square-free factor of the Yun decomposition is isolated separately;
/// intervals from different factors are then halved until disjoint.
pub fn sturm_real_roots(p: &IntPolynomial, lo: Bound, hi: Bound) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::InvalidInput(
            "cannot isolate roots of the zero polynomial".into(),
        ));
    }
    if p.deg() == 0 {
        return Ok(RootIsolation::default());
    }
    let cb = cauchy_bound(p);
    let lo = resolve(&lo, &cb);
    let hi = resolve(&hi, &cb);
    if lo >= hi {
        return Err(Error::InvalidInput("empty root isolation interval".into()));
    }
    let factors = p.square_free_decomposition();
    let mut raw = Vec::new();
    for (factor, q) in factors.iter().enumerate() {
        if q.deg() == 0 {
            continue;
        }
        for (lo, hi) in isolate_square_free(q, &lo, &hi) {
            raw.push(Candidate { lo, hi, factor });
        }
    }
    // Factors are coprime, so overlapping intervals hold distinct roots.
    loop {
        raw.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
        let Some(k) = (1..raw.len()).find(|&k| raw[k].lo <= raw[k - 1].hi) else {
            break;
        };
        for idx in [k - 1, k] {
            let f = raw[idx].factor;
            raw[idx].halve(&factors[f]);
        }
    }
    Ok(RootIsolation {
        intervals: raw
            .into_iter()
            .map(|c| IsolatedRoot {
                lo: c.lo,
                hi: c.hi,
                multiplicity: c.factor as u32 + 1,
            })
            .collect(),
    })
}

fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Approximates the unique root of `p` in `[lo, hi]` to within `eps`.
///
/// Newton steps in `f64` propose candidates; a candidate `c` is accepted only
/// when `p` changes sign on `[c - eps/4, c + eps/4]`. Otherwise the interval
/// is bisected exactly.
pub fn refine_root(p: &IntPolynomial, lo: &BigRational, hi: &BigRational, eps: &BigRational) -> Result<BigRational> {
    if p.is_zero() {
        return Err(Error::InvalidInput(
            "cannot refine a root of the zero polynomial".into(),
        ));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidInput("refinement tolerance must be positive".into()));
    }
    let s = p.square_free_part();
    if lo == hi {
        return if s.sign_at(lo) == Ordering::Equal {
            Ok(lo.clone())
        } else {
            Err(Error::InvalidInput(
                "degenerate interval does not contain a root".into(),
            ))
        };
    }
    let (mut a, mut b) = if lo < hi {
        (lo.clone(), hi.clone())
    } else {
        (hi.clone(), lo.clone())
    };
    let root_at = |x: &BigRational| s.sign_at(x) == Ordering::Equal;
    if root_at(&a) || root_at(&b) {
        let open = |a: &BigRational, b: &BigRational| {
            sturm_real_roots(&s, Bound::Finite(a.clone()), Bound::Finite(b.clone())).map(|r| r.distinct())
        };
        match open(&a, &b)? {
            0 if root_at(&a) && root_at(&b) => {
                return Err(Error::InvalidInput("interval does not isolate a single root".into()))
            }
            0 => return Ok(if root_at(&a) { a } else { b }),
            1 => {}
            _ => return Err(Error::InvalidInput("interval does not isolate a single root".into())),
        }
        // One root inside and a different one on the boundary: pull the
        // boundary in until it is no longer a root.
        while root_at(&a) || root_at(&b) {
            let m = half(&a, &b);
            if root_at(&m) {
                return Ok(m);
            }
            if open(&a, &m)? == 1 {
                b = m;
            } else {
                a = m;
            }
        }
    }
    let seq = sturm_sequence(&s);
    if variations(&seq, &a) - variations(&seq, &b) != 1 {
        return Err(Error::InvalidInput("interval does not isolate a single root".into()));
    }
    let ds = s.derivative();
    let quarter = eps / BigRational::from_integer(4.into());
    let mut sa = s.sign_at(&a);
    while &b - &a >= *eps {
        let m = half(&a, &b);
        let mf = m.to_f64().unwrap_or(f64::NAN);
        let guess = mf - s.eval_f64(mf) / ds.eval_f64(mf);
        if guess.is_finite() {
            if let Some(c) = rational_from_f64(guess) {
                if c > a && c < b {
                    let l = &c - &quarter;
                    let r = &c + &quarter;
                    let (sl, sr) = (s.sign_at(&l), s.sign_at(&r));
                    if s.sign_at(&c) == Ordering::Equal || (sl != sr && sl != Ordering::Equal && sr != Ordering::Equal)
                    {
                        return Ok(c);
                    }
                    if sl == Ordering::Equal {
                        return Ok(l);
                    }
                    if sr == Ordering::Equal {
                        return Ok(r);
                    }
                }
            }
        }
        match s.sign_at(&m) {
            Ordering::Equal => return Ok(m),
            sm if sm == sa => {
                a = m;
                sa = sm;
            }
            _ => b = m,
        }
    }
    Ok(half(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn quadratic_in_unit_interval() {
        let iso = sturm_real_roots(&p(&[1, -4, 1]), Bound::int(0), Bound::int(1)).unwrap();
        assert_eq!(iso.distinct(), 1);
        let r = &iso.intervals[0];
        let x = 2.0 - 3f64.sqrt();
        assert!(r.lo.to_f64().unwrap() < x && x < r.hi.to_f64().unwrap());
    }

    #[test]
    fn cubic_with_rational_root() {
        let iso = sturm_real_roots(&p(&[1, -9, 9, -1]), Bound::int(0), Bound::PosInf).unwrap();
        assert_eq!(iso.distinct(), 3);
        assert!(iso.intervals[1].is_exact());
        assert_eq!(iso.intervals[1].lo, q(1, 1));
        assert!(iso.all_simple());
    }

    #[test]
    fn no_positive_root_of_block() {
        let iso = sturm_real_roots(&p(&[1, 1]), Bound::int(0), Bound::PosInf).unwrap();
        assert_eq!(iso.distinct(), 0);
    }

    #[test]
    fn multiplicities_from_yun() {
        // (1 - 3x + x^2)^2 (x + 1)^3 (x - 1/2)
        let f = &(&p(&[1, -3, 1]).pow(2) * &p(&[1, 1]).pow(3)) * &p(&[-1, 2]);
        let iso = sturm_real_roots(&f, Bound::NegInf, Bound::PosInf).unwrap();
        let mults: Vec<u32> = iso.intervals.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![3, 2, 1, 2]);
        assert_eq!(iso.total_multiplicity(), 8);
        for w in iso.intervals.windows(2) {
            assert!(w[0].hi < w[1].lo);
        }
    }

    #[test]
    fn refine_examples() {
        let eps = q(1, 100_000_000);
        let r = refine_root(&p(&[1, -8, 1]), &q(7, 1), &q(8, 1), &eps).unwrap();
        assert!((r.to_f64().unwrap() - (4.0 + 15f64.sqrt())).abs() < 1e-8);
        assert_eq!(refine_root(&p(&[-1, 1]), &q(0, 1), &q(2, 1), &eps).unwrap(), q(1, 1));
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let r = refine_root(&lehmer, &q(1, 1), &q(2, 1), &q(1, 1_000_000)).unwrap();
        assert!((r.to_f64().unwrap() - 1.176281).abs() < 2e-6);
        assert!(refine_root(&p(&[1, -4, 1]), &q(0, 1), &q(5, 1), &eps).is_err());
        // (x - 1)(x - 1/2) on [0, 1]: the endpoint root must not block the inner one.
        let r = refine_root(&p(&[1, -3, 2]), &q(0, 1), &q(1, 1), &eps).unwrap();
        assert_eq!(r, q(1, 2));
    }
}
