//! Simultaneous approximation of all complex roots (Aberth-Ehrlich) with
//! a posteriori inclusion radii computed in exact arithmetic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// `re + i*im` together with a radius of a disk certified to contain a root.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
}

impl ComplexRoot {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Exact `|p(z) / p'(z)|` for `z` with dyadic components.
///
/// Writes `z = (A + iB)/D` with a common power-of-two `D` and evaluates the
/// homogenized values over the Gaussian integers.
pub fn newton_ratio(p: &IntPolynomial, re: f64, im: f64) -> Option<f64> {
    let re_q = BigRational::from_float(re)?;
    let im_q = BigRational::from_float(im)?;
    let d = num_integer::Integer::lcm(re_q.denom(), im_q.denom());
    let a = re_q.numer() * (&d / re_q.denom());
    let b = im_q.numer() * (&d / im_q.denom());
    let eval = |q: &IntPolynomial| -> (BigInt, BigInt) {
        // acc_k = acc_{k-1} * (A + iB) + c * D^k
        let mut acc = (BigInt::zero(), BigInt::zero());
        let mut dpow = BigInt::from(1);
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            if k > 0 {
                dpow *= &d;
            }
            let re = &acc.0 * &a - &acc.1 * &b + c * &dpow;
            let im = &acc.0 * &b + &acc.1 * &a;
            acc = (re, im);
        }
        acc
    };
    let dp = p.derivative();
    let (pr, pi) = eval(p);
    let (qr, qi) = eval(&dp);
    let num = &pr * &pr + &pi * &pi;
    let den = (&qr * &qr + &qi * &qi) * &d * &d;
    if den.is_zero() {
        return None;
    }
    if num.is_zero() {
        return Some(0.0);
    }
    BigRational::new(num, den).to_f64().map(f64::sqrt)
}

/// All `deg p` complex roots of a square-free `p`.
///
/// Initial points lie on a circle of radius from the Cauchy-type bound,
/// with a fixed angular offset so the run is deterministic.
pub fn aberth_roots(p: &IntPolynomial, max_iter: usize) -> Result<Vec<ComplexRoot>> {
    let n = p.deg();
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no root set".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let c: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|x| Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    if c.iter().any(|z| !z.re.is_finite()) {
        return Err(Error::Limit("coefficients exceed the floating-point range".into()));
    }
    let lc = c[n].re.abs();
    let c0 = c[0].re.abs();
    let upper = 1.0 + c[..n].iter().map(|z| z.re.abs() / lc).fold(0.0, f64::max);
    let lower = if c0 > 0.0 {
        c0 / (c0 + c[1..].iter().map(|z| z.re.abs()).fold(0.0, f64::max))
    } else {
        0.0
    };
    let radius = (upper * lower.max(1e-300)).sqrt().clamp(lower.max(1e-12), upper);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..max_iter {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (pv, dv) = horner(&c, z[i]);
            if pv == Complex64::zero() {
                continue;
            }
            let ratio = pv / dv;
            let mut s = Complex64::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s += (z[i] - zj).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.re.is_finite() && w.im.is_finite() {
                z[i] -= w;
                max_step = max_step.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if max_step < 1e-17 {
            break;
        }
    }
    let mut out = Vec::with_capacity(n);
    for zi in z {
        let r = newton_ratio(p, zi.re, zi.im)
            .ok_or_else(|| Error::Integrity("derivative vanishes at an approximate root".into()))?;
        out.push(ComplexRoot {
            re: zi.re,
            im: zi.im,
            radius: n as f64 * r * (1.0 + 1e-12),
        });
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

/// True when the inclusion disks are pairwise disjoint, so each holds exactly one root.
pub fn disks_disjoint(roots: &[ComplexRoot]) -> bool {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = (roots[i].re - roots[j].re).hypot(roots[i].im - roots[j].im);
            if d <= roots[i].radius + roots[j].radius {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_and_quadratic() {
        let p = IntPolynomial::from_i64(&[1, 0, 0, 0, 1]);
        let r = aberth_roots(&p, 500).unwrap();
        assert_eq!(r.len(), 4);
        for z in &r {
            assert!((z.modulus() - 1.0).abs() < 1e-12);
            assert!(z.radius < 1e-10);
        }
        assert!(disks_disjoint(&r));
        let q = IntPolynomial::from_i64(&[1, -116, 366, -116, 1]);
        let r = aberth_roots(&q, 500).unwrap();
        assert!((r[3].re - 112.763388).abs() < 1e-5);
        assert!(r.iter().all(|z| z.im.abs() < 1e-9));
    }

    #[test]
    fn lehmer_roots() {
        let l = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let r = aberth_roots(&l, 500).unwrap();
        let on_circle = r.iter().filter(|z| (z.modulus() - 1.0).abs() < 1e-9).count();
        assert_eq!(on_circle, 8);
        assert!(disks_disjoint(&r));
    }
}
