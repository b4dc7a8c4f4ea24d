//! Denominator coefficients `b_k` of the complete form computed from the
//! blocks and the finite subgroups alone, without the Steinberg sum.
//!
//! With `P_k = (1/P)^(k)(0)` and `P^tau_k = sum_{|T|>=2} (-1)^|T| (1/f_T)^(k)(0)`:
//!
//! ```text
//! k! b_k = (-1)^(n+k+1) k! |S| + (-1)^n P^tau_k - P_k + B_k,
//! B_k    = -sum_{j=1}^{k-1} k!/(k-j)! b_j P_(k-j).
//! ```
//!
//! Derivatives of block products at 0 come from the signed subset sums
//! `sigma_s = sum_X (-1)^|X| [n_X = s]`, read off `prod (1 - y^(n_i))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::GrowthSeries;
use crate::error::{Error, Result};
use crate::poly::serde_exact;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// `k! / (k-j)!`.
fn falling(k: usize, j: usize) -> BigInt {
    (k - j + 1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

fn binomial(k: usize, j: usize) -> BigInt {
    falling(k, j) / factorial(j)
}

/// Coefficients of `prod (1 - y^(n_i))`: entry `s` is `sum_X (-1)^|X| [n_X = s]`.
pub fn signed_subset_sums(blocks: &[u32]) -> Vec<BigInt> {
    let total: usize = blocks.iter().map(|&n| n as usize).sum();
    let mut sigma = vec![BigInt::zero(); total + 1];
    sigma[0] = BigInt::one();
    let mut top = 0;
    for &n in blocks {
        let n = n as usize;
        for s in (0..=top).rev() {
            let v = sigma[s].clone();
            sigma[s + n] -= v;
        }
        top += n;
    }
    sigma
}

/// Same table by enumerating all `2^r` subsets.
pub fn signed_subset_sums_brute(blocks: &[u32]) -> Vec<BigInt> {
    let total: usize = blocks.iter().map(|&n| n as usize).sum();
    let mut sigma = vec![BigInt::zero(); total + 1];
    for mask in 0u64..(1 << blocks.len()) {
        let s: usize = (0..blocks.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| blocks[i] as usize)
            .sum();
        if mask.count_ones() % 2 == 0 {
            sigma[s] += 1;
        } else {
            sigma[s] -= 1;
        }
    }
    sigma
}

/// `E_j = sum_{X != {}} (-1)^(|X|+1) [n_X > j] = -sum_{s>j} sigma_s`, `j = 0..=upto`.
fn epsilon_sums(sigma: &[BigInt], upto: usize) -> Vec<BigInt> {
    let mut tail = vec![BigInt::zero(); sigma.len() + 1];
    for s in (0..sigma.len()).rev() {
        tail[s] = &tail[s + 1] + &sigma[s];
    }
    (0..=upto)
        .map(|j| {
            if j + 1 < tail.len() {
                -&tail[j + 1]
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

/// `g^(l)(0)` for `g = prod [n_i]`, `l = 0..=upto`, by the subset-sum expansion
///
/// `g^(l)(0) = l! E_l + sum_{j<l} l!/(l-j)! prod_{k=1}^{l-j} (r-2+k) E_j`.
pub fn block_product_derivatives(blocks: &[u32], upto: usize) -> Vec<BigInt> {
    let r = blocks.len() as i64;
    let e = epsilon_sums(&signed_subset_sums(blocks), upto);
    let mut out = vec![BigInt::one()];
    for l in 1..=upto {
        let mut acc = factorial(l) * &e[l];
        for (j, ej) in e.iter().enumerate().take(l) {
            let rising = (1..=(l - j) as i64).fold(BigInt::one(), |a, k| a * big(r - 2 + k));
            acc += falling(l, j) * rising * ej;
        }
        out.push(acc);
    }
    out
}

/// The same derivatives by the recursive form
///
/// `g^(l)(0) = l! E_l + sum_{j=1}^{l} C(l,j) (-1)^(j+1) prod_{k=1}^{j} (r-k) g^(l-j)(0)`.
pub fn block_product_derivatives_recursive(blocks: &[u32], upto: usize) -> Vec<BigInt> {
    let r = blocks.len() as i64;
    let e = epsilon_sums(&signed_subset_sums(blocks), upto);
    let mut g: Vec<BigInt> = vec![BigInt::one()];
    for l in 1..=upto {
        let mut acc = factorial(l) * &e[l];
        for j in 1..=l {
            let prod = (1..=j as i64).fold(BigInt::one(), |a, k| a * big(r - k));
            let term = binomial(l, j) * prod * &g[l - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        g.push(acc);
    }
    g
}

/// Leibniz inversion: `(1/g)^(l)(0) = -sum_{j=1}^{l} C(l,j) g^(j)(0) (1/g)^(l-j)(0)`, `g(0) = 1`.
pub fn inverse_derivatives(g: &[BigInt]) -> Vec<BigInt> {
    let mut h: Vec<BigInt> = vec![BigInt::one()];
    for l in 1..g.len() {
        let mut acc = BigInt::zero();
        for j in 1..=l {
            acc -= binomial(l, j) * &g[j] * &h[l - j];
        }
        h.push(acc);
    }
    h
}

/// Counts `#{c_i > k}` for `k = 0..=upto`.
fn exceed_counts(degrees: &[u32], upto: usize) -> Vec<usize> {
    (0..=upto)
        .map(|k| degrees.iter().filter(|&&c| c as usize > k).count())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupTerms {
    pub size: usize,
    pub degrees: Vec<u32>,
    pub count: u64,
    /// `C_k(T)` for `k = 0..=K`.
    pub c: Vec<usize>,
}

/// Intermediate quantities, all exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionState {
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub p: Vec<BigInt>,
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub p_tau: Vec<BigInt>,
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub b_terms: Vec<BigInt>,
    /// `N_k = #{n_i > k}`.
    pub n: Vec<usize>,
    pub subgroups: Vec<SubgroupTerms>,
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub sigma: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionReport {
    pub parity: usize,
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub coefficients: Vec<BigInt>,
    /// `b_1, b_2, b_3` from the explicit low-order formulas.
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub closed_form: Vec<BigInt>,
    pub closed_form_agrees: bool,
    #[serde(serialize_with = "serde_exact::bigint_vec")]
    pub direct: Vec<BigInt>,
    pub agrees_with_direct: bool,
    pub state: RecursionState,
}

/// `b_0..=b_upto` by the recursion, compared against the exact-division `Q`.
pub fn recursion_coefficients(series: &GrowthSeries, upto: usize) -> Result<RecursionReport> {
    let complete = series
        .complete
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("recursion needs the complete form (virgin-only mode)".into()))?;
    let d = complete.denominator.deg();
    if upto > d {
        return Err(Error::InvalidInput(format!("requested b_{upto} but deg Q = {d}")));
    }
    let parity = series.parity().ok_or_else(|| {
        Error::InvalidInput("dimension parity unknown: denominator is neither palindromic nor anti-palindromic".into())
    })?;
    let sign_n = if parity == 0 { big(1) } else { big(-1) };
    let blocks = &complete.blocks;
    let s = big(series.generators as i64);
    let kmax = upto.max(3);

    let p = inverse_derivatives(&block_product_derivatives(blocks, kmax));
    let mut p_tau = vec![BigInt::zero(); kmax + 1];
    let mut subgroups = Vec::new();
    for class in series.profile.nontrivial() {
        let h = inverse_derivatives(&block_product_derivatives(&class.degrees, kmax));
        let w = class.signed_count();
        for (acc, hk) in p_tau.iter_mut().zip(&h) {
            *acc += &w * hk;
        }
        subgroups.push(SubgroupTerms {
            size: class.size,
            degrees: class.degrees.clone(),
            count: class.count,
            c: exceed_counts(&class.degrees, kmax),
        });
    }

    let mut b = vec![BigInt::one()];
    let mut b_terms = vec![BigInt::zero()];
    for k in 1..=kmax {
        let mut bk = BigInt::zero();
        for j in 1..k {
            bk -= falling(k, j) * &b[j] * &p[k - j];
        }
        b_terms.push(bk.clone());
        let lead = factorial(k) * &s;
        let lead = if (parity + k + 1) % 2 == 0 { lead } else { -lead };
        let total = lead + &sign_n * &p_tau[k] - &p[k] + bk;
        let (q, rem) = total.div_rem(&factorial(k));
        if !rem.is_zero() {
            return Err(Error::Integrity(format!("k! b_k is not divisible by k! at k = {k}")));
        }
        b.push(q);
    }

    let n_counts = exceed_counts(blocks, kmax);
    let closed_form = closed_form_b123(series, parity, &n_counts, &subgroups);
    let closed_form_agrees = closed_form.iter().zip(&b[1..=3]).all(|(x, y)| x == y);
    let direct: Vec<BigInt> = (0..=upto).map(|k| complete.denominator.coeff(k)).collect();
    b.truncate(upto + 1);
    let agrees_with_direct = b == direct;
    Ok(RecursionReport {
        parity,
        coefficients: b,
        closed_form,
        closed_form_agrees,
        direct,
        agrees_with_direct,
        state: RecursionState {
            p,
            p_tau,
            b_terms,
            n: n_counts,
            subgroups,
            sigma: signed_subset_sums(blocks),
        },
    })
}

/// `b_1 = r - |S|` and the explicit expressions for `b_2`, `b_3` in terms of
/// `N_k`, `C_k(T)` and `|T|` over the finite `T` with `|T| >= 2`.
fn closed_form_b123(series: &GrowthSeries, parity: usize, n: &[usize], subgroups: &[SubgroupTerms]) -> Vec<BigInt> {
    let r = big(series.block_count().unwrap_or(0) as i64);
    let s = big(series.generators as i64);
    let sn = if parity == 0 { big(1) } else { big(-1) };
    let (n2, n3) = (big(n[2] as i64), big(n[3] as i64));
    let mut sum_t2 = BigInt::zero();
    let mut sum_c2 = BigInt::zero();
    let mut sum_t3 = BigInt::zero();
    let mut sum_c3 = BigInt::zero();
    for t in subgroups {
        let w = if t.size % 2 == 0 {
            big(t.count as i64)
        } else {
            -big(t.count as i64)
        };
        let sz = big(t.size as i64);
        let (c2, c3) = (big(t.c[2] as i64), big(t.c[3] as i64));
        sum_t2 += &w * &sz * (&sz + 1);
        sum_c2 += &w * &c2;
        sum_t3 += &w * &sz * (&sz + 1) * (&sz + 2);
        sum_c3 += &w * (-&c3 + (&sz + 1) * &c2);
    }
    let b1 = &r - &s;
    let two_b2 = -&sn * 2 * &s + &sn * &sum_t2 - &sn * 2 * &sum_c2 - &r * (&r + 1) + 2 * &n2 + 2 * &r * &b1;
    let b2 = two_b2 / 2;
    let six_b3 = &sn * 6 * &s - &sn * &sum_t3 + &sn * 6 * &sum_c3 + &r * (&r + 1) * (&r + 2) + 6 * &n3
        - 6 * (&r + 1) * &n2
        + 3 * (2 * &n2 - &r * (&r + 1)) * &b1
        + 6 * &r * &b2;
    let b3 = six_b3 / 6;
    vec![b1, b2, b3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;
    use crate::growth::{steinberg_series, SubgroupProfile};
    use crate::poly::cyclotomic::block_product;
    use crate::poly::RationalFunction;

    #[test]
    fn corollary_spot_values() {
        let g = block_product_derivatives(&[2, 12, 20, 30], 3);
        assert_eq!(g[1], big(4));
        assert_eq!(g[2], big(18));
        assert_eq!(block_product_derivatives(&[2], 4)[2..], [big(0), big(0), big(0)]);
    }

    #[test]
    fn derivatives_match_expansion() {
        for blocks in [vec![2, 3], vec![2, 2, 5, 7], vec![4, 4, 4], vec![12, 2, 9, 3, 5]] {
            let poly = block_product(&blocks).unwrap();
            let g = block_product_derivatives(&blocks, 10);
            let g2 = block_product_derivatives_recursive(&blocks, 10);
            assert_eq!(g, g2);
            for (l, gl) in g.iter().enumerate() {
                assert_eq!(gl, &(factorial(l) * poly.coeff(l)), "blocks {blocks:?} l {l}");
            }
            let inv = inverse_derivatives(&g);
            let series = RationalFunction::reciprocal_of(&poly).unwrap().series(11).unwrap();
            for (l, h) in inv.iter().enumerate() {
                assert_eq!(h, &(factorial(l) * series[l].to_integer()));
            }
        }
    }

    #[test]
    fn subset_sums_agree() {
        let b = [2, 3, 3, 7, 12];
        assert_eq!(signed_subset_sums(&b), signed_subset_sums_brute(&b));
    }

    #[test]
    fn hexagon_recursion() {
        let hex = crate::growth::tests::hexagon();
        let s = steinberg_series(&hex).unwrap();
        let rep = recursion_coefficients(&s, 2).unwrap();
        assert_eq!(rep.coefficients, [big(1), big(-4), big(1)]);
        assert!(rep.agrees_with_direct);
        assert!(rep.closed_form_agrees);
    }

    #[test]
    fn example_graph_recursion() {
        let g = steinberg_series(&CoxeterSystem::linear(&[5, 3, 3, 4]).unwrap())
            .unwrap()
            .with_dimension(4);
        let d = g.complete.as_ref().unwrap().denominator.deg();
        let rep = recursion_coefficients(&g, d).unwrap();
        assert!(rep.agrees_with_direct);
        assert_eq!(rep.coefficients[1], big(0));
        assert_eq!(rep.state.n[0], 5);
        assert_eq!(rep.state.n[1], 5);
        assert!(recursion_coefficients(&g, d + 1).is_err());
    }

    #[test]
    fn right_angled_120_cell() {
        let prof = SubgroupProfile::right_angled(&[600, 1200, 720, 120]).unwrap();
        let s = crate::growth::GrowthSeries::from_profile(prof)
            .unwrap()
            .with_dimension(4);
        let rep = recursion_coefficients(&s, 4).unwrap();
        assert_eq!(rep.coefficients, [1, -116, 366, -116, 1].map(big));
        assert!(rep.closed_form_agrees);
    }
}
