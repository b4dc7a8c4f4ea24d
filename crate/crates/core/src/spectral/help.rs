//! Help functions: `1/f_S = 1 + sum over maximal finite T of h_T` for
//! groups on `H^4` with at most six generators.

use std::collections::HashMap;

use serde::Serialize;

use crate::coxeter::{enumerate_finite_subsets, CoxeterSystem, FiniteSubgroupLattice};
use crate::error::{Error, Result};
use crate::growth::GrowthSeries;
use crate::poly::cyclotomic::block_product;
use crate::poly::{cyclotomic_factor, sturm_real_roots, Bound, IntPolynomial, RationalFunction};

/// Combinatorial family: simplex (`L`), product of two triangles (`E`),
/// simplicial prism (`K`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    L,
    E,
    K,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(Family::L),
            "E" | "e" => Ok(Family::E),
            "K" | "k" => Ok(Family::K),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}, expected L, E or K"))),
        }
    }
}

/// Which pairs the correction term of the prism family sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrismPairs {
    /// Pairs inside the 4-node Lannér diagram; these are the pairs counted
    /// four times by the simplex help function.
    Inner,
    /// Pairs joining the diagram to a top or bottom node.
    Crossing,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HelpFunction {
    /// 1-based generator indices.
    pub nodes: Vec<usize>,
    pub types: String,
    pub h: RationalFunction,
    /// `h = -x n(x) / d(x)`; `d` is the reduced denominator.
    pub n: IntPolynomial,
    pub d: IntPolynomial,
    pub vanishes_at_zero: bool,
    pub n_palindromic: bool,
    pub d_palindromic: bool,
    pub even_degrees: bool,
    /// `d` is a constant times a product of cyclotomic polynomials.
    pub d_cyclotomic: bool,
    /// `deg d = deg n + 2`.
    pub degree_gap: bool,
    /// Sampled on `(0, 1)`; numeric.
    pub negative_on_grid: bool,
    /// Sampled on `(-1, 0)`; numeric.
    pub decreasing_on_grid: bool,
}

impl HelpFunction {
    /// The exact algebraic facts of the factorization `h = -x n / d`.
    pub fn algebraic_facts_hold(&self) -> bool {
        self.vanishes_at_zero
            && self.n_palindromic
            && self.d_palindromic
            && self.even_degrees
            && self.d_cyclotomic
            && self.degree_gap
    }
}

/// Samples of `H = sum h_T` on `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridScan {
    pub step: f64,
    pub negative: bool,
    pub local_minima: usize,
    pub x_min: f64,
    pub min: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HelpFunctionProfile {
    pub family: Family,
    /// The Lannér subdiagrams used by the family rule, 1-based.
    pub lanner: Vec<Vec<usize>>,
    pub functions: Vec<HelpFunction>,
    /// `1/f_S - 1 - sum h_T`.
    pub residual: RationalFunction,
    pub decomposition_verified: bool,
    pub scan: GridScan,
    pub smallest_pole: Option<f64>,
    /// `H(x_1)`, which should be `-1`.
    pub value_at_smallest_pole: Option<f64>,
}

struct Lookup {
    growth: HashMap<u64, IntPolynomial>,
}

impl Lookup {
    fn new(lattice: &FiniteSubgroupLattice) -> Result<Self> {
        let mut growth = HashMap::new();
        for e in &lattice.entries {
            growth.insert(e.mask, block_product(&e.degrees())?);
        }
        Ok(Lookup { growth })
    }

    fn is_finite(&self, mask: u64) -> bool {
        self.growth.contains_key(&mask)
    }

    fn inverse(&self, mask: u64) -> Result<RationalFunction> {
        let f = self
            .growth
            .get(&mask)
            .ok_or_else(|| Error::Integrity(format!("subset {mask:#b} of a finite subset is infinite")))?;
        RationalFunction::reciprocal_of(f)
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn submasks_of_size(mask: u64, k: usize) -> Vec<u64> {
    let b = bits(mask);
    let mut out = Vec::new();
    let n = b.len();
    for sel in 0u64..(1 << n) {
        if sel.count_ones() as usize == k {
            out.push((0..n).filter(|i| sel >> i & 1 == 1).fold(0u64, |m, i| m | 1 << b[i]));
        }
    }
    out
}

/// Subsets of size `k` that are infinite while all their proper subsets are finite.
fn minimal_infinite(rank: usize, k: usize, look: &Lookup) -> Vec<u64> {
    (0u64..(1 << rank))
        .filter(|m| m.count_ones() as usize == k && !look.is_finite(*m))
        .filter(|&m| bits(m).iter().all(|&i| look.is_finite(m & !(1 << i))))
        .collect()
}

fn q(a: i64, b: i64) -> RationalFunction {
    RationalFunction::constant(a, b).expect("nonzero denominator")
}

fn simplex_help(t: u64, look: &Lookup) -> Result<RationalFunction> {
    // -1/[2] + 1/3 sum_U 1/f_U - 1/2 sum_V 1/f_V + 1/f_T
    let mut h = -&RationalFunction::reciprocal_of(&block_product(&[2])?)?;
    for u in submasks_of_size(t, 2) {
        h = &h + &(&q(1, 3) * &look.inverse(u)?);
    }
    for v in submasks_of_size(t, 3) {
        h = &h - &(&q(1, 2) * &look.inverse(v)?);
    }
    Ok(&h + &look.inverse(t)?)
}

fn correction(t: u64, weight: RationalFunction, pairs: &[u64], look: &Lookup) -> Result<RationalFunction> {
    // weight/(1+x) - 1/12 sum_W 1/f_W
    let mut c = &weight * &RationalFunction::reciprocal_of(&block_product(&[2])?)?;
    for &w in pairs.iter().filter(|&&w| w & t == w) {
        c = &c - &(&q(1, 12) * &look.inverse(w)?);
    }
    Ok(c)
}

fn pairs_between(a: u64, b: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for i in bits(a) {
        for j in bits(b) {
            out.push(1 << i | 1 << j);
        }
    }
    out
}

fn scan_sign_and_shape(values: &[(f64, f64)]) -> (bool, usize, f64, f64) {
    let negative = values.iter().all(|v| v.1 < 0.0);
    let mut minima = 0;
    for w in values.windows(3) {
        if w[1].1 < w[0].1 && w[1].1 <= w[2].1 {
            minima += 1;
        }
    }
    let (x_min, min) = values
        .iter()
        .copied()
        .fold((f64::NAN, f64::INFINITY), |acc, v| if v.1 < acc.1 { v } else { acc });
    (negative, minima, x_min, min)
}

fn grid(lo: f64, hi: f64, step: f64) -> impl Iterator<Item = f64> {
    let n = ((hi - lo) / step).round() as usize;
    (1..n).map(move |k| lo + k as f64 * step)
}

fn analyse(t: u64, h: RationalFunction, lattice: &FiniteSubgroupLattice) -> Result<HelpFunction> {
    let entry = lattice
        .entries
        .iter()
        .find(|e| e.mask == t)
        .ok_or_else(|| Error::Integrity("maximal subset missing from the lattice".into()))?;
    let num = h.num().clone();
    let d = h.den().clone();
    let vanishes_at_zero = num.is_zero() || num.coeff(0) == 0.into();
    let n = if vanishes_at_zero && !num.is_zero() {
        -num.exact_div(&IntPolynomial::x())?
    } else {
        IntPolynomial::zero()
    };
    let even_degrees = n.deg() % 2 == 0 && d.deg().is_multiple_of(2);
    let d_cyclotomic = cyclotomic_factor(&d)?.remainder.deg() == 0;
    let on_unit: Vec<f64> = grid(0.0, 1.0, 1e-3).map(|x| h.eval_f64(x)).collect();
    let on_left: Vec<f64> = grid(-1.0, 0.0, 1e-3).map(|x| h.eval_f64(x)).collect();
    Ok(HelpFunction {
        nodes: entry.subset.iter().map(|i| i + 1).collect(),
        types: entry.describe(),
        n_palindromic: n.is_palindromic(),
        d_palindromic: d.is_palindromic(),
        degree_gap: !n.is_zero() && d.deg() == n.deg() + 2,
        negative_on_grid: on_unit.iter().all(|&v| v < 0.0),
        decreasing_on_grid: on_left.windows(2).all(|w| w[1] < w[0]),
        even_degrees,
        d_cyclotomic,
        vanishes_at_zero,
        h,
        n,
        d,
    })
}

/// Builds the family help functions and checks `1/f_S = 1 + sum h_T` exactly.
pub fn help_profile(system: &CoxeterSystem, family: Family) -> Result<HelpFunctionProfile> {
    help_profile_with(system, family, PrismPairs::Inner)
}

pub fn help_profile_with(system: &CoxeterSystem, family: Family, prism: PrismPairs) -> Result<HelpFunctionProfile> {
    let lattice = enumerate_finite_subsets(system)?;
    let look = Lookup::new(&lattice)?;
    let maximal: Vec<u64> = lattice.maximal().map(|e| e.mask).collect();
    let rank = system.rank();
    let shape = |n: usize, m: usize| {
        if rank != n || maximal.len() != m || maximal.iter().any(|t| t.count_ones() != 4) {
            Err(Error::InvalidInput(format!(
                "family {family:?} needs {n} generators and {m} maximal finite subgroups of rank 4; found {rank} generators and {} maximal ({})",
                maximal.len(),
                lattice.maximal().map(|e| e.size().to_string()).collect::<Vec<_>>().join(",")
            )))
        } else {
            Ok(())
        }
    };
    let full = (1u64 << rank) - 1;
    let (lanner, pairs, weight) = match family {
        Family::L => {
            shape(5, 5)?;
            (vec![full], Vec::new(), None)
        }
        Family::E => {
            shape(6, 9)?;
            let tri = minimal_infinite(rank, 3, &look);
            let (l1, l2) = tri
                .iter()
                .flat_map(|&a| tri.iter().map(move |&b| (a, b)))
                .find(|(a, b)| a < b && a & b == 0)
                .ok_or_else(|| Error::InvalidInput("no two disjoint 3-node Lannér diagrams".into()))?;
            (vec![l1, l2], pairs_between(l1, l2), Some(q(1, 3)))
        }
        Family::K => {
            shape(6, 8)?;
            let quads = minimal_infinite(rank, 4, &look);
            let &l = quads
                .first()
                .ok_or_else(|| Error::InvalidInput("no 4-node Lannér diagram".into()))?;
            let pairs = match prism {
                PrismPairs::Inner => submasks_of_size(l, 2),
                PrismPairs::Crossing => pairs_between(l, full & !l),
            };
            (vec![l], pairs, Some(q(1, 4)))
        }
    };

    let mut functions = Vec::new();
    let mut total = RationalFunction::zero();
    for &t in &maximal {
        let mut h = simplex_help(t, &look)?;
        if let Some(w) = &weight {
            h = &h + &correction(t, w.clone(), &pairs, &look)?;
        }
        total = &total + &h;
        functions.push(analyse(t, h, &lattice)?);
    }
    let series = GrowthSeries::from_profile(crate::growth::SubgroupProfile::from_lattice(&lattice))?;
    let inv = series.reduced.inv()?;
    let residual = &(&inv - &RationalFunction::one()) - &total;

    let step = 1e-3;
    let values: Vec<(f64, f64)> = grid(0.0, 1.0, step).map(|x| (x, total.eval_f64(x))).collect();
    let (negative, local_minima, x_min, min) = scan_sign_and_shape(&values);
    let den = series.reduced.den();
    let smallest_pole = if den.deg() > 0 {
        sturm_real_roots(den, Bound::int(0), Bound::int(1))?
            .intervals
            .first()
            .map(|iv| {
                let eps = num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(10u64).pow(15));
                crate::poly::refine_root(&den.square_free_part(), &iv.lo, &iv.hi, &eps)
                    .ok()
                    .and_then(|c| num_traits::ToPrimitive::to_f64(&c))
                    .unwrap_or_else(|| iv.midpoint_f64())
            })
    } else {
        None
    };
    Ok(HelpFunctionProfile {
        family,
        lanner: lanner
            .iter()
            .map(|&m| bits(m).into_iter().map(|i| i + 1).collect())
            .collect(),
        functions,
        decomposition_verified: residual.is_zero(),
        residual,
        scan: GridScan {
            step,
            negative,
            local_minima,
            x_min,
            min,
        },
        value_at_smallest_pole: smallest_pole.map(|x| total.eval_f64(x)),
        smallest_pole,
    })
}
