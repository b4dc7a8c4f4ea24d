//! Growth series from the finite parabolic subgroups: Steinberg's sum,
//! virgin / extended / complete forms, Taylor coefficients and rebasing.

mod euler;
mod extension;
pub mod recursion;

pub use euler::{euler_and_volume, subgroup_distribution, DistributionReport, EulerReport, SizeTerm, Volume};
pub use extension::{extend_to_blocks, largest_block_divisor, minimal_block_cover, BlockCover, Extension};
pub use recursion::{recursion_coefficients, RecursionReport};

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coxeter::{enumerate_finite_subsets, CoxeterSystem, FiniteSubgroupLattice};
use crate::error::{Error, Result};
use crate::poly::cyclotomic::{block_exponents, block_product};
use crate::poly::{cyclotomic, cyclotomic_factor, CycFactorization, IntPolynomial, RationalFunction};

/// Finite subgroups `G_T` grouped by `(|T|, degrees of f_T)`; the empty set included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupProfile {
    pub generators: usize,
    pub classes: Vec<SubgroupClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SubgroupClass {
    pub size: usize,
    pub degrees: Vec<u32>,
    pub count: u64,
}

impl SubgroupClass {
    /// `f_T = prod [c_i]`.
    pub fn growth_polynomial(&self) -> IntPolynomial {
        block_product(&self.degrees).expect("degrees are at least 2")
    }

    /// `(-1)^|T| * count`.
    pub fn signed_count(&self) -> BigInt {
        let c = BigInt::from(self.count);
        if self.size % 2 == 1 {
            -c
        } else {
            c
        }
    }
}

impl SubgroupProfile {
    pub fn from_lattice(lattice: &FiniteSubgroupLattice) -> Self {
        let mut map: BTreeMap<(usize, Vec<u32>), u64> = BTreeMap::new();
        for e in &lattice.entries {
            *map.entry((e.size(), e.degrees())).or_insert(0) += 1;
        }
        SubgroupProfile {
            generators: lattice.rank,
            classes: map
                .into_iter()
                .map(|((size, degrees), count)| SubgroupClass { size, degrees, count })
                .collect(),
        }
    }

    /// Right-angled polytope with f-vector `(f_0, ..., f_{n-1})`: the finite
    /// subsets of size `l` are the `(n-l)`-faces, each with growth `[2]^l`.
    pub fn right_angled(f: &[u64]) -> Result<Self> {
        let n = f.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty f-vector".into()));
        }
        let mut classes = vec![SubgroupClass {
            size: 0,
            degrees: Vec::new(),
            count: 1,
        }];
        for l in 1..=n {
            classes.push(SubgroupClass {
                size: l,
                degrees: vec![2; l],
                count: f[n - l],
            });
        }
        Ok(SubgroupProfile {
            generators: f[n - 1] as usize,
            classes,
        })
    }

    /// Classes with `|T| >= 2`.
    pub fn nontrivial(&self) -> impl Iterator<Item = &SubgroupClass> {
        self.classes.iter().filter(|c| c.size >= 2)
    }

    /// Cyclotomic exponents of the lcm of all `f_T`.
    pub fn virgin_exponents(&self) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        for c in &self.classes {
            for (d, e) in block_exponents(&c.degrees) {
                let slot = out.entry(d).or_insert(0);
                *slot = (*slot).max(e);
            }
        }
        out
    }

    /// All block sizes that occur in some `f_T`.
    pub fn block_sizes(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.classes.iter().flat_map(|c| c.degrees.iter().copied()).collect();
        set.into_iter().collect()
    }
}

/// `Ext = Virg * R`, `Ext = prod [n_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedForm {
    pub blocks: Vec<u32>,
    pub r: IntPolynomial,
    pub search: Extension,
}

/// `f_S = P / Q` with `P = prod [n_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteForm {
    pub blocks: Vec<u32>,
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
    /// `deg P = deg Q`; this holds for infinite cocompact groups but not for finite ones.
    pub degrees_match: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthSeries {
    pub generators: usize,
    pub profile: SubgroupProfile,
    pub reduced: RationalFunction,
    pub virgin: IntPolynomial,
    pub virgin_factorization: CycFactorization,
    pub extended: Option<ExtendedForm>,
    pub complete: Option<CompleteForm>,
    pub dimension_hint: Option<usize>,
    pub notes: Vec<String>,
}

pub fn steinberg_series(system: &CoxeterSystem) -> Result<GrowthSeries> {
    let lattice = enumerate_finite_subsets(system)?;
    GrowthSeries::from_profile(SubgroupProfile::from_lattice(&lattice))
}

impl GrowthSeries {
    /// Steinberg: `1/f_S(1/x) = sum_T (-1)^|T| / f_T(x)`.
    ///
    /// The sum is taken over the common denominator `D = Virg`, which is
    /// palindromic, so `f_S(x) = D(x) / (x^deg D * N(1/x))`.
    pub fn from_profile(profile: SubgroupProfile) -> Result<Self> {
        let exps = profile.virgin_exponents();
        let virgin: IntPolynomial = exps.iter().map(|(&d, &e)| cyclotomic(d).pow(e)).product();
        let dd = virgin.deg();
        let mut num = IntPolynomial::zero();
        for c in &profile.classes {
            let part = virgin.exact_div(&c.growth_polynomial())?;
            num = &num + &part.scale(&c.signed_count());
        }
        if num.is_zero() {
            return Err(Error::Integrity("Steinberg sum vanishes identically".into()));
        }
        let reduced = RationalFunction::new(virgin.clone(), num.substitute_reciprocal(dd)?)?;
        let virgin_factorization = cyclotomic_factor(&virgin)?;
        let mut series = GrowthSeries {
            generators: profile.generators,
            profile,
            reduced,
            virgin,
            virgin_factorization,
            extended: None,
            complete: None,
            dimension_hint: None,
            notes: Vec::new(),
        };
        series.extend()?;
        Ok(series)
    }

    /// Builds directly from a known complete form, checking it against the profile.
    pub fn from_complete(profile: SubgroupProfile, blocks: Vec<u32>, q: IntPolynomial) -> Result<Self> {
        let mut series = Self::from_profile(profile)?;
        let p = block_product(&blocks)?;
        let given = RationalFunction::new(p.clone(), q.clone())?;
        if given != series.reduced {
            return Err(Error::Integrity(format!(
                "closed form {given} disagrees with the Steinberg sum {}",
                series.reduced
            )));
        }
        series.complete = Some(CompleteForm {
            degrees_match: p.deg() == q.deg(),
            blocks,
            numerator: p,
            denominator: q,
        });
        Ok(series)
    }

    pub fn with_dimension(mut self, n: usize) -> Self {
        self.dimension_hint = Some(n);
        self
    }

    fn extend(&mut self) -> Result<()> {
        let need = self.profile.virgin_exponents();
        match extend_to_blocks(&need, &self.profile.block_sizes()) {
            Some(search) => {
                let blocks = search.blocks();
                let ext = block_product(&blocks)?;
                let r = ext.exact_div(&self.virgin)?;
                if search.has_ties() {
                    self.notes
                        .push("extended form is not unique: other block multisets tie".into());
                }
                self.extended = Some(ExtendedForm {
                    blocks: blocks.clone(),
                    r,
                    search,
                });
                let p = ext;
                let q = (&p * self.reduced.den())
                    .exact_div(self.reduced.num())
                    .map_err(|_| Error::Integrity("reduced numerator does not divide P*q".into()))?;
                if q.coeff(0) != BigInt::one() {
                    return Err(Error::Integrity(format!(
                        "complete denominator has b_0 = {}",
                        q.coeff(0)
                    )));
                }
                self.complete = Some(CompleteForm {
                    degrees_match: p.deg() == q.deg(),
                    blocks,
                    numerator: p,
                    denominator: q,
                });
            }
            None => self
                .notes
                .push("no block product covers Virg; virgin-only mode, recursion disabled".into()),
        }
        Ok(())
    }

    pub fn blocks(&self) -> Option<&[u32]> {
        self.complete.as_ref().map(|c| c.blocks.as_slice())
    }

    /// `r`, the number of blocks.
    pub fn block_count(&self) -> Option<usize> {
        self.blocks().map(<[u32]>::len)
    }

    pub fn is_polynomial(&self) -> bool {
        self.reduced.is_polynomial()
    }

    /// Parity of the ambient dimension: the hint, else read off the reduced
    /// denominator (palindromic for even, anti-palindromic for odd).
    pub fn parity(&self) -> Option<usize> {
        if let Some(n) = self.dimension_hint {
            return Some(n % 2);
        }
        let q = self.reduced.den();
        if q.is_palindromic() {
            Some(0)
        } else if q.is_antipalindromic() {
            Some(1)
        } else {
            None
        }
    }

    /// `f(1/x) = (-1)^n f(x)`, checked as `p^D(x) q(x) = (-1)^n q^D(x) p(x)`
    /// with `F^D = x^D F(1/x)` and `D = max(deg p, deg q)`.
    pub fn reciprocity_holds(&self, n: usize) -> bool {
        let (p, q) = (self.reduced.num(), self.reduced.den());
        let d = p.deg().max(q.deg());
        let (Ok(pd), Ok(qd)) = (p.substitute_reciprocal(d), q.substitute_reciprocal(d)) else {
            return false;
        };
        let lhs = &pd * q;
        let rhs = &qd * p;
        if n.is_multiple_of(2) {
            lhs == rhs
        } else {
            lhs == -rhs
        }
    }
}

/// `Virg` with its cyclotomic factorization.
pub fn virgin_form(system: &CoxeterSystem) -> Result<(IntPolynomial, CycFactorization)> {
    let s = steinberg_series(system)?;
    Ok((s.virgin, s.virgin_factorization))
}

pub fn extended_form(system: &CoxeterSystem) -> Result<ExtendedForm> {
    steinberg_series(system)?
        .extended
        .ok_or_else(|| Error::InvalidInput("virgin-only mode: no block product covers Virg".into()))
}

/// First `n + 1` Taylor coefficients, `sum_j b_j a_(k-j) = [x^k] p`.
///
/// Every coefficient must be a nonnegative integer.
pub fn taylor_coefficients(series: &GrowthSeries, n: usize) -> Result<Vec<BigInt>> {
    let (p, q) = (series.reduced.num(), series.reduced.den());
    let q0 = q.coeff(0);
    if q0.is_zero() {
        return Err(Error::Integrity("denominator vanishes at 0".into()));
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = p.coeff(k);
        for j in 1..=k.min(q.deg()) {
            acc -= q.coeff(j) * &a[k - j];
        }
        let (quo, rem) = acc.div_rem(&q0);
        if !rem.is_zero() {
            return Err(Error::Integrity(format!("Taylor coefficient a_{k} is not an integer")));
        }
        if quo.is_negative() {
            return Err(Error::Integrity(format!(
                "Taylor coefficient a_{k} = {quo} is negative"
            )));
        }
        a.push(quo);
    }
    Ok(a)
}

/// Family normal form `R / S` with `R = prod [target]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rebased {
    pub multiplier: IntPolynomial,
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

/// Multiplies `P` and `Q` by `prod [target] / P`.
pub fn rebase_numerator(series: &GrowthSeries, target: &[u32]) -> Result<Rebased> {
    let complete = series
        .complete
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("rebase needs a complete form".into()))?;
    let have = block_exponents(&complete.blocks);
    let want = block_exponents(target);
    if let Some((d, _)) = have.iter().find(|(d, e)| want.get(d).copied().unwrap_or(0) < **e) {
        return Err(Error::InvalidInput(format!(
            "target blocks do not contain Phi_{d} often enough to absorb P"
        )));
    }
    let r = block_product(target)?;
    let multiplier = r.exact_div(&complete.numerator)?;
    Ok(Rebased {
        denominator: &complete.denominator * &multiplier,
        multiplier,
        numerator: r,
    })
}
