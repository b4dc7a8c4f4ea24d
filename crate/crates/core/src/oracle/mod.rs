//! Word counts by breadth-first search in the Tits representation, as an
//! independent check of the Taylor coefficients.

pub mod cycfield;
pub mod tits;

pub use cycfield::CycField;
pub use tits::{build_rep, build_rep_with, Matrix, RepLimits, TitsRep};

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::error::Result;
use crate::growth::{steinberg_series, taylor_coefficients};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsLimits {
    pub max_length: usize,
    pub max_elements: usize,
}

impl Default for BfsLimits {
    fn default() -> Self {
        BfsLimits {
            max_length: 12,
            max_elements: 20_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BfsCounts {
    /// `a_0, a_1, ...`; shorter than requested when a limit stopped the search.
    pub counts: Vec<u64>,
    /// The group is finite and every element was reached.
    pub exhausted: bool,
    pub cutoff: Option<String>,
}

impl BfsCounts {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn bfs_counts(system: &CoxeterSystem, length: usize) -> Result<BfsCounts> {
    bfs_counts_with(system, length, BfsLimits::default(), None)
}

/// Spheres of radius `0..=length` around the identity; `order` permutes the
/// generators (the counts must not depend on it).
pub fn bfs_counts_with(
    system: &CoxeterSystem,
    length: usize,
    limits: BfsLimits,
    order: Option<&[usize]>,
) -> Result<BfsCounts> {
    let rep = build_rep(system)?;
    let gens: Vec<usize> = order.map_or_else(|| (0..system.rank()).collect(), <[usize]>::to_vec);
    if length > limits.max_length {
        return Ok(BfsCounts {
            counts: Vec::new(),
            exhausted: false,
            cutoff: Some(format!("length {length} exceeds the bound {}", limits.max_length)),
        });
    }
    let id = rep.identity();
    // Only two shells are needed: a word w s has length |w| +- 1.
    let mut previous: HashSet<Matrix> = HashSet::new();
    let mut current: HashSet<Matrix> = HashSet::from([id]);
    let mut counts = vec![1u64];
    let mut seen = 1usize;
    for depth in 1..=length {
        let next = expand(&rep, &gens, &previous, &current)?;
        if next.is_empty() {
            return Ok(BfsCounts {
                counts,
                exhausted: true,
                cutoff: None,
            });
        }
        seen += next.len();
        counts.push(next.len() as u64);
        if seen > limits.max_elements {
            return Ok(BfsCounts {
                counts,
                exhausted: false,
                cutoff: Some(format!("stopped after depth {depth}: {seen} elements exceed the bound")),
            });
        }
        previous = std::mem::replace(&mut current, next);
    }
    // One more shell tells whether the last one held the longest element.
    let exhausted = expand(&rep, &gens, &previous, &current)?.is_empty();
    Ok(BfsCounts {
        counts,
        exhausted,
        cutoff: None,
    })
}

fn expand(
    rep: &TitsRep,
    gens: &[usize],
    previous: &HashSet<Matrix>,
    current: &HashSet<Matrix>,
) -> Result<HashSet<Matrix>> {
    let mut next = HashSet::new();
    for w in current {
        for &s in gens {
            let v = rep.left_apply(s, w)?;
            if !previous.contains(&v) && !current.contains(&v) {
                next.insert(v);
            }
        }
    }
    Ok(next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub k: usize,
    pub bfs: u64,
    pub series: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub rows: Vec<OracleRow>,
    pub bfs: BfsCounts,
    /// First depth at which the two disagree.
    pub mismatch: Option<usize>,
    pub pass: bool,
}

/// BFS counts against the Taylor coefficients of the Steinberg series.
pub fn oracle_compare(system: &CoxeterSystem, length: usize) -> Result<OracleVerdict> {
    oracle_compare_with(system, length, BfsLimits::default())
}

pub fn oracle_compare_with(system: &CoxeterSystem, length: usize, limits: BfsLimits) -> Result<OracleVerdict> {
    let bfs = bfs_counts_with(system, length, limits, None)?;
    let series = steinberg_series(system)?;
    let taylor = taylor_coefficients(&series, length)?;
    let mut rows = Vec::new();
    let mut mismatch = None;
    for (k, t) in taylor.iter().enumerate() {
        let b = match bfs.counts.get(k) {
            Some(&b) => b,
            None if bfs.exhausted => 0,
            None => break,
        };
        let agree = BigInt::from(b) == *t;
        if !agree && mismatch.is_none() {
            mismatch = Some(k);
        }
        rows.push(OracleRow {
            k,
            bfs: b,
            series: t.to_string(),
            agree,
        });
    }
    let pass = mismatch.is_none() && bfs.cutoff.is_none();
    Ok(OracleVerdict {
        rows,
        bfs,
        mismatch,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Entry;

    fn triangle_237() -> CoxeterSystem {
        CoxeterSystem::from_edges(
            3,
            &[
                (0, 1, Entry::Finite(2)),
                (1, 2, Entry::Finite(3)),
                (0, 2, Entry::Finite(7)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_prefix() {
        let c = bfs_counts(&triangle_237(), 2).unwrap();
        assert_eq!(c.counts, [1, 3, 5]);
    }

    #[test]
    fn rank_one() {
        let c = bfs_counts(&CoxeterSystem::linear(&[]).unwrap(), 3).unwrap();
        assert_eq!(c.counts, [1, 1]);
        assert!(c.exhausted);
    }

    #[test]
    fn hexagon_matches_series() {
        let v = oracle_compare(&crate::growth::tests::hexagon(), 6).unwrap();
        assert!(v.pass, "{v:?}");
        assert_eq!(v.bfs.counts, [1, 6, 24, 90, 336, 1254, 4680]);
    }

    #[test]
    fn generator_order_is_irrelevant() {
        let sys = triangle_237();
        let a = bfs_counts_with(&sys, 8, BfsLimits::default(), None).unwrap();
        let b = bfs_counts_with(&sys, 8, BfsLimits::default(), Some(&[2, 0, 1])).unwrap();
        assert_eq!(a, b);
        for w in a.counts.windows(2) {
            assert!(w[1] <= 3 * w[0]);
        }
    }

    #[test]
    fn finite_h3_is_exhausted() {
        let c = bfs_counts_with(
            &CoxeterSystem::linear(&[5, 3]).unwrap(),
            20,
            BfsLimits {
                max_length: 20,
                ..Default::default()
            },
            None,
        )
        .unwrap();
        assert!(c.exhausted);
        assert_eq!(c.total(), 120);
        assert_eq!(c.counts.len(), 16);
        let limits = BfsLimits {
            max_length: 15,
            ..Default::default()
        };
        let exact = bfs_counts_with(&CoxeterSystem::linear(&[5, 3]).unwrap(), 15, limits, None).unwrap();
        assert!(exact.exhausted);
    }

    #[test]
    fn length_bound_reports_cutoff() {
        let c = bfs_counts(&triangle_237(), 13).unwrap();
        assert!(c.cutoff.is_some());
    }
}
