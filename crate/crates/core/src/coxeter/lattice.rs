//! Enumeration of all subsets `T` with `G_T` finite.

use std::collections::HashSet;

use serde::{Serialize, Serializer};

use super::{classify_finite, Classification, CoxeterSystem, FiniteType};
use crate::error::{Error, Result};

pub const DEFAULT_RANK_BOUND: usize = 24;

fn one_based<S: Serializer>(v: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|i| i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeEntry {
    /// Generator indices, ascending (serialized 1-based).
    #[serde(serialize_with = "one_based")]
    pub subset: Vec<usize>,
    #[serde(skip)]
    pub mask: u64,
    /// Irreducible components; node indices refer to the whole system.
    pub types: Vec<FiniteType>,
    pub maximal: bool,
}

impl LatticeEntry {
    pub fn size(&self) -> usize {
        self.subset.len()
    }

    /// Degrees `n_i = m_i + 1` of the growth polynomial `f_T = prod [n_i]`, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.types.iter().flat_map(FiniteType::degrees).collect();
        d.sort_unstable();
        d
    }

    pub fn order(&self) -> u128 {
        self.types.iter().map(FiniteType::order).product()
    }

    pub fn describe(&self) -> String {
        if self.types.is_empty() {
            "trivial".into()
        } else {
            self.types.iter().map(FiniteType::name).collect::<Vec<_>>().join(" x ")
        }
    }
}

/// Sorted by size, then lexicographically; downward closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSubgroupLattice {
    pub rank: usize,
    pub entries: Vec<LatticeEntry>,
}

impl FiniteSubgroupLattice {
    pub fn maximal(&self) -> impl Iterator<Item = &LatticeEntry> {
        self.entries.iter().filter(|e| e.maximal)
    }

    pub fn of_size(&self, k: usize) -> impl Iterator<Item = &LatticeEntry> {
        self.entries.iter().filter(move |e| e.size() == k)
    }

    /// Number of finite subsets of each size `0..=rank`.
    pub fn size_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.rank + 1];
        for e in &self.entries {
            c[e.size()] += 1;
        }
        c
    }

    pub fn contains(&self, subset: &[usize]) -> bool {
        let mask = subset.iter().fold(0u64, |m, &i| m | (1 << i));
        self.entries.iter().any(|e| e.mask == mask)
    }

    pub fn max_size(&self) -> usize {
        self.entries.iter().map(LatticeEntry::size).max().unwrap_or(0)
    }
}

pub fn enumerate_finite_subsets(system: &CoxeterSystem) -> Result<FiniteSubgroupLattice> {
    enumerate_finite_subsets_with_bound(system, DEFAULT_RANK_BOUND)
}

/// Level-wise search: a `(k+1)`-subset is classified only when all of its
/// `k`-subsets are already known to be finite.
pub fn enumerate_finite_subsets_with_bound(system: &CoxeterSystem, bound: usize) -> Result<FiniteSubgroupLattice> {
    let n = system.rank();
    if n > bound || n > 63 {
        return Err(Error::RankBound {
            rank: n,
            bound: bound.min(63),
        });
    }
    let mut found: Vec<(u64, Vec<FiniteType>)> = vec![(0, Vec::new())];
    let mut level: Vec<u64> = vec![0];
    let mut known: HashSet<u64> = HashSet::from([0]);
    while !level.is_empty() {
        let mut next = Vec::new();
        for &t in &level {
            let top = if t == 0 { 0 } else { 64 - t.leading_zeros() as usize };
            for j in top..n {
                let u = t | (1 << j);
                let subsets_ok = (0..n)
                    .filter(|&i| t & (1 << i) != 0)
                    .all(|i| known.contains(&(u & !(1 << i))));
                if !subsets_ok {
                    continue;
                }
                let nodes: Vec<usize> = (0..n).filter(|&i| u & (1 << i) != 0).collect();
                let sub = system.induced(&nodes)?;
                if let Classification::Finite(types) = classify_finite(&sub) {
                    let types = types
                        .into_iter()
                        .map(|mut ft| {
                            ft.nodes = ft.nodes.iter().map(|&k| nodes[k]).collect();
                            ft
                        })
                        .collect();
                    found.push((u, types));
                    next.push(u);
                }
            }
        }
        known.extend(next.iter().copied());
        level = next;
    }
    let mut entries: Vec<LatticeEntry> = found
        .into_iter()
        .map(|(mask, types)| {
            let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let maximal = (0..n).all(|j| mask & (1 << j) != 0 || !known.contains(&(mask | (1 << j))));
            LatticeEntry {
                subset,
                mask,
                types,
                maximal,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.subset.cmp(&b.subset)));
    Ok(FiniteSubgroupLattice { rank: n, entries })
}
