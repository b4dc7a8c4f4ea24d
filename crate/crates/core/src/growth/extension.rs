//! Search for the smallest block product dominating a cyclotomic exponent vector.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::poly::cyclotomic::{block_exponents, divisors};

/// A minimal block multiset plus any other multisets that tie with it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCover {
    pub blocks: Vec<u32>,
    pub ties: Vec<Vec<u32>>,
}

/// Extended form in two stages: `base` is the block product of largest
/// degree dividing `Virg`, `added` the smallest block multiset covering the
/// cyclotomic factors of `Virg` left over by `base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub base: BlockCover,
    pub added: BlockCover,
}

impl Extension {
    /// All blocks, ascending.
    pub fn blocks(&self) -> Vec<u32> {
        let mut b: Vec<u32> = self.base.blocks.iter().chain(&self.added.blocks).copied().collect();
        b.sort_unstable();
        b
    }

    pub fn has_ties(&self) -> bool {
        !self.base.ties.is_empty() || !self.added.ties.is_empty()
    }
}

fn block_phi(n: u32) -> Vec<u64> {
    divisors(n as u64).into_iter().filter(|&d| d > 1).collect()
}

struct Packing<'a> {
    candidates: &'a [u32],
    phis: Vec<Vec<u64>>,
    room: BTreeMap<u64, u32>,
    best: Option<(usize, usize, Vec<Vec<u32>>)>,
}

impl Packing<'_> {
    fn dfs(&mut self, chosen: &mut Vec<u32>, start: usize, degree: usize) {
        // Larger degree wins, then fewer blocks; lexicographic order is applied at the end.
        let better = match &self.best {
            None => true,
            Some((d, r, _)) => degree > *d || (degree == *d && chosen.len() < *r),
        };
        let equal = matches!(&self.best, Some((d, r, _)) if degree == *d && chosen.len() == *r);
        if better {
            self.best = Some((degree, chosen.len(), vec![chosen.clone()]));
        } else if equal {
            self.best.as_mut().unwrap().2.push(chosen.clone());
        }
        for i in start..self.candidates.len() {
            let fits = self.phis[i].iter().all(|d| self.room.get(d).copied().unwrap_or(0) > 0);
            if !fits {
                continue;
            }
            for d in &self.phis[i] {
                *self.room.get_mut(d).unwrap() -= 1;
            }
            chosen.push(self.candidates[i]);
            self.dfs(chosen, i, degree + self.candidates[i] as usize - 1);
            chosen.pop();
            for d in &self.phis[i] {
                *self.room.get_mut(d).unwrap() += 1;
            }
        }
    }
}

/// Block multiset of largest degree whose product divides `prod Phi_d^e_d`;
/// ties broken by fewer blocks, then lexicographically.
pub fn largest_block_divisor(virg: &BTreeMap<u64, u32>, candidates: &[u32]) -> BlockCover {
    let mut cands: Vec<u32> = candidates.iter().copied().filter(|&n| n >= 2).collect();
    cands.sort_unstable();
    cands.dedup();
    let phis = cands.iter().map(|&n| block_phi(n)).collect();
    let mut p = Packing {
        candidates: &cands,
        phis,
        room: virg.clone(),
        best: None,
    };
    p.dfs(&mut Vec::new(), 0, 0);
    let (_, _, mut all) = p.best.expect("the empty multiset always fits");
    all.sort();
    let blocks = all.remove(0);
    BlockCover { blocks, ties: all }
}

/// Two-stage extension of `prod Phi_d^e_d` to a block product.
pub fn extend_to_blocks(virg: &BTreeMap<u64, u32>, candidates: &[u32]) -> Option<Extension> {
    let base = largest_block_divisor(virg, candidates);
    let used = block_exponents(&base.blocks);
    let rest: BTreeMap<u64, u32> = virg
        .iter()
        .map(|(&d, &e)| (d, e - used.get(&d).copied().unwrap_or(0)))
        .filter(|&(d, e)| d > 1 && e > 0)
        .collect();
    let added = minimal_block_cover(&rest, candidates)?;
    Some(Extension { base, added })
}

struct Search<'a> {
    candidates: &'a [u32],
    need: Vec<(u64, u32)>,
    best: Option<(u32, Vec<Vec<u32>>)>,
}

impl Search<'_> {
    fn covers(&self, chosen: &[u32], slots_left: usize) -> bool {
        self.need.iter().all(|&(d, e)| {
            let have = chosen.iter().filter(|&&n| (n as u64).is_multiple_of(d)).count() as u32;
            have + slots_left as u32 >= e
        })
    }

    fn dfs(&mut self, chosen: &mut Vec<u32>, start: usize, r: usize, sum: u32) {
        if let Some((best_sum, _)) = &self.best {
            let min_rest = (r - chosen.len()) as u32 * self.candidates[start.min(self.candidates.len() - 1)];
            if sum + min_rest > *best_sum {
                return;
            }
        }
        if chosen.len() == r {
            if self.covers(chosen, 0) {
                match &mut self.best {
                    Some((s, all)) if *s == sum => all.push(chosen.clone()),
                    Some((s, _)) if *s < sum => {}
                    _ => self.best = Some((sum, vec![chosen.clone()])),
                }
            }
            return;
        }
        if !self.covers(chosen, r - chosen.len()) {
            return;
        }
        for i in start..self.candidates.len() {
            let n = self.candidates[i];
            chosen.push(n);
            self.dfs(chosen, i, r, sum + n);
            chosen.pop();
        }
    }
}

/// Least `r`, then least sum, then lexicographically least sorted multiset of
/// blocks `[n]`, `n` from `candidates`, with `#{i : d | n_i} >= e_d` for every
/// `Phi_d^e_d` in `need` (`d > 1`). Each block `[n]` contains `Phi_d` iff `d | n`.
pub fn minimal_block_cover(need: &BTreeMap<u64, u32>, candidates: &[u32]) -> Option<BlockCover> {
    let mut cands: Vec<u32> = candidates.iter().copied().filter(|&n| n >= 2).collect();
    cands.sort_unstable();
    cands.dedup();
    let need: Vec<(u64, u32)> = need
        .iter()
        .filter(|(&d, &e)| d > 1 && e > 0)
        .map(|(&d, &e)| (d, e))
        .collect();
    if need.is_empty() {
        return Some(BlockCover {
            blocks: Vec::new(),
            ties: Vec::new(),
        });
    }
    if need
        .iter()
        .any(|&(d, _)| !cands.iter().any(|&n| (n as u64).is_multiple_of(d)))
    {
        return None;
    }
    let lower = need.iter().map(|&(_, e)| e as usize).max().unwrap_or(0);
    let upper: usize = need.iter().map(|&(_, e)| e as usize).sum();
    for r in lower..=upper {
        let mut s = Search {
            candidates: &cands,
            need: need.clone(),
            best: None,
        };
        s.dfs(&mut Vec::new(), 0, r, 0);
        if let Some((_, mut all)) = s.best {
            all.sort();
            let blocks = all.remove(0);
            return Some(BlockCover { blocks, ties: all });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_extension() {
        // Virg = [2,12,20,30] Phi_8
        let mut need = block_exponents(&[2, 12, 20, 30]);
        *need.entry(8).or_insert(0) += 1;
        let cands = [2, 4, 6, 8, 10, 12, 20, 30];
        let ext = extend_to_blocks(&need, &cands).unwrap();
        assert_eq!(ext.base.blocks, [2, 12, 20, 30]);
        assert_eq!(ext.added.blocks, [8]);
        assert_eq!(ext.blocks(), [2, 8, 12, 20, 30]);
        // A single global minimum would absorb [2] into [8].
        assert_eq!(minimal_block_cover(&need, &cands).unwrap().blocks, [8, 12, 20, 30]);
    }

    #[test]
    fn block_products_extend_to_themselves() {
        let need = block_exponents(&[2, 2, 2, 2]);
        let ext = extend_to_blocks(&need, &[2]).unwrap();
        assert_eq!(ext.blocks(), [2, 2, 2, 2]);
        assert!(ext.added.blocks.is_empty());
    }

    #[test]
    fn right_angled_and_ties() {
        let need = block_exponents(&[2, 2, 2]);
        assert_eq!(minimal_block_cover(&need, &[2]).unwrap().blocks, [2, 2, 2]);
        // Phi_2 Phi_3 Phi_5: one [30] beats two blocks? r = 1 wins first.
        let need: BTreeMap<u64, u32> = [(2, 1), (3, 1), (5, 1)].into_iter().collect();
        assert_eq!(minimal_block_cover(&need, &[6, 10, 30]).unwrap().blocks, [30]);
        let need: BTreeMap<u64, u32> = [(2, 1), (3, 1)].into_iter().collect();
        let c = minimal_block_cover(&need, &[2, 3, 6]).unwrap();
        assert_eq!(c.blocks, [6]);
        let need: BTreeMap<u64, u32> = [(2, 2), (3, 1), (5, 1)].into_iter().collect();
        let c = minimal_block_cover(&need, &[6, 10]).unwrap();
        assert_eq!(c.blocks, [6, 10]);
        assert!(minimal_block_cover(&need, &[4]).is_none());
    }
}
