//! Coxeter systems: the matrix `m(s, s')`, parsing, finite-type recognition
//! and the lattice of finite standard parabolic subgroups.

mod classify;
mod lattice;
mod parse;

pub use classify::{classify_finite, exponents, Classification, FiniteFamily, FiniteType};
pub use lattice::{
    enumerate_finite_subsets, enumerate_finite_subsets_with_bound, FiniteSubgroupLattice, LatticeEntry,
    DEFAULT_RANK_BOUND,
};
pub use parse::parse_system;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Coxeter matrix entry: a finite order `m >= 1` or `inf` (no relation).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Finite(u32),
    Infinity,
}

impl Entry {
    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(m) => Some(m),
            Entry::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Entry::Infinity
    }

    /// True for entries drawn as an edge of the Coxeter graph (`m >= 3` or `inf`).
    pub fn is_edge(self) -> bool {
        match self {
            Entry::Finite(m) => m >= 3,
            Entry::Infinity => true,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Finite(m) => write!(f, "{m}"),
            Entry::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Entry {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "inf" | "oo" | "∞" => Ok(Entry::Infinity),
            _ => s
                .parse::<u32>()
                .map(Entry::Finite)
                .map_err(|_| format!("expected an integer or `inf`, found `{s}`")),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Entry::Finite(m) => s.serialize_u32(*m),
            Entry::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(m) => Ok(Entry::Finite(m)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Generators are indexed `0..rank`; the text format uses 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterSystem {
    matrix: Vec<Vec<Entry>>,
    labels: Vec<Option<String>>,
}

impl CoxeterSystem {
    pub fn new(matrix: Vec<Vec<Entry>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != Entry::Finite(1) {
                return Err(Error::InvalidInput(format!("diagonal entry {} must be 1", i + 1)));
            }
            for (j, &e) in row.iter().enumerate() {
                if i != j && e.finite().is_some_and(|m| m < 2) {
                    return Err(Error::InvalidInput(format!(
                        "entry ({}, {}) must be at least 2",
                        i + 1,
                        j + 1
                    )));
                }
                if matrix[j][i] != e {
                    return Err(Error::InvalidInput(format!(
                        "matrix is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CoxeterSystem {
            matrix,
            labels: vec![None; n],
        })
    }

    /// Builds from 0-based edges `(i, j, m)`; unmentioned pairs get 2.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, Entry)]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        let mut matrix = vec![vec![Entry::Finite(2); rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = Entry::Finite(1);
        }
        for &(i, j, m) in edges {
            if i >= rank || j >= rank || i == j {
                return Err(Error::InvalidInput(format!("invalid edge ({}, {})", i + 1, j + 1)));
            }
            matrix[i][j] = m;
            matrix[j][i] = m;
        }
        Self::new(matrix)
    }

    /// A linear diagram with the given labels between consecutive nodes.
    pub fn linear(labels: &[u32]) -> Result<Self> {
        let edges: Vec<_> = labels
            .iter()
            .enumerate()
            .map(|(i, &m)| (i, i + 1, Entry::Finite(m)))
            .collect();
        Self::from_edges(labels.len() + 1, &edges)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn m(&self, i: usize, j: usize) -> Entry {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Entry>] {
        &self.matrix
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    pub fn set_label(&mut self, i: usize, name: impl Into<String>) {
        self.labels[i] = Some(name.into());
    }

    /// Name of generator `i` for display: its label or its 1-based index.
    pub fn generator_name(&self, i: usize) -> String {
        self.label(i).map(str::to_string).unwrap_or_else(|| (i + 1).to_string())
    }

    /// Restriction of `m` to `subset x subset`, in the given order.
    pub fn induced(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::InvalidInput("induced subsystem needs a nonempty subset".into()));
        }
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::InvalidInput(format!("generator index {} out of range", bad + 1)));
        }
        let mut seen = vec![false; self.rank()];
        for &i in subset {
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!("generator {} repeated", i + 1)));
            }
        }
        let matrix = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.matrix[i][j]).collect())
            .collect();
        Ok(CoxeterSystem {
            matrix,
            labels: subset.iter().map(|&i| self.labels[i].clone()).collect(),
        })
    }

    /// Every off-diagonal entry is 2 or `inf`.
    pub fn is_right_angled(&self) -> bool {
        self.off_diagonal()
            .all(|(_, _, e)| matches!(e, Entry::Finite(2) | Entry::Infinity))
    }

    pub fn has_infinity(&self) -> bool {
        self.off_diagonal().any(|(_, _, e)| e.is_infinite())
    }

    /// Pairs `i < j` with their entries.
    pub fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, Entry)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.matrix[i][j])))
    }

    /// Largest finite label, 1 for rank 1.
    pub fn max_finite_label(&self) -> u32 {
        self.off_diagonal()
            .filter_map(|(_, _, e)| e.finite())
            .max()
            .unwrap_or(1)
    }

    /// The same system with generators reordered: new generator `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.rank() {
            return Err(Error::InvalidInput("permutation length differs from rank".into()));
        }
        self.induced(perm)
    }

    /// Renders in the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("rank {}\n", self.rank());
        for (i, j, e) in self.off_diagonal() {
            if e != Entry::Finite(2) {
                out.push_str(&format!("edge {} {} {}\n", i + 1, j + 1, e));
            }
        }
        for (i, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                out.push_str(&format!("name {} {}\n", i + 1, l));
            }
        }
        out
    }
}
