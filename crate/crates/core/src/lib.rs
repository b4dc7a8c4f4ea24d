//! Exact growth series of Coxeter groups.
//!
//! The crate computes the rational growth function of a Coxeter system from
//! its finite standard parabolic subgroups, rewrites it in complete form
//! `P/Q` with `P` a product of blocks `[n] = 1 + x + ... + x^(n-1)`, derives
//! the coefficients of `Q` a second way through a recursion over the blocks,
//! locates the poles with exact real-root isolation, and cross-checks word
//! counts by breadth-first search in the Tits representation.

pub mod catalog;
pub mod coxeter;
pub mod error;
pub mod growth;
pub mod oracle;
pub mod poly;
pub mod right_angled;
pub mod spectral;

pub use coxeter::{classify_finite, CoxeterSystem, Entry, FiniteFamily, FiniteSubgroupLattice, FiniteType};
pub use error::{Error, Result};
pub use growth::GrowthSeries;
pub use poly::{IntPolynomial, RationalFunction};
