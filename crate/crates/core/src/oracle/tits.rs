//! The geometric (Tits) representation with exact cyclotomic entries.

use super::cycfield::{conductor_for, field_degree, CycField, Elem};
use crate::coxeter::{CoxeterSystem, Entry};
use crate::error::{Error, Result};

/// Bounds applied when building a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepLimits {
    pub max_label: u32,
    pub max_field_degree: u64,
}

impl Default for RepLimits {
    fn default() -> Self {
        RepLimits {
            max_label: 1000,
            max_field_degree: 512,
        }
    }
}

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rank: usize,
    pub entries: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct TitsRep {
    pub field: CycField,
    /// `c[s][t] = -2 B(a_s, a_t)`: `2 cos(pi/m)`, 0 for `m = 2`, 2 for `m = inf`.
    pub c: Vec<Vec<Elem>>,
    pub generators: Vec<Matrix>,
}

impl TitsRep {
    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn identity(&self) -> Matrix {
        let n = self.rank();
        let mut entries = vec![self.field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = self.field.int(1);
        }
        Matrix { rank: n, entries }
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        let n = a.rank;
        let k = &self.field;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = k.zero();
                for l in 0..n {
                    let x = &a.entries[i * n + l];
                    let y = &b.entries[l * n + j];
                    if !k.is_zero(x) && !k.is_zero(y) {
                        acc = k.mul_add(&acc, x, y)?;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rank: n, entries })
    }

    /// `sigma_s * w`: only row `s` changes, to `-w_s + sum_(t != s) c[s][t] w_t`.
    pub fn left_apply(&self, s: usize, w: &Matrix) -> Result<Matrix> {
        let n = w.rank;
        let k = &self.field;
        let mut out = w.clone();
        for j in 0..n {
            let mut acc = k.neg(&w.entries[s * n + j]);
            for t in (0..n).filter(|&t| t != s) {
                let c = &self.c[s][t];
                let y = &w.entries[t * n + j];
                if !k.is_zero(c) && !k.is_zero(y) {
                    acc = k.mul_add(&acc, c, y)?;
                }
            }
            out.entries[s * n + j] = acc;
        }
        Ok(out)
    }

    fn pow(&self, a: &Matrix, e: u32) -> Result<Matrix> {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// `sigma_s^2 = 1` and `(sigma_s sigma_t)^m = 1` for finite `m`.
    pub fn verify_relations(&self, system: &CoxeterSystem) -> Result<()> {
        let id = self.identity();
        for (s, g) in self.generators.iter().enumerate() {
            if self.mul(g, g)? != id {
                return Err(Error::Integrity(format!("sigma_{} does not square to 1", s + 1)));
            }
        }
        for (s, t, m) in system.off_diagonal() {
            if let Entry::Finite(m) = m {
                let st = self.mul(&self.generators[s], &self.generators[t])?;
                if self.pow(&st, m)? != id {
                    return Err(Error::Integrity(format!(
                        "(sigma_{} sigma_{})^{m} is not 1",
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn build_rep(system: &CoxeterSystem) -> Result<TitsRep> {
    build_rep_with(system, RepLimits::default())
}

pub fn build_rep_with(system: &CoxeterSystem, limits: RepLimits) -> Result<TitsRep> {
    let max = system.max_finite_label();
    if max > limits.max_label {
        return Err(Error::Limit(format!(
            "label {max} exceeds the bound {}",
            limits.max_label
        )));
    }
    let labels = system.off_diagonal().filter_map(|(_, _, m)| m.finite()).map(u64::from);
    let conductor = conductor_for(labels);
    let degree = field_degree(conductor);
    if degree > limits.max_field_degree {
        return Err(Error::Limit(format!(
            "Q(zeta_{conductor}) has degree {degree}, above the bound {}",
            limits.max_field_degree
        )));
    }
    let field = CycField::new(conductor)?;
    let n = system.rank();
    let mut c = vec![vec![field.zero(); n]; n];
    for (s, t, m) in system.off_diagonal() {
        let v = match m {
            Entry::Infinity => field.int(2),
            Entry::Finite(2) => field.zero(),
            Entry::Finite(m) => field.two_cos_pi_over(u64::from(m))?,
        };
        c[s][t] = v.clone();
        c[t][s] = v;
    }
    let mut rep = TitsRep {
        field,
        c,
        generators: Vec::new(),
    };
    let id = rep.identity();
    rep.generators = (0..n).map(|s| rep.left_apply(s, &id)).collect::<Result<_>>()?;
    rep.verify_relations(system)?;
    Ok(rep)
}
