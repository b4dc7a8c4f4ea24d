//! Recognition of finite Coxeter groups by matching connected components
//! against the irreducible diagrams A, B, D, E, F, H and I2.

use std::fmt;

use serde::Serialize;

use super::{CoxeterSystem, Entry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FiniteFamily {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2,
}

/// One irreducible finite component. `nodes` index into the classified system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteType {
    pub family: FiniteFamily,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dihedral_label: Option<u32>,
    pub nodes: Vec<usize>,
}

impl FiniteType {
    fn new(family: FiniteFamily, rank: usize, nodes: Vec<usize>) -> Self {
        FiniteType {
            family,
            rank,
            dihedral_label: None,
            nodes,
        }
    }

    pub fn name(&self) -> String {
        use FiniteFamily::*;
        match self.family {
            A => format!("A{}", self.rank),
            B => format!("B{}", self.rank),
            D => format!("D{}", self.rank),
            I2 => format!("I2({})", self.dihedral_label.unwrap_or(0)),
            f => format!("{f:?}"),
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        exponents(self)
    }

    /// Block sizes `m_i + 1` of the growth polynomial.
    pub fn degrees(&self) -> Vec<u32> {
        exponents(self).into_iter().map(|e| e + 1).collect()
    }

    /// Order of the group, the product of the degrees.
    pub fn order(&self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponents, ascending.
pub fn exponents(t: &FiniteType) -> Vec<u32> {
    use FiniteFamily::*;
    let n = t.rank as u32;
    let mut e = match t.family {
        A => (1..=n).collect(),
        B => (1..=n).map(|i| 2 * i - 1).collect(),
        D => {
            let mut v: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
            v.push(n - 1);
            v
        }
        I2 => vec![1, t.dihedral_label.unwrap_or(2) - 1],
        E6 => vec![1, 4, 5, 7, 8, 11],
        E7 => vec![1, 5, 7, 9, 11, 13, 17],
        E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        F4 => vec![1, 5, 7, 11],
        H3 => vec![1, 5, 9],
        H4 => vec![1, 11, 19, 29],
    };
    e.sort_unstable();
    e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Finite(Vec<FiniteType>),
    Infinite,
}

impl Classification {
    pub fn is_finite(&self) -> bool {
        matches!(self, Classification::Finite(_))
    }

    pub fn types(&self) -> Option<&[FiniteType]> {
        match self {
            Classification::Finite(t) => Some(t),
            Classification::Infinite => None,
        }
    }

    /// All degrees `m_i + 1` over all components, ascending.
    pub fn degrees(&self) -> Option<Vec<u32>> {
        let mut d: Vec<u32> = self.types()?.iter().flat_map(FiniteType::degrees).collect();
        d.sort_unstable();
        Some(d)
    }

    pub fn describe(&self) -> String {
        match self {
            Classification::Finite(t) if t.is_empty() => "trivial".into(),
            Classification::Finite(t) => t.iter().map(FiniteType::name).collect::<Vec<_>>().join(" x "),
            Classification::Infinite => "infinite".into(),
        }
    }
}

/// Splits into components over graph edges and matches each one.
///
/// Components are reported in order of their smallest node.
pub fn classify_finite(system: &CoxeterSystem) -> Classification {
    if system.has_infinity() {
        return Classification::Infinite;
    }
    let n = system.rank();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut k = 0;
        while k < nodes.len() {
            let v = nodes[k];
            for (w, c) in comp.iter_mut().enumerate() {
                if w != v && *c == usize::MAX && system.m(v, w).is_edge() {
                    *c = start;
                    nodes.push(w);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        match classify_component(system, &nodes) {
            Some(t) => out.push(t),
            None => return Classification::Infinite,
        }
    }
    Classification::Finite(out)
}

fn label(system: &CoxeterSystem, a: usize, b: usize) -> u32 {
    match system.m(a, b) {
        Entry::Finite(m) => m,
        Entry::Infinity => u32::MAX,
    }
}

fn classify_component(system: &CoxeterSystem, nodes: &[usize]) -> Option<FiniteType> {
    use FiniteFamily::*;
    let k = nodes.len();
    if k == 1 {
        return Some(FiniteType::new(A, 1, nodes.to_vec()));
    }
    let adj: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&v| {
            nodes
                .iter()
                .copied()
                .filter(|&w| w != v && system.m(v, w).is_edge())
                .collect()
        })
        .collect();
    let edge_count: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edge_count != k - 1 {
        return None;
    }
    let degree = |v: usize| adj[nodes.iter().position(|&x| x == v).unwrap()].len();
    let neighbours = |v: usize| &adj[nodes.iter().position(|&x| x == v).unwrap()];
    if nodes.iter().any(|&v| degree(v) > 3) {
        return None;
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) == 3).collect();
    match branch.as_slice() {
        [] => {
            let end = *nodes.iter().find(|&&v| degree(v) == 1)?;
            let mut path = vec![end];
            while path.len() < k {
                let last = *path.last().unwrap();
                let next = neighbours(last).iter().copied().find(|w| !path.contains(w))?;
                path.push(next);
            }
            let labels: Vec<u32> = path.windows(2).map(|w| label(system, w[0], w[1])).collect();
            classify_path(&path, &labels)
        }
        [c] => {
            let c = *c;
            let mut arms: Vec<Vec<usize>> = Vec::new();
            for &first in neighbours(c) {
                let mut arm = vec![first];
                let mut prev = c;
                loop {
                    let cur = *arm.last().unwrap();
                    let next: Vec<usize> = neighbours(cur).iter().copied().filter(|&w| w != prev).collect();
                    match next.as_slice() {
                        [] => break,
                        [w] => {
                            prev = cur;
                            arm.push(*w);
                        }
                        _ => return None,
                    }
                }
                arms.push(arm);
            }
            let all_three = nodes
                .iter()
                .all(|&v| neighbours(v).iter().all(|&w| label(system, v, w) == 3));
            if !all_three {
                return None;
            }
            arms.sort_by_key(Vec::len);
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            let mut all = vec![c];
            for a in &arms {
                all.extend(a);
            }
            match lens.as_slice() {
                [1, 1, l] => Some(FiniteType::new(D, l + 3, all)),
                [1, 2, 2] => Some(FiniteType::new(E6, 6, all)),
                [1, 2, 3] => Some(FiniteType::new(E7, 7, all)),
                [1, 2, 4] => Some(FiniteType::new(E8, 8, all)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// `path` lists the component in diagram order; `labels[i]` joins `path[i]`, `path[i+1]`.
fn classify_path(path: &[usize], labels: &[u32]) -> Option<FiniteType> {
    use FiniteFamily::*;
    let k = path.len();
    if k == 2 {
        return Some(match labels[0] {
            3 => FiniteType::new(A, 2, path.to_vec()),
            4 => FiniteType::new(B, 2, path.to_vec()),
            u32::MAX => return None,
            m => FiniteType {
                family: I2,
                rank: 2,
                dihedral_label: Some(m),
                nodes: path.to_vec(),
            },
        });
    }
    let odd: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] != 3).collect();
    match odd.as_slice() {
        [] => Some(FiniteType::new(A, k, path.to_vec())),
        [i] => {
            let i = *i;
            let at_end = i == 0 || i == labels.len() - 1;
            // Orient so the special label sits at the start of the node list.
            let mut nodes = path.to_vec();
            if i != 0 {
                nodes.reverse();
            }
            match (labels[i], at_end, k) {
                (4, true, _) => Some(FiniteType::new(B, k, nodes)),
                (4, false, 4) => Some(FiniteType::new(F4, 4, path.to_vec())),
                (5, true, 3) => Some(FiniteType::new(H3, 3, nodes)),
                (5, true, 4) => Some(FiniteType::new(H4, 4, nodes)),
                _ => None,
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &CoxeterSystem) -> Vec<String> {
        match classify_finite(s) {
            Classification::Finite(t) => t.iter().map(FiniteType::name).collect(),
            Classification::Infinite => vec!["inf".into()],
        }
    }

    fn lin(l: &[u32]) -> CoxeterSystem {
        CoxeterSystem::linear(l).unwrap()
    }

    #[test]
    fn linear_templates() {
        assert_eq!(names(&lin(&[5, 3, 3])), ["H4"]);
        assert_eq!(names(&lin(&[3, 3, 5])), ["H4"]);
        assert_eq!(names(&lin(&[3, 3, 4])), ["B4"]);
        assert_eq!(names(&lin(&[3, 4, 3])), ["F4"]);
        assert_eq!(names(&lin(&[5, 3])), ["H3"]);
        assert_eq!(names(&lin(&[3, 3, 3, 3])), ["A5"]);
        assert_eq!(names(&lin(&[7])), ["I2(7)"]);
        assert_eq!(names(&lin(&[3])), ["A2"]);
        assert_eq!(names(&lin(&[4])), ["B2"]);
        assert_eq!(names(&lin(&[5, 3, 3, 4])), ["inf"]);
        assert_eq!(names(&lin(&[5, 3, 3, 3])), ["inf"]);
        assert_eq!(names(&lin(&[4, 3, 4])), ["inf"]);
        assert_eq!(names(&lin(&[3, 5, 3])), ["inf"]);
        assert_eq!(names(&lin(&[2])), ["A1", "A1"]);
    }

    #[test]
    fn branched_templates() {
        let star = |arms: &[usize]| {
            let mut edges = Vec::new();
            let mut next = 1;
            for &len in arms {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next, Entry::Finite(3)));
                    prev = next;
                    next += 1;
                }
            }
            CoxeterSystem::from_edges(next, &edges).unwrap()
        };
        assert_eq!(names(&star(&[1, 1, 1])), ["D4"]);
        assert_eq!(names(&star(&[1, 1, 3])), ["D6"]);
        assert_eq!(names(&star(&[2, 2, 1])), ["E6"]);
        assert_eq!(names(&star(&[3, 1, 2])), ["E7"]);
        assert_eq!(names(&star(&[1, 4, 2])), ["E8"]);
        assert_eq!(names(&star(&[1, 5, 2])), ["inf"]);
        assert_eq!(names(&star(&[2, 2, 2])), ["inf"]);
    }

    #[test]
    fn cycles_and_infinity() {
        let tri = CoxeterSystem::from_edges(
            3,
            &[
                (0, 1, Entry::Finite(3)),
                (1, 2, Entry::Finite(3)),
                (0, 2, Entry::Finite(3)),
            ],
        )
        .unwrap();
        assert_eq!(names(&tri), ["inf"]);
        let inf = CoxeterSystem::from_edges(2, &[(0, 1, Entry::Infinity)]).unwrap();
        assert_eq!(names(&inf), ["inf"]);
    }

    #[test]
    fn exponent_lists() {
        let t = |f, r| FiniteType::new(f, r, vec![]);
        assert_eq!(exponents(&t(FiniteFamily::H4, 4)), [1, 11, 19, 29]);
        assert_eq!(exponents(&t(FiniteFamily::D, 4)), [1, 3, 3, 5]);
        assert_eq!(exponents(&t(FiniteFamily::A, 1)), [1]);
        let i2 = FiniteType {
            family: FiniteFamily::I2,
            rank: 2,
            dihedral_label: Some(7),
            nodes: vec![],
        };
        assert_eq!(exponents(&i2), [1, 6]);
        assert_eq!(t(FiniteFamily::E8, 8).order(), 696_729_600);
        assert_eq!(t(FiniteFamily::H4, 4).order(), 14_400);
    }
}
