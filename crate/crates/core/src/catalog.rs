//! Built-in groups and fixtures.

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Entry};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::right_angled::FVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Source {
    System(CoxeterSystem),
    /// Right-angled polytope given by its f-vector.
    FVector(FVector),
    /// A bare growth-function denominator.
    Denominator(IntPolynomial),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub key: String,
    pub source: Source,
    pub dimension: Option<usize>,
    pub provenance: String,
    /// Entries built from data that cannot be read unambiguously are flagged.
    pub verified: bool,
}

impl CatalogEntry {
    pub fn system(&self) -> Option<&CoxeterSystem> {
        match &self.source {
            Source::System(s) => Some(s),
            _ => None,
        }
    }
}

fn entry(key: &str, source: Source, dimension: Option<usize>, provenance: &str, verified: bool) -> CatalogEntry {
    CatalogEntry {
        key: key.into(),
        source,
        dimension,
        provenance: provenance.into(),
        verified,
    }
}

fn edges(rank: usize, list: &[(usize, usize, Entry)]) -> CoxeterSystem {
    // 1-based in the table below.
    let zero: Vec<(usize, usize, Entry)> = list.iter().map(|&(i, j, m)| (i - 1, j - 1, m)).collect();
    CoxeterSystem::from_edges(rank, &zero).expect("catalog graphs are valid")
}

/// Right-angled system whose generators are the vertices of `graph`:
/// adjacent vertices commute, all other pairs are free.
pub fn right_angled_from_adjacency(n: usize, adjacent: &[(usize, usize)]) -> Result<CoxeterSystem> {
    let mut list = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !adjacent.iter().any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j)) {
                list.push((i, j, Entry::Infinity));
            }
        }
    }
    CoxeterSystem::from_edges(n, &list)
}

pub fn hexagon() -> CoxeterSystem {
    let adj: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    right_angled_from_adjacency(6, &adj).expect("valid")
}

/// Face adjacency of the dodecahedron, i.e. the icosahedron graph.
pub fn icosahedron_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 1..=5 {
        let next = i % 5 + 1;
        e.push((0, i));
        e.push((i, next));
        e.push((5 + i, 5 + next));
        e.push((11, 5 + i));
        e.push((i, 5 + i));
        e.push((i, 5 + next));
    }
    e
}

pub fn dodecahedron() -> CoxeterSystem {
    right_angled_from_adjacency(12, &icosahedron_edges()).expect("valid")
}

/// Truncated orthoscheme `o -inf- o -p- o -q- o -r- o` acting on `H^3`;
/// requires `1/p + 1/q > 1/2 > 1/q + 1/r`.
pub fn prism(p: u32, q: u32, r: u32) -> Result<CoxeterSystem> {
    if p < 3 || q < 3 || r < 3 {
        return Err(Error::InvalidInput("prism labels must be at least 3".into()));
    }
    // 1/p + 1/q > 1/2  <=>  2(p + q) > pq
    if 2 * (p + q) <= p * q {
        return Err(Error::InvalidInput(format!("1/{p} + 1/{q} must exceed 1/2")));
    }
    if 2 * (q + r) >= q * r {
        return Err(Error::InvalidInput(format!("1/{q} + 1/{r} must be below 1/2")));
    }
    let f = Entry::Finite;
    Ok(edges(
        5,
        &[(1, 2, Entry::Infinity), (2, 3, f(p)), (3, 4, f(q)), (4, 5, f(r))],
    ))
}

fn parse_prism(key: &str) -> Option<Result<(u32, u32, u32)>> {
    let rest = key.strip_prefix("prism-")?;
    let parts: Vec<&str> = rest.split('-').collect();
    let nums: Option<Vec<u32>> = parts.iter().map(|p| p.parse().ok()).collect();
    Some(match nums.as_deref() {
        Some(&[p, q, r]) => Ok((p, q, r)),
        _ => Err(Error::InvalidInput(format!("expected prism-P-Q-R, got {key}"))),
    })
}

pub fn lehmer() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// The prism group whose growth series has negative poles.
fn kaplinskaya_66() -> CoxeterSystem {
    let f = Entry::Finite;
    edges(
        6,
        &[
            (1, 2, f(3)),
            (2, 3, f(3)),
            (3, 4, f(3)),
            (4, 1, f(3)),
            (1, 5, f(3)),
            (5, 6, f(5)),
            (6, 3, f(3)),
            (2, 4, Entry::Infinity),
        ],
    )
}

/// Nine-facet compact polytope in `H^6`.
fn tumarkin() -> CoxeterSystem {
    let f = Entry::Finite;
    edges(
        9,
        &[
            (1, 2, f(5)),
            (2, 3, f(3)),
            (3, 4, f(3)),
            (4, 5, f(3)),
            (7, 6, f(3)),
            (6, 8, f(3)),
            (8, 9, f(3)),
            (9, 4, f(3)),
            (8, 7, f(5)),
            (7, 9, f(3)),
            (5, 6, Entry::Infinity),
        ],
    )
}

pub fn catalog() -> Vec<CatalogEntry> {
    use Source::*;
    let sys = |s: CoxeterSystem| System(s);
    let neg = IntPolynomial::from_i64(&[1, -3, 1]);
    vec![
        entry(
            "lanner-5334",
            sys(CoxeterSystem::linear(&[5, 3, 3, 4]).expect("valid")),
            Some(4),
            "compact Coxeter 4-simplex, linear diagram 5-3-3-4",
            true,
        ),
        entry(
            "lanner-5333",
            sys(CoxeterSystem::linear(&[5, 3, 3, 3]).expect("valid")),
            Some(4),
            "compact Coxeter 4-simplex, linear diagram 5-3-3-3",
            true,
        ),
        entry("ra-hexagon", sys(hexagon()), Some(2), "right-angled hexagon in H^2", true),
        entry(
            "ra-dodecahedron",
            sys(dodecahedron()),
            Some(3),
            "right-angled dodecahedron in H^3; generators are faces, adjacent faces commute",
            true,
        ),
        entry(
            "prism-5-3-7",
            sys(prism(5, 3, 7).expect("valid")),
            Some(3),
            "simply truncated orthoscheme inf-5-3-7 in H^3",
            true,
        ),
        entry(
            "prism-3-3-7",
            sys(prism(3, 3, 7).expect("valid")),
            Some(3),
            "simply truncated orthoscheme inf-3-3-7 in H^3",
            true,
        ),
        entry(
            "triangle-2-3-7",
            sys(edges(3, &[(1, 2, Entry::Finite(2)), (2, 3, Entry::Finite(3)), (1, 3, Entry::Finite(7))])),
            Some(2),
            "hyperbolic triangle group (2,3,7)",
            true,
        ),
        entry(
            "finite-h4",
            sys(CoxeterSystem::linear(&[5, 3, 3]).expect("valid")),
            None,
            "finite reflection group H4 of order 14400",
            true,
        ),
        entry(
            "ra-120cell-fvector",
            FVector("600,1200,720,120".parse().expect("valid")),
            Some(4),
            "right-angled 120-cell in H^4 given by its f-vector",
            true,
        ),
        entry(
            "lehmer-fixture",
            Denominator(lehmer()),
            None,
            "Lehmer's degree-10 Salem polynomial as a denominator",
            true,
        ),
        entry(
            "salem-negative-control",
            Denominator(&neg * &neg),
            None,
            "(1 - 3x + x^2)^2: a double pole pair, no Salem layout",
            true,
        ),
        entry(
            "kaplinskaya-66",
            sys(kaplinskaya_66()),
            Some(4),
            "unverified transcription: simplicial prism in H^4 over a Lanner tetrahedron, read off a drawing; reproduces 4 negative and 4 positive simple poles",
            false,
        ),
        entry(
            "tumarkin-6d",
            sys(tumarkin()),
            Some(6),
            "unverified transcription: compact 6-polytope with nine facets, read off a drawing; reproduces the covolume 2077 pi^3 / 17010000",
            false,
        ),
    ]
}

/// Finds a catalog entry; `prism-P-Q-R` is generated on demand.
pub fn lookup(key: &str) -> Result<CatalogEntry> {
    if let Some(e) = catalog().into_iter().find(|e| e.key == key) {
        return Ok(e);
    }
    if let Some(pqr) = parse_prism(key) {
        let (p, q, r) = pqr?;
        return Ok(entry(
            key,
            Source::System(prism(p, q, r)?),
            Some(3),
            &format!("simply truncated orthoscheme inf-{p}-{q}-{r} in H^3"),
            false,
        ));
    }
    let keys: Vec<String> = catalog().into_iter().map(|e| e.key).collect();
    Err(Error::InvalidInput(format!(
        "unknown catalog key {key:?}; known: {}, prism-P-Q-R",
        keys.join(", ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::enumerate_finite_subsets;

    #[test]
    fn icosahedron_is_five_regular() {
        let e = icosahedron_edges();
        assert_eq!(e.len(), 30);
        for v in 0..12 {
            assert_eq!(e.iter().filter(|&&(a, b)| a == v || b == v).count(), 5);
        }
        let l = enumerate_finite_subsets(&dodecahedron()).unwrap();
        let counts = l.size_counts();
        assert_eq!(counts[..4], [1, 12, 30, 20]);
        assert!(counts[4..].iter().all(|&c| c == 0));
    }

    #[test]
    fn prism_constraints() {
        assert!(prism(5, 3, 7).is_ok());
        assert!(prism(3, 6, 3).is_err());
        assert!(prism(5, 3, 6).is_err());
        assert!(lookup("prism-4-3-7").is_ok());
        assert!(lookup("prism-4-3").is_err());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn keys_are_unique() {
        let mut keys: Vec<String> = catalog().into_iter().map(|e| e.key).collect();
        let n = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), n);
    }

    #[test]
    fn prism_shape_of_transcribed_k66() {
        let l = enumerate_finite_subsets(&kaplinskaya_66()).unwrap();
        assert_eq!(l.maximal().count(), 8);
        assert!(l.maximal().all(|e| e.size() == 4));
    }
}
