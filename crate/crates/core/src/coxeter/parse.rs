//! Line-oriented text format.
//!
//! ```text
//! # Lanner simplex group
//! rank 5
//! edge 1 2 5
//! edge 2 3 3
//! edge 3 4 3
//! edge 4 5 4
//! ```
//!
//! `name I STRING` labels a generator. A `matrix` line followed by `rank`
//! rows may replace the `edge` lines. Pairs that are never mentioned get 2.

use std::collections::HashSet;

use super::{CoxeterSystem, Entry};
use crate::error::{Error, Result};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn index(tok: &str, rank: usize, line: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| err(line, format!("expected a generator index, found `{tok}`")))?;
    if i == 0 || i > rank {
        return Err(err(line, format!("index {i} out of range 1..={rank}")));
    }
    Ok(i - 1)
}

pub fn parse_system(text: &str) -> Result<CoxeterSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_no, first) = lines.next().ok_or_else(|| err(1, "missing `rank` line"))?;
    let toks: Vec<&str> = first.split_whitespace().collect();
    if toks.first() != Some(&"rank") {
        return Err(err(first_no, "the first line must be `rank N`"));
    }
    let rank: usize = match toks.as_slice() {
        [_, n] => n.parse().map_err(|_| err(first_no, format!("invalid rank `{n}`")))?,
        _ => return Err(err(first_no, "expected `rank N`")),
    };
    if rank == 0 {
        return Err(err(first_no, "rank must be at least 1"));
    }

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut names = Vec::new();
    let mut matrix: Option<CoxeterSystem> = None;
    let mut pending_rows: Option<(usize, Vec<Vec<Entry>>)> = None;

    for (no, line) in lines {
        if let Some((start, mut rows)) = pending_rows.take() {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<Entry>().map_err(|m| err(no, m)))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != rank {
                return Err(err(
                    no,
                    format!("matrix row has {} entries, expected {rank}", row.len()),
                ));
            }
            rows.push(row);
            if rows.len() == rank {
                let sys = CoxeterSystem::new(rows).map_err(|e| err(start, e.to_string()))?;
                matrix = Some(sys);
            } else {
                pending_rows = Some((start, rows));
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "rank" => return Err(err(no, "duplicate `rank` line")),
            "edge" => {
                if matrix.is_some() {
                    return Err(err(no, "`edge` and `matrix` cannot be combined"));
                }
                let [_, i, j, m] = toks.as_slice() else {
                    return Err(err(no, "expected `edge I J M`"));
                };
                let (i, j) = (index(i, rank, no)?, index(j, rank, no)?);
                if i == j {
                    return Err(err(no, "an edge needs two distinct generators"));
                }
                let m: Entry = m.parse().map_err(|e| err(no, e))?;
                if m.finite().is_some_and(|m| m < 3) {
                    return Err(err(no, "edge labels must be at least 3 (omit the edge for 2)"));
                }
                if !seen.insert((i.min(j), i.max(j))) {
                    return Err(err(no, format!("duplicate edge {} {}", i + 1, j + 1)));
                }
                edges.push((i, j, m));
            }
            "name" => {
                if toks.len() < 3 {
                    return Err(err(no, "expected `name I STRING`"));
                }
                let i = index(toks[1], rank, no)?;
                let rest = line["name".len()..].trim_start();
                let rest = rest[toks[1].len()..].trim();
                names.push((i, rest.to_string()));
            }
            "matrix" => {
                if !edges.is_empty() {
                    return Err(err(no, "`edge` and `matrix` cannot be combined"));
                }
                if matrix.is_some() {
                    return Err(err(no, "duplicate `matrix` block"));
                }
                pending_rows = Some((no, Vec::new()));
            }
            other => return Err(err(no, format!("unknown directive `{other}`"))),
        }
    }
    if let Some((start, _)) = pending_rows {
        return Err(err(start, "matrix block ends before all rows were given"));
    }
    let mut sys = match matrix {
        Some(m) => m,
        None => CoxeterSystem::from_edges(rank, &edges)?,
    };
    for (i, n) in names {
        sys.set_label(i, n);
    }
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_graph() {
        let s = parse_system("rank 5\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 4\n").unwrap();
        assert_eq!(s, CoxeterSystem::linear(&[5, 3, 3, 4]).unwrap());
    }

    #[test]
    fn defaults_and_comments() {
        let s = parse_system("# c\nrank 3 # three\nedge 1 2 inf\nname 3 t three\n").unwrap();
        assert_eq!(s.m(0, 1), Entry::Infinity);
        assert_eq!(s.m(0, 2), Entry::Finite(2));
        assert_eq!(s.m(1, 2), Entry::Finite(2));
        assert_eq!(s.label(2), Some("t three"));
        let one = parse_system("rank 1").unwrap();
        assert_eq!(one.matrix(), &[vec![Entry::Finite(1)]]);
    }

    #[test]
    fn matrix_block() {
        let s = parse_system("rank 2\nmatrix\n1 inf\ninf 1\n").unwrap();
        assert_eq!(s.m(0, 1), Entry::Infinity);
        assert!(parse_system("rank 2\nmatrix\n1 3\n4 1\n").is_err());
        assert!(parse_system("rank 2\nmatrix\n1 3\n").is_err());
        assert!(parse_system("rank 2\nedge 1 2 3\nmatrix\n1 3\n3 1\n").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_system("rank 3\nedge 1 2 3\nedge 2 1 4\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 3,
                msg: "duplicate edge 2 1".into()
            }
        );
        assert!(matches!(
            parse_system("rank 3\nedge 1 2 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_system("rank 3\nedge 1 4 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_system("edge 1 2 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_system("").is_err());
    }

    #[test]
    fn text_round_trip() {
        let mut s = CoxeterSystem::from_edges(4, &[(0, 1, Entry::Finite(7)), (2, 3, Entry::Infinity)]).unwrap();
        s.set_label(0, "a");
        assert_eq!(parse_system(&s.to_text()).unwrap(), s);
    }
}
