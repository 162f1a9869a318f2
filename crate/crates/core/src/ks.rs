//! Reading and writing polytopes in the Kreuzer-Skarke text format: a header
//! line `r c [annotation]` followed by `r` lines of `c` integers.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::lattice::IntVector;
use crate::polytope::{LatticePolytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct KsParseError {
    pub line: usize,
    pub kind: KsErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KsErrorKind {
    #[error("malformed header {0:?}")]
    BadHeader(String),
    #[error("dimension {0} outside 1..=4")]
    BadDimension(usize),
    #[error("expected {expected} integers, found {found}")]
    WrongColumnCount { expected: usize, found: usize },
    #[error("expected {expected} matrix rows, input ended after {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("not an integer: {0:?}")]
    BadInteger(String),
}

/// One polytope as written in a KS file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSEntry {
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<Vec<BigInt>>,
    /// header text after `r c`, trimmed
    pub annotation: Option<String>,
}

/// Largest matrix side accepted; real files have at most a few dozen vertices.
const MAX_SIDE: usize = 4096;

impl KSEntry {
    pub fn dim(&self) -> usize {
        self.rows.min(self.cols)
    }

    /// Square matrices are read as columns-are-vertices, which may not be
    /// what the writer intended.
    pub fn is_ambiguous(&self) -> bool {
        self.rows == self.cols
    }

    /// Vertices are the columns if `rows <= cols`, else the rows.
    pub fn vertices(&self) -> Vec<IntVector> {
        if self.rows <= self.cols {
            (0..self.cols)
                .map(|c| IntVector::new(self.matrix.iter().map(|row| row[c].clone()).collect()))
                .collect()
        } else {
            self.matrix.iter().map(|row| IntVector::new(row.clone())).collect()
        }
    }

    pub fn polytope(&self) -> Result<LatticePolytope, PolytopeError> {
        LatticePolytope::from_vertices(&self.vertices())
    }

    /// Entry listing the vertices of `p` as columns.
    pub fn from_polytope(p: &LatticePolytope, annotation: Option<String>) -> KSEntry {
        let verts = p.vertices();
        KSEntry {
            rows: p.dim(),
            cols: verts.len(),
            matrix: (0..p.dim()).map(|r| verts.iter().map(|v| v[r].clone()).collect()).collect(),
            annotation,
        }
    }

    pub fn to_ks_string(&self) -> String {
        let mut out = format!("{} {}", self.rows, self.cols);
        if let Some(a) = &self.annotation {
            out.push(' ');
            out.push_str(a);
        }
        out.push('\n');
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

/// Concatenation of the entries' text forms.
pub fn emit_ks(entries: &[KSEntry]) -> String {
    entries.iter().map(KSEntry::to_ks_string).collect()
}

fn parse_row(text: &str, line: usize, expected: Option<usize>) -> Result<Vec<BigInt>, KsParseError> {
    let row: Vec<BigInt> = text
        .split_whitespace()
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| KsParseError { line, kind: KsErrorKind::BadInteger(t.to_string()) })
        })
        .collect::<Result<_, _>>()?;
    if let Some(n) = expected {
        if row.len() != n {
            return Err(KsParseError { line, kind: KsErrorKind::WrongColumnCount { expected: n, found: row.len() } });
        }
    }
    Ok(row)
}

fn parse_header(text: &str, line: usize) -> Result<(usize, usize, Option<String>), KsParseError> {
    let bad = || KsParseError { line, kind: KsErrorKind::BadHeader(text.to_string()) };
    let mut parts = text.trim().splitn(3, char::is_whitespace);
    let r: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let c: usize = parts.next().and_then(|t| t.trim().parse().ok()).ok_or_else(bad)?;
    if r == 0 || c == 0 || r > MAX_SIDE || c > MAX_SIDE {
        return Err(bad());
    }
    let dim = r.min(c);
    if !(1..=4).contains(&dim) {
        return Err(KsParseError { line, kind: KsErrorKind::BadDimension(dim) });
    }
    let annotation = parts.next().map(str::trim).filter(|a| !a.is_empty()).map(str::to_string);
    Ok((r, c, annotation))
}

/// Parses every entry of a KS file in order. Blank lines and lines starting
/// with `#` are skipped everywhere.
pub fn parse_ks(text: &str) -> Result<Vec<KSEntry>, KsParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let mut out = Vec::new();
    let mut last_line = 0;
    while let Some((n, header)) = lines.next() {
        let (rows, cols, annotation) = parse_header(header, n)?;
        let mut matrix = Vec::with_capacity(rows);
        for found in 0..rows {
            let (m, text) = lines.next().ok_or(KsParseError {
                line: last_line.max(n) + 1,
                kind: KsErrorKind::MissingRows { expected: rows, found },
            })?;
            last_line = m;
            matrix.push(parse_row(text, m, Some(cols))?);
        }
        last_line = last_line.max(n);
        out.push(KSEntry { rows, cols, matrix, annotation });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_columns() {
        let e = parse_ks("3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].dim(), 3);
        let p = e[0].polytope().unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(p.is_reflexive());
        assert_eq!(p.lattice_point_count(), 5);
    }

    #[test]
    fn transposed_form() {
        let a = parse_ks("3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1").unwrap();
        let b = parse_ks("4 3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n").unwrap();
        assert_eq!(a[0].polytope().unwrap(), b[0].polytope().unwrap());
    }

    #[test]
    fn comments_annotations_and_order() {
        let text = "# sample\n\n2 3  M:4 3 N:10 3\n1 0 -1\n0 1 -1\n\n1 2 seg\n-1 1\n";
        let e = parse_ks(text).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].annotation.as_deref(), Some("M:4 3 N:10 3"));
        assert_eq!(e[1].dim(), 1);
        assert_eq!(parse_ks(&emit_ks(&e)).unwrap(), e);
    }

    #[test]
    fn square_matrices_are_flagged() {
        let e = parse_ks("2 2\n1 0\n0 1\n").unwrap();
        assert!(e[0].is_ambiguous());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_ks("3 4\n1 0 0 -1\n0 1 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, KsErrorKind::WrongColumnCount { expected: 4, found: 3 }));
        let err = parse_ks("3 4\n1 0 0 -1\n0 x 0 -1\n0 0 1 -1\n").unwrap_err();
        assert_eq!((err.line, err.kind), (3, KsErrorKind::BadInteger("x".into())));
        assert_eq!(parse_ks("three 4\n").unwrap_err().line, 1);
        assert_eq!(parse_ks("5 6\n").unwrap_err().kind, KsErrorKind::BadDimension(5));
        let err = parse_ks("\n3 4\n1 0 0 -1\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(matches!(err.kind, KsErrorKind::MissingRows { expected: 3, found: 1 }));
    }

    #[test]
    fn from_polytope_round_trip() {
        let p = LatticePolytope::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]]).unwrap();
        let e = KSEntry::from_polytope(&p, None);
        assert_eq!(e.to_ks_string(), "2 3\n-1 0 1\n-1 1 0\n");
        assert_eq!(e.polytope().unwrap(), p);
    }
}
