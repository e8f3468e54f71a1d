//! Plain-text hypergraph format.
//!
//! ```text
//! # optional comment lines
//! r n m
//! v1 v2 ... vr      (m lines, strictly increasing 0-based labels)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Serialises `h`; the output parses back to an equal hypergraph and
/// re-serialises to the same bytes.
pub fn to_text(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", h.r(), h.n(), h.edge_count()).unwrap();
    for e in h.edges() {
        let mut first = true;
        for v in e {
            if !first {
                out.push(' ');
            }
            write!(out, "{v}").unwrap();
            first = false;
        }
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line, format!("expected a non-negative integer, got {tok:?}")))
        })
        .collect()
}

pub fn from_text(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `r n m`"))?;
    let head = numbers(hline, header)?;
    let [r, n, m] = head[..] else {
        return Err(parse_err(hline, "header must be `r n m`"));
    };
    if r == 0 {
        return Err(parse_err(hline, "uniformity must be at least 1"));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        if edges.len() == m {
            return Err(parse_err(ln, format!("more than the declared {m} edges")));
        }
        let e = numbers(ln, l)?;
        if e.len() != r {
            return Err(parse_err(ln, format!("expected {r} vertices, got {}", e.len())));
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(ln, "vertices must be strictly increasing"));
        }
        if e[r - 1] >= n {
            return Err(parse_err(ln, format!("vertex {} out of range 0..{n}", e[r - 1])));
        }
        edges.push(e.into_iter().map(|v| v as u32).collect::<Vec<_>>());
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, r, edges).map_err(|e| parse_err(0, e.to_string()))
}

pub fn read_file(path: &std::path::Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(0, format!("{}: {e}", path.display())))?;
    from_text(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, cycle};

    #[test]
    fn round_trip() {
        for h in [complete(5, 3), cycle(7).unwrap(), Hypergraph::empty(4, 2), Hypergraph::empty(0, 1)] {
            let text = to_text(&h);
            let back = from_text(&text).unwrap();
            assert_eq!(back, h);
            assert_eq!(to_text(&back), text);
        }
    }

    #[test]
    fn comments_and_errors() {
        let h = from_text("# triangle\n2 3 3\n0 1\n# mid\n0 2\n1 2\n").unwrap();
        assert_eq!(h, complete(3, 2));
        assert!(matches!(from_text("2 3 1\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(from_text("2 3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(from_text("2 3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(from_text("2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(from_text("2 3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(from_text("2 3 2\n0 1\n0 1\n").is_err());
    }
}
