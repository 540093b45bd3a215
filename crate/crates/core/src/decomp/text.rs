//! Line-oriented decomposition format: one path per line, vertex ids
//! separated by whitespace. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Path, PathDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TextError {
    pub line: usize,
    pub message: String,
}

pub fn parse_decomposition(text: &str) -> Result<PathDecomposition, TextError> {
    let mut paths = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let vertices = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| TextError {
                    line: i + 1,
                    message: format!("not a vertex id: {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        paths.push(Path::raw(vertices));
    }
    Ok(PathDecomposition::new(paths))
}

/// Writes each path with its smaller endpoint first.
pub fn write_decomposition(d: &PathDecomposition) -> String {
    let mut out = String::new();
    for p in d.paths() {
        let line: Vec<String> = p.canonical().vertices().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_skips_comments_and_blanks() {
        let d = parse_decomposition("# header\n0 1 2\n\n  3 2 # tail\n").unwrap();
        assert_eq!(d.normalized(), vec![vec![0, 1, 2], vec![2, 3]]);
    }

    #[test]
    fn parse_rejects_junk() {
        let err = parse_decomposition("0 1\n0 x\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn write_canonicalizes_direction() {
        let d = PathDecomposition::from_vertex_lists(vec![vec![3, 1, 0], vec![0, 2]]);
        assert_eq!(write_decomposition(&d), "0 1 3\n0 2\n");
        assert_eq!(parse_decomposition(&write_decomposition(&d)).unwrap().normalized(), d.normalized());
    }
}
