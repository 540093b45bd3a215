//! Reading graphs from edge lists and graph6 streams.

use std::str::FromStr;

use thiserror::Error;

use super::graph6::{parse_graph6, Graph6Error};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph6 {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("no graph in input")]
    NoGraph,
    #[error("unknown format {0:?} (expected auto, graph6 or edgelist)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Auto,
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Format::Auto),
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(InputError::UnknownFormat(other.to_string())),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses `u v` lines into a graph on `0..=max id`.
pub fn parse_edgelist(text: &str) -> Result<Graph, InputError> {
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (line, l) in content_lines(text) {
        let err = |message: String| InputError::EdgeList { line, message };
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(err(format!("expected two vertex ids, found {}", tokens.len())));
        };
        let id = |t: &str| t.parse::<usize>().map_err(|_| err(format!("not a vertex id: {t:?}")));
        edges.push((id(a)?, id(b)?));
        lines.push(line);
    }
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().ok_or(InputError::NoGraph)?;
    Graph::from_edges(n, &edges).map_err(|e| {
        let culprit = match e {
            GraphError::SelfLoop(v) => edges.iter().position(|&(a, b)| a == v && b == v),
            GraphError::DuplicateEdge(u, v) => edges
                .iter()
                .enumerate()
                .filter(|&(_, &(a, b))| (a, b) == (u, v) || (a, b) == (v, u))
                .map(|(i, _)| i)
                .nth(1),
            _ => None,
        };
        InputError::EdgeList {
            line: culprit.map_or(0, |i| lines[i]),
            message: e.to_string(),
        }
    })
}

/// One graph per non-blank line.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, InputError> {
    let graphs = content_lines(text)
        .map(|(line, l)| parse_graph6(l).map_err(|source| InputError::Graph6 { line, source }))
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(InputError::NoGraph);
    }
    Ok(graphs)
}

/// Edge-list if the first content line is two whitespace-separated tokens,
/// graph6 otherwise.
pub fn detect_format(text: &str) -> Format {
    match content_lines(text).next() {
        Some((_, l)) if l.split_whitespace().count() >= 2 => Format::EdgeList,
        Some((_, l)) if l.chars().all(|c| c.is_ascii_digit()) => Format::EdgeList,
        _ => Format::Graph6,
    }
}

/// Parses `text` as one edge list or a stream of graph6 lines.
pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>, InputError> {
    let format = match format {
        Format::Auto => detect_format(text),
        f => f,
    };
    match format {
        Format::EdgeList => Ok(vec![parse_edgelist(text)?]),
        _ => parse_graph6_stream(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn edgelist_examples() {
        assert_eq!(parse_edgelist("0 1\n1 2").unwrap(), path(3));
        assert_eq!(parse_edgelist("# header\n\n0 1 # trailing\n").unwrap(), path(2));
        let loop_err = parse_edgelist("0 1\n0 0").unwrap_err();
        assert_eq!(
            loop_err,
            InputError::EdgeList {
                line: 2,
                message: "self-loop at vertex 0".into()
            }
        );
        assert!(matches!(parse_edgelist("0 1\n1 0"), Err(InputError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edgelist("0 x"), Err(InputError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edgelist("0 1 2"), Err(InputError::EdgeList { .. })));
        assert_eq!(parse_edgelist("# nothing"), Err(InputError::NoGraph));
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("0 1\n"), Format::EdgeList);
        assert_eq!(detect_format("D~{\nA_\n"), Format::Graph6);
        let gs = parse_graphs("D~{\nA_\n", Format::Auto).unwrap();
        assert_eq!(gs, vec![complete(5), complete(2)]);
        assert_eq!("g6".parse::<Format>().unwrap(), Format::Graph6);
        assert!("csv".parse::<Format>().is_err());
    }
}
