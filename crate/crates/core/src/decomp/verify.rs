use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{DecompError, PathDecomposition};
use crate::graph::{edge, Edge, Graph};

/// One problem found by [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    TooShort { path: usize },
    OutOfRange { path: usize, vertex: usize },
    RepeatedVertex { path: usize, vertex: usize },
    NonEdge { path: usize, u: usize, v: usize },
    DuplicatedEdge { u: usize, v: usize, paths: Vec<usize> },
    UncoveredEdge { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooShort { path } => write!(f, "path {path}: fewer than two vertices"),
            Violation::OutOfRange { path, vertex } => {
                write!(f, "path {path}: vertex {vertex} out of range")
            }
            Violation::RepeatedVertex { path, vertex } => {
                write!(f, "path {path}: repeated vertex {vertex}")
            }
            Violation::NonEdge { path, u, v } => write!(f, "path {path}: non-edge step {u}-{v}"),
            Violation::DuplicatedEdge { u, v, paths } => {
                write!(f, "duplicated edge {u}-{v} in paths {paths:?}")
            }
            Violation::UncoveredEdge { u, v } => write!(f, "uncovered edge {u}-{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub path_count: usize,
    /// `⌈n/2⌉` for the graph verified against.
    pub bound: usize,
    pub good: bool,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "valid={} good={} paths={} bound={}",
            self.valid, self.good, self.path_count, self.bound
        )?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

/// Checks that `d` partitions the edges of `g` into simple paths and
/// collects every violation found.
pub fn verify(g: &Graph, d: &PathDecomposition) -> VerifyReport {
    let n = g.order();
    let mut violations = Vec::new();
    let mut owners: HashMap<Edge, Vec<usize>> = HashMap::new();

    for (i, p) in d.paths().iter().enumerate() {
        let vs = p.vertices();
        if vs.len() < 2 {
            violations.push(Violation::TooShort { path: i });
        }
        let mut seen = vec![false; n];
        for &v in vs {
            if v >= n {
                violations.push(Violation::OutOfRange { path: i, vertex: v });
            } else if seen[v] {
                violations.push(Violation::RepeatedVertex { path: i, vertex: v });
            } else {
                seen[v] = true;
            }
        }
        for w in vs.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a >= n || b >= n {
                continue;
            }
            if !g.has_edge(a, b) {
                violations.push(Violation::NonEdge { path: i, u: a, v: b });
                continue;
            }
            owners.entry(edge(a, b)).or_default().push(i);
        }
    }

    let mut dups: Vec<(Edge, Vec<usize>)> =
        owners.iter().filter(|(_, ps)| ps.len() > 1).map(|(e, ps)| (*e, ps.clone())).collect();
    dups.sort();
    for ((u, v), paths) in dups {
        violations.push(Violation::DuplicatedEdge { u, v, paths });
    }
    for (u, v) in g.edges() {
        if !owners.contains_key(&(u, v)) {
            violations.push(Violation::UncoveredEdge { u, v });
        }
    }

    let valid = violations.is_empty();
    let bound = n.div_ceil(2);
    VerifyReport {
        valid,
        violations,
        path_count: d.len(),
        bound,
        good: valid && d.len() <= bound,
    }
}

/// Whether a valid decomposition has at most `⌈n/2⌉` paths.
pub fn is_good(g: &Graph, d: &PathDecomposition) -> Result<bool, DecompError> {
    let report = verify(g, d);
    if !report.valid {
        return Err(DecompError::Invalid(report.violations[0].to_string()));
    }
    Ok(report.good)
}

/// `max(⌈odd/2⌉, ⌈m/(n-1)⌉)`: every odd vertex ends a path and no path has
/// more than `n - 1` edges.
pub fn lower_bound(g: &Graph) -> Result<usize, DecompError> {
    if g.size() == 0 {
        return Err(DecompError::Edgeless);
    }
    let odd = (0..g.order()).filter(|&v| g.degree(v) % 2 == 1).count();
    Ok(odd.div_ceil(2).max(g.size().div_ceil(g.order() - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn d(lists: &[&[usize]]) -> PathDecomposition {
        PathDecomposition::from_vertex_lists(lists.iter().map(|l| l.to_vec()))
    }

    #[test]
    fn verify_examples() {
        let r = verify(&cycle(4), &d(&[&[0, 1, 2], &[2, 3, 0]]));
        assert!(r.valid && r.good);
        assert_eq!(r.path_count, 2);

        let r = verify(&cycle(4), &d(&[&[0, 1, 2, 3, 0]]));
        assert!(!r.valid);
        assert!(r
            .violations
            .contains(&Violation::RepeatedVertex { path: 0, vertex: 0 }));

        let r = verify(&complete(3), &d(&[&[0, 1, 2]]));
        assert_eq!(r.violations, vec![Violation::UncoveredEdge { u: 0, v: 2 }]);
    }

    #[test]
    fn verify_reports_everything() {
        let r = verify(&path(3), &d(&[&[0, 2], &[0, 1], &[1, 0], &[7], &[1, 9]]));
        assert!(r.violations.contains(&Violation::NonEdge { path: 0, u: 0, v: 2 }));
        assert!(r.violations.contains(&Violation::DuplicatedEdge {
            u: 0,
            v: 1,
            paths: vec![1, 2]
        }));
        assert!(r.violations.contains(&Violation::TooShort { path: 3 }));
        assert!(r.violations.contains(&Violation::OutOfRange { path: 3, vertex: 7 }));
        assert!(r.violations.contains(&Violation::OutOfRange { path: 4, vertex: 9 }));
        assert!(r.violations.contains(&Violation::UncoveredEdge { u: 1, v: 2 }));
        assert!(!r.good);
    }

    #[test]
    fn goodness_examples() {
        assert_eq!(is_good(&complete(3), &d(&[&[0, 1, 2], &[0, 2]])), Ok(true));
        let k5_three = d(&[&[0, 1, 2, 3, 4], &[2, 4, 1, 3, 0], &[2, 0, 4]]);
        assert_eq!(is_good(&complete(5), &k5_three), Ok(true));
        let k5_four = d(&[&[0, 1, 2, 3, 4], &[2, 4, 1, 3, 0], &[2, 0], &[0, 4]]);
        assert_eq!(is_good(&complete(5), &k5_four), Ok(false));
        assert_eq!(is_good(&path(2), &d(&[&[0, 1]])), Ok(true));
        assert!(is_good(&complete(3), &d(&[&[0, 1, 2]])).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&petersen()), Ok(5));
        assert_eq!(lower_bound(&complete(5)), Ok(3));
        assert_eq!(lower_bound(&path(6)), Ok(1));
        assert_eq!(lower_bound(&Graph::empty(3)), Err(DecompError::Edgeless));
    }
}
