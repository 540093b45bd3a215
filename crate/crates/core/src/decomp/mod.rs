//! Paths, path decompositions and the four editing moves used by lifts:
//! replacing a subpath, extending at an endpoint, splitting at a vertex and
//! adding a new path.
//!
//! Editing moves only check the structural facts they can see (simplicity,
//! shared endpoints, edge collisions); whether every step is an edge of some
//! graph is the verifier's job.

pub mod text;
mod verify;

pub use verify::{is_good, lower_bound, verify, VerifyReport, Violation};

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge, Edge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("path index {0} out of range")]
    NoSuchPath(usize),
    #[error("subpath {sub:?} does not occur in path {path:?}")]
    SubpathNotFound { path: Vec<usize>, sub: Vec<usize> },
    #[error("replacement {with:?} does not share the endpoints of {sub:?}")]
    EndpointMismatch { sub: Vec<usize>, with: Vec<usize> },
    #[error("result {0:?} is not a simple path")]
    NotSimple(Vec<usize>),
    #[error("{with:?} shares no single endpoint with {path:?}")]
    NoSharedEndpoint { path: Vec<usize>, with: Vec<usize> },
    #[error("vertex {vertex} is not on path {path:?}")]
    VertexNotOnPath { path: Vec<usize>, vertex: usize },
    #[error("edge {0}-{1} is already covered")]
    EdgeCollision(usize, usize),
    #[error("path needs at least two vertices")]
    TooShort,
    #[error("decomposition is not valid: {0}")]
    Invalid(String),
    #[error("graph has no edges")]
    Edgeless,
}

/// A walk given as a vertex sequence. Construction does not enforce
/// simplicity so that malformed input can still be reported by
/// [`verify`]; the editing moves never produce non-simple paths.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    /// Checked constructor: at least two distinct vertices, all distinct.
    pub fn new(vertices: Vec<usize>) -> Result<Path, DecompError> {
        if vertices.len() < 2 {
            return Err(DecompError::TooShort);
        }
        if !is_simple(&vertices) {
            return Err(DecompError::NotSimple(vertices));
        }
        Ok(Path(vertices))
    }

    /// Unchecked constructor, for parsed or externally supplied data.
    pub fn raw(vertices: Vec<usize>) -> Path {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        !self.0.is_empty() && (self.first() == v || self.last() == v)
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| edge(w[0], w[1]))
    }

    pub fn is_simple(&self) -> bool {
        is_simple(&self.0)
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    /// Same path oriented so the smaller endpoint comes first.
    pub fn canonical(&self) -> Path {
        if self.0.len() >= 2 && self.last() < self.first() {
            self.reversed()
        } else {
            self.clone()
        }
    }

    /// The path oriented to start at endpoint `v`.
    pub fn from_endpoint(&self, v: usize) -> Option<Path> {
        if self.first() == v {
            Some(self.clone())
        } else if self.last() == v {
            Some(self.reversed())
        } else {
            None
        }
    }

    /// Index of the first vertex of edge `ab` within the sequence.
    fn edge_position(&self, a: usize, b: usize) -> Option<usize> {
        self.0
            .windows(2)
            .position(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("-"))
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Self {
        Path(v)
    }
}

fn is_simple(vertices: &[usize]) -> bool {
    let mut seen = HashSet::with_capacity(vertices.len());
    vertices.iter().all(|v| seen.insert(*v))
}

/// Ordered collection of paths.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathDecomposition {
    paths: Vec<Path>,
}

impl PathDecomposition {
    pub fn new(paths: Vec<Path>) -> Self {
        PathDecomposition { paths }
    }

    pub fn from_vertex_lists<I, P>(lists: I) -> Self
    where
        I: IntoIterator<Item = P>,
        P: Into<Vec<usize>>,
    {
        PathDecomposition {
            paths: lists.into_iter().map(|p| Path(p.into())).collect(),
        }
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(Path::len).sum()
    }

    /// Paths in canonical orientation, sorted. Useful for order-free comparison.
    pub fn normalized(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.paths.iter().map(|p| p.canonical().0).collect();
        v.sort();
        v
    }

    /// Applies `f` to every vertex id.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> PathDecomposition {
        PathDecomposition {
            paths: self
                .paths
                .iter()
                .map(|p| Path(p.0.iter().map(|&v| f(v)).collect()))
                .collect(),
        }
    }

    /// Appends all paths of `other`.
    pub fn absorb(&mut self, other: PathDecomposition) {
        self.paths.extend(other.paths);
    }

    /// Path index and position of the first path containing edge `ab`.
    pub fn locate_edge(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        self.paths
            .iter()
            .enumerate()
            .find_map(|(i, p)| p.edge_position(a, b).map(|pos| (i, pos)))
    }

    /// Index of the first path containing `sub` contiguously, in either direction.
    pub fn locate_subpath(&self, sub: &[usize]) -> Option<usize> {
        if sub.is_empty() {
            return None;
        }
        self.paths.iter().position(|p| {
            p.0.windows(sub.len())
                .any(|w| w == sub || w.iter().rev().eq(sub.iter()))
        })
    }

    /// Index of the first path with `v` as an endpoint.
    pub fn path_ending_at(&self, v: usize) -> Option<usize> {
        self.paths.iter().position(|p| p.has_endpoint(v))
    }

    fn path_ref(&self, idx: usize) -> Result<&Path, DecompError> {
        self.paths.get(idx).ok_or(DecompError::NoSuchPath(idx))
    }

    /// Replaces the contiguous subpath `sub` of path `idx` (in either
    /// direction) by `with`, which must have the same two endpoints.
    pub fn replace_subpath(
        &mut self,
        idx: usize,
        sub: &[usize],
        with: &[usize],
    ) -> Result<(), DecompError> {
        let p = self.path_ref(idx)?;
        if sub.len() < 2 || with.len() < 2 {
            return Err(DecompError::TooShort);
        }
        let k = sub.len();
        let found = p.0.windows(k).enumerate().find_map(|(i, w)| {
            if w == sub {
                Some((i, false))
            } else if w.iter().rev().eq(sub.iter()) {
                Some((i, true))
            } else {
                None
            }
        });
        let Some((start, reversed)) = found else {
            return Err(DecompError::SubpathNotFound {
                path: p.0.clone(),
                sub: sub.to_vec(),
            });
        };
        let (s0, s1) = (sub[0], sub[k - 1]);
        let (r0, r1) = (with[0], with[with.len() - 1]);
        let mut route: Vec<usize> = if (r0, r1) == (s0, s1) {
            with.to_vec()
        } else if (r0, r1) == (s1, s0) {
            with.iter().rev().copied().collect()
        } else {
            return Err(DecompError::EndpointMismatch {
                sub: sub.to_vec(),
                with: with.to_vec(),
            });
        };
        if reversed {
            route.reverse();
        }
        let mut out = Vec::with_capacity(p.0.len() - k + route.len());
        out.extend_from_slice(&p.0[..start]);
        out.extend_from_slice(&route);
        out.extend_from_slice(&p.0[start + k..]);
        if !is_simple(&out) {
            return Err(DecompError::NotSimple(out));
        }
        self.paths[idx] = Path(out);
        Ok(())
    }

    /// Replaces the edge `ab`, wherever it is, by the route `with`.
    pub fn replace_edge(&mut self, a: usize, b: usize, with: &[usize]) -> Result<(), DecompError> {
        let (idx, _) = self
            .locate_edge(a, b)
            .ok_or(DecompError::SubpathNotFound {
                path: Vec::new(),
                sub: vec![a, b],
            })?;
        self.replace_subpath(idx, &[a, b], with)
    }

    /// Concatenates `with` onto path `idx` at their single shared endpoint.
    pub fn extend(&mut self, idx: usize, with: &[usize]) -> Result<(), DecompError> {
        let p = self.path_ref(idx)?;
        if with.len() < 2 {
            return Err(DecompError::TooShort);
        }
        let (r0, r1) = (with[0], with[with.len() - 1]);
        let (p0, p1) = (p.first(), p.last());
        let mut out: Vec<usize>;
        if r0 == p1 || r1 == p1 {
            out = p.0.clone();
            if r0 == p1 {
                out.extend_from_slice(&with[1..]);
            } else {
                out.extend(with[..with.len() - 1].iter().rev());
            }
        } else if r0 == p0 || r1 == p0 {
            out = if r1 == p0 {
                with[..with.len() - 1].to_vec()
            } else {
                with[1..].iter().rev().copied().collect()
            };
            out.extend_from_slice(&p.0);
        } else {
            return Err(DecompError::NoSharedEndpoint {
                path: p.0.clone(),
                with: with.to_vec(),
            });
        }
        if !is_simple(&out) {
            return Err(DecompError::NotSimple(out));
        }
        self.paths[idx] = Path(out);
        Ok(())
    }

    /// Splits path `idx` at vertex `at`. The first part keeps index `idx`
    /// and the second is inserted right after it; splitting at an endpoint
    /// leaves the path unchanged and returns `None`.
    pub fn split_at(&mut self, idx: usize, at: usize) -> Result<Option<usize>, DecompError> {
        let p = self.path_ref(idx)?;
        let pos = p.position(at).ok_or_else(|| DecompError::VertexNotOnPath {
            path: p.0.clone(),
            vertex: at,
        })?;
        if pos == 0 || pos + 1 == p.0.len() {
            return Ok(None);
        }
        let second = Path(p.0[pos..].to_vec());
        let first = Path(p.0[..=pos].to_vec());
        self.paths[idx] = first;
        self.paths.insert(idx + 1, second);
        Ok(Some(idx + 1))
    }

    /// Adds a new simple path whose edges are not yet covered.
    pub fn add_path(&mut self, vertices: &[usize]) -> Result<usize, DecompError> {
        let path = Path::new(vertices.to_vec())?;
        let covered: HashSet<Edge> = self.paths.iter().flat_map(|p| p.edges()).collect();
        if let Some((a, b)) = path.edges().find(|e| covered.contains(e)) {
            return Err(DecompError::EdgeCollision(a, b));
        }
        self.paths.push(path);
        Ok(self.paths.len() - 1)
    }

    pub fn remove_path(&mut self, idx: usize) -> Result<Path, DecompError> {
        self.path_ref(idx)?;
        Ok(self.paths.remove(idx))
    }
}

impl fmt::Debug for PathDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.paths.iter()).finish()
    }
}
