//! Reducible configurations: detection, reduction to smaller graphs, and
//! lifting decompositions of the smaller graphs back to the original.

mod c1;
mod c2;
mod c3;
mod c4;
mod c5;
mod detect;
mod fixtures;
mod occurrence;
mod plan;

pub use detect::{detect, detect_c1, detect_c2, detect_c3, detect_c4, detect_c5};
pub use fixtures::{extra_triangle_fixtures, subcase_fixtures, Fixture};
pub use occurrence::{Config, Occurrence};
pub use plan::{ChildVertex, LiftPlan, SubCase, SyntheticEdge};

use thiserror::Error;

use crate::decomp::{verify, DecompError, PathDecomposition};
use crate::graph::{edge, Edge, Graph, GraphError, VertexMap};
use plan::Recipe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("occurrence {occurrence} does not hold: {reason}")]
    InvalidOccurrence { occurrence: String, reason: String },
    #[error("{config}: no case applies ({reason})")]
    NoSubCase { config: Config, reason: String },
    #[error("{subcase}: reduction invariant broken: {reason}")]
    Reduction { subcase: SubCase, reason: String },
    #[error("expected {expected} child decompositions, got {got}")]
    ChildCount { expected: usize, got: usize },
    #[error("child {child} decomposition is invalid: {detail}")]
    ChildInvalid { child: usize, detail: String },
    #[error("{subcase}: recipe step failed: {source}")]
    Recipe {
        subcase: SubCase,
        #[source]
        source: DecompError,
    },
    #[error("{subcase}: {reason}")]
    RecipeState { subcase: SubCase, reason: String },
    #[error("{subcase}: lifted decomposition is invalid: {detail}")]
    LiftInvalid { subcase: SubCase, detail: String },
    #[error("{subcase}: lifted decomposition has {got} paths, allowed {allowed}")]
    CountBound {
        subcase: SubCase,
        got: usize,
        allowed: usize,
    },
    #[error("graph operation failed: {0}")]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A graph together with the smaller graphs it reduces to.
#[derive(Debug, Clone)]
pub struct ReducedInstance {
    pub parent: Graph,
    pub occurrence: Occurrence,
    pub children: Vec<(Graph, VertexMap)>,
    pub plan: LiftPlan,
}

/// What a configuration module hands back; edges and anchors are in parent
/// coordinates, with `sigma` (= parent order) naming a contracted vertex.
pub(crate) struct Reduction {
    pub children: Vec<(Graph, VertexMap)>,
    pub subcase: SubCase,
    pub recipe: Recipe,
    pub synthetic: Vec<Edge>,
    pub anchors: Vec<(&'static str, usize)>,
}

pub fn reduce(g: &Graph, occ: &Occurrence) -> Result<ReducedInstance, ReductionError> {
    occ.validate(g)
        .map_err(|reason| ReductionError::InvalidOccurrence {
            occurrence: occ.to_string(),
            reason,
        })?;
    let red = match *occ {
        Occurrence::C1 { u, v, w } => c1::reduce(g, u, v, w)?,
        Occurrence::C2 { u, v } => c2::reduce(g, u, v)?,
        Occurrence::C3 { u, v, x, y, up, vp } => c3::reduce(g, [u, v, x, y, up, vp])?,
        Occurrence::C4 { u, v, .. } => c4::reduce(g, u, v)?,
        Occurrence::C5 { u, v, w } => c5::reduce(g, u, v, w)?,
    };
    check_children(g, &red)?;
    let sigma = g.order();
    let locate = |p: usize| -> Option<ChildVertex> {
        red.children.iter().enumerate().find_map(|(i, (_, map))| {
            let vertex = if p == sigma {
                map.merged().map(|m| m.into)
            } else {
                map.get(p)
            }?;
            Some(ChildVertex { child: i, vertex })
        })
    };
    let mut synthetic = Vec::new();
    for &(a, b) in &red.synthetic {
        let (ca, cb) = locate(a).zip(locate(b)).filter(|(ca, cb)| ca.child == cb.child).ok_or(
            ReductionError::Reduction {
                subcase: red.subcase,
                reason: format!("synthetic edge {a}-{b} not inside one child"),
            },
        )?;
        synthetic.push(SyntheticEdge {
            child: ca.child,
            a: ca.vertex,
            b: cb.vertex,
        });
    }
    let anchors = red
        .anchors
        .iter()
        .filter_map(|&(name, p)| locate(p).map(|c| (name, c)))
        .collect();
    Ok(ReducedInstance {
        parent: g.clone(),
        occurrence: occ.clone(),
        plan: LiftPlan {
            config: occ.config(),
            subcase: red.subcase,
            synthetic,
            anchors,
            recipe: red.recipe,
        },
        children: red.children,
    })
}

/// Children are connected, strictly smaller, jointly no larger than the
/// parent, and stay within the degree class. Synthetic edges are new.
fn check_children(g: &Graph, red: &Reduction) -> Result<(), ReductionError> {
    let fail = |reason: String| ReductionError::Reduction {
        subcase: red.subcase,
        reason,
    };
    let n = g.order();
    let parent_max = g.max_degree().unwrap_or(0);
    let degree_cap = if red.subcase == SubCase::C5NonCutEdge {
        parent_max.max(5)
    } else {
        parent_max
    };
    let mut total = 0;
    for (i, (child, _)) in red.children.iter().enumerate() {
        if !child.is_connected() {
            return Err(fail(format!("child {i} is not connected")));
        }
        if child.order() >= n {
            return Err(fail(format!("child {i} is not smaller than the parent")));
        }
        if child.max_degree().unwrap_or(0) > degree_cap {
            return Err(fail(format!("child {i} exceeds max degree {degree_cap}")));
        }
        total += child.order();
    }
    if total > n {
        return Err(fail(format!("children have {total} vertices in total, parent {n}")));
    }
    for &(a, b) in &red.synthetic {
        if a < n && b < n && g.has_edge(a, b) {
            return Err(fail(format!("synthetic edge {a}-{b} is a parent edge")));
        }
    }
    Ok(())
}

/// Lifts good decompositions of the children to one of the parent.
pub fn lift(
    inst: &ReducedInstance,
    child_decomps: &[PathDecomposition],
) -> Result<PathDecomposition, ReductionError> {
    let subcase = inst.plan.subcase;
    if child_decomps.len() != inst.children.len() {
        return Err(ReductionError::ChildCount {
            expected: inst.children.len(),
            got: child_decomps.len(),
        });
    }
    for (i, ((child, _), d)) in inst.children.iter().zip(child_decomps).enumerate() {
        let report = verify(child, d);
        if !report.valid {
            return Err(ReductionError::ChildInvalid {
                child: i,
                detail: report.violations[0].to_string(),
            });
        }
    }
    let sigma = inst.parent.order();
    let mut d = PathDecomposition::default();
    for ((_, map), cd) in inst.children.iter().zip(child_decomps) {
        let merged = map.merged().map(|m| m.into);
        d.absorb(cd.relabel(|x| {
            if Some(x) == merged {
                sigma
            } else {
                map.preimage(x)
            }
        }));
    }
    let mut ed = Editor { d, subcase };
    match &inst.plan.recipe {
        Recipe::C1 { u, v, w } => c1::lift(&mut ed, *u, *v, *w)?,
        Recipe::C2 { u, v } => c2::lift(&mut ed, *u, *v)?,
        r @ (Recipe::C3Few { .. } | Recipe::C3All { .. } | Recipe::C3Some { .. }) => {
            c3::lift(&mut ed, r)?
        }
        r @ (Recipe::Pivot { .. }
        | Recipe::C4Cut { .. }
        | Recipe::C4Four { .. }
        | Recipe::C4Connected { .. }) => c4::lift(&mut ed, r)?,
        r => c5::lift(&mut ed, r)?,
    }
    let d = ed.d;
    let report = verify(&inst.parent, &d);
    if !report.valid {
        let detail: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(ReductionError::LiftInvalid {
            subcase,
            detail: detail.join("; "),
        });
    }
    let before: usize = child_decomps.iter().map(PathDecomposition::len).sum();
    let allowed = (before as isize + subcase.max_delta()).max(0) as usize;
    if d.len() > allowed {
        return Err(ReductionError::CountBound {
            subcase,
            got: d.len(),
            allowed,
        });
    }
    Ok(d)
}

/// For an irreducible connected graph with `Δ ≤ 5` other than `K3` and `K5`,
/// whether the subgraph induced by even-degree vertices is a forest.
pub fn check_structure(g: &Graph) -> Result<bool, ReductionError> {
    if !g.is_connected() {
        return Err(ReductionError::Precondition("graph is not connected".into()));
    }
    if g.max_degree().unwrap_or(0) > 5 {
        return Err(ReductionError::Precondition("max degree exceeds 5".into()));
    }
    if g.is_complete() && matches!(g.order(), 3 | 5) {
        return Err(ReductionError::Precondition(format!("graph is K{}", g.order())));
    }
    if let Some(occ) = detect(g) {
        return Err(ReductionError::Precondition(format!("graph contains {occ}")));
    }
    Ok(g.induced_even_subgraph().0.is_forest())
}

/// Decomposition being lifted, plus the sub-case for error reporting.
pub(crate) struct Editor {
    pub d: PathDecomposition,
    pub subcase: SubCase,
}

impl Editor {
    fn wrap<T>(&self, r: Result<T, DecompError>) -> Result<T, ReductionError> {
        r.map_err(|source| ReductionError::Recipe {
            subcase: self.subcase,
            source,
        })
    }

    pub fn state_error(&self, reason: impl Into<String>) -> ReductionError {
        ReductionError::RecipeState {
            subcase: self.subcase,
            reason: reason.into(),
        }
    }

    pub fn locate(&self, a: usize, b: usize) -> Result<usize, ReductionError> {
        self.d
            .locate_edge(a, b)
            .map(|(i, _)| i)
            .ok_or_else(|| self.state_error(format!("edge {a}-{b} not covered")))
    }

    pub fn replace_edge(&mut self, a: usize, b: usize, with: &[usize]) -> Result<(), ReductionError> {
        let r = self.d.replace_edge(a, b, with);
        self.wrap(r)
    }

    /// Replaces `sub` in whichever path contains it.
    pub fn replace(&mut self, sub: &[usize], with: &[usize]) -> Result<(), ReductionError> {
        let idx = self
            .d
            .locate_subpath(sub)
            .ok_or_else(|| self.state_error(format!("subpath {sub:?} not found")))?;
        let r = self.d.replace_subpath(idx, sub, with);
        self.wrap(r)
    }

    pub fn replace_in(&mut self, idx: usize, sub: &[usize], with: &[usize]) -> Result<(), ReductionError> {
        let r = self.d.replace_subpath(idx, sub, with);
        self.wrap(r)
    }

    pub fn extend(&mut self, idx: usize, with: &[usize]) -> Result<(), ReductionError> {
        let r = self.d.extend(idx, with);
        self.wrap(r)
    }

    pub fn split(&mut self, idx: usize, at: usize) -> Result<Option<usize>, ReductionError> {
        let r = self.d.split_at(idx, at);
        self.wrap(r)
    }

    pub fn add(&mut self, vertices: &[usize]) -> Result<usize, ReductionError> {
        let r = self.d.add_path(vertices);
        self.wrap(r)
    }

    pub fn remove(&mut self, idx: usize) -> Result<Vec<usize>, ReductionError> {
        let r = self.d.remove_path(idx);
        self.wrap(r).map(|p| p.into_vertices())
    }

    /// Extends the path holding edge `a`-`b` (which must end at `b`) by `with`,
    /// or adds `with` as a new path when `a`-`b` is no longer covered.
    pub fn extend_at(&mut self, a: usize, b: usize, with: &[usize]) -> Result<(), ReductionError> {
        let idx = self.locate(a, b)?;
        self.extend(idx, with)
    }

    /// Moves the end `old` of the path holding `nb`-`old` to `new`: the path
    /// is split at `nb`, the stub `nb-old` dropped and `nb-new` attached.
    pub fn move_endpoint(&mut self, nb: usize, old: usize, new: usize) -> Result<(), ReductionError> {
        let idx = self.locate(nb, old)?;
        let p = &self.d.paths()[idx];
        if !p.has_endpoint(old) {
            return Err(self.state_error(format!("{old} is not an end of {p:?}")));
        }
        match self.split(idx, nb)? {
            None => {
                self.remove(idx)?;
                self.add(&[nb, new])?;
            }
            Some(second) => {
                let (stub, rest) = if self.d.paths()[idx].contains(old) {
                    (idx, idx)
                } else {
                    (second, idx)
                };
                self.remove(stub)?;
                self.extend(rest, &[nb, new])?;
            }
        }
        Ok(())
    }

    /// Occurrences of `sigma` as `(path, previous, next)`.
    pub fn occurrences(&self, sigma: usize) -> Vec<(usize, Option<usize>, Option<usize>)> {
        self.d
            .paths()
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                let vs = p.vertices();
                let k = p.position(sigma)?;
                let prev = k.checked_sub(1).map(|j| vs[j]);
                let next = vs.get(k + 1).copied();
                Some((i, prev, next))
            })
            .collect()
    }
}

/// `G - removed + added`, with `added` given in parent ids.
pub(crate) fn derive(g: &Graph, removed: &[usize], added: &[Edge]) -> Result<(Graph, VertexMap), GraphError> {
    let (h, map) = g.delete_vertices(removed);
    let mapped: Vec<Edge> = added
        .iter()
        .map(|&(a, b)| edge(map.get(a).expect("kept"), map.get(b).expect("kept")))
        .collect();
    Ok((h.add_edges(&mapped)?, map))
}

/// Splits `h` (reached from the parent through `map`) into its components,
/// ordered so that component `i` contains parent vertex `anchors[i]`.
pub(crate) fn split_components(
    h: &Graph,
    map: &VertexMap,
    anchors: &[usize],
) -> Option<Vec<(Graph, VertexMap)>> {
    let comps = h.components();
    if comps.len() != anchors.len() {
        return None;
    }
    let (_, label) = h.component_labels();
    let mut out = Vec::new();
    let mut used = vec![false; comps.len()];
    for &a in anchors {
        let c = label[map.get(a)?];
        if used[c] {
            return None;
        }
        used[c] = true;
        let (sub, inner) = h.induced(&comps[c]);
        out.push((sub, map.compose(&inner)));
    }
    Some(out)
}

/// Vertex sequence of a path formed by `edges`, if they form one.
pub(crate) fn edges_as_path(edges: &[Edge]) -> Option<Vec<usize>> {
    if edges.is_empty() {
        return None;
    }
    let mut deg = std::collections::BTreeMap::<usize, usize>::new();
    for &(a, b) in edges {
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    if deg.values().any(|&k| k > 2) || deg.len() != edges.len() + 1 {
        return None;
    }
    let start = *deg.iter().find(|(_, &k)| k == 1)?.0;
    let mut walk = vec![start];
    let mut left: Vec<Edge> = edges.to_vec();
    while let Some(pos) = left
        .iter()
        .position(|&(a, b)| a == *walk.last().unwrap() || b == *walk.last().unwrap())
    {
        let (a, b) = left.swap_remove(pos);
        let cur = *walk.last().unwrap();
        walk.push(if a == cur { b } else { a });
    }
    (left.is_empty() && walk.len() == edges.len() + 1).then_some(walk)
}
