//! Good path decompositions of connected graphs with `Δ ≤ 5`: reduce while a
//! configuration is present, solve irreducible graphs exactly, lift back.

mod search;

pub use search::{
    min_decomposition, solve_base, solve_base_budgeted, SearchError, MAX_SEARCH_EDGES,
};

use serde::Serialize;
use thiserror::Error;

use crate::decomp::{verify, PathDecomposition, VerifyReport};
use crate::graph::Graph;
use crate::reductions::{detect, lift, reduce, Config, ReductionError, SubCase};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Node budget for each exact base-case search.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub depth: usize,
    pub order: usize,
    pub config: Config,
    pub subcase: SubCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseKind {
    /// Graph without edges.
    Trivial,
    /// `K3` or `K5`, decomposed from a fixed table.
    HardCoded { name: &'static str },
    /// Exact search with target `k`.
    Exact { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCase {
    pub depth: usize,
    pub order: usize,
    pub kind: BaseKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveTrace {
    pub steps: Vec<TraceStep>,
    pub base_cases: Vec<BaseCase>,
}

impl SolveTrace {
    pub fn subcases(&self) -> impl Iterator<Item = SubCase> + '_ {
        self.steps.iter().map(|s| s.subcase)
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub decomposition: PathDecomposition,
    pub trace: SolveTrace,
    pub report: VerifyReport,
    /// Valid and within `⌈n/2⌉`.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("max degree exceeds 5 (found {0})")]
    MaxDegree(usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("reduction failed at depth {depth}: {source}")]
    Reduction {
        depth: usize,
        #[source]
        source: ReductionError,
        trace: Box<SolveTrace>,
    },
    #[error("no decomposition into {k} paths found for an irreducible graph on {order} vertices")]
    BaseFailed { order: usize, k: usize },
    #[error("base case on {order} vertices: {source}")]
    Search {
        order: usize,
        #[source]
        source: SearchError,
    },
    #[error("result has {paths} paths, bound {bound}")]
    NotGood { paths: usize, bound: usize },
}

impl SolveError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            SolveError::Search {
                source: SearchError::BudgetExhausted(_),
                ..
            }
        )
    }
}

pub fn solve(g: &Graph) -> Result<SolveResult, SolveError> {
    solve_with(g, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if g.size() == 0 {
        return Err(SolveError::Edgeless);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let delta = g.max_degree().unwrap_or(0);
    if delta > 5 {
        return Err(SolveError::MaxDegree(delta));
    }
    let mut trace = SolveTrace::default();
    let decomposition = recurse(g, 0, opts, &mut trace)?;
    let report = verify(g, &decomposition);
    if !report.good {
        return Err(SolveError::NotGood {
            paths: report.path_count,
            bound: report.bound,
        });
    }
    Ok(SolveResult {
        decomposition,
        trace,
        verified: true,
        report,
    })
}

fn recurse(
    g: &Graph,
    depth: usize,
    opts: &SolveOptions,
    trace: &mut SolveTrace,
) -> Result<PathDecomposition, SolveError> {
    let n = g.order();
    let base = |kind| BaseCase {
        depth,
        order: n,
        kind,
    };
    if g.size() == 0 {
        trace.base_cases.push(base(BaseKind::Trivial));
        return Ok(PathDecomposition::default());
    }
    if g.is_complete() && n == 3 {
        trace.base_cases.push(base(BaseKind::HardCoded { name: "K3" }));
        return Ok(PathDecomposition::from_vertex_lists([vec![0, 1, 2], vec![0, 2]]));
    }
    if g.is_complete() && n == 5 {
        trace.base_cases.push(base(BaseKind::HardCoded { name: "K5" }));
        return Ok(PathDecomposition::from_vertex_lists([
            vec![0, 1, 2, 3, 4],
            vec![2, 4, 1, 3, 0],
            vec![2, 0, 4],
        ]));
    }
    let Some(occ) = detect(g) else {
        let k = n.div_ceil(2);
        trace.base_cases.push(base(BaseKind::Exact { k }));
        return match solve_base_budgeted(g, k, opts.budget) {
            Ok(Some(d)) => Ok(d),
            Ok(None) => Err(SolveError::BaseFailed { order: n, k }),
            Err(source) => Err(SolveError::Search { order: n, source }),
        };
    };
    let wrap = |source, trace: &SolveTrace| SolveError::Reduction {
        depth,
        source,
        trace: Box::new(trace.clone()),
    };
    let inst = reduce(g, &occ).map_err(|e| wrap(e, trace))?;
    trace.steps.push(TraceStep {
        depth,
        order: n,
        config: inst.plan.config,
        subcase: inst.plan.subcase,
    });
    let mut child_decomps = Vec::with_capacity(inst.children.len());
    for (child, _) in &inst.children {
        debug_assert!(child.order() < n);
        child_decomps.push(recurse(child, depth + 1, opts, trace)?);
    }
    lift(&inst, &child_decomps).map_err(|e| wrap(e, trace))
}
