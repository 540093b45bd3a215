//! Batch runs over many graphs: solve-and-verify, configuration scans, and
//! the search for graphs that cannot be split into `⌊n/2⌋` paths.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::graph6::write_graph6;
use crate::decomp::PathDecomposition;
use crate::graph::Graph;
use crate::reductions::{check_structure, detect, reduce, SubCase};
use crate::solver::{solve_base_budgeted, solve_with, SearchError, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    /// Solved; `forest` is set for irreducible graphs other than `K3`, `K5`.
    Solved {
        paths: usize,
        verified: bool,
        irreducible: bool,
        forest: Option<bool>,
    },
    Failed {
        error: String,
        budget: bool,
    },
    /// Outside the class: disconnected, edgeless, or `Δ > 5`.
    Skipped {
        reason: String,
    },
    Scanned {
        subcase: Option<String>,
    },
    Floor {
        floor: usize,
        achieved: bool,
        semi_clique: bool,
        paths: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub bound: usize,
    pub outcome: Outcome,
    /// Sub-case id to number of uses in the solve recursion.
    pub subcases: BTreeMap<String, usize>,
    pub micros: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    SolveFailed,
    NotGood,
    StructureViolation,
    BudgetExhausted,
    /// Fails `⌊n/2⌋` paths without being an odd semi-clique.
    UnclassifiedFloorFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub index: usize,
    pub graph6: String,
    pub kind: FindingKind,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub graphs: usize,
    pub skipped: usize,
    pub verified: usize,
    pub failed: usize,
    pub budget_exhausted: usize,
    pub irreducible: usize,
    pub forests: usize,
    pub floor_failures: usize,
    pub semi_cliques: usize,
    /// Top-level configuration per graph (`none` when irreducible).
    pub top_level: BTreeMap<String, usize>,
    /// Sub-case uses over all recursion steps.
    pub subcases: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub command: String,
    pub records: Vec<GraphRecord>,
    pub aggregate: Aggregate,
    pub findings: Vec<Finding>,
}

impl BatchReport {
    pub fn has_budget_findings(&self) -> bool {
        self.findings.iter().any(|f| f.kind == FindingKind::BudgetExhausted)
    }

    /// Sub-cases never used in this batch.
    pub fn missing_subcases(&self) -> Vec<SubCase> {
        SubCase::ALL
            .into_iter()
            .filter(|s| !self.aggregate.subcases.contains_key(s.id()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record, then totals, coverage and findings.
    pub fn render_text(&self, with_records: bool) -> String {
        let mut out = String::new();
        if with_records {
            for r in &self.records {
                let _ = writeln!(out, "{}", RecordLine(r));
            }
        }
        let a = &self.aggregate;
        let _ = writeln!(
            out,
            "{}: {} graphs, {} skipped, {} verified, {} failed, {} budget exhausted",
            self.command, a.graphs, a.skipped, a.verified, a.failed, a.budget_exhausted
        );
        if self.command == "check" {
            let _ = writeln!(out, "irreducible: {} ({} with forest G_E)", a.irreducible, a.forests);
        }
        if self.command == "floor-search" {
            let _ = writeln!(
                out,
                "below floor: {} ({} odd semi-cliques)",
                a.floor_failures, a.semi_cliques
            );
        }
        if !a.top_level.is_empty() {
            let parts: Vec<String> = a.top_level.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "top level: {}", parts.join(" "));
        }
        if !a.subcases.is_empty() {
            let parts: Vec<String> = SubCase::ALL
                .iter()
                .map(|s| format!("{}={}", s.id(), a.subcases.get(s.id()).unwrap_or(&0)))
                .collect();
            let _ = writeln!(out, "sub-cases: {}", parts.join(" "));
        }
        for f in &self.findings {
            let _ = writeln!(out, "FINDING #{} {} {:?}: {}", f.index, f.graph6, f.kind, f.detail);
        }
        let _ = writeln!(out, "findings: {}", self.findings.len());
        out
    }
}

struct RecordLine<'a>(&'a GraphRecord);

impl fmt::Display for RecordLine<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        write!(f, "#{} {} n={} m={} Δ={} ", r.index, r.graph6, r.n, r.m, r.max_degree)?;
        match &r.outcome {
            Outcome::Solved {
                paths,
                verified,
                forest,
                ..
            } => {
                write!(f, "paths={paths}/{} verified={verified}", r.bound)?;
                if let Some(forest) = forest {
                    write!(f, " irreducible forest={forest}")?;
                }
            }
            Outcome::Failed { error, .. } => write!(f, "FAILED {error}")?,
            Outcome::Skipped { reason } => write!(f, "skipped ({reason})")?,
            Outcome::Scanned { subcase } => write!(f, "{}", subcase.as_deref().unwrap_or("none"))?,
            Outcome::Floor {
                floor,
                achieved,
                semi_clique,
                ..
            } => {
                let verdict = match (achieved, semi_clique) {
                    (true, _) => "ok",
                    (false, true) => "below floor, odd semi-clique",
                    (false, false) => "below floor, UNCLASSIFIED",
                };
                write!(f, "floor={floor} {verdict}")?;
            }
        }
        write!(f, " {}us", r.micros)
    }
}

/// Why a graph lies outside the solver's class, if it does.
fn out_of_class(g: &Graph) -> Option<String> {
    if g.size() == 0 {
        Some("no edges".into())
    } else if !g.is_connected() {
        Some("not connected".into())
    } else if g.max_degree().unwrap_or(0) > 5 {
        Some("max degree exceeds 5".into())
    } else {
        None
    }
}

fn record(index: usize, g: &Graph, outcome: Outcome, subcases: BTreeMap<String, usize>, start: Instant) -> GraphRecord {
    GraphRecord {
        index,
        graph6: write_graph6(g).unwrap_or_default(),
        n: g.order(),
        m: g.size(),
        max_degree: g.max_degree().unwrap_or(0),
        bound: g.order().div_ceil(2),
        outcome,
        subcases,
        micros: start.elapsed().as_micros() as u64,
    }
}

fn top_level(g: &Graph) -> String {
    if g.is_complete() && matches!(g.order(), 3 | 5) {
        return format!("K{}", g.order());
    }
    match detect(g) {
        None => "none".into(),
        Some(occ) => reduce(g, &occ)
            .map(|inst| inst.plan.subcase.id().to_string())
            .unwrap_or_else(|_| occ.config().to_string()),
    }
}

fn check_one(index: usize, g: &Graph, opts: &SolveOptions) -> (GraphRecord, Vec<Finding>) {
    let start = Instant::now();
    if let Some(reason) = out_of_class(g) {
        return (record(index, g, Outcome::Skipped { reason }, BTreeMap::new(), start), vec![]);
    }
    let mut findings = Vec::new();
    let finding = |kind, detail: String| Finding {
        index,
        graph6: write_graph6(g).unwrap_or_default(),
        kind,
        detail,
    };
    let irreducible = !(g.is_complete() && matches!(g.order(), 3 | 5)) && detect(g).is_none();
    let forest = irreducible.then(|| check_structure(g).unwrap_or(false));
    if forest == Some(false) {
        findings.push(finding(FindingKind::StructureViolation, "G_E is not a forest".into()));
    }
    let (outcome, subcases) = match solve_with(g, opts) {
        Ok(r) => {
            let mut hist = BTreeMap::new();
            for s in r.trace.subcases() {
                *hist.entry(s.id().to_string()).or_insert(0) += 1;
            }
            if !r.report.good {
                findings.push(finding(FindingKind::NotGood, r.report.to_string()));
            }
            let outcome = Outcome::Solved {
                paths: r.decomposition.len(),
                verified: r.verified,
                irreducible,
                forest,
            };
            (outcome, hist)
        }
        Err(e) => {
            let kind = if e.is_budget() {
                FindingKind::BudgetExhausted
            } else {
                FindingKind::SolveFailed
            };
            findings.push(finding(kind, e.to_string()));
            let outcome = Outcome::Failed {
                error: e.to_string(),
                budget: e.is_budget(),
            };
            (outcome, BTreeMap::new())
        }
    };
    (record(index, g, outcome, subcases, start), findings)
}

fn assemble(command: &str, results: Vec<(GraphRecord, Vec<Finding>)>, graphs: &[Graph]) -> BatchReport {
    let mut a = Aggregate {
        graphs: results.len(),
        ..Aggregate::default()
    };
    let mut records = Vec::with_capacity(results.len());
    let mut findings = Vec::new();
    for ((r, fs), g) in results.into_iter().zip(graphs) {
        for (k, v) in &r.subcases {
            *a.subcases.entry(k.clone()).or_insert(0) += v;
        }
        match &r.outcome {
            Outcome::Skipped { .. } => a.skipped += 1,
            Outcome::Failed { budget, .. } => {
                a.failed += 1;
                a.budget_exhausted += usize::from(*budget);
            }
            Outcome::Solved {
                verified,
                irreducible,
                forest,
                ..
            } => {
                a.verified += usize::from(*verified);
                a.irreducible += usize::from(*irreducible);
                a.forests += usize::from(*forest == Some(true));
            }
            Outcome::Scanned { subcase } => {
                *a.top_level
                    .entry(subcase.clone().unwrap_or_else(|| "none".into()))
                    .or_insert(0) += 1;
            }
            Outcome::Floor {
                achieved,
                semi_clique,
                ..
            } => {
                if !achieved {
                    a.floor_failures += 1;
                    a.semi_cliques += usize::from(*semi_clique);
                }
            }
        }
        if command == "check" && !matches!(r.outcome, Outcome::Skipped { .. }) {
            *a.top_level.entry(top_level(g)).or_insert(0) += 1;
        }
        records.push(r);
        findings.extend(fs);
    }
    BatchReport {
        command: command.into(),
        records,
        aggregate: a,
        findings,
    }
}

/// Solves and verifies every graph; checks `G_E` on irreducible ones.
pub fn check(graphs: &[Graph], opts: &SolveOptions) -> BatchReport {
    let results = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_one(i, g, opts))
        .collect();
    assemble("check", results, graphs)
}

/// Top-level configuration and sub-case of each graph, without solving.
pub fn scan(graphs: &[Graph]) -> BatchReport {
    let results = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let start = Instant::now();
            let mut findings = Vec::new();
            let outcome = match out_of_class(g) {
                Some(reason) => Outcome::Skipped { reason },
                None => match detect(g) {
                    None => Outcome::Scanned { subcase: None },
                    Some(occ) => match reduce(g, &occ) {
                        Ok(inst) => Outcome::Scanned {
                            subcase: Some(inst.plan.subcase.id().into()),
                        },
                        Err(e) => {
                            findings.push(Finding {
                                index: i,
                                graph6: write_graph6(g).unwrap_or_default(),
                                kind: FindingKind::SolveFailed,
                                detail: e.to_string(),
                            });
                            Outcome::Failed {
                                error: e.to_string(),
                                budget: false,
                            }
                        }
                    },
                },
            };
            let mut hist = BTreeMap::new();
            if let Outcome::Scanned { subcase: Some(s) } = &outcome {
                hist.insert(s.clone(), 1);
            }
            (record(i, g, outcome, hist, start), findings)
        })
        .collect();
    assemble("scan", results, graphs)
}

/// Exact base solver used by [`floor_search`]: a decomposition into at most
/// `k` paths, `None` if there is none.
pub type BaseSolver = dyn Fn(&Graph, usize) -> Result<Option<PathDecomposition>, SearchError> + Sync;

/// The exact search with the given node budget.
pub fn default_base_solver(budget: u64) -> impl Fn(&Graph, usize) -> Result<Option<PathDecomposition>, SearchError> + Sync {
    move |g, k| solve_base_budgeted(g, k, budget)
}

/// Tries `⌊n/2⌋` paths on every graph. Failures that are not odd
/// semi-cliques become findings; the run itself never fails on them.
pub fn floor_search(graphs: &[Graph], base: &BaseSolver) -> BatchReport {
    let results = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let start = Instant::now();
            let mut findings = Vec::new();
            let finding = |kind, detail: String| Finding {
                index: i,
                graph6: write_graph6(g).unwrap_or_default(),
                kind,
                detail,
            };
            let floor = g.order() / 2;
            let outcome = match out_of_class(g) {
                Some(reason) => Outcome::Skipped { reason },
                None => match base(g, floor) {
                    Ok(found) => {
                        let semi_clique = g.is_odd_semi_clique();
                        if found.is_none() && !semi_clique {
                            findings.push(finding(
                                FindingKind::UnclassifiedFloorFailure,
                                format!("no decomposition into {floor} paths and not an odd semi-clique"),
                            ));
                        }
                        Outcome::Floor {
                            floor,
                            achieved: found.is_some(),
                            semi_clique,
                            paths: found.map(|d| d.len()),
                        }
                    }
                    Err(e) => {
                        let budget = matches!(e, SearchError::BudgetExhausted(_));
                        let kind = if budget {
                            FindingKind::BudgetExhausted
                        } else {
                            FindingKind::SolveFailed
                        };
                        findings.push(finding(kind, e.to_string()));
                        Outcome::Failed {
                            error: e.to_string(),
                            budget,
                        }
                    }
                },
            };
            (record(i, g, outcome, BTreeMap::new(), start), findings)
        })
        .collect();
    assemble("floor-search", results, graphs)
}
