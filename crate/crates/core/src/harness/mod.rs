//! Input formats, small-graph enumeration and batch verification runs.

mod batch;
mod enumerate;
mod graph6;
mod input;

pub use batch::{
    check, default_base_solver, floor_search, scan, Aggregate, BaseSolver, BatchReport, Finding,
    FindingKind, GraphRecord, Outcome,
};
pub use enumerate::{canonical_code, enumerate_connected, EnumerateError, MAX_ENUM_ORDER};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use input::{detect_format, parse_edgelist, parse_graph6_stream, parse_graphs, Format, InputError};

use crate::graph::Graph;

/// Connected graphs with `Δ ≤ max_deg` on `1..=max_n` vertices, by order.
pub fn enumerate_up_to(max_n: usize, max_deg: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_connected(n, max_deg)?);
    }
    Ok(out)
}
