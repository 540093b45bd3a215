//! Path decompositions of connected graphs with maximum degree at most five.

pub mod decomp;
pub mod graph;
pub mod reductions;
pub mod solver;
pub mod harness;
