use super::plan::Recipe;
use super::{derive, Editor, Reduction, ReductionError, SubCase};
use crate::graph::Graph;

/// `G - u + vw`.
pub(super) fn reduce(g: &Graph, u: usize, v: usize, w: usize) -> Result<Reduction, ReductionError> {
    let child = derive(g, &[u], &[(v, w)])?;
    Ok(Reduction {
        children: vec![child],
        subcase: SubCase::C1,
        recipe: Recipe::C1 { u, v, w },
        synthetic: vec![(v, w)],
        anchors: vec![("v", v), ("w", w)],
    })
}

/// Replace `vw` with `vuw`.
pub(super) fn lift(ed: &mut Editor, u: usize, v: usize, w: usize) -> Result<(), ReductionError> {
    ed.replace_edge(v, w, &[v, u, w])
}
