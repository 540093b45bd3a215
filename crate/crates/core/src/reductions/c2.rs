use super::plan::Recipe;
use super::{split_components, Editor, Reduction, ReductionError, SubCase};
use crate::graph::Graph;

/// `G - uv`, split into the side of `u` and the side of `v`.
pub(super) fn reduce(g: &Graph, u: usize, v: usize) -> Result<Reduction, ReductionError> {
    let h = g.delete_edge(u, v)?;
    let map = crate::graph::VertexMap::identity(g.order());
    let children = split_components(&h, &map, &[u, v]).ok_or(ReductionError::Reduction {
        subcase: SubCase::C2,
        reason: "deleting the bridge does not leave two components".into(),
    })?;
    Ok(Reduction {
        children,
        subcase: SubCase::C2,
        recipe: Recipe::C2 { u, v },
        synthetic: vec![],
        anchors: vec![("u", u), ("v", v)],
    })
}

/// Join a path ending at `u` and one ending at `v` through the edge `uv`.
pub(super) fn lift(ed: &mut Editor, u: usize, v: usize) -> Result<(), ReductionError> {
    let pu = ed
        .d
        .path_ending_at(u)
        .ok_or_else(|| ed.state_error(format!("no path ends at {u}")))?;
    let pv = ed
        .d
        .path_ending_at(v)
        .ok_or_else(|| ed.state_error(format!("no path ends at {v}")))?;
    let tail = ed.d.paths()[pv].from_endpoint(v).expect("ends at v");
    let mut with = vec![u];
    with.extend_from_slice(tail.vertices());
    ed.extend(pu, &with)?;
    ed.remove(pv)?;
    Ok(())
}
