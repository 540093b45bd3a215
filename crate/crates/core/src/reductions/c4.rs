use super::detect::c4_labelings;
use super::plan::Recipe;
use super::{derive, split_components, Config, Editor, Reduction, ReductionError, SubCase};
use crate::graph::{edge, Graph};

fn no_case(reason: impl Into<String>) -> ReductionError {
    ReductionError::NoSubCase {
        config: Config::C4,
        reason: reason.into(),
    }
}

pub(super) fn reduce(g: &Graph, u: usize, v: usize) -> Result<Reduction, ReductionError> {
    let common = g.common_neighbors(u, v);
    match common.len() {
        3 => return three_common(g, u, v, &common),
        2 => return Err(no_case("u and v have exactly two common neighbours")),
        _ => {}
    }
    for (hub, other) in [(u, v), (v, u)] {
        if let Some(r) = cut_vertex(g, hub, other)? {
            return Ok(r);
        }
    }
    if let Some(r) = four_components(g, u, v)? {
        return Ok(r);
    }
    connected(g, u, v)
}

/// Pivot `p` among the common neighbours, adjacent to neither of the others.
fn three_common(g: &Graph, u: usize, v: usize, common: &[usize]) -> Result<Reduction, ReductionError> {
    for (i, &p) in common.iter().enumerate() {
        let others: Vec<usize> = common.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &c)| c).collect();
        let (q, r) = (others[0], others[1]);
        if g.has_edge(p, q) || g.has_edge(p, r) {
            continue;
        }
        let added = vec![(q, p), (p, r)];
        return Ok(Reduction {
            children: vec![derive(g, &[u, v], &added)?],
            subcase: SubCase::C4ThreeCommon,
            recipe: Recipe::Pivot { a: u, b: v, q, p, r },
            synthetic: added,
            anchors: vec![("pivot", p)],
        });
    }
    Err(no_case("no common neighbour misses both others"))
}

fn cut_vertex(g: &Graph, hub: usize, other: usize) -> Result<Option<Reduction>, ReductionError> {
    let (h, map) = g.delete_vertices(&[hub]);
    let (count, label) = h.component_labels();
    if count < 3 {
        return Ok(None);
    }
    let side = |p: usize| label[map.get(p).expect("kept")];
    let ts: Vec<usize> = g.neighbors(hub).iter().copied().filter(|&t| t != other).collect();
    let (near, far): (Vec<usize>, Vec<usize>) = ts.iter().partition(|&&t| side(t) == side(other));
    if count != 3 || near.len() != 1 || far.len() != 2 || side(far[0]) == side(far[1]) {
        return Err(no_case(format!(
            "deleting {hub} leaves {count} components with an unexpected neighbour layout"
        )));
    }
    let (t1, t2, t3) = (far[0], far[1], near[0]);
    let (h2, map2) = derive(g, &[hub], &[(t1, t2)])?;
    let children = split_components(&h2, &map2, &[t1, other])
        .ok_or_else(|| no_case("adding t1t2 does not leave two components"))?;
    Ok(Some(Reduction {
        children,
        subcase: SubCase::C4CutVertex,
        recipe: Recipe::C4Cut {
            hub,
            other,
            t1,
            t2,
            t3,
        },
        synthetic: vec![(t1, t2)],
        anchors: vec![("hub-neighbour", other), ("t3", t3)],
    }))
}

fn four_components(g: &Graph, u: usize, v: usize) -> Result<Option<Reduction>, ReductionError> {
    let (h, map) = g.delete_vertices(&[u, v]);
    let comps = h.components();
    if comps.len() < 4 {
        return Ok(None);
    }
    let (_, label) = h.component_labels();
    let side = |p: usize| label[map.get(p).expect("kept")];
    let ts: Vec<usize> = g.neighbors(u).iter().copied().filter(|&t| t != v).collect();
    let ws: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    let mut both = Vec::new();
    let mut t_only = Vec::new();
    let mut w_only = Vec::new();
    for c in 0..comps.len() {
        let tc: Vec<usize> = ts.iter().copied().filter(|&t| side(t) == c).collect();
        let wc: Vec<usize> = ws.iter().copied().filter(|&w| side(w) == c).collect();
        match (tc.as_slice(), wc.as_slice()) {
            (&[t], &[w]) => both.push((t, w)),
            (&[t], &[]) => t_only.push(t),
            (&[], &[w]) => w_only.push(w),
            _ => return Err(no_case("component with an unexpected neighbour layout")),
        }
    }
    if comps.len() != 4 || both.len() != 2 || t_only.len() != 1 || w_only.len() != 1 {
        return Err(no_case("deleting u and v does not give the four-component layout"));
    }
    let t = [both[0].0, both[1].0, t_only[0]];
    let w = [both[0].1, both[1].1, w_only[0]];
    let added = vec![(t[0], t[1]), (w[0], w[1]), (t[2], w[2])];
    let (h2, map2) = derive(g, &[u, v], &added)?;
    let children = split_components(&h2, &map2, &[t[0], t[2]])
        .ok_or_else(|| no_case("synthetic edges do not give two components"))?;
    Ok(Some(Reduction {
        children,
        subcase: SubCase::C4FourComponents,
        recipe: Recipe::C4Four { u, v, t, w },
        synthetic: added,
        anchors: vec![("t1", t[0]), ("t3", t[2]), ("w3", w[2])],
    }))
}

fn connected(g: &Graph, u: usize, v: usize) -> Result<Reduction, ReductionError> {
    for (t, w) in c4_labelings(g, u, v) {
        if edge(t[0], t[1]) == edge(w[0], w[1]) {
            continue;
        }
        let added = vec![(t[0], t[1]), (w[0], w[1])];
        let child = derive(g, &[u, v], &added)?;
        if child.0.is_connected() {
            return Ok(Reduction {
                children: vec![child],
                subcase: SubCase::C4Connected,
                recipe: Recipe::C4Connected { u, v, t, w },
                synthetic: added,
                anchors: vec![("t3", t[2]), ("w3", w[2])],
            });
        }
    }
    Err(no_case("no labeling gives a connected child"))
}

pub(super) fn lift(ed: &mut Editor, recipe: &Recipe) -> Result<(), ReductionError> {
    match *recipe {
        Recipe::Pivot { a, b, q, p, r } => {
            ed.replace_edge(q, p, &[q, a, p])?;
            ed.replace_edge(p, r, &[p, b, r])?;
            ed.add(&[q, b, a, r])?;
        }
        Recipe::C4Cut {
            hub,
            other,
            t1,
            t2,
            t3,
        } => {
            let i = ed.locate(t1, t2)?;
            ed.replace_edge(t1, t2, &[t1, hub, t2])?;
            ed.split(i, hub)?;
            let q = ed
                .d
                .path_ending_at(other)
                .ok_or_else(|| ed.state_error(format!("no path ends at {other}")))?;
            let tail = ed.d.paths()[q].from_endpoint(other).expect("ends at other");
            ed.remove(q)?;
            let mut with = vec![hub];
            with.extend_from_slice(tail.vertices());
            ed.extend_at(t1, hub, &with)?;
            ed.extend_at(hub, t2, &[hub, t3])?;
        }
        Recipe::C4Four { u, v, t, w } => {
            ed.replace_edge(t[0], t[1], &[t[0], u, t[1]])?;
            ed.replace_edge(w[0], w[1], &[w[0], v, w[1]])?;
            ed.replace_edge(t[2], w[2], &[t[2], u, v, w[2]])?;
        }
        Recipe::C4Connected { u, v, t, w } => {
            ed.replace_edge(t[0], t[1], &[t[0], u, t[1]])?;
            ed.replace_edge(w[0], w[1], &[w[0], v, w[1]])?;
            ed.add(&[t[2], u, v, w[2]])?;
        }
        _ => unreachable!("not a C4 recipe"),
    }
    Ok(())
}
