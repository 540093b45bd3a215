use super::plan::Recipe;
use super::{
    derive, edges_as_path, split_components, Config, Editor, Reduction, ReductionError, SubCase,
};
use crate::graph::{edge, Edge, Graph, VertexMap};

fn no_case(reason: impl Into<String>) -> ReductionError {
    ReductionError::NoSubCase {
        config: Config::C5,
        reason: reason.into(),
    }
}

pub(super) fn reduce(g: &Graph, u: usize, v: usize, w: usize) -> Result<Reduction, ReductionError> {
    for (a, b, c) in [(u, v, w), (u, w, v), (v, w, u)] {
        let common = g.common_neighbors(a, b);
        if common.len() == 3 {
            return twins(g, a, b, c, &common);
        }
    }
    let private = |p: usize, q: usize, r: usize| -> Vec<usize> {
        g.neighbors(p).iter().copied().filter(|&t| t != q && t != r).collect()
    };
    let (xs, ys, zs) = (private(u, v, w), private(v, u, w), private(w, u, v));
    if xs.iter().chain(&ys).any(|t| zs.contains(t)) || xs.iter().any(|t| ys.contains(t)) {
        return Err(no_case("two triangle vertices share a neighbour outside the triangle"));
    }
    if g.degree(v) == 2 || g.degree(w) == 2 {
        let (v, w, zs) = if g.degree(v) == 2 { (v, w, zs) } else { (w, v, ys) };
        return degree_two(g, u, v, w, [xs[0], xs[1]], zs);
    }
    let roles = [(u, v, w, &xs, &ys, &zs), (v, w, u, &ys, &zs, &xs), (w, u, v, &zs, &xs, &ys)];
    let bridges = g.bridges();
    for &(c, p, q, cx, py, qz) in &roles {
        for (i, &x1) in cx.iter().enumerate() {
            if bridges.binary_search(&edge(c, x1)).is_err() {
                let x2 = cx[1 - i];
                return non_cut(g, [c, p, q], x1, x2, [py[0], py[1]], [qz[0], qz[1]]);
            }
        }
    }
    all_cut(g, [u, v, w], [xs[0], xs[1]], [ys[0], ys[1]], [zs[0], zs[1]])
}

fn twins(g: &Graph, a: usize, b: usize, c: usize, common: &[usize]) -> Result<Reduction, ReductionError> {
    let rest: Vec<usize> = common.iter().copied().filter(|&t| t != c).collect();
    let (x, y) = (rest[0], rest[1]);
    let trio = [c, x, y];
    let missing: Vec<Edge> = [(c, x), (c, y), (x, y)]
        .into_iter()
        .filter(|&(p, q)| !g.has_edge(p, q))
        .collect();
    match missing.len() {
        0 => {
            if g.degree(c) != 4 {
                return Err(no_case("third triangle vertex does not have degree 4"));
            }
            Ok(Reduction {
                children: vec![derive(g, &[a, b], &[])?],
                subcase: SubCase::C5TwinsTriangle,
                recipe: Recipe::C5TwinsTriangle { a, b, c, x, y },
                synthetic: vec![],
                anchors: vec![("c", c), ("x", x), ("y", y)],
            })
        }
        1 => {
            let (q, r) = missing[0];
            let p = *trio.iter().find(|&&t| t != q && t != r).expect("three vertices");
            Ok(Reduction {
                children: vec![derive(g, &[a, b], &[(q, r)])?],
                subcase: SubCase::C5TwinsOneMissing,
                recipe: Recipe::C5TwinsOne { a, b, q, p, r },
                synthetic: vec![(q, r)],
                anchors: vec![("p", p)],
            })
        }
        _ => {
            let p = *trio
                .iter()
                .find(|&&t| missing.iter().filter(|&&(s, e)| s == t || e == t).count() >= 2)
                .expect("two non-edges share a vertex");
            let others: Vec<usize> = trio.iter().copied().filter(|&t| t != p).collect();
            let (q, r) = (others[0], others[1]);
            let added = vec![(q, p), (p, r)];
            Ok(Reduction {
                children: vec![derive(g, &[a, b], &added)?],
                subcase: SubCase::C5TwinsTwoMissing,
                recipe: Recipe::Pivot { a, b, q, p, r },
                synthetic: added,
                anchors: vec![("pivot", p)],
            })
        }
    }
}

/// `G - v` with `uw` contracted.
fn degree_two(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
    x: [usize; 2],
    z: Vec<usize>,
) -> Result<Reduction, ReductionError> {
    let (h, m1) = g.delete_vertices(&[v]);
    let (child, m2) = h.contract_edge(m1.get(u).expect("kept"), m1.get(w).expect("kept"))?;
    let sigma = g.order();
    Ok(Reduction {
        children: vec![(child, m1.compose(&m2))],
        subcase: SubCase::C5DegreeTwo,
        recipe: Recipe::C5DegreeTwo {
            u,
            v,
            w,
            x,
            z,
            sigma,
        },
        synthetic: vec![],
        anchors: vec![("s", sigma)],
    })
}

/// `G - u`, contract `vw` to `s`, add `s x2`.
fn non_cut(
    g: &Graph,
    [u, v, w]: [usize; 3],
    x1: usize,
    x2: usize,
    y: [usize; 2],
    z: [usize; 2],
) -> Result<Reduction, ReductionError> {
    let (h, m1) = g.delete_vertices(&[u]);
    let (h2, m2) = h.contract_edge(m1.get(v).expect("kept"), m1.get(w).expect("kept"))?;
    let map: VertexMap = m1.compose(&m2);
    let s = map.merged().expect("contracted").into;
    let child = h2.add_edge(s, map.get(x2).expect("kept"))?;
    let sigma = g.order();
    Ok(Reduction {
        children: vec![(child, map)],
        subcase: SubCase::C5NonCutEdge,
        recipe: Recipe::C5NonCut {
            u,
            v,
            w,
            x1,
            x2,
            y,
            z,
            sigma,
        },
        synthetic: vec![(sigma, x2)],
        anchors: vec![("s", sigma), ("x2", x2)],
    })
}

fn all_cut(
    g: &Graph,
    [u, v, w]: [usize; 3],
    x: [usize; 2],
    y: [usize; 2],
    z: [usize; 2],
) -> Result<Reduction, ReductionError> {
    let added = vec![(x[0], y[0]), (x[1], y[1]), (z[0], z[1])];
    let (h, map) = derive(g, &[u, v, w], &added)?;
    let children = split_components(&h, &map, &[x[0], x[1], z[0]])
        .ok_or_else(|| no_case("bridged triangle does not leave three components"))?;
    Ok(Reduction {
        children,
        subcase: SubCase::C5AllCutEdges,
        recipe: Recipe::C5AllCut { u, v, w, x, y, z },
        synthetic: added,
        anchors: vec![("x1", x[0]), ("x2", x[1]), ("z1", z[0])],
    })
}

pub(super) fn lift(ed: &mut Editor, recipe: &Recipe) -> Result<(), ReductionError> {
    match recipe {
        Recipe::C5TwinsOne { a, b, q, p, r } => {
            let (a, b, q, p, r) = (*a, *b, *q, *p, *r);
            ed.replace_edge(q, r, &[q, a, b, r])?;
            ed.add(&[q, b, p, a, r])?;
            Ok(())
        }
        Recipe::C5TwinsTriangle { a, b, c, x, y } => twins_triangle(ed, *a, *b, *c, *x, *y),
        Recipe::C5DegreeTwo {
            u,
            v,
            w,
            x,
            z,
            sigma,
        } => degree_two_lift(ed, *u, *v, *w, *x, z, *sigma),
        Recipe::C5NonCut {
            u,
            v,
            w,
            x1,
            x2,
            y,
            z,
            sigma,
        } => non_cut_lift(ed, [*u, *v, *w], *x1, *x2, *y, *z, *sigma),
        Recipe::C5AllCut { u, v, w, x, y, z } => {
            let (u, v, w) = (*u, *v, *w);
            ed.replace_edge(x[0], y[0], &[x[0], u, v, y[0]])?;
            ed.replace_edge(x[1], y[1], &[x[1], u, w, v, y[1]])?;
            ed.replace_edge(z[0], z[1], &[z[0], w, z[1]])?;
            Ok(())
        }
        Recipe::Pivot { .. } => super::c4::lift(ed, recipe),
        _ => unreachable!("not a C5 recipe"),
    }
}

/// `c` has exactly the neighbours `x`, `y` in the child, so its two edges
/// either sit consecutively in one path or end two different paths.
fn twins_triangle(
    ed: &mut Editor,
    a: usize,
    b: usize,
    c: usize,
    x: usize,
    y: usize,
) -> Result<(), ReductionError> {
    let through = ed.locate(c, x)?;
    if through == ed.locate(c, y)? {
        let p = ed.locate(x, y)?;
        ed.replace_in(p, &[x, y], &[x, c, y])?;
        let second = ed
            .split(through, c)?
            .ok_or_else(|| ed.state_error("c is an end of the path through it"))?;
        let (px, py) = if ed.d.paths()[through].contains(x) {
            (through, second)
        } else {
            (second, through)
        };
        ed.replace_in(px, &[x, c], &[x, a, y, b, c])?;
        ed.replace_in(py, &[c, y], &[c, a, b, x, y])?;
        return Ok(());
    }
    let (x, y) = if ed.locate(x, y)? == ed.locate(c, y)? {
        (y, x)
    } else {
        (x, y)
    };
    ed.move_endpoint(x, c, a)?;
    let p = ed.locate(x, y)?;
    match ed.split(p, y)? {
        None => {
            ed.extend(p, &[y, b, c])?;
            ed.add(&[y, a, b, x, c])?;
        }
        Some(second) => {
            let (with_xy, other) = if ed.d.paths()[p].contains(x) {
                (p, second)
            } else {
                (second, p)
            };
            ed.extend(with_xy, &[y, b, c])?;
            ed.extend(other, &[y, a, b, x, c])?;
        }
    }
    ed.extend_at(y, c, &[c, a])
}

fn degree_two_lift(
    ed: &mut Editor,
    u: usize,
    v: usize,
    w: usize,
    [x1, x2]: [usize; 2],
    z: &[usize],
    sigma: usize,
) -> Result<(), ReductionError> {
    let in_z = |t: Option<usize>| t.is_none_or(|t| z.contains(&t));
    while let Some((i, prev, next)) = ed
        .occurrences(sigma)
        .into_iter()
        .find(|&(_, p, n)| in_z(p) && in_z(n))
    {
        match (prev, next) {
            (Some(p), Some(n)) => ed.replace_in(i, &[p, sigma, n], &[p, w, n])?,
            (Some(t), None) | (None, Some(t)) => ed.move_endpoint(t, sigma, w)?,
            (None, None) => return Err(ed.state_error("path of one vertex")),
        }
    }
    if ed.locate(x1, sigma)? == ed.locate(x2, sigma)? {
        ed.replace(&[x1, sigma, x2], &[x1, u, x2])?;
        let i = ed.locate(x1, u)?;
        ed.split(i, u)?;
        ed.extend_at(x1, u, &[u, w])?;
        ed.extend_at(u, x2, &[u, v, w])?;
        return Ok(());
    }
    for (xi, route) in [(x1, vec![u, w]), (x2, vec![u, v, w])] {
        let i = ed.locate(xi, sigma)?;
        let vs = ed.d.paths()[i].vertices().to_vec();
        let k = vs.iter().position(|&t| t == sigma).expect("sigma on path");
        let beyond = if k > 0 && vs[k - 1] == xi {
            vs.get(k + 1).copied()
        } else {
            k.checked_sub(1).map(|j| vs[j])
        };
        match beyond {
            None => {
                ed.move_endpoint(xi, sigma, u)?;
                ed.extend_at(xi, u, &route)?;
            }
            Some(t) => {
                let mut with = vec![xi];
                with.extend(&route);
                with.push(t);
                ed.replace_in(i, &[xi, sigma, t], &with)?;
            }
        }
    }
    Ok(())
}

fn non_cut_lift(
    ed: &mut Editor,
    [u, v, w]: [usize; 3],
    x1: usize,
    x2: usize,
    y: [usize; 2],
    z: [usize; 2],
    sigma: usize,
) -> Result<(), ReductionError> {
    let side = |t: usize| {
        if y.contains(&t) {
            Some(v)
        } else if z.contains(&t) {
            Some(w)
        } else if t == x2 {
            Some(u)
        } else {
            None
        }
    };
    // Subpaths y-s-z become y-v-w-z, and a second one y-v-u-w-z.
    let mut yz_seen = 0;
    while let Some((i, p, n)) = ed.occurrences(sigma).into_iter().find_map(|(i, p, n)| {
        let (p, n) = (p?, n?);
        let (sp, sn) = (side(p)?, side(n)?);
        ((sp == v && sn == w) || (sp == w && sn == v)).then_some((i, p, n))
    }) {
        let mut mid = if yz_seen == 0 { vec![v, w] } else { vec![v, u, w] };
        if side(p) == Some(w) {
            mid.reverse();
        }
        let mut with = vec![p];
        with.extend(mid);
        with.push(n);
        ed.replace_in(i, &[p, sigma, n], &with)?;
        yz_seen += 1;
    }
    // Subpath x2-s-t becomes x2-u-r-t.
    if let Some((i, p, n)) = ed.occurrences(sigma).into_iter().find_map(|(i, p, n)| {
        let (p, n) = (p?, n?);
        (p == x2 || n == x2).then_some((i, p, n))
    }) {
        let t = if p == x2 { n } else { p };
        let r = side(t).ok_or_else(|| ed.state_error(format!("unexpected neighbour {t} of s")))?;
        let route = if p == x2 { vec![x2, u, r, t] } else { vec![t, r, u, x2] };
        ed.replace_in(i, &[p, sigma, n], &route)?;
    }
    // Every other edge at s goes to the triangle vertex adjacent to its far end.
    while let Some((i, p, n)) = ed.occurrences(sigma).into_iter().next() {
        match (p, n) {
            (Some(p), Some(n)) => {
                let (rp, rn) = (side(p), side(n));
                if rp.is_none() || rp != rn {
                    return Err(ed.state_error(format!("unexpected subpath {p}-s-{n}")));
                }
                ed.replace_in(i, &[p, sigma, n], &[p, rp.unwrap(), n])?;
            }
            (Some(t), None) | (None, Some(t)) => {
                let r = side(t).ok_or_else(|| ed.state_error(format!("unexpected neighbour {t} of s")))?;
                ed.move_endpoint(t, sigma, r)?;
            }
            (None, None) => return Err(ed.state_error("path of one vertex")),
        }
    }
    let residual: Vec<Edge> = [(u, x1), (u, v), (u, w), (v, w)]
        .into_iter()
        .filter(|&(a, b)| ed.d.locate_edge(a, b).is_none())
        .map(|(a, b)| edge(a, b))
        .collect();
    if let Some(q) = edges_as_path(&residual) {
        ed.add(&q)?;
        return Ok(());
    }
    for (a, b) in [(w, u), (w, v), (u, v)] {
        if !residual.contains(&edge(a, b)) {
            continue;
        }
        let rest: Vec<Edge> = residual.iter().copied().filter(|&e| e != edge(a, b)).collect();
        let Some(q) = edges_as_path(&rest) else { continue };
        for (end, far) in [(a, b), (b, a)] {
            let candidates: Vec<usize> = (0..ed.d.len())
                .filter(|&i| ed.d.paths()[i].has_endpoint(end))
                .collect();
            for i in candidates {
                if ed.d.extend(i, &[end, far]).is_ok() {
                    ed.add(&q)?;
                    return Ok(());
                }
            }
        }
    }
    Err(ed.state_error(format!("uncovered edges {residual:?} cannot be completed to a path")))
}
