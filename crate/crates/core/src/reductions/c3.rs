use super::plan::Recipe;
use super::{derive, Editor, Reduction, ReductionError, SubCase};
use crate::graph::{Edge, Graph};

/// Labels `[u, v, x, y, u', v']`.
type Labels = [usize; 6];

fn swap_xy([u, v, x, y, up, vp]: Labels) -> Labels {
    [u, v, y, x, up, vp]
}

fn swap_sides([u, v, x, y, up, vp]: Labels) -> Labels {
    [v, u, x, y, vp, up]
}

/// Outer edges `xu'`, `u'y`, `yv'`, `v'x` in that order.
fn outer([_, _, x, y, up, vp]: Labels) -> [Edge; 4] {
    [(x, up), (up, y), (y, vp), (vp, x)]
}

/// Relabels so that outer edge number `k` becomes `xu'`.
fn rotate_to_first(l: Labels, k: usize) -> Labels {
    match k {
        0 => l,
        1 => swap_xy(l),
        2 => swap_sides(swap_xy(l)),
        _ => swap_sides(l),
    }
}

pub(super) fn reduce(g: &Graph, labels: Labels) -> Result<Reduction, ReductionError> {
    let present: Vec<usize> = (0..4)
        .filter(|&k| {
            let (a, b) = outer(labels)[k];
            g.has_edge(a, b)
        })
        .collect();
    match present.len() {
        0 | 1 => {
            let l = present.first().map_or(labels, |&k| rotate_to_first(labels, k));
            let [u, v, x, y, up, vp] = l;
            let mut added = vec![(up, y), (vp, x)];
            let mut child = derive(g, &[u, v], &added)?;
            let with_xy = !child.0.is_connected();
            if with_xy {
                added.push((x, y));
                child = derive(g, &[u, v], &added)?;
            }
            Ok(Reduction {
                children: vec![child],
                subcase: SubCase::C3FewOuter,
                recipe: Recipe::C3Few {
                    u,
                    v,
                    x,
                    y,
                    up,
                    vp,
                    with_xy,
                },
                synthetic: added,
                anchors: anchors(l),
            })
        }
        4 => {
            let [u, v, x, y, up, vp] = labels;
            Ok(Reduction {
                children: vec![derive(g, &[u, v], &[])?],
                subcase: SubCase::C3AllOuter,
                recipe: Recipe::C3All { u, v, x, y, up, vp },
                synthetic: vec![],
                anchors: anchors(labels),
            })
        }
        _ => {
            for k in (0..4).filter(|k| !present.contains(k)) {
                let l = rotate_to_first(labels, k);
                let [u, v, x, y, up, vp] = l;
                let child = derive(g, &[u, v], &[(x, up)])?;
                if child.0.is_connected() {
                    return Ok(Reduction {
                        children: vec![child],
                        subcase: SubCase::C3SomeOuter,
                        recipe: Recipe::C3Some { u, v, x, y, up, vp },
                        synthetic: vec![(x, up)],
                        anchors: anchors(l),
                    });
                }
            }
            Err(ReductionError::NoSubCase {
                config: super::Config::C3,
                reason: "no missing outer edge gives a connected child".into(),
            })
        }
    }
}

fn anchors([_, _, x, y, up, vp]: Labels) -> Vec<(&'static str, usize)> {
    vec![("x", x), ("y", y), ("u'", up), ("v'", vp)]
}

pub(super) fn lift(ed: &mut Editor, recipe: &Recipe) -> Result<(), ReductionError> {
    match *recipe {
        Recipe::C3Few {
            u,
            v,
            x,
            y,
            up,
            vp,
            with_xy: false,
        } => {
            ed.replace_edge(vp, x, &[vp, v, x])?;
            ed.replace_edge(up, y, &[up, u, y])?;
            ed.add(&[x, u, v, y])?;
        }
        Recipe::C3Few {
            u,
            v,
            x,
            y,
            up,
            vp,
            with_xy: true,
        } => {
            let s1 = ed.locate(up, y)?;
            let s2 = ed.locate(vp, x)?;
            let s3 = ed.locate(x, y)?;
            match (s3 == s1, s3 == s2) {
                (false, false) => {
                    ed.replace_edge(vp, x, &[vp, v, x])?;
                    ed.replace_edge(up, y, &[up, u, y])?;
                    ed.replace_edge(x, y, &[x, u, v, y])?;
                }
                (true, false) => {
                    ed.replace(&[up, y, x], &[up, u, y, v, x])?;
                    ed.replace_edge(vp, x, &[vp, v, u, x])?;
                }
                (false, true) => {
                    ed.replace(&[y, x, vp], &[y, u, x, v, vp])?;
                    ed.replace_edge(up, y, &[up, u, v, y])?;
                }
                (true, true) => {
                    // One path runs u'-y-x-v'; cut it at x first.
                    ed.split(s3, x)?;
                    ed.replace(&[up, y, x], &[up, u, y, v, x])?;
                    ed.replace_edge(x, vp, &[x, u, v, vp])?;
                }
            }
        }
        Recipe::C3All { u, v, x, y, up, vp } => {
            ed.replace_edge(x, up, &[x, v, u, up])?;
            ed.add(&[up, x, u, y, v, vp])?;
        }
        Recipe::C3Some { u, v, x, y, up, vp } => {
            ed.replace_edge(x, up, &[x, v, u, up])?;
            ed.add(&[x, u, y, v, vp])?;
        }
        _ => unreachable!("not a C3 recipe"),
    }
    Ok(())
}
