use super::Occurrence;
use crate::graph::Graph;

/// First configuration under the priority C1 < C2 < C3 < C4 < C5, scanning
/// vertices and edges in ascending order.
pub fn detect(g: &Graph) -> Option<Occurrence> {
    detect_c1(g)
        .or_else(|| detect_c2(g))
        .or_else(|| detect_c3(g))
        .or_else(|| detect_c4(g))
        .or_else(|| detect_c5(g))
}

pub fn detect_c1(g: &Graph) -> Option<Occurrence> {
    (0..g.order()).find_map(|u| match g.neighbors(u) {
        &[v, w] if !g.has_edge(v, w) => Some(Occurrence::C1 { u, v, w }),
        _ => None,
    })
}

pub fn detect_c2(g: &Graph) -> Option<Occurrence> {
    g.bridges()
        .into_iter()
        .find(|&(u, v)| g.degree(u).is_multiple_of(2) && g.degree(v).is_multiple_of(2))
        .map(|(u, v)| Occurrence::C2 { u, v })
}

fn quartic_edges(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges()
        .filter(|&(u, v)| g.degree(u) == 4 && g.degree(v) == 4)
}

pub fn detect_c3(g: &Graph) -> Option<Occurrence> {
    quartic_edges(g).find_map(|(u, v)| {
        let common = g.common_neighbors(u, v);
        if common.len() != 2 {
            return None;
        }
        let (x, y) = (common[0], common[1]);
        let other = |a: usize, b: usize| {
            *g.neighbors(a)
                .iter()
                .find(|&&z| z != b && z != x && z != y)
                .expect("degree four")
        };
        Some(Occurrence::C3 {
            u,
            v,
            x,
            y,
            up: other(u, v),
            vp: other(v, u),
        })
    })
}

/// Every labeling of `N(u) - v` and `N(v) - u` with `t1t2`, `w1w2` non-edges
/// and `t3 != w3`, in lexicographic order of `(t3, w3)`. Within a pair the
/// smaller id comes first.
pub(crate) fn c4_labelings(g: &Graph, u: usize, v: usize) -> Vec<([usize; 3], [usize; 3])> {
    let ts: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
    let ws: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
    let mut out = Vec::new();
    if ts.len() != 3 || ws.len() != 3 {
        return out;
    }
    for i in 0..3 {
        let t = triple(&ts, i);
        if g.has_edge(t[0], t[1]) {
            continue;
        }
        for j in 0..3 {
            let w = triple(&ws, j);
            if !g.has_edge(w[0], w[1]) && t[2] != w[2] {
                out.push((t, w));
            }
        }
    }
    out
}

/// The three elements with index `last` moved to the end.
fn triple(xs: &[usize], last: usize) -> [usize; 3] {
    let rest: Vec<usize> = (0..3).filter(|&k| k != last).map(|k| xs[k]).collect();
    [rest[0], rest[1], xs[last]]
}

pub fn detect_c4(g: &Graph) -> Option<Occurrence> {
    quartic_edges(g).find_map(|(u, v)| {
        c4_labelings(g, u, v)
            .first()
            .map(|&(t, w)| Occurrence::C4 { u, v, t, w })
    })
}

pub fn detect_c5(g: &Graph) -> Option<Occurrence> {
    (0..g.order()).filter(|&u| g.degree(u) == 4).find_map(|u| {
        let nb = g.neighbors(u);
        nb.iter().enumerate().find_map(|(i, &v)| {
            nb[i + 1..].iter().find_map(|&w| {
                let ok = g.has_edge(v, w)
                    && matches!(g.degree(v), 2 | 4)
                    && matches!(g.degree(w), 2 | 4);
                ok.then_some(Occurrence::C5 { u, v, w })
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::Edge;

    fn g(n: usize, edges: &[Edge]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// K4 on 0..4 and K4 on 4..8 joined by the edge 0-4.
    fn two_k4_bridge() -> Graph {
        let mut edges = Vec::new();
        for base in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    edges.push((base + a, base + b));
                }
            }
        }
        edges.push((0, 4));
        g(8, &edges)
    }

    #[test]
    fn c1_on_four_cycle() {
        assert_eq!(detect(&cycle(4)), Some(Occurrence::C1 { u: 0, v: 1, w: 3 }));
        assert_eq!(detect_c1(&complete(3)), None);
    }

    #[test]
    fn c2_on_joined_k4s() {
        let h = two_k4_bridge();
        assert_eq!(detect_c1(&h), None);
        assert_eq!(detect(&h), Some(Occurrence::C2 { u: 0, v: 4 }));
    }

    #[test]
    fn c3_on_diamond_with_tails() {
        // u=0 v=1 x=2 y=3 u'=4 v'=5
        let h = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5)]);
        assert_eq!(
            detect_c3(&h),
            Some(Occurrence::C3 {
                u: 0,
                v: 1,
                x: 2,
                y: 3,
                up: 4,
                vp: 5
            })
        );
        assert_eq!(detect_c3(&complete(5)), None);
    }

    #[test]
    fn c4_on_eight_vertex_graph() {
        // u=0 v=1 t1..t3=2..4 w1..w3=5..7
        let h = g(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 7),
                (4, 5),
                (7, 2),
            ],
        );
        assert_eq!(detect_c1(&h), None);
        assert_eq!(detect_c2(&h), None);
        assert_eq!(detect_c3(&h), None);
        match detect(&h) {
            Some(occ @ Occurrence::C4 { u: 0, v: 1, .. }) => occ.validate(&h).unwrap(),
            other => panic!("expected C4 at 0-1, got {other:?}"),
        }
    }

    #[test]
    fn c5_on_triangle_with_pendants() {
        let h = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]);
        assert_eq!(detect_c5(&h), Some(Occurrence::C5 { u: 0, v: 1, w: 2 }));
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(detect(&complete(4)), None);
        assert_eq!(detect(&petersen()), None);
        assert_eq!(detect(&complete(3)), None);
    }
}
