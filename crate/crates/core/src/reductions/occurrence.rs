use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Config {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A located reducible configuration, named by its vertices in the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "config")]
pub enum Occurrence {
    /// `u` has degree 2 and its neighbours `v`, `w` are not adjacent.
    C1 { u: usize, v: usize, w: usize },
    /// `uv` is a bridge and both ends have even degree.
    C2 { u: usize, v: usize },
    /// `d(u) = d(v) = 4`, common neighbours exactly `{x, y}`, and `up`, `vp`
    /// the remaining neighbours of `u` and `v`.
    C3 {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
        up: usize,
        vp: usize,
    },
    /// `d(u) = d(v) = 4` with `t[0]t[1]`, `w[0]w[1]` non-edges and `t[2] != w[2]`.
    C4 {
        u: usize,
        v: usize,
        t: [usize; 3],
        w: [usize; 3],
    },
    /// Triangle with `d(u) = 4` and `d(v), d(w)` in `{2, 4}`.
    C5 { u: usize, v: usize, w: usize },
}

impl Occurrence {
    pub fn config(&self) -> Config {
        match self {
            Occurrence::C1 { .. } => Config::C1,
            Occurrence::C2 { .. } => Config::C2,
            Occurrence::C3 { .. } => Config::C3,
            Occurrence::C4 { .. } => Config::C4,
            Occurrence::C5 { .. } => Config::C5,
        }
    }

    /// Checks every degree, adjacency and non-adjacency condition against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.order();
        let named = self.vertices();
        if let Some(&bad) = named.iter().find(|&&x| x >= n) {
            return Err(format!("vertex {bad} out of range"));
        }
        let deg = |x: usize| g.degree(x);
        let ensure = |cond: bool, msg: &str| if cond { Ok(()) } else { Err(msg.to_string()) };
        match *self {
            Occurrence::C1 { u, v, w } => {
                ensure(deg(u) == 2, "d(u) != 2")?;
                ensure(v != w && g.has_edge(u, v) && g.has_edge(u, w), "N(u) != {v, w}")?;
                ensure(!g.has_edge(v, w), "neighbours of u are adjacent")
            }
            Occurrence::C2 { u, v } => {
                ensure(g.has_edge(u, v), "uv is not an edge")?;
                ensure(deg(u) % 2 == 0 && deg(v) % 2 == 0, "odd end degree")?;
                ensure(g.is_bridge(u, v), "uv is not a bridge")
            }
            Occurrence::C3 { u, v, x, y, up, vp } => {
                ensure(g.has_edge(u, v), "uv is not an edge")?;
                ensure(deg(u) == 4 && deg(v) == 4, "d(u) or d(v) != 4")?;
                ensure(g.common_neighbors(u, v) == sorted(&[x, y]), "common neighbours != {x, y}")?;
                ensure(
                    sorted(&[v, x, y, up]) == g.neighbors(u),
                    "N(u) != {v, x, y, u'}",
                )?;
                ensure(
                    sorted(&[u, x, y, vp]) == g.neighbors(v),
                    "N(v) != {u, x, y, v'}",
                )
            }
            Occurrence::C4 { u, v, t, w } => {
                ensure(g.has_edge(u, v), "uv is not an edge")?;
                ensure(deg(u) == 4 && deg(v) == 4, "d(u) or d(v) != 4")?;
                let mut nu = t.to_vec();
                nu.push(v);
                let mut nv = w.to_vec();
                nv.push(u);
                ensure(sorted(&nu) == g.neighbors(u), "t does not list N(u) - v")?;
                ensure(sorted(&nv) == g.neighbors(v), "w does not list N(v) - u")?;
                ensure(!g.has_edge(t[0], t[1]), "t1t2 is an edge")?;
                ensure(!g.has_edge(w[0], w[1]), "w1w2 is an edge")?;
                ensure(t[2] != w[2], "t3 = w3")
            }
            Occurrence::C5 { u, v, w } => {
                ensure(
                    g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w),
                    "uvw is not a triangle",
                )?;
                ensure(deg(u) == 4, "d(u) != 4")?;
                ensure(
                    matches!(deg(v), 2 | 4) && matches!(deg(w), 2 | 4),
                    "d(v) or d(w) not in {2, 4}",
                )
            }
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            Occurrence::C1 { u, v, w } | Occurrence::C5 { u, v, w } => vec![u, v, w],
            Occurrence::C2 { u, v } => vec![u, v],
            Occurrence::C3 { u, v, x, y, up, vp } => vec![u, v, x, y, up, vp],
            Occurrence::C4 { u, v, t, w } => {
                let mut out = vec![u, v];
                out.extend(t);
                out.extend(w);
                out
            }
        }
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Occurrence::C1 { u, v, w } => write!(f, "C1(u={u} v={v} w={w})"),
            Occurrence::C2 { u, v } => write!(f, "C2(u={u} v={v})"),
            Occurrence::C3 { u, v, x, y, up, vp } => {
                write!(f, "C3(u={u} v={v} x={x} y={y} u'={up} v'={vp})")
            }
            Occurrence::C4 { u, v, t, w } => write!(f, "C4(u={u} v={v} t={t:?} w={w:?})"),
            Occurrence::C5 { u, v, w } => write!(f, "C5(u={u} v={v} w={w})"),
        }
    }
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}
