//! Random inputs and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use pathdecomp::decomp::PathDecomposition;
use pathdecomp::graph::Graph;
use rand::prelude::*;

/// Random spanning tree plus up to `extra` chords, all degrees at most `max_deg`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize, max_deg: usize) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges = BTreeSet::new();
    for v in 1..n {
        loop {
            let u = rng.gen_range(0..v);
            if deg[u] < max_deg {
                deg[u] += 1;
                deg[v] += 1;
                edges.insert((u, v));
                break;
            }
        }
    }
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (a, b) = (a.min(b), a.max(b));
        if a != b && deg[a] < max_deg && deg[b] < max_deg && edges.insert((a, b)) {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

/// Random valid decomposition: grow paths from random uncovered edges.
pub fn random_decomposition<R: Rng>(g: &Graph, rng: &mut R) -> PathDecomposition {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut left: HashSet<(usize, usize)> = g.edges().collect();
    let mut order: Vec<(usize, usize)> = g.edges().collect();
    order.shuffle(rng);
    let mut paths = Vec::new();
    for (a, b) in order {
        if !left.remove(&(a, b)) {
            continue;
        }
        let mut p = VecDeque::from(vec![a, b]);
        loop {
            let back = rng.gen_bool(0.5);
            let tip = if back { *p.back().unwrap() } else { *p.front().unwrap() };
            let options: Vec<usize> = g
                .neighbors(tip)
                .iter()
                .copied()
                .filter(|&x| !p.contains(&x) && left.contains(&key(tip, x)))
                .collect();
            if options.is_empty() || rng.gen_bool(0.15) {
                break;
            }
            let x = *options.choose(rng).unwrap();
            left.remove(&key(tip, x));
            if back {
                p.push_back(x)
            } else {
                p.push_front(x)
            }
        }
        paths.push(p.into_iter().collect::<Vec<_>>());
    }
    PathDecomposition::from_vertex_lists(paths)
}

/// Every simple path with at least one edge, once per direction pair, as edge masks.
fn all_path_masks(g: &Graph) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut out = HashSet::new();
    fn walk(g: &Graph, index: &HashMap<(usize, usize), usize>, path: &mut Vec<usize>, mask: u64, out: &mut HashSet<u64>) {
        if mask != 0 {
            out.insert(mask);
        }
        let tip = *path.last().unwrap();
        for &x in g.neighbors(tip) {
            if path.contains(&x) {
                continue;
            }
            path.push(x);
            let e = index[&(tip.min(x), tip.max(x))];
            walk(g, index, path, mask | 1 << e, out);
            path.pop();
        }
    }
    for v in 0..g.order() {
        walk(g, &index, &mut vec![v], 0, &mut out);
    }
    out.into_iter().collect()
}

/// Minimum number of paths partitioning the edges, by unpruned dynamic
/// programming over all edge subsets.
pub fn naive_min_paths(g: &Graph) -> usize {
    let m = g.size();
    assert!(m <= 20, "naive oracle is exponential in m");
    let paths = all_path_masks(g);
    let full = (1u64 << m) - 1;
    let mut best = vec![usize::MAX; 1 << m];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        for &p in &paths {
            if p & low != 0 && p & !mask == 0 {
                let rest = best[(mask & !p) as usize];
                if rest != usize::MAX {
                    best[mask as usize] = best[mask as usize].min(rest + 1);
                }
            }
        }
    }
    best[full as usize]
}

fn connected_without(g: &Graph, skip: (usize, usize)) -> bool {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &x in g.neighbors(v) {
            if (v.min(x), v.max(x)) == skip || seen[x] {
                continue;
            }
            seen[x] = true;
            stack.push(x);
        }
    }
    seen.iter().all(|&s| s)
}

pub fn brute_c1(g: &Graph) -> bool {
    (0..g.order()).any(|u| {
        let nb = g.neighbors(u);
        nb.len() == 2 && !g.has_edge(nb[0], nb[1])
    })
}

pub fn brute_c2(g: &Graph) -> bool {
    g.edges()
        .any(|(u, v)| g.degree(u).is_multiple_of(2) && g.degree(v).is_multiple_of(2) && !connected_without(g, (u, v)))
}

fn common(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.order()).filter(|&x| g.has_edge(u, x) && g.has_edge(v, x)).count()
}

pub fn brute_c3(g: &Graph) -> bool {
    g.edges()
        .any(|(u, v)| g.degree(u) == 4 && g.degree(v) == 4 && common(g, u, v) == 2)
}

fn permutations3(s: &[usize]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if i != j && j != k && i != k {
                    out.push([s[i], s[j], s[k]]);
                }
            }
        }
    }
    out
}

pub fn brute_c4(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        if g.degree(u) != 4 || g.degree(v) != 4 {
            return false;
        }
        let t: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
        let w: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
        permutations3(&t).iter().any(|t| {
            permutations3(&w)
                .iter()
                .any(|w| !g.has_edge(t[0], t[1]) && !g.has_edge(w[0], w[1]) && t[2] != w[2])
        })
    })
}

pub fn brute_c5(g: &Graph) -> bool {
    let n = g.order();
    let ok = |d: usize| d == 2 || d == 4;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)
                    && g.degree(a) == 4 && ok(g.degree(b)) && ok(g.degree(c)) {
                        return true;
                    }
            }
        }
    }
    false
}
