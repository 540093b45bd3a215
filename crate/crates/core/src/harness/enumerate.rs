//! Isomorphism-free generation of small connected graphs.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! joined to a non-empty subset. Every connected graph has a non-cut vertex,
//! and deleting it does not raise the maximum degree, so filtering by degree
//! at every level loses nothing.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ENUM_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("internal enumerator supports n <= {MAX_ENUM_ORDER}, got {0}; pipe a graph6 stream instead")]
    TooLarge(usize),
}

/// Upper-triangle adjacency bits, column by column, as in graph6.
fn code_under(g: &Graph, pos: &[usize]) -> u64 {
    // pos[v] = position of vertex v; bit index of (i, j), i < j, is j(j-1)/2 + i.
    let mut code = 0u64;
    for (a, b) in g.edges() {
        let (i, j) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        code |= 1 << (j * (j - 1) / 2 + i);
    }
    code
}

/// Iterated colour refinement, started from degrees. Colours are ranks of
/// isomorphism-invariant signatures, so the ordered partition is invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = g.degrees();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Smallest code over vertex orders that list colour classes in increasing
/// colour. Equal for isomorphic graphs, distinct otherwise.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.order() <= 11, "64-bit codes hold at most 11 vertices");
    let colour = refine(g);
    let classes = colour.iter().max().map_or(0, |&c| c + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (v, &c) in colour.iter().enumerate() {
        cells[c].push(v);
    }
    let mut pos = vec![0; g.order()];
    let mut best = u64::MAX;
    assign(g, &cells, 0, 0, &mut pos, &mut best);
    best
}

fn assign(g: &Graph, cells: &[Vec<usize>], cell: usize, offset: usize, pos: &mut [usize], best: &mut u64) {
    let Some(members) = cells.get(cell) else {
        *best = (*best).min(code_under(g, pos));
        return;
    };
    let mut order = members.clone();
    permute(&mut order, 0, &mut |order| {
        for (k, &v) in order.iter().enumerate() {
            pos[v] = offset + k;
        }
        assign(g, cells, cell + 1, offset + order.len(), pos, best);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (j * (j - 1) / 2 + i) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with maximum degree at most `max_deg`, in increasing code order.
pub fn enumerate_connected(n: usize, max_deg: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ENUM_ORDER {
        return Err(EnumerateError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        let prev: Vec<Graph> = level.iter().map(|&c| from_code(k - 1, c)).collect();
        let mut codes: Vec<u64> = prev
            .par_iter()
            .flat_map_iter(|h| extensions(h, max_deg))
            .map(|g| canonical_code(&g))
            .collect::<HashSet<u64>>()
            .into_iter()
            .collect();
        codes.sort_unstable();
        level = codes;
    }
    Ok(level.into_iter().map(|c| from_code(n, c)).collect())
}

fn extensions(h: &Graph, max_deg: usize) -> Vec<Graph> {
    let k = h.order();
    let base: Vec<(usize, usize)> = h.edges().collect();
    (1u32..1 << k)
        .filter(|&s| s.count_ones() as usize <= max_deg)
        .filter(|&s| (0..k).all(|v| s >> v & 1 == 0 || h.degree(v) < max_deg))
        .map(|s| {
            let mut edges = base.clone();
            edges.extend((0..k).filter(|&v| s >> v & 1 == 1).map(|v| (v, k)));
            Graph::from_edges(k + 1, &edges).expect("simple")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn census_examples() {
        assert_eq!(enumerate_connected(3, 5).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4, 5).unwrap().len(), 6);
        let deg2 = enumerate_connected(4, 2).unwrap();
        assert_eq!(deg2.len(), 2);
        assert!(deg2.contains(&from_code(4, canonical_code(&cycle(4)))));
        assert_eq!(enumerate_connected(1, 0).unwrap(), vec![Graph::empty(1)]);
        assert_eq!(enumerate_connected(9, 5), Err(EnumerateError::TooLarge(9)));
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let g = petersen();
        let perm = [4, 9, 1, 7, 0, 3, 8, 2, 6, 5];
        let h = Graph::from_edges(10, &g.edges().map(|(a, b)| (perm[a], perm[b])).collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&cycle(6)), canonical_code(&path(6)));
    }
}
