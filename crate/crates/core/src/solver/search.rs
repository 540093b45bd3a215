//! Exact bounded search for decompositions into at most `k` paths.
//!
//! The smallest uncovered edge must lie on some path, so each node tries
//! every simple path through it (longest first) and recurses on what is
//! left. A residual is pruned when paths used plus a per-component lower
//! bound exceeds `k`, and residuals already refuted for a budget at least
//! as large are skipped.

use std::collections::HashMap;

use thiserror::Error;

use crate::decomp::{lower_bound, Path, PathDecomposition};
use crate::graph::Graph;

/// Edge sets are `u128` bitmasks.
pub const MAX_SEARCH_EDGES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {0} edges; exact search supports at most {MAX_SEARCH_EDGES}")]
    TooManyEdges(usize),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("graph has no edges")]
    Edgeless,
}

/// A decomposition into at most `k` paths, or `None` if there is none.
pub fn solve_base(g: &Graph, k: usize) -> Result<Option<PathDecomposition>, SearchError> {
    solve_base_budgeted(g, k, u64::MAX)
}

/// As [`solve_base`], giving up after `budget` search nodes.
pub fn solve_base_budgeted(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<PathDecomposition>, SearchError> {
    let mut s = Search::new(g, budget)?;
    let full = s.full_mask();
    let mut stack = Vec::new();
    if s.dfs(full, k, &mut stack)? {
        let paths = stack
            .into_iter()
            .map(|vs: Vec<u8>| Path::raw(vs.into_iter().map(usize::from).collect()))
            .collect();
        Ok(Some(PathDecomposition::new(paths)))
    } else {
        Ok(None)
    }
}

/// Exact minimum, by trying `k = lower_bound(g), lower_bound(g) + 1, ...`.
pub fn min_decomposition(g: &Graph) -> Result<(usize, PathDecomposition), SearchError> {
    let start = lower_bound(g).map_err(|_| SearchError::Edgeless)?;
    for k in start..=g.size() {
        if let Some(d) = solve_base(g, k)? {
            return Ok((d.len(), d));
        }
    }
    unreachable!("every edge is a path")
}

struct Search {
    n: usize,
    m: usize,
    /// `(neighbour, edge index)` per vertex.
    adj: Vec<Vec<(u8, u8)>>,
    ends: Vec<(u8, u8)>,
    failed: HashMap<u128, usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(g: &Graph, budget: u64) -> Result<Self, SearchError> {
        let m = g.size();
        if m > MAX_SEARCH_EDGES {
            return Err(SearchError::TooManyEdges(m));
        }
        // Vertex ids are stored as u8 along paths.
        assert!(g.order() <= 256, "exact search is limited to 256 vertices");
        let ends: Vec<(u8, u8)> = g.edges().map(|(a, b)| (a as u8, b as u8)).collect();
        let mut adj = vec![Vec::new(); g.order()];
        for (i, &(a, b)) in ends.iter().enumerate() {
            adj[a as usize].push((b, i as u8));
            adj[b as usize].push((a, i as u8));
        }
        Ok(Search {
            n: g.order(),
            m,
            adj,
            ends,
            failed: HashMap::new(),
            nodes: 0,
            budget,
        })
    }

    fn full_mask(&self) -> u128 {
        if self.m == 128 {
            u128::MAX
        } else {
            (1u128 << self.m) - 1
        }
    }

    fn dfs(&mut self, residual: u128, k: usize, stack: &mut Vec<Vec<u8>>) -> Result<bool, SearchError> {
        if residual == 0 {
            return Ok(true);
        }
        if k == 0 || self.bound(residual) > k {
            return Ok(false);
        }
        if self.failed.get(&residual).is_some_and(|&f| f >= k) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExhausted(self.budget));
        }
        let first = residual.trailing_zeros() as u8;
        let mut paths = self.paths_through(residual, first);
        paths.sort_by_key(|(mask, _)| std::cmp::Reverse(mask.count_ones()));
        for (mask, vs) in paths {
            stack.push(vs);
            if self.dfs(residual & !mask, k - 1, stack)? {
                return Ok(true);
            }
            stack.pop();
        }
        let e = self.failed.entry(residual).or_insert(0);
        *e = (*e).max(k);
        Ok(false)
    }

    /// Sum over residual components of `max(1, ⌈odd/2⌉, ⌈m/(n-1)⌉)`.
    fn bound(&self, residual: u128) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut deg = vec![0u8; self.n];
        let mut bits = residual;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = (self.ends[i].0 as usize, self.ends[i].1 as usize);
            deg[a] += 1;
            deg[b] += 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        // per root: (vertices, edge endpoints, odd vertices)
        let mut acc: HashMap<usize, (usize, usize, usize)> = HashMap::new();
        for v in 0..self.n {
            if deg[v] == 0 {
                continue;
            }
            let r = find(&mut parent, v);
            let e = acc.entry(r).or_default();
            e.0 += 1;
            e.1 += deg[v] as usize;
            e.2 += (deg[v] % 2) as usize;
        }
        acc.values()
            .map(|&(nv, ends, odd)| {
                let mc = ends / 2;
                1usize.max(odd.div_ceil(2)).max(mc.div_ceil(nv - 1))
            })
            .sum()
    }

    /// Every simple path in the residual graph that uses edge `e`.
    fn paths_through(&self, residual: u128, e: u8) -> Vec<(u128, Vec<u8>)> {
        let (a, b) = self.ends[e as usize];
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n];
        on_path[a as usize] = true;
        on_path[b as usize] = true;
        let mut left = vec![a];
        self.grow_left(residual, 1u128 << e, &mut left, &mut on_path, b, &mut out);
        out
    }

    fn grow_left(
        &self,
        residual: u128,
        mask: u128,
        left: &mut Vec<u8>,
        on_path: &mut [bool],
        b: u8,
        out: &mut Vec<(u128, Vec<u8>)>,
    ) {
        let mut right = vec![b];
        self.grow_right(residual, mask, left, &mut right, on_path, out);
        let tip = *left.last().unwrap() as usize;
        for &(x, ei) in &self.adj[tip] {
            if on_path[x as usize] || residual & (1u128 << ei) == 0 {
                continue;
            }
            on_path[x as usize] = true;
            left.push(x);
            self.grow_left(residual, mask | (1u128 << ei), left, on_path, b, out);
            left.pop();
            on_path[x as usize] = false;
        }
    }

    fn grow_right(
        &self,
        residual: u128,
        mask: u128,
        left: &[u8],
        right: &mut Vec<u8>,
        on_path: &mut [bool],
        out: &mut Vec<(u128, Vec<u8>)>,
    ) {
        let mut vs: Vec<u8> = left.iter().rev().copied().collect();
        vs.extend_from_slice(right);
        out.push((mask, vs));
        let tip = *right.last().unwrap() as usize;
        for &(x, ei) in &self.adj[tip] {
            if on_path[x as usize] || residual & (1u128 << ei) == 0 {
                continue;
            }
            on_path[x as usize] = true;
            right.push(x);
            self.grow_right(residual, mask | (1u128 << ei), left, right, on_path, out);
            right.pop();
            on_path[x as usize] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::verify;
    use crate::graph::named::*;

    #[test]
    fn base_examples() {
        let d = solve_base(&star(3), 2).unwrap().unwrap();
        assert!(verify(&star(3), &d).valid);
        assert_eq!(d.len(), 2);
        assert_eq!(solve_base(&complete(5), 2).unwrap(), None);
        assert_eq!(solve_base(&cycle(4), 1).unwrap(), None);
    }

    #[test]
    fn minimum_examples() {
        assert_eq!(min_decomposition(&complete(3)).unwrap().0, 2);
        assert_eq!(min_decomposition(&complete(5)).unwrap().0, 3);
        assert_eq!(min_decomposition(&path(5)).unwrap().0, 1);
        assert_eq!(min_decomposition(&petersen()).unwrap().0, 5);
        assert_eq!(min_decomposition(&Graph::empty(2)), Err(SearchError::Edgeless));
    }

    #[test]
    fn budget_is_reported() {
        // K6 needs 3 paths; asking for 3 with a one-node budget must give up.
        assert_eq!(
            solve_base_budgeted(&complete(6), 3, 1),
            Err(SearchError::BudgetExhausted(1))
        );
    }

    #[test]
    fn paths_through_counts_all_simple_paths() {
        // In a triangle the paths through edge 0-1 are 0-1, 2-0-1, 0-1-2.
        let s = Search::new(&complete(3), u64::MAX).unwrap();
        assert_eq!(s.paths_through(s.full_mask(), 0).len(), 3);
    }
}
