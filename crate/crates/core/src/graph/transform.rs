use super::{edge, Edge, Graph, GraphError};

/// A contracted edge: both ends of `pair` became the single vertex `into`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Merge {
    pub pair: (usize, usize),
    pub into: usize,
}

/// Relabeling from a parent graph's vertex ids to a derived graph's ids.
///
/// `forward` is injective except on a merged pair. `inverse` picks one
/// preimage per new vertex; for a merged vertex that is `pair.0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<Option<usize>>,
    inverse: Vec<usize>,
    merged: Option<Merge>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            forward: (0..n).map(Some).collect(),
            inverse: (0..n).collect(),
            merged: None,
        }
    }

    /// Map that keeps the listed vertices, renumbered in the given order.
    fn keeping(parent_order: usize, kept: &[usize]) -> Self {
        let mut forward = vec![None; parent_order];
        for (new, &old) in kept.iter().enumerate() {
            forward[old] = Some(new);
        }
        VertexMap {
            forward,
            inverse: kept.to_vec(),
            merged: None,
        }
    }

    pub fn parent_order(&self) -> usize {
        self.forward.len()
    }

    pub fn child_order(&self) -> usize {
        self.inverse.len()
    }

    /// New id of an old vertex, if it survived.
    pub fn get(&self, old: usize) -> Option<usize> {
        self.forward.get(old).copied().flatten()
    }

    /// Representative old id of a new vertex.
    pub fn preimage(&self, new: usize) -> usize {
        self.inverse[new]
    }

    /// All old ids mapping to `new` (two for a merged vertex).
    pub fn preimages(&self, new: usize) -> Vec<usize> {
        match self.merged {
            Some(m) if m.into == new => vec![m.pair.0, m.pair.1],
            _ => vec![self.inverse[new]],
        }
    }

    pub fn merged(&self) -> Option<Merge> {
        self.merged
    }

    /// `self` then `next`. At most one of the two maps may carry a merge.
    pub fn compose(&self, next: &VertexMap) -> VertexMap {
        assert_eq!(self.child_order(), next.parent_order(), "maps do not chain");
        let forward = self
            .forward
            .iter()
            .map(|f| f.and_then(|mid| next.get(mid)))
            .collect();
        let inverse = next.inverse.iter().map(|&mid| self.inverse[mid]).collect();
        let merged = match (self.merged, next.merged) {
            (Some(_), Some(_)) => panic!("composing two contractions is not supported"),
            (Some(m), None) => Some(Merge {
                pair: m.pair,
                into: next.get(m.into).expect("merged vertex deleted after contraction"),
            }),
            (None, Some(m)) => Some(Merge {
                pair: (self.inverse[m.pair.0], self.inverse[m.pair.1]),
                into: m.into,
            }),
            (None, None) => None,
        };
        VertexMap {
            forward,
            inverse,
            merged,
        }
    }
}

impl Graph {
    /// Subgraph induced by `keep`, renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> (Graph, VertexMap) {
        let map = VertexMap::keeping(self.order(), keep);
        let adj = keep
            .iter()
            .map(|&old| {
                self.neighbors(old)
                    .iter()
                    .filter_map(|&w| map.get(w))
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), map)
    }

    /// `G - S`, with surviving vertices renumbered in ascending order.
    pub fn delete_vertices(&self, removed: &[usize]) -> (Graph, VertexMap) {
        let mut gone = vec![false; self.order()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            let (a, b) = edge(u, v);
            return Err(GraphError::DuplicateEdge(a, b));
        }
        let mut g = self.clone();
        g.adj[u].push(v);
        g.adj[u].sort_unstable();
        g.adj[v].push(u);
        g.adj[v].sort_unstable();
        g.m += 1;
        Ok(g)
    }

    /// Adds several edges; any loop or duplicate is an error.
    pub fn add_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        edges
            .iter()
            .try_fold(self.clone(), |g, &(u, v)| g.add_edge(u, v))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            let (a, b) = edge(u, v);
            return Err(GraphError::MissingEdge(a, b));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&x| x != v);
        g.adj[v].retain(|&x| x != u);
        g.m -= 1;
        Ok(g)
    }

    /// Contracts edge `uv` into one vertex adjacent to `N(u) ∪ N(v) - {u, v}`.
    ///
    /// The merged vertex takes `u`'s place in the numbering and `v` is
    /// dropped. Shared neighbours would create a parallel edge and are
    /// rejected.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        if !self.has_edge(u, v) {
            let (a, b) = edge(u, v);
            return Err(GraphError::MissingEdge(a, b));
        }
        if let Some(&c) = self.common_neighbors(u, v).first() {
            return Err(GraphError::CommonNeighbour(u, v, c));
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&x| x != v).collect();
        let mut map = VertexMap::keeping(self.order(), &keep);
        let into = map.get(u).expect("u kept");
        map.forward[v] = Some(into);
        map.merged = Some(Merge { pair: (u, v), into });
        let adj = keep
            .iter()
            .map(|&old| {
                let src: Vec<usize> = if old == u {
                    self.neighbors(u)
                        .iter()
                        .chain(self.neighbors(v))
                        .copied()
                        .filter(|&w| w != u && w != v)
                        .collect()
                } else {
                    self.neighbors(old).to_vec()
                };
                src.into_iter().filter_map(|w| map.get(w)).collect()
            })
            .collect();
        Ok((Graph::from_adjacency(adj), map))
    }

    /// Subgraph induced by the even-degree vertices.
    pub fn induced_even_subgraph(&self) -> (Graph, VertexMap) {
        let keep: Vec<usize> = (0..self.order())
            .filter(|&v| self.degree(v).is_multiple_of(2))
            .collect();
        self.induced(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn delete_vertex_examples() {
        let (g, map) = complete(3).delete_vertices(&[1]);
        assert_eq!(g, path(2));
        assert_eq!(map.get(1), None);
        assert_eq!(map.get(2), Some(1));
        assert_eq!(map.preimage(1), 2);

        let (g, _) = cycle(4).delete_vertices(&[0]);
        assert_eq!(g, path(3));
        let (g, _) = cycle(4).delete_vertices(&[0, 1]);
        assert_eq!(g, path(2));
    }

    #[test]
    fn add_and_delete_edge_examples() {
        assert_eq!(path(3).add_edge(0, 2).unwrap(), complete(3));
        let p = complete(3).delete_edge(0, 2).unwrap();
        assert_eq!(p, path(3));
        assert_eq!(path(3).add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(path(3).delete_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));
        assert_eq!(path(3).add_edge(1, 1), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn contract_edge_examples() {
        let (g, map) = path(3).contract_edge(0, 1).unwrap();
        assert_eq!(g, path(2));
        assert_eq!(map.merged(), Some(Merge { pair: (0, 1), into: 0 }));
        assert_eq!(map.get(1), Some(0));

        let (g, _) = cycle(4).contract_edge(0, 1).unwrap();
        assert_eq!(g, complete(3));

        assert_eq!(
            complete(3).contract_edge(0, 1).unwrap_err(),
            GraphError::CommonNeighbour(0, 1, 2)
        );
    }

    #[test]
    fn contraction_after_deletion_gives_path_through_merged_vertex() {
        // u=0 v=1 w=2 a=3 b=4, edges uv uw vw ua ub
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).unwrap();
        let (h, m1) = g.delete_vertices(&[1]);
        let (c, m2) = h.contract_edge(m1.get(0).unwrap(), m1.get(2).unwrap()).unwrap();
        let map = m1.compose(&m2);
        let s = map.merged().unwrap().into;
        assert_eq!(map.merged().unwrap().pair, (0, 2));
        assert_eq!(c.order(), 3);
        assert_eq!(c.size(), 2);
        assert_eq!(c.degree(s), 2);
        let a = map.get(3).unwrap();
        let b = map.get(4).unwrap();
        assert!(c.has_edge(a, s) && c.has_edge(s, b));
    }

    #[test]
    fn contraction_degree_accounting() {
        let g = petersen();
        let (h, map) = g.contract_edge(0, 1).unwrap();
        let s = map.get(0).unwrap();
        assert_eq!(h.degree(s), g.degree(0) + g.degree(1) - 2);
        assert_eq!(h.order(), g.order() - 1);
        assert_eq!(h.size(), g.size() - 1);
    }

    #[test]
    fn induced_even_examples() {
        let (g, _) = complete(5).induced_even_subgraph();
        assert_eq!(g, complete(5));
        let (g, map) = path(3).induced_even_subgraph();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
        assert_eq!(map.preimage(0), 1);
        let (g, _) = cycle(4).induced_even_subgraph();
        assert_eq!(g, cycle(4));
    }

    #[test]
    fn compose_tracks_preimages() {
        let g = cycle(6);
        let (h, m1) = g.delete_vertices(&[0]);
        let (k, m2) = h.delete_vertices(&[0]);
        let m = m1.compose(&m2);
        assert_eq!(k.order(), 4);
        assert_eq!((0..4).map(|x| m.preimage(x)).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
        assert_eq!(m.get(1), None);
        assert_eq!(m.get(5), Some(3));
    }
}
