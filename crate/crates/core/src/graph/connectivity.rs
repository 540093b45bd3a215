use super::{edge, Edge, Graph};

impl Graph {
    /// Connected components, each sorted, listed by ascending smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex (indices follow [`Graph::components`]).
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let comps = self.components();
        let mut label = vec![0; self.order()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                label[v] = i;
            }
        }
        (comps.len(), label)
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.component_count() == 1
    }

    /// Bridges in lexicographic order, found with one iterative low-link pass.
    pub fn bridges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut timer = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
                if let Some(&w) = self.neighbors(v).get(*next) {
                    *next += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push(edge(parent, v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && self.bridges().binary_search(&edge(u, v)).is_ok()
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.size() + self.component_count() == self.order()
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn connectivity_examples() {
        assert!(cycle(4).is_connected());
        assert_eq!(cycle(4).components().len(), 1);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        let (k4_minus, _) = complete(4).delete_vertices(&[2]);
        assert!(k4_minus.is_connected());
        assert_eq!(Graph::empty(0).component_count(), 0);
        assert!(!Graph::empty(0).is_connected());
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(path(3).bridges(), vec![(0, 1), (1, 2)]);
        assert!(cycle(4).bridges().is_empty());
        let bowtie_bar = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        assert_eq!(bowtie_bar.bridges(), vec![(2, 3)]);
    }

    #[test]
    fn forest_examples() {
        assert!(star(4).is_forest());
        assert!(path(6).is_forest());
        assert!(!cycle(4).is_forest());
        assert!(Graph::empty(0).is_forest());
        assert!(Graph::empty(3).is_forest());
    }
}
