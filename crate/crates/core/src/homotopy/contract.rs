//! Exact contractibility and sphere recognition.
//!
//! A graph is contractible if it is `K_1`, or if some vertex `v` has a
//! contractible unit sphere and `G - v` is contractible. A graph is a
//! `d`-sphere if it is empty (`d = -1`), or if every unit sphere is a
//! `(d-1)`-sphere and removing some vertex leaves a contractible graph.
//!
//! Every graph examined along the way is an induced subgraph of one ambient
//! graph, so results are memoized by vertex subset.

use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};
use crate::Label;

/// Above this many cliques the Euler characteristic filter is skipped.
const EULER_FILTER_LIMIT: usize = 4_000;

/// Memoized contractibility and sphere queries on induced subgraphs of one
/// ambient graph.
pub struct Oracle<'a> {
    graph: &'a Graph,
    contractible: HashMap<VertexSet, bool>,
    sphere: HashMap<VertexSet, Option<i32>>,
}

impl<'a> Oracle<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Oracle { graph, contractible: HashMap::new(), sphere: HashMap::new() }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Vertex subset from labels; unknown labels are ignored.
    pub fn subset(&self, labels: &[Label]) -> VertexSet {
        self.graph.vertex_set(labels.iter().filter_map(|&l| self.graph.index_of(l)))
    }

    fn sphere_within(&self, v: usize, set: &VertexSet) -> VertexSet {
        let mut s = self.graph.neighbors(v).clone();
        s.intersect_with(set);
        s
    }

    fn is_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.ones().next() else { return true };
        let mut seen = VertexSet::with_capacity(self.graph.n());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let mut next = self.graph.neighbors(v).clone();
            next.intersect_with(set);
            next.difference_with(&seen);
            for w in next.ones() {
                seen.insert(w);
                stack.push(w);
            }
        }
        seen.count_ones(..) == set.count_ones(..)
    }

    /// `Some(χ)` when the clique count is small enough to enumerate.
    fn euler(&self, set: &VertexSet) -> Option<i64> {
        self.graph.induced(set).clique_f_vector(EULER_FILTER_LIMIT).ok().map(|f| f.euler_characteristic())
    }

    /// Whether the subgraph induced on `set` is contractible.
    pub fn contractible(&mut self, set: &VertexSet) -> bool {
        let size = set.count_ones(..);
        if size == 0 {
            return false;
        }
        if size <= 2 {
            // K_1, K_2 yes; two isolated points no
            return size == 1 || self.is_connected(set);
        }
        if let Some(&known) = self.contractible.get(set) {
            return known;
        }
        let result = self.search(set, size);
        self.contractible.insert(set.clone(), result);
        result
    }

    fn search(&mut self, set: &VertexSet, size: usize) -> bool {
        // a cone is contractible
        if set.ones().any(|v| self.graph.neighbors(v).intersection(set).count() + 1 == size) {
            return true;
        }
        if !self.is_connected(set) {
            return false;
        }
        if self.euler(set).is_some_and(|chi| chi != 1) {
            return false;
        }
        // dominated vertices first: their unit spheres are cones
        let mut order: Vec<(bool, usize, usize)> = set
            .ones()
            .map(|v| {
                let sv = self.sphere_within(v, set);
                let dominated = sv.ones().any(|w| {
                    let mut closed = self.graph.neighbors(w).clone();
                    closed.insert(w);
                    sv.is_subset(&closed)
                });
                (!dominated, sv.count_ones(..), v)
            })
            .collect();
        order.sort_unstable();
        for (_, _, v) in order {
            let sv = self.sphere_within(v, set);
            if !self.contractible(&sv) {
                continue;
            }
            let mut rest = set.clone();
            rest.set(v, false);
            if self.contractible(&rest) {
                return true;
            }
        }
        false
    }

    /// Dimension `d` if the subgraph induced on `set` is a `d`-sphere.
    pub fn sphere_dim(&mut self, set: &VertexSet) -> Option<i32> {
        let size = set.count_ones(..);
        if size == 0 {
            return Some(-1);
        }
        if let Some(&known) = self.sphere.get(set) {
            return known;
        }
        let result = self.sphere_search(set);
        self.sphere.insert(set.clone(), result);
        result
    }

    fn sphere_search(&mut self, set: &VertexSet) -> Option<i32> {
        let mut dim = None;
        for v in set.ones() {
            let sv = self.sphere_within(v, set);
            let d = self.sphere_dim(&sv)?;
            match dim {
                None => dim = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        let d = dim? + 1;
        if set.count_ones(..) == 1 {
            // K_1 minus its vertex is empty, which is not contractible
            return None;
        }
        let punctured = set.ones().any(|v| {
            let mut rest = set.clone();
            rest.set(v, false);
            self.contractible(&rest)
        });
        punctured.then_some(d)
    }
}

pub fn is_contractible(g: &Graph) -> bool {
    Oracle::new(g).contractible(&g.all_vertices())
}

/// `Some(d)` if `g` is a `d`-sphere.
pub fn sphere_dimension(g: &Graph) -> Option<i32> {
    Oracle::new(g).sphere_dim(&g.all_vertices())
}

/// Whether the subgraph induced on `labels` is contractible.
pub fn is_contractible_subgraph(g: &Graph, labels: &[Label]) -> bool {
    let mut o = Oracle::new(g);
    let set = o.subset(labels);
    o.contractible(&set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn complete_graphs_and_trees() {
        for n in 1..8 {
            assert!(is_contractible(&Graph::complete(n)));
        }
        assert!(is_contractible(&catalog::path(6)));
        assert!(is_contractible(&catalog::star(5)));
        assert!(is_contractible(&catalog::wheel(5)));
        assert!(!is_contractible(&Graph::empty()));
        assert!(!is_contractible(&Graph::new(2)));
    }

    #[test]
    fn cycles_are_not_contractible() {
        for n in 4..10 {
            assert!(!is_contractible(&catalog::cycle(n)));
        }
    }

    #[test]
    fn spheres() {
        assert_eq!(sphere_dimension(&Graph::empty()), Some(-1));
        assert_eq!(sphere_dimension(&Graph::new(2)), Some(0));
        assert_eq!(sphere_dimension(&Graph::new(1)), None);
        assert_eq!(sphere_dimension(&Graph::new(3)), None);
        assert_eq!(sphere_dimension(&catalog::cycle(5)), Some(1));
        assert_eq!(sphere_dimension(&catalog::octahedron()), Some(2));
        assert_eq!(sphere_dimension(&catalog::icosahedron()), Some(2));
        assert_eq!(sphere_dimension(&Graph::complete(3)), None);
        assert_eq!(sphere_dimension(&catalog::cycle(3)), None);
    }
}
