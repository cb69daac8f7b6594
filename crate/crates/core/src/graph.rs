//! Finite simple graphs with stable vertex labels.
//!
//! Vertices are stored densely as indices `0..n` with one adjacency bitset
//! per vertex. Every vertex also carries a [`Label`] that survives vertex
//! removal and insertion, which is what homotopy moves refer to.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::complex::FVector;
use crate::error::{Error, Result};
use crate::Label;

pub type VertexSet = FixedBitSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Label>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The empty graph, also known as the (-1)-sphere.
    pub fn empty() -> Self {
        Graph { labels: Vec::new(), adj: Vec::new() }
    }

    /// `n` isolated vertices labelled `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            labels: (0..n as Label).collect(),
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at {a}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// A graph on the given labels; edges are given by label.
    pub fn from_labeled_edges(
        labels: Vec<Label>,
        edges: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<Self> {
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate vertex label".into()));
        }
        let n = labels.len();
        let mut g = Graph { labels, adj: vec![VertexSet::with_capacity(n); n] };
        for (a, b) in edges {
            let i = g.index_of(a).ok_or(Error::UnknownVertex(a))?;
            let j = g.index_of(b).ok_or(Error::UnknownVertex(b))?;
            if i == j {
                return Err(Error::InvalidInput(format!("self-loop at {a}")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Label {
        self.labels[i]
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub(crate) fn require(&self, label: Label) -> Result<usize> {
        self.index_of(label).ok_or(Error::UnknownVertex(label))
    }

    /// A label not yet in use.
    pub fn fresh_label(&self) -> Label {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn neighbors(&self, i: usize) -> &VertexSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert_ne!(i, j);
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i].set(j, false);
        self.adj[j].set(i, false);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, a)| a.ones().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn all_vertices(&self) -> VertexSet {
        let mut s = VertexSet::with_capacity(self.n());
        s.insert_range(..);
        s
    }

    pub fn vertex_set(&self, indices: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = VertexSet::with_capacity(self.n());
        s.extend(indices);
        s
    }

    /// Subgraph induced on `keep`, preserving labels and relative order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let idx: Vec<usize> = keep.ones().collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (new, &old) in idx.iter().enumerate() {
            pos[old] = new;
        }
        let m = idx.len();
        let mut adj = vec![VertexSet::with_capacity(m); m];
        for (new, &old) in idx.iter().enumerate() {
            for j in self.adj[old].ones() {
                if pos[j] != usize::MAX {
                    adj[new].insert(pos[j]);
                }
            }
        }
        Graph { labels: idx.iter().map(|&i| self.labels[i]).collect(), adj }
    }

    /// Subgraph induced on the given labels.
    pub fn induced_labels(&self, labels: &[Label]) -> Result<Graph> {
        let mut keep = VertexSet::with_capacity(self.n());
        for &l in labels {
            keep.insert(self.require(l)?);
        }
        Ok(self.induced(&keep))
    }

    /// The unit sphere `S(v)`: the subgraph induced by the neighbours of `v`.
    pub fn unit_sphere(&self, v: Label) -> Result<Graph> {
        let i = self.require(v)?;
        Ok(self.induced(&self.adj[i]))
    }

    /// The unit ball `B(v)`.
    pub fn unit_ball(&self, v: Label) -> Result<Graph> {
        let i = self.require(v)?;
        let mut keep = self.adj[i].clone();
        keep.insert(i);
        Ok(self.induced(&keep))
    }

    pub fn remove_vertex(&self, v: Label) -> Result<Graph> {
        let i = self.require(v)?;
        let mut keep = self.all_vertices();
        keep.set(i, false);
        Ok(self.induced(&keep))
    }

    /// Adds a vertex labelled `label` joined to the vertices labelled `attach`.
    pub fn add_vertex(&self, label: Label, attach: &[Label]) -> Result<Graph> {
        if self.index_of(label).is_some() {
            return Err(Error::InvalidInput(format!("label {label} already in use")));
        }
        let mut targets = Vec::with_capacity(attach.len());
        for &a in attach {
            targets.push(self.require(a)?);
        }
        let n = self.n() + 1;
        let mut adj: Vec<VertexSet> = self
            .adj
            .iter()
            .map(|a| {
                let mut a = a.clone();
                a.grow(n);
                a
            })
            .collect();
        adj.push(VertexSet::with_capacity(n));
        let mut labels = self.labels.clone();
        labels.push(label);
        let mut g = Graph { labels, adj };
        for t in targets {
            g.add_edge(n - 1, t);
        }
        Ok(g)
    }

    /// Renames one vertex label.
    pub fn relabel_vertex(&mut self, from: Label, to: Label) -> Result<()> {
        if from == to {
            return Ok(());
        }
        if self.index_of(to).is_some() {
            return Err(Error::InvalidInput(format!("label {to} already in use")));
        }
        let i = self.require(from)?;
        self.labels[i] = to;
        Ok(())
    }

    /// Same graph with labels `0..n` in index order.
    pub fn with_dense_labels(&self) -> Graph {
        Graph { labels: (0..self.n() as Label).collect(), adj: self.adj.clone() }
    }

    pub fn with_labels(&self, labels: Vec<Label>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::InvalidInput("label count mismatch".into()));
        }
        Graph::from_labeled_edges(labels.clone(), std::iter::empty())?;
        Ok(Graph { labels, adj: self.adj.clone() })
    }

    /// Vertex `i` of the result is vertex `perm_inv[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for (i, j) in self.edges() {
            g.add_edge(perm[i], perm[j]);
        }
        let mut labels = vec![0; n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i];
        }
        g.labels = labels;
        g
    }

    /// Equality of label sets and of edges between labels, ignoring the
    /// internal vertex order.
    pub fn same_labeled(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut map = Vec::with_capacity(self.n());
        for &l in &self.labels {
            match other.index_of(l) {
                Some(j) => map.push(j),
                None => return false,
            }
        }
        self.edges().all(|(i, j)| other.has_edge(map[i], map[j]))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|a| a.count_ones(..) + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components as vertex sets.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::with_capacity(n);
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Calls `f` on every clique (as sorted index lists), smallest vertex
    /// first. Enumeration stops as soon as `f` returns `false`.
    pub fn for_each_clique(&self, mut f: impl FnMut(&[usize]) -> bool) {
        fn rec(g: &Graph, clique: &mut Vec<usize>, cand: VertexSet, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            for v in cand.ones() {
                clique.push(v);
                if !f(clique) {
                    return false;
                }
                let mut next = cand.clone();
                next.intersect_with(&g.adj[v]);
                next.set_range(..v + 1, false);
                if next.count_ones(..) > 0 && !rec(g, clique, next, f) {
                    return false;
                }
                clique.pop();
            }
            true
        }
        let mut clique = Vec::new();
        rec(self, &mut clique, self.all_vertices(), &mut f);
    }

    /// Clique counts by size, failing once more than `limit` cliques exist.
    pub fn clique_f_vector(&self, limit: usize) -> Result<FVector> {
        let mut counts: Vec<usize> = Vec::new();
        let mut total = 0usize;
        self.for_each_clique(|c| {
            if counts.len() < c.len() {
                counts.resize(c.len(), 0);
            }
            counts[c.len() - 1] += 1;
            total += 1;
            total <= limit
        });
        if total > limit {
            return Err(Error::size("clique enumeration", limit));
        }
        Ok(FVector::from_counts(counts))
    }

    /// All cliques, as sorted index lists.
    pub fn cliques(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        self.for_each_clique(|c| {
            out.push(c.to_vec());
            out.len() <= limit
        });
        if out.len() > limit {
            return Err(Error::size("clique enumeration", limit));
        }
        Ok(out)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph { labels: self.labels.clone(), adj: vec![VertexSet::with_capacity(n); n] };
        for i in 0..n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `b` follow those of `self`, labels are dense.
    pub fn disjoint_union(&self, b: &Graph) -> Graph {
        let (n, m) = (self.n(), b.n());
        let mut g = Graph::new(n + m);
        for (i, j) in self.edges() {
            g.add_edge(i, j);
        }
        for (i, j) in b.edges() {
            g.add_edge(n + i, n + j);
        }
        g
    }

    /// Zykov join: disjoint union plus every edge between the two parts.
    pub fn zykov_join(&self, b: &Graph) -> Graph {
        let n = self.n();
        let mut g = self.disjoint_union(b);
        for i in 0..n {
            for j in 0..b.n() {
                g.add_edge(i, n + j);
            }
        }
        g
    }

    /// Strong product. Vertex `(a, b)` gets index and label `a * |W| + b`.
    pub fn strong_product(&self, b: &Graph) -> Graph {
        let (n, m) = (self.n(), b.n());
        let mut g = Graph::new(n * m);
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    if a2 != a1 && !self.has_edge(a1, a2) {
                        continue;
                    }
                    for b2 in 0..m {
                        if b2 != b1 && !b.has_edge(b1, b2) {
                            continue;
                        }
                        let (u, v) = (a1 * m + b1, a2 * m + b2);
                        if u < v {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        g
    }

    /// Degree sequence, sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|i| self.degree(i)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edge list by labels, each pair ascending, sorted.
    pub fn labeled_edges(&self) -> Vec<(Label, Label)> {
        let mut e: Vec<(Label, Label)> = self
            .edges()
            .map(|(i, j)| {
                let (a, b) = (self.labels[i], self.labels[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.labeled_edges())
    }
}
