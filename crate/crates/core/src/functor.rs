//! The two graph functors on complexes and their products.
//!
//! `phi(G)` joins nested sets, `psi(G)` joins intersecting sets. Both use the
//! canonical index of a set as its vertex label, so vertex `i` of either graph
//! is `G.sets()[i]`.

use crate::complex::{Complex, Simplex};
use crate::graph::Graph;
use crate::Label;

/// Vertex index → originating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    sets: Vec<Simplex>,
}

impl Labeling {
    pub fn new(sets: Vec<Simplex>) -> Self {
        Labeling { sets }
    }

    pub fn set(&self, vertex: usize) -> &Simplex {
        &self.sets[vertex]
    }

    pub fn sets(&self) -> &[Simplex] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Vertices whose set is zero-dimensional.
    pub fn points(&self) -> Vec<usize> {
        (0..self.sets.len()).filter(|&i| self.sets[i].len() == 1).collect()
    }
}

/// A graph built from a complex, with the set behind every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexGraph {
    pub graph: Graph,
    pub labeling: Labeling,
}

fn relation_graph(g: &Complex, related: impl Fn(&Simplex, &Simplex) -> bool) -> ComplexGraph {
    let sets = g.sets();
    let mut graph = Graph::new(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if related(&sets[i], &sets[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    ComplexGraph { graph, labeling: Labeling::new(sets.to_vec()) }
}

/// Barycentric refinement graph: sets joined when one contains the other.
pub fn phi(g: &Complex) -> ComplexGraph {
    relation_graph(g, Simplex::is_nested)
}

/// Connection graph: sets joined when they intersect.
pub fn psi(g: &Complex) -> ComplexGraph {
    relation_graph(g, Simplex::intersects)
}

/// The connection graph of `G × H`: `(a,b) ~ (c,d)` iff `a ∩ c ≠ ∅` and
/// `b ∩ d ≠ ∅`. Vertex `(i, j)` has index and label `i * |H| + j`.
pub fn psi_product(g: &Complex, h: &Complex) -> Graph {
    product_graph(g, h, |a, c, b, d| a.intersects(c) && b.intersects(d))
}

/// The Barycentric product: `(a,b) ~ (c,d)` iff `a ⊆ c, b ⊆ d` or
/// `c ⊆ a, d ⊆ b`. Row-major vertex order as in [`psi_product`].
pub fn phi_product(g: &Complex, h: &Complex) -> Graph {
    product_graph(g, h, |a, c, b, d| (a.is_subset(c) && b.is_subset(d)) || (c.is_subset(a) && d.is_subset(b)))
}

fn product_graph(
    g: &Complex,
    h: &Complex,
    related: impl Fn(&Simplex, &Simplex, &Simplex, &Simplex) -> bool,
) -> Graph {
    let (gs, hs) = (g.sets(), h.sets());
    let m = hs.len();
    let mut out = Graph::new(gs.len() * m);
    for (u, (i, j)) in g.product_cells(h).into_iter().enumerate() {
        for (v, (k, l)) in g.product_cells(h).into_iter().enumerate().skip(u + 1) {
            if related(&gs[i], &gs[k], &hs[j], &hs[l]) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// Product of two complexes as a cell list, with the label of each cell in
/// the product graphs.
pub fn product_labels(g: &Complex, h: &Complex) -> Vec<((Simplex, Simplex), Label)> {
    g.product_cells(h)
        .into_iter()
        .enumerate()
        .map(|(k, (i, j))| ((g.sets()[i].clone(), h.sets()[j].clone()), k as Label))
        .collect()
}
