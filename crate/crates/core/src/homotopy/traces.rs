//! Constructed deformations: connection graph to Barycentric graph, a graph
//! to its Barycentric refinement, and extensions of strong products.

use std::collections::BTreeMap;

use super::contract::{is_contractible_subgraph, Oracle};
use super::moves::{edge_certificate, Move};
use super::trace::{HomotopyTrace, TraceBuilder};
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::functor::psi;
use crate::graph::Graph;
use crate::Label;

/// Clique budget for [`barycentric_trace`].
pub const BARYCENTRIC_CLIQUE_LIMIT: usize = 5_000;

/// Deforms `ψ(G)` into `φ(G)`. For every pair `y < z` of intersecting,
/// non-nested sets (in canonical label order) the edge `yz` is refined by a
/// vertex `e` over `{y, z} ∪ (S(y) ∩ S(z))`, and `e` is then contracted.
///
/// Fails with [`Error::IntersectionNotContractible`] when `S(y) ∩ S(z)` is
/// not contractible, which happens for complexes that are not Barycentric
/// refinements.
pub fn psi_to_phi_trace(g: &Complex) -> Result<HomotopyTrace> {
    let sets = g.sets();
    let mut t = TraceBuilder::new(psi(g).graph);
    for y in 0..sets.len() {
        for z in y + 1..sets.len() {
            if !sets[y].intersects(&sets[z]) || sets[y].is_nested(&sets[z]) {
                continue;
            }
            let (a, b) = (y as Label, z as Label);
            let cur = t.current();
            let (i, j) = (cur.require(a)?, cur.require(b)?);
            let common = cur.neighbors(i).intersection(cur.neighbors(j)).collect::<Vec<_>>();
            let mut oracle = Oracle::new(cur);
            if !oracle.contractible(&cur.vertex_set(common)) {
                return Err(Error::IntersectionNotContractible { y: sets[y].clone(), z: sets[z].clone() });
            }
            let e = cur.fresh_label();
            t.push(Move::EdgeRefine { a, b, e })?;
            t.push(Move::Contract { v: e })?;
        }
    }
    Ok(t.finish())
}

/// A trace from `A` to its Barycentric refinement graph, together with the
/// clique of `A` behind every vertex of the end graph.
#[derive(Clone, Debug)]
pub struct BarycentricTrace {
    pub trace: HomotopyTrace,
    pub cliques: BTreeMap<Label, Simplex>,
}

/// Deforms `A` into the graph whose vertices are the cliques of `A`, joined
/// when nested.
///
/// First every clique of dimension at least one gets a vertex, largest
/// first, attached over its own vertices and the vertices of larger cliques
/// containing it (a cone, hence contractible). Then the original edges are
/// removed one at a time, each with whichever certificate applies.
pub fn barycentric_trace(a: &Graph) -> Result<BarycentricTrace> {
    let mut cliques = a.cliques(BARYCENTRIC_CLIQUE_LIMIT)?;
    cliques.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    let mut t = TraceBuilder::new(a.clone());
    let mut next = a.fresh_label();
    let mut added: Vec<(Vec<usize>, Label)> = Vec::new();
    let mut names = BTreeMap::new();
    for i in 0..a.n() {
        names.insert(a.label(i), Simplex::point(a.label(i)));
    }
    for c in cliques.iter().filter(|c| c.len() > 1) {
        let mut over: Vec<Label> = c.iter().map(|&i| a.label(i)).collect();
        over.extend(added.iter().filter(|(d, _)| d.len() > c.len() && c.iter().all(|x| d.contains(x))).map(|(_, l)| *l));
        t.push(Move::Expand { over, v: next })?;
        names.insert(next, Simplex::new(c.iter().map(|&i| a.label(i)))?);
        added.push((c.clone(), next));
        next += 1;
    }
    let mut pending: Vec<(Label, Label)> = a.edges().map(|(i, j)| (a.label(i), a.label(j))).collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut k = 0;
        while k < pending.len() {
            let (x, y) = pending[k];
            if edge_certificate(t.current(), x, y).is_ok() {
                t.push(Move::EdgeRemove { a: x, b: y })?;
                pending.remove(k);
            } else {
                k += 1;
            }
        }
        if pending.len() == before {
            return Err(Error::Stuck(format!("no certificate removes the edges {pending:?}")));
        }
    }
    Ok(BarycentricTrace { trace: t.finish(), cliques: names })
}

/// Deforms `A·B` into `A'·B`, where `A'` is `A` with a new vertex attached
/// over the vertices labelled `attach`. Product vertices are indexed
/// row-major, so `(x, w_k)` is appended as `n·|B| + k`, attached over
///
/// `U_k = {(c, w) : c ∈ C, w = w_k or w ~ w_k} ∪ {(x, w_j) : j < k, w_j ~ w_k}`.
///
/// Fails with [`Error::CertificateFailure`] at the first non-contractible
/// `U_k`.
pub fn product_extension_trace(a: &Graph, attach: &[Label], b: &Graph) -> Result<HomotopyTrace> {
    if a.labels().iter().enumerate().any(|(i, &l)| l as usize != i) {
        return Err(Error::InvalidInput("product extension needs labels 0..n".into()));
    }
    let (n, m) = (a.n(), b.n());
    let c: Vec<usize> = attach.iter().map(|&l| a.require(l)).collect::<Result<_>>()?;
    if !is_contractible_subgraph(a, attach) {
        return Err(Error::IllegalMove(format!("attaching set {attach:?} is not contractible")));
    }
    let mut t = TraceBuilder::new(a.strong_product(b));
    for k in 0..m {
        let near = |w: usize| w == k || b.has_edge(w, k);
        let mut u: Vec<Label> = Vec::new();
        for &ci in &c {
            u.extend((0..m).filter(|&w| near(w)).map(|w| (ci * m + w) as Label));
        }
        u.extend((0..k).filter(|&j| b.has_edge(j, k)).map(|j| (n * m + j) as Label));
        let v = (n * m + k) as Label;
        if !is_contractible_subgraph(t.current(), &u) {
            return Err(Error::CertificateFailure(k));
        }
        t.push(Move::Expand { over: u, v })?;
    }
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::catalog;
    use crate::functor::phi;

    #[test]
    fn psi_to_phi_on_refined_triangle_boundary() {
        let g = catalog::complex("c3_boundary").unwrap().barycentric_refine().unwrap();
        let trace = psi_to_phi_trace(&g).unwrap();
        let r = trace.replay().unwrap();
        assert_eq!(r.euler, Some(0));
        assert!(trace.end.same_labeled(&phi(&g).graph));
        assert!(is_isomorphic(&trace.end, &catalog::cycle(12)).unwrap());
    }

    #[test]
    fn psi_to_phi_rejects_unrefined_triangle_boundary() {
        let g = catalog::complex("c3_boundary").unwrap();
        assert!(matches!(psi_to_phi_trace(&g), Err(Error::IntersectionNotContractible { .. })));
    }

    #[test]
    fn point_needs_no_moves() {
        let g = catalog::complex("point").unwrap().barycentric_refine().unwrap();
        assert!(psi_to_phi_trace(&g).unwrap().is_empty());
        assert!(barycentric_trace(&Graph::new(1)).unwrap().trace.is_empty());
    }

    #[test]
    fn barycentric_trace_of_triangle_is_wheel() {
        let bt = barycentric_trace(&Graph::complete(3)).unwrap();
        bt.trace.replay().unwrap();
        assert!(is_isomorphic(&bt.trace.end, &catalog::wheel(6)).unwrap());
    }

    #[test]
    fn barycentric_trace_of_pentagon() {
        let bt = barycentric_trace(&catalog::cycle(5)).unwrap();
        assert_eq!(bt.trace.replay().unwrap().euler, Some(0));
        assert!(is_isomorphic(&bt.trace.end, &catalog::cycle(10)).unwrap());
    }

    #[test]
    fn product_extension_small_cases() {
        let c5 = catalog::cycle(5);
        let t = product_extension_trace(&c5, &[0, 1], &Graph::complete(2)).unwrap();
        assert_eq!(t.len(), 2);
        t.replay().unwrap();
        let expected = c5.add_vertex(5, &[0, 1]).unwrap().strong_product(&Graph::complete(2));
        assert!(t.end.same_labeled(&expected));

        let t = product_extension_trace(&c5, &[0, 1], &Graph::new(1)).unwrap();
        assert_eq!(t.len(), 1);

        let p2 = catalog::path(2);
        let t = product_extension_trace(&p2, &[1], &catalog::cycle(4)).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.replay().unwrap().euler, Some(0));
    }
}
