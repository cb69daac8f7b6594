//! Bounded search for smaller homotopic graphs, and move enumeration.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::contract::Oracle;
use super::moves::{edge_certificate, Move};
use super::trace::{HomotopyTrace, TraceBuilder};
use crate::canon::{canonical_code, CANONICAL_LIMIT};
use crate::graph::Graph;
use crate::Label;

/// Limits for [`homotopy_reduce`].
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum number of moves in the returned trace.
    pub max_moves: usize,
    /// Expansions never grow the graph beyond this many vertices.
    pub max_vertices: usize,
    /// Expansion rounds attempted after greedy contraction gets stuck.
    pub expansion_rounds: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_moves: 10_000, max_vertices: 64, expansion_rounds: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The trace ends at `K_1`.
    HomotopicToPoint,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub trace: HomotopyTrace,
    pub verdict: Verdict,
}

/// Vertices that can be contracted, lowest degree first, ties by label.
pub fn contractible_vertices(g: &Graph) -> Vec<Label> {
    let mut oracle = Oracle::new(g);
    let mut out: Vec<(usize, Label)> = (0..g.n())
        .filter(|&i| g.n() > 1 && oracle.contractible(&g.neighbors(i).clone()))
        .map(|i| (g.degree(i), g.label(i)))
        .collect();
    out.sort_unstable();
    out.into_iter().map(|(_, l)| l).collect()
}

/// Removes dominated vertices (`N[v] ⊆ N[w]` for some neighbour `w`) one at
/// a time until none is left. Each unit sphere removed is a cone with apex
/// `w`, so every step is a contraction.
pub fn remove_dominated(g: &Graph) -> Graph {
    let n = g.n();
    let mut alive = g.all_vertices();
    let closed: Vec<crate::graph::VertexSet> = (0..n)
        .map(|v| {
            let mut c = g.neighbors(v).clone();
            c.insert(v);
            c
        })
        .collect();
    let mut changed = true;
    while changed && alive.count_ones(..) > 1 {
        changed = false;
        for v in 0..n {
            if !alive.contains(v) {
                continue;
            }
            let mut mine = closed[v].clone();
            mine.intersect_with(&alive);
            if g.neighbors(v).ones().any(|w| alive.contains(w) && mine.is_subset(&closed[w])) {
                alive.set(v, false);
                changed = true;
            }
        }
    }
    g.induced(&alive)
}

fn contract_greedily(t: &mut TraceBuilder, budget: &Budget) {
    while t.moves().len() < budget.max_moves {
        let Some(&v) = contractible_vertices(t.current()).first() else { break };
        t.push(Move::Contract { v }).expect("certified contraction");
    }
}

/// Connected vertex sets of size `1..=max` that induce contractible
/// subgraphs, by label, smallest first.
pub fn contractible_attachments(g: &Graph, max: usize) -> Vec<Vec<Label>> {
    let mut oracle = Oracle::new(g);
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier: Vec<Vec<usize>> = (0..g.n()).map(|i| vec![i]).collect();
    for size in 1..=max {
        let mut grown = Vec::new();
        for set in frontier {
            let bits = g.vertex_set(set.iter().copied());
            if oracle.contractible(&bits) {
                found.insert(set.clone());
            }
            if size == max {
                continue;
            }
            let mut border = crate::graph::VertexSet::with_capacity(g.n());
            for &v in &set {
                border.union_with(g.neighbors(v));
            }
            border.difference_with(&bits);
            for w in border.ones() {
                let mut next = set.clone();
                next.push(w);
                next.sort_unstable();
                grown.push(next);
            }
        }
        grown.sort_unstable();
        grown.dedup();
        frontier = grown;
    }
    let mut out: Vec<Vec<Label>> =
        found.into_iter().map(|s| s.into_iter().map(|i| g.label(i)).collect::<Vec<_>>()).collect();
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Greedy contraction, lowest-degree legal vertex first. When it gets stuck
/// and the budget allows expansion rounds, tries attaching a vertex over
/// each contractible set of at most four vertices, followed by greedy
/// contraction, and keeps the first attempt that ends smaller than before.
/// Graphs already seen (by canonical code) are skipped.
pub fn homotopy_reduce(g: &Graph, budget: Budget) -> Reduction {
    let mut t = TraceBuilder::new(g.clone());
    contract_greedily(&mut t, &budget);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for _ in 0..budget.expansion_rounds {
        let cur = t.current().clone();
        if cur.n() <= 1 || cur.n() >= budget.max_vertices || cur.n() > CANONICAL_LIMIT {
            break;
        }
        if let Ok(code) = canonical_code(&cur) {
            seen.insert(code);
        }
        let mut improved = false;
        for over in contractible_attachments(&cur, 4) {
            let mut attempt = t.clone();
            let v = cur.fresh_label();
            if attempt.push(Move::Expand { over, v }).is_err() {
                continue;
            }
            contract_greedily(&mut attempt, &budget);
            let after = attempt.current();
            if after.n() < cur.n() && attempt.moves().len() <= budget.max_moves {
                let fresh = canonical_code(after).map(|c| seen.insert(c)).unwrap_or(true);
                if fresh {
                    t = attempt;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            break;
        }
    }
    let trace = t.finish();
    let verdict = if trace.end.n() == 1 { Verdict::HomotopicToPoint } else { Verdict::Unknown };
    Reduction { graph: trace.end.clone(), trace, verdict }
}

/// Every `Contract`, `EdgeRemove` and `EdgeRefine` move that is legal on
/// `g`, and `Expand` moves over connected contractible sets of at most
/// `max_attach` vertices.
pub fn legal_moves(g: &Graph, max_attach: usize) -> Vec<Move> {
    let mut out: Vec<Move> = contractible_vertices(g).into_iter().map(|v| Move::Contract { v }).collect();
    out.sort_by_key(|m| match m {
        Move::Contract { v } => *v,
        _ => 0,
    });
    let fresh = g.fresh_label();
    for (i, j) in g.edges() {
        let (a, b) = (g.label(i), g.label(j));
        out.push(Move::EdgeRefine { a, b, e: fresh });
        if edge_certificate(g, a, b).is_ok() {
            out.push(Move::EdgeRemove { a, b });
        }
    }
    for over in contractible_attachments(g, max_attach) {
        out.push(Move::Expand { over, v: fresh });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trees_reduce_to_a_point() {
        let r = homotopy_reduce(&catalog::star(5), Budget::default());
        assert_eq!(r.verdict, Verdict::HomotopicToPoint);
        r.trace.replay().unwrap();
        let r = homotopy_reduce(&catalog::path(7), Budget::default());
        assert_eq!(r.graph.n(), 1);
    }

    #[test]
    fn cycles_stay() {
        let c7 = catalog::cycle(7);
        let r = homotopy_reduce(&c7, Budget::default());
        assert_eq!(r.verdict, Verdict::Unknown);
        assert_eq!(r.graph, c7);
        assert!(r.trace.is_empty());
        // expansions shorten the cycle but never kill it
        let r = homotopy_reduce(&c7, Budget { expansion_rounds: 5, ..Budget::default() });
        assert_eq!(r.verdict, Verdict::Unknown);
        assert!(r.graph.n() < 7);
        assert_eq!(r.trace.replay().unwrap().euler, Some(0));
        assert_eq!(crate::homotopy::sphere_dimension(&r.graph), Some(1));
    }

    #[test]
    fn dominated_vertices() {
        assert_eq!(remove_dominated(&catalog::star(6)).n(), 1);
        assert_eq!(remove_dominated(&Graph::complete(5)).n(), 1);
        let c5 = catalog::cycle(5);
        assert_eq!(remove_dominated(&c5), c5);
        let w = remove_dominated(&catalog::wheel(6));
        assert_eq!(w.n(), 1);
    }

    #[test]
    fn legal_moves_on_small_graphs() {
        let c6 = catalog::cycle(6);
        let moves = legal_moves(&c6, 3);
        assert!(!moves.iter().any(|m| matches!(m, Move::Contract { .. })));
        assert!(moves.iter().any(|m| matches!(m, Move::Expand { .. })));
        let k3 = Graph::complete(3);
        let moves = legal_moves(&k3, 3);
        assert_eq!(moves.iter().filter(|m| matches!(m, Move::Contract { .. })).count(), 3);
        assert_eq!(moves.iter().filter(|m| matches!(m, Move::EdgeRefine { .. })).count(), 3);
    }
}
