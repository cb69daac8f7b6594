//! Exact maximum independent sets as maximum cliques of the complement,
//! by branch and bound with a greedy colouring bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Label;

/// Default vertex cap for the exact search.
pub const INDEPENDENCE_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Independence {
    pub size: usize,
    /// Labels of one maximum independent set, ascending.
    pub witness: Vec<Label>,
}

pub fn independence_number(a: &Graph) -> Result<Independence> {
    independence_number_capped(a, INDEPENDENCE_LIMIT)
}

pub fn independence_number_capped(a: &Graph, limit: usize) -> Result<Independence> {
    if a.n() > limit {
        return Err(Error::size(format!("graph with {} vertices", a.n()), limit));
    }
    let comp = a.complement();
    let best = max_clique(&comp);
    let mut witness: Vec<Label> = best.iter().map(|&i| a.label(i)).collect();
    witness.sort_unstable();
    Ok(Independence { size: best.len(), witness })
}

/// Whether no two of the labelled vertices are adjacent.
pub fn is_independent(a: &Graph, labels: &[Label]) -> Result<bool> {
    let idx: Vec<usize> = labels.iter().map(|&l| a.require(l)).collect::<Result<_>>()?;
    Ok(idx.iter().enumerate().all(|(k, &i)| idx[k + 1..].iter().all(|&j| i != j && !a.has_edge(i, j))))
}

/// A maximum clique as vertex indices. Vertices are ordered by degree
/// (highest first, ties by index) before branching.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut search = Search { g, best: Vec::new(), current: Vec::new() };
    search.expand(order);
    search.best
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy colouring of `cand` in order; returns vertices sorted by colour
    /// with their colour numbers (1-based), ascending.
    fn colour(&self, cand: &[usize]) -> Vec<(usize, usize)> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            match classes.iter_mut().find(|c| c.iter().all(|&u| !self.g.has_edge(u, v))) {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes.into_iter().enumerate().flat_map(|(k, c)| c.into_iter().map(move |v| (v, k + 1))).collect()
    }

    fn expand(&mut self, cand: Vec<usize>) {
        let coloured = self.colour(&cand);
        let mut remaining: VertexSet = self.g.vertex_set(cand.iter().copied());
        for &(v, colour) in coloured.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<usize> = cand.iter().copied().filter(|&u| remaining.contains(u) && self.g.has_edge(u, v)).collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            remaining.set(v, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn brute_force(a: &Graph) -> usize {
        let n = a.n();
        (0u32..1 << n)
            .filter(|&m| a.edges().all(|(i, j)| m >> i & 1 == 0 || m >> j & 1 == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_graphs_match_brute_force() {
        for g in [catalog::cycle(5), catalog::cycle(8), catalog::wheel(6), catalog::icosahedron(), catalog::path(9)] {
            let r = independence_number(&g).unwrap();
            assert_eq!(r.size, brute_force(&g));
            assert!(is_independent(&g, &r.witness).unwrap());
        }
    }

    #[test]
    fn complete_and_pentagon_square() {
        assert_eq!(independence_number(&Graph::complete(6)).unwrap().size, 1);
        let c5 = catalog::cycle(5);
        assert_eq!(independence_number(&c5.strong_product(&c5)).unwrap().size, 5);
    }

    #[test]
    fn size_limit() {
        assert!(independence_number_capped(&catalog::cycle(10), 9).is_err());
    }
}
