//! Canonical labeling and automorphism groups of small graphs.
//!
//! Search tree of ordered partitions: each node refines its partition to an
//! equitable one, then branches by individualizing each vertex of the first
//! smallest non-singleton cell. Leaves are discrete partitions; the canonical
//! form is the leaf whose permuted adjacency matrix is lexicographically
//! largest. Automorphisms found by comparing leaves prune the tree, and the
//! group order is the product of orbit sizes along the first path.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Hard cap for canonical labeling.
pub const CANONICAL_LIMIT: usize = 64;
/// Default cap for automorphism group computations.
pub const AUTOMORPHISM_LIMIT: usize = 40;

type Cells = Vec<Vec<usize>>;

/// A permutation group on `0..degree`, given by generators and its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub order: BigUint,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, generators: Vec::new(), order: BigUint::one() }
    }

    /// Group given by a complete element list.
    pub fn from_elements(degree: usize, mut elements: Vec<Vec<usize>>) -> Self {
        elements.sort();
        elements.dedup();
        let order = BigUint::from(elements.len().max(1));
        let id: Vec<usize> = (0..degree).collect();
        elements.retain(|p| *p != id);
        PermutationGroup { degree, generators: elements, order }
    }

    /// All elements in lexicographic order, if the group has at most `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Vec<usize>>> {
        if self.order > BigUint::from(limit) {
            return None;
        }
        let id: Vec<usize> = (0..self.degree).collect();
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &self.generators {
                let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Some(seen.into_iter().collect())
    }
}

/// Result of the canonical search.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Size prefix followed by the upper-triangular adjacency bits of the
    /// canonically relabelled graph.
    pub code: Vec<u8>,
    /// `position[v]` is the canonical position of vertex `v`.
    pub position: Vec<usize>,
    pub automorphisms: PermutationGroup,
}

/// Canonical code: equal iff the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_form(g, CANONICAL_LIMIT)?.code)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Automorphism group of `g`, capped at `limit` vertices.
pub fn automorphism_group(g: &Graph, limit: usize) -> Result<PermutationGroup> {
    Ok(canonical_form(g, limit)?.automorphisms)
}

pub fn canonical_form(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let n = g.n();
    if n > limit {
        return Err(Error::size(format!("graph with {n} vertices"), limit));
    }
    let mut search = Search::new(g);
    let mut root: Cells = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    refine(g, &mut root);
    search.descend(root, &mut Vec::new());
    let (best_at, code) = search.best.take().expect("search reaches a leaf");
    let mut position = vec![0; n];
    for (p, &v) in best_at.iter().enumerate() {
        position[v] = p;
    }
    let order = search.group_order();
    Ok(CanonicalForm {
        code,
        position,
        automorphisms: PermutationGroup { degree: n, generators: search.generators, order },
    })
}

/// Splits cells until every cell has a uniform neighbour count into every
/// other cell. Label-invariant: new pieces are ordered by neighbour count.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.n();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mut splitter = VertexSet::with_capacity(n);
            splitter.extend(cells[s].iter().copied());
            let mut i = 0;
            let mut split_here = false;
            while i < cells.len() {
                if cells[i].len() > 1 {
                    let counts: Vec<usize> =
                        cells[i].iter().map(|&v| g.neighbors(v).intersection(&splitter).count()).collect();
                    if counts.iter().any(|&c| c != counts[0]) {
                        let mut keyed: Vec<(usize, usize)> =
                            counts.into_iter().zip(cells[i].iter().copied()).collect();
                        keyed.sort_unstable();
                        let mut pieces: Cells = Vec::new();
                        let mut last = usize::MAX;
                        for (c, v) in keyed {
                            if c != last {
                                pieces.push(Vec::new());
                                last = c;
                            }
                            pieces.last_mut().expect("piece").push(v);
                        }
                        let added = pieces.len() - 1;
                        cells.splice(i..=i, pieces);
                        if i == s {
                            split_here = true;
                        }
                        i += added + 1;
                        changed = true;
                        continue;
                    }
                }
                i += 1;
            }
            if !split_here {
                s += 1;
            }
        }
        if !changed {
            break;
        }
    }
}

fn individualize(cells: &Cells, cell: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend(cells[..cell].iter().cloned());
    out.push(vec![v]);
    out.push(cells[cell].iter().copied().filter(|&w| w != v).collect());
    out.extend(cells[cell + 1..].iter().cloned());
    out
}

fn target_cell(cells: &Cells) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<(Vec<usize>, Vec<u8>, Vec<usize>)>,
    best: Option<(Vec<usize>, Vec<u8>)>,
    best_path: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search { g, first: None, best: None, best_path: Vec::new(), generators: Vec::new() }
    }

    fn leaf_code(&self, at: &[usize]) -> Vec<u8> {
        let n = at.len();
        let mut code = vec![(n >> 8) as u8, n as u8];
        let mut byte = 0u8;
        let mut bits = 0;
        for p in 0..n {
            for q in p + 1..n {
                byte = (byte << 1) | self.g.has_edge(at[p], at[q]) as u8;
                bits += 1;
                if bits == 8 {
                    code.push(byte);
                    byte = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            code.push(byte << (8 - bits));
        }
        code
    }

    /// Orbit representatives of the group generated by the known
    /// automorphisms that fix every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gen in &self.generators {
            if prefix.iter().all(|&v| gen[v] == v) {
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns `Some(depth)` to unwind to the node at that depth.
    fn descend(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(t) = target_cell(&cells) else {
            let at: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.visit_leaf(at, path);
        };
        let depth = path.len();
        let candidates = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if !tried.is_empty() {
                let orbit = self.orbits_fixing(path);
                if tried.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            path.push(v);
            let jump = self.descend(individualize(&cells, t, v), path);
            path.pop();
            if let Some(j) = jump {
                if j < depth {
                    return Some(j);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, at: Vec<usize>, path: &[usize]) -> Option<usize> {
        let code = self.leaf_code(&at);
        let Some((first_at, first_code, first_path)) = &self.first else {
            self.first = Some((at.clone(), code.clone(), path.to_vec()));
            self.best = Some((at, code));
            self.best_path = path.to_vec();
            return None;
        };
        if code == *first_code {
            let gen = automorphism_between(first_at, &at);
            let j = divergence(first_path, path);
            self.generators.push(gen);
            return Some(j);
        }
        let (best_at, best_code) = self.best.as_ref().expect("best set with first");
        match code.cmp(best_code) {
            std::cmp::Ordering::Equal => {
                let gen = automorphism_between(best_at, &at);
                let j = divergence(&self.best_path, path);
                self.generators.push(gen);
                Some(j)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some((at, code));
                self.best_path = path.to_vec();
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn group_order(&self) -> BigUint {
        let Some((_, _, first_path)) = &self.first else {
            return BigUint::one();
        };
        let mut order = BigUint::one();
        for k in 0..first_path.len() {
            let orbit = self.orbits_fixing(&first_path[..k]);
            let rep = orbit[first_path[k]];
            let size = orbit.iter().filter(|&&r| r == rep).count();
            order *= BigUint::from(size);
        }
        order
    }
}

fn automorphism_between(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; a.len()];
    for (p, &v) in a.iter().enumerate() {
        gen[v] = b[p];
    }
    gen
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn order(g: &Graph) -> u64 {
        automorphism_group(g, 64).unwrap().order.try_into().unwrap()
    }

    #[test]
    fn relabelled_cycle_has_same_code() {
        let c5 = cycle(5);
        let other = Graph::from_edges(5, [(0, 2), (2, 1), (1, 4), (4, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&c5).unwrap(), canonical_code(&other).unwrap());
        assert_ne!(canonical_code(&c5).unwrap(), canonical_code(&path(5)).unwrap());
    }

    #[test]
    fn octahedron_two_ways() {
        let s0 = Graph::new(2);
        let join = s0.zykov_join(&s0).zykov_join(&s0);
        // K_{2,2,2}: complete graph minus a perfect matching, vertices shuffled
        let mut k222 = Graph::complete(6);
        for (a, b) in [(0, 4), (1, 3), (2, 5)] {
            k222.remove_edge(a, b);
        }
        assert!(is_isomorphic(&join, &k222).unwrap());
    }

    #[test]
    fn group_orders() {
        assert_eq!(order(&cycle(6)), 12);
        assert_eq!(order(&Graph::complete(5)), 120);
        assert_eq!(order(&path(4)), 2);
        assert_eq!(order(&Graph::new(4)), 24);
        assert_eq!(order(&Graph::new(1)), 1);
        assert_eq!(order(&Graph::empty()), 1);
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(order(&petersen), 120);
        let c5 = cycle(5);
        assert_eq!(order(&c5.strong_product(&c5)), 200);
    }

    #[test]
    fn large_symmetric_groups_stay_fast() {
        let k = Graph::complete(40);
        let g = automorphism_group(&k, 40).unwrap();
        let fact: BigUint = (1..=40u32).map(BigUint::from).product();
        assert_eq!(g.order, fact);
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = cycle(8).strong_product(&path(2));
        let grp = automorphism_group(&g, 64).unwrap();
        for p in &grp.generators {
            assert!(g.edges().all(|(a, b)| g.has_edge(p[a], p[b])));
        }
        let elems = grp.elements(10_000).unwrap();
        assert_eq!(BigUint::from(elems.len()), grp.order);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(canonical_code(&Graph::new(65)), Err(Error::SizeLimit { .. })));
    }
}
