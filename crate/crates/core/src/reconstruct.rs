//! Recovering a complex from its connection graph or Barycentric graph.
//!
//! On `ψ(G)` the zero-dimensional sets are exactly the vertices with
//! `d(x) < δ(x)`, where `δ(x)` is the smallest degree among the neighbours
//! of `x` (isolated vertices count as zero-dimensional). Every other set is
//! the set of zero-dimensional neighbours.
//!
//! On `φ(G)` the degree test can fail: in `φ(K_3)` a point and an edge both
//! have degree 3. There the containment order is recovered instead. `φ(G)`
//! is the comparability graph of the face poset, and every transitive
//! orientation is a union of implication classes (one of each pair `A`,
//! `A⁻¹`). All choices of classes are tried per connected component; the
//! sources of an orientation are the candidate points. Candidates that
//! regenerate the graph are kept and the one with the smallest vertex
//! labels wins.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::canon::PermutationGroup;
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::functor::{phi, psi};
use crate::graph::{Graph, VertexSet};
use crate::Label;

/// Implication classes per component beyond which the orientation search
/// gives up.
pub const MAX_IMPLICATION_CLASSES: usize = 20;

/// `d(x)` and `δ(x) = min_{y ∈ S(x)} d(y)` per vertex index; `δ` is `None`
/// for isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub d: Vec<usize>,
    pub delta: Vec<Option<usize>>,
}

impl DegreeProfile {
    pub fn new(a: &Graph) -> Self {
        let d: Vec<usize> = (0..a.n()).map(|i| a.degree(i)).collect();
        let delta = (0..a.n()).map(|i| a.neighbors(i).ones().map(|j| d[j]).min()).collect();
        DegreeProfile { d, delta }
    }

    pub fn is_zero_dimensional(&self, i: usize) -> bool {
        self.delta[i].map_or(true, |m| self.d[i] < m)
    }
}

/// Labels of the vertices with `d(x) < δ(x)`, ascending.
pub fn zero_dim_vertices(a: &Graph) -> Vec<Label> {
    let p = DegreeProfile::new(a);
    let mut out: Vec<Label> = (0..a.n()).filter(|&i| p.is_zero_dimensional(i)).map(|i| a.label(i)).collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Functor {
    Psi,
    Phi,
}

/// A recovered complex. Its points carry the labels of the graph vertices
/// identified as zero-dimensional; `sets` maps every graph vertex label to
/// its set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub complex: Complex,
    pub functor: Functor,
    pub sets: BTreeMap<Label, Simplex>,
}

/// Sets from a choice of points: every vertex becomes the set of points
/// equal or adjacent to it (restricted to `within`).
fn sets_from_points(a: &Graph, points: &VertexSet, within: &VertexSet) -> Option<Vec<(usize, Simplex)>> {
    within
        .ones()
        .map(|i| {
            let mut mine: Vec<Label> = a.neighbors(i).intersection(points).map(|j| a.label(j)).collect();
            if points.contains(i) {
                mine.push(a.label(i));
            }
            Simplex::new(mine).ok().map(|s| (i, s))
        })
        .collect()
}

/// Checks that `sets` is an injective assignment forming a complex whose
/// graph under `functor` is `a` restricted to `within`.
fn verify(a: &Graph, sets: &[(usize, Simplex)], functor: Functor) -> Option<Complex> {
    let distinct: BTreeSet<&Simplex> = sets.iter().map(|(_, s)| s).collect();
    if distinct.len() != sets.len() {
        return None;
    }
    let complex = Complex::validate(sets.iter().map(|(_, s)| s.vertices().to_vec())).ok()?;
    for (x, (i, s)) in sets.iter().enumerate() {
        for (j, t) in &sets[x + 1..] {
            let related = match functor {
                Functor::Psi => s.intersects(t),
                Functor::Phi => s.is_nested(t),
            };
            if related != a.has_edge(*i, *j) {
                return None;
            }
        }
    }
    Some(complex)
}

fn finish(a: &Graph, sets: Vec<(usize, Simplex)>, functor: Functor) -> Result<Reconstruction> {
    let complex = verify(a, &sets, functor).ok_or_else(|| Error::NotAConnectionGraph("verification failed".into()))?;
    let regenerated = match functor {
        Functor::Psi => psi(&complex),
        Functor::Phi => phi(&complex),
    };
    // labelled identity: vertex with set s sits at index_of(s) in the regenerated graph
    let by_set: HashMap<&Simplex, Label> = sets.iter().map(|(i, s)| (s, a.label(*i))).collect();
    let relabelled = regenerated
        .graph
        .with_labels(regenerated.labeling.sets().iter().map(|s| by_set[s]).collect())?;
    if !relabelled.same_labeled(a) {
        return Err(Error::NotAConnectionGraph("regenerated graph differs".into()));
    }
    Ok(Reconstruction { complex, functor, sets: sets.into_iter().map(|(i, s)| (a.label(i), s)).collect() })
}

/// Reads `a` as a connection graph via the degree lemma.
pub fn reconstruct_from_psi(a: &Graph) -> Result<Reconstruction> {
    let p = DegreeProfile::new(a);
    let points = a.vertex_set((0..a.n()).filter(|&i| p.is_zero_dimensional(i)));
    let sets = sets_from_points(a, &points, &a.all_vertices())
        .ok_or_else(|| Error::NotAConnectionGraph("a vertex meets no point".into()))?;
    finish(a, sets, Functor::Psi)
}

/// Reads `a` as a Barycentric graph via the orientation search.
pub fn reconstruct_from_phi(a: &Graph) -> Result<Reconstruction> {
    let mut sets: Vec<(usize, Simplex)> = Vec::new();
    for comp in a.components() {
        let choice = component_points(a, &comp)?;
        sets.extend(choice);
    }
    sets.sort_by_key(|(i, _)| *i);
    finish(a, sets, Functor::Phi)
}

/// Recovers `G` from `ψ(G)` or `φ(G)`. The connection-graph reading is tried
/// first; both are verified by regenerating the graph.
pub fn reconstruct_complex(a: &Graph) -> Result<Reconstruction> {
    if a.is_empty() {
        return Err(Error::NotAConnectionGraph("empty graph".into()));
    }
    reconstruct_from_psi(a).or_else(|_| reconstruct_from_phi(a))
}

/// Implication classes of the directed edges inside `comp`. Directed edge
/// `(u, v)` is numbered by its position in `arcs`.
fn implication_classes(a: &Graph, comp: &VertexSet) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut arcs = Vec::new();
    let mut id: HashMap<(usize, usize), usize> = HashMap::new();
    for u in comp.ones() {
        for v in a.neighbors(u).ones() {
            id.insert((u, v), arcs.len());
            arcs.push((u, v));
        }
    }
    let mut parent: Vec<usize> = (0..arcs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for u in comp.ones() {
        let nb: Vec<usize> = a.neighbors(u).ones().collect();
        for (x, &b) in nb.iter().enumerate() {
            for &c in &nb[x + 1..] {
                if !a.has_edge(b, c) {
                    // u→b forces u→c, and b→u forces c→u
                    for (p, q) in [((u, b), (u, c)), ((b, u), (c, u))] {
                        let (ra, rb) = (find(&mut parent, id[&p]), find(&mut parent, id[&q]));
                        parent[ra] = rb;
                    }
                }
            }
        }
    }
    let roots = (0..arcs.len()).map(|k| find(&mut parent, k)).collect();
    (arcs, roots)
}

fn component_points(a: &Graph, comp: &VertexSet) -> Result<Vec<(usize, Simplex)>> {
    let members: Vec<usize> = comp.ones().collect();
    if members.len() == 1 {
        return Ok(vec![(members[0], Simplex::point(a.label(members[0])))]);
    }
    let (arcs, class) = implication_classes(a, comp);
    let reverse: HashMap<(usize, usize), usize> = arcs.iter().enumerate().map(|(k, &(u, v))| ((u, v), k)).collect();
    // pair each class with the class of the reversed arcs
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (k, &(u, v)) in arcs.iter().enumerate() {
        let (c, r) = (class[k], class[reverse[&(v, u)]]);
        if c == r {
            return Err(Error::NotAConnectionGraph("not a comparability graph".into()));
        }
        if seen.insert(c) && seen.insert(r) {
            pairs.push((c, r));
        }
    }
    if pairs.len() > MAX_IMPLICATION_CLASSES {
        return Err(Error::size("implication classes in one component", MAX_IMPLICATION_CLASSES));
    }
    let mut best: Option<(Vec<Label>, Vec<(usize, Simplex)>)> = None;
    for mask in 0u64..(1u64 << pairs.len()) {
        let chosen: BTreeSet<usize> =
            pairs.iter().enumerate().map(|(b, &(c, r))| if mask >> b & 1 == 1 { r } else { c }).collect();
        // u→v means u is below v
        let mut has_below = VertexSet::with_capacity(a.n());
        for (k, &(_, v)) in arcs.iter().enumerate() {
            if chosen.contains(&class[k]) {
                has_below.insert(v);
            }
        }
        let mut points = comp.clone();
        points.difference_with(&has_below);
        let key: Vec<Label> = {
            let mut k: Vec<Label> = points.ones().map(|i| a.label(i)).collect();
            k.sort_unstable();
            k
        };
        if best.as_ref().is_some_and(|(b, _)| *b <= key) {
            continue;
        }
        let Some(sets) = sets_from_points(a, &points, comp) else { continue };
        if verify(a, &sets, Functor::Phi).is_some() {
            best = Some((key, sets));
        }
    }
    best.map(|(_, s)| s).ok_or_else(|| Error::NotAConnectionGraph("no orientation yields a complex".into()))
}

/// Automorphisms of a complex: vertex permutations mapping sets to sets,
/// written as permutations of the set indices.
pub fn complex_automorphisms(g: &Complex, limit: usize) -> Result<PermutationGroup> {
    let n_sets = g.len();
    if n_sets > limit {
        return Err(Error::size(format!("complex with {n_sets} sets"), limit));
    }
    let verts = g.vertices();
    let pos: HashMap<Label, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let members: BTreeSet<Vec<usize>> =
        g.sets().iter().map(|s| s.vertices().iter().map(|v| pos[v]).collect()).collect();
    // star profile: number of sets of each size through a vertex
    let profile: Vec<Vec<usize>> = (0..verts.len())
        .map(|i| {
            let mut p = vec![0; g.dim().unwrap_or(0) + 1];
            for s in members.iter().filter(|s| s.contains(&i)) {
                p[s.len() - 1] += 1;
            }
            p
        })
        .collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut image = vec![usize::MAX; verts.len()];
    let mut used = vec![false; verts.len()];
    extend_map(0, &members, &profile, &mut image, &mut used, &mut found);
    let elements = found
        .into_iter()
        .map(|vp| {
            g.sets()
                .iter()
                .map(|s| {
                    let t = Simplex::new(s.vertices().iter().map(|v| verts[vp[pos[v]]])).expect("non-empty");
                    g.index_of(&t).expect("automorphism maps sets to sets")
                })
                .collect()
        })
        .collect();
    Ok(PermutationGroup::from_elements(n_sets, elements))
}

fn extend_map(
    k: usize,
    members: &BTreeSet<Vec<usize>>,
    profile: &[Vec<usize>],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    if k == image.len() {
        found.push(image.clone());
        return;
    }
    for t in 0..image.len() {
        if used[t] || profile[t] != profile[k] {
            continue;
        }
        image[k] = t;
        // every set whose largest vertex is k must map to a set
        let ok = members.iter().filter(|s| s.last() == Some(&k)).all(|s| {
            let mut m: Vec<usize> = s.iter().map(|&v| image[v]).collect();
            m.sort_unstable();
            members.contains(&m)
        });
        if ok {
            used[t] = true;
            extend_map(k + 1, members, profile, image, used, found);
            used[t] = false;
        }
        image[k] = usize::MAX;
    }
}

/// Order of the automorphism group of a complex.
pub fn complex_automorphism_order(g: &Complex, limit: usize) -> Result<BigUint> {
    Ok(complex_automorphisms(g, limit)?.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Maps reconstructed point labels back to the original vertices through
    /// the functor's labeling.
    fn through_labeling(r: &Reconstruction, labeling: &crate::functor::Labeling) -> Complex {
        r.complex.relabel(|v| labeling.set(v as usize).vertices()[0]).unwrap()
    }

    #[test]
    fn degree_lemma_on_triangle_boundary() {
        let g = catalog::complex("c3_boundary").unwrap();
        assert_eq!(zero_dim_vertices(&psi(&g).graph), vec![0, 1, 2]);
        assert_eq!(zero_dim_vertices(&Graph::new(1)), vec![0]);
        assert_eq!(zero_dim_vertices(&psi(&catalog::figure8_complex()).graph).len(), 7);
    }

    #[test]
    fn degree_lemma_fails_on_wheel() {
        let w = phi(&catalog::complex("k3_simplex").unwrap());
        let zero = zero_dim_vertices(&w.graph);
        assert_ne!(zero, w.labeling.points().iter().map(|&i| i as Label).collect::<Vec<_>>());
    }

    #[test]
    fn round_trips() {
        for name in ["point", "interval", "c3_boundary", "k3_simplex", "figure1", "figure8", "octahedron"] {
            let g = catalog::complex(name).unwrap();
            for (cg, functor) in [(psi(&g), Functor::Psi), (phi(&g), Functor::Phi)] {
                let r = reconstruct_complex(&cg.graph).unwrap();
                assert_eq!(through_labeling(&r, &cg.labeling), g, "{name} {functor:?}");
            }
        }
    }

    #[test]
    fn rejects_non_connection_graphs() {
        assert!(reconstruct_complex(&catalog::cycle(5)).is_err());
        assert!(reconstruct_complex(&Graph::empty()).is_err());
    }

    #[test]
    fn complex_groups() {
        let order = |name: &str| complex_automorphism_order(&catalog::complex(name).unwrap(), 100).unwrap();
        assert_eq!(order("figure1"), BigUint::from(2u32));
        assert_eq!(order("c3_boundary"), BigUint::from(6u32));
        assert_eq!(order("octahedron"), BigUint::from(48u32));
        assert_eq!(order("point"), BigUint::from(1u32));
    }
}
