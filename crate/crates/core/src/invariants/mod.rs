//! Euler characteristic, curvature, Poincaré–Hopf indices, Betti numbers,
//! genus and Platonic spheres of graphs and complexes.

pub mod homology;
pub mod platonic;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, FVector, MAX_SET_SIZE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homotopy::contract::sphere_dimension;
use crate::scalar::Scalar;
use crate::Label;

pub use homology::{betti, betti_numbers, graph_betti, BoundaryOperators};
pub use platonic::{is_platonic_sphere, PlatonicWitness};

/// Clique budget for Euler characteristic and curvature.
pub const CLIQUE_LIMIT: usize = 2_000_000;

pub(crate) const MAX_CLIQUE_DIM: usize = MAX_SET_SIZE;

/// Clique counts of `a` by dimension.
pub fn graph_f_vector(a: &Graph) -> Result<FVector> {
    a.clique_f_vector(CLIQUE_LIMIT)
}

/// `χ(A) = v_0 - v_1 + v_2 - …` over the cliques of `a`.
pub fn graph_euler(a: &Graph) -> Result<i64> {
    Ok(graph_f_vector(a)?.euler_characteristic())
}

/// `j(A) = 1 - χ(A)`, multiplicative under the Zykov join.
pub fn genus(a: &Graph) -> Result<i64> {
    Ok(1 - graph_euler(a)?)
}

/// Curvature `K(x) = Σ (-1)^dim σ / (dim σ + 1)` over the cliques `σ`
/// containing `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature<S> {
    pub values: BTreeMap<Label, S>,
}

impl<S: Scalar> Curvature<S> {
    pub fn total(&self) -> S {
        self.values.values().cloned().fold(S::zero(), |a, b| a + b)
    }
}

pub fn curvature<S: Scalar>(a: &Graph) -> Result<Curvature<S>> {
    let mut acc: Vec<S> = vec![S::zero(); a.n()];
    let mut count = 0usize;
    a.for_each_clique(|c| {
        count += 1;
        let k = c.len() as i64;
        let w = S::from_ratio(if k % 2 == 1 { 1 } else { -1 }, k);
        for &v in c {
            acc[v] = acc[v].clone() + w.clone();
        }
        count <= CLIQUE_LIMIT
    });
    if count > CLIQUE_LIMIT {
        return Err(Error::size("clique enumeration", CLIQUE_LIMIT));
    }
    Ok(Curvature { values: (0..a.n()).map(|i| (a.label(i), acc[i].clone())).collect() })
}

/// Whether the curvatures add up to the Euler characteristic.
pub fn gauss_bonnet_check<S: Scalar>(a: &Graph) -> Result<bool> {
    let total = curvature::<S>(a)?.total();
    Ok((total - S::from_int(graph_euler(a)?)).is_negligible())
}

/// Poincaré–Hopf indices `i_f(x) = 1 - χ(S_f(x))`, where `S_f(x)` is the part
/// of the unit sphere on which `f` is smaller than `f(x)`. `f` is indexed by
/// vertex position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareHopf {
    pub indices: BTreeMap<Label, i64>,
    pub sum: i64,
    pub euler: i64,
}

impl PoincareHopf {
    pub fn holds(&self) -> bool {
        self.sum == self.euler
    }
}

pub fn poincare_hopf(a: &Graph, f: &[i64]) -> Result<PoincareHopf> {
    if f.len() != a.n() {
        return Err(Error::InvalidInput(format!("{} function values for {} vertices", f.len(), a.n())));
    }
    let mut sorted = f.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NonInjective);
    }
    let mut indices = BTreeMap::new();
    for x in 0..a.n() {
        let below = a.vertex_set(a.neighbors(x).ones().filter(|&y| f[y] < f[x]));
        let chi = graph_euler(&a.induced(&below))?;
        indices.insert(a.label(x), 1 - chi);
    }
    let sum = indices.values().sum();
    Ok(PoincareHopf { indices, sum, euler: graph_euler(a)? })
}

/// Summary of the invariants of a graph or complex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub f_vector: Vec<usize>,
    pub chi: i64,
    pub betti: Vec<usize>,
    /// Exact curvatures written as fractions, by vertex label.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<BTreeMap<Label, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sphere_dim: Option<i32>,
}

/// Invariants of the Whitney complex of `a`.
pub fn graph_report(a: &Graph) -> Result<InvariantReport> {
    let f = graph_f_vector(a)?;
    let curv = curvature::<crate::Rational>(a)?;
    Ok(InvariantReport {
        chi: f.euler_characteristic(),
        f_vector: f.0,
        betti: graph_betti(a)?,
        curvature: Some(curv.values.into_iter().map(|(k, v)| (k, v.to_string())).collect()),
        sphere_dim: if a.n() <= crate::canon::CANONICAL_LIMIT { sphere_dimension(a) } else { None },
    })
}

/// Invariants of a complex; curvature and sphere data refer to its
/// 1-skeleton only when the complex is a clique complex, so they are omitted.
pub fn complex_report(g: &Complex) -> Result<InvariantReport> {
    let f = g.f_vector();
    Ok(InvariantReport { chi: f.euler_characteristic(), f_vector: f.0, betti: betti(g)?, curvature: None, sphere_dim: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational;

    #[test]
    fn euler_values() {
        assert_eq!(graph_euler(&catalog::octahedron()).unwrap(), 2);
        assert_eq!(graph_euler(&catalog::cycle(6)).unwrap(), 0);
        assert_eq!(graph_euler(&Graph::empty()).unwrap(), 0);
        assert_eq!(genus(&Graph::empty()).unwrap(), 1);
        assert_eq!(genus(&catalog::octahedron()).unwrap(), -1);
    }

    #[test]
    fn icosahedron_curvature() {
        let k = curvature::<Rational>(&catalog::icosahedron()).unwrap();
        assert!(k.values.values().all(|v| *v == Rational::new(1.into(), 6.into())));
        assert_eq!(k.total(), Rational::from_int(2));
        let c = curvature::<f64>(&catalog::cycle(7)).unwrap();
        assert!(c.values.values().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn poincare_hopf_on_hexagon() {
        let c6 = catalog::cycle(6);
        let ph = poincare_hopf(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(ph.holds());
        assert_eq!(ph.sum, 0);
        assert_eq!(ph.indices[&0], 1);
        assert_eq!(ph.indices[&5], -1);
        assert_eq!(poincare_hopf(&c6, &[0, 0, 1, 2, 3, 4]).unwrap_err(), Error::NonInjective);
        assert_eq!(poincare_hopf(&Graph::new(1), &[7]).unwrap().indices[&0], 1);
    }
}
