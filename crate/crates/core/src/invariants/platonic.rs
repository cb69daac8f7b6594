//! Platonic spheres: spheres whose unit spheres are all isomorphic to one
//! Platonic sphere of one dimension less. Spheres of dimension at most zero
//! are Platonic.

use crate::canon::canonical_code;
use crate::error::Result;
use crate::graph::Graph;
use crate::homotopy::contract::sphere_dimension;

/// The dimension and the chain of canonical codes of the common unit
/// spheres, from the graph itself downwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlatonicWitness {
    pub dim: i32,
    pub codes: Vec<Vec<u8>>,
}

/// `Some(witness)` if `a` is a Platonic sphere, `None` otherwise.
pub fn is_platonic_sphere(a: &Graph) -> Result<Option<PlatonicWitness>> {
    let Some(dim) = sphere_dimension(a) else { return Ok(None) };
    let code = canonical_code(a)?;
    if dim <= 0 {
        return Ok(Some(PlatonicWitness { dim, codes: vec![code] }));
    }
    let mut common: Option<(Vec<u8>, Graph)> = None;
    for i in 0..a.n() {
        let s = a.induced(a.neighbors(i));
        let c = canonical_code(&s)?;
        match &common {
            None => common = Some((c, s)),
            Some((known, _)) if *known != c => return Ok(None),
            _ => {}
        }
    }
    let (_, sphere) = common.expect("spheres of dimension at least one are non-empty");
    Ok(is_platonic_sphere(&sphere)?.map(|w| {
        let mut codes = vec![code];
        codes.extend(w.codes);
        PlatonicWitness { dim, codes }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::homotopy::moves::{apply_move, Move};

    #[test]
    fn platonic_examples() {
        for n in 4..9 {
            assert_eq!(is_platonic_sphere(&catalog::cycle(n)).unwrap().unwrap().dim, 1);
        }
        assert_eq!(is_platonic_sphere(&catalog::octahedron()).unwrap().unwrap().dim, 2);
        assert_eq!(is_platonic_sphere(&catalog::icosahedron()).unwrap().unwrap().codes.len(), 3);
        assert!(is_platonic_sphere(&Graph::complete(3)).unwrap().is_none());
    }

    #[test]
    fn refined_sixteen_cell_is_not_platonic() {
        let c4 = catalog::cycle(4);
        let g = c4.zykov_join(&c4);
        assert!(is_platonic_sphere(&g).unwrap().is_some());
        let (h, _) = apply_move(&g, &Move::EdgeRefine { a: 0, b: 1, e: 8 }).unwrap();
        assert_eq!(sphere_dimension(&h), Some(3));
        assert!(is_platonic_sphere(&h).unwrap().is_none());
    }
}
