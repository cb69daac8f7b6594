//! Simplicial homology by exact column reduction of boundary matrices.

use std::collections::HashMap;

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homotopy::reduce::{contractible_vertices, remove_dominated};
use crate::scalar::Scalar;

/// Largest complex (total number of sets) handed to the linear algebra.
pub const HOMOLOGY_LIMIT: usize = 50_000;

/// Sparse column: `(row, value)` sorted by row.
type Column<S> = Vec<(usize, S)>;

/// Integer boundary matrices `∂_k`, columns indexed by `k`-simplices and rows
/// by `(k-1)`-simplices, each in canonical order. The sign of the face that
/// omits the `i`-th vertex is `(-1)^i`.
#[derive(Clone, Debug)]
pub struct BoundaryOperators {
    /// `simplices[k]` lists the `k`-dimensional sets.
    pub simplices: Vec<Vec<Simplex>>,
    /// `columns[k][j]` is the boundary of `simplices[k][j]`; empty for k = 0.
    pub columns: Vec<Vec<Vec<(usize, i64)>>>,
}

impl BoundaryOperators {
    /// Builds all boundary matrices and verifies `∂_{k-1} ∂_k = 0`.
    pub fn new(g: &Complex) -> Result<Self> {
        if g.len() > HOMOLOGY_LIMIT {
            return Err(Error::size(format!("complex with {} sets", g.len()), HOMOLOGY_LIMIT));
        }
        let dim = g.dim().map_or(0, |d| d + 1);
        let mut simplices: Vec<Vec<Simplex>> = vec![Vec::new(); dim];
        for s in g.sets() {
            simplices[s.dim()].push(s.clone());
        }
        let index: Vec<HashMap<&Simplex, usize>> =
            simplices.iter().map(|layer| layer.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        let mut columns = vec![Vec::new(); dim];
        for k in 0..dim {
            columns[k] = simplices[k]
                .iter()
                .map(|s| {
                    if k == 0 {
                        return Vec::new();
                    }
                    let v = s.vertices();
                    let mut col: Vec<(usize, i64)> = (0..v.len())
                        .map(|i| {
                            let face = Simplex::new(v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x))
                                .expect("face of a set with two or more vertices");
                            (index[k - 1][&face], if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
        }
        let ops = BoundaryOperators { simplices, columns };
        if !ops.squares_to_zero() {
            return Err(Error::InvalidInput("boundary of a boundary is not zero".into()));
        }
        Ok(ops)
    }

    /// Whether `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub fn squares_to_zero(&self) -> bool {
        (2..self.columns.len()).all(|k| {
            self.columns[k].iter().all(|col| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(row, c) in col {
                    for &(r2, c2) in &self.columns[k - 1][row] {
                        *acc.entry(r2).or_insert(0) += c * c2;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }

    /// Rank of `∂_k` over the scalar field `S`.
    pub fn rank<S: Scalar>(&self, k: usize) -> usize {
        if k == 0 || k >= self.columns.len() {
            return 0;
        }
        let cols: Vec<Column<S>> =
            self.columns[k].iter().map(|c| c.iter().map(|&(r, v)| (r, S::from_int(v))).collect()).collect();
        column_rank(cols)
    }

    /// Betti numbers `b_k = f_k - rank ∂_k - rank ∂_{k+1}`.
    pub fn betti<S: Scalar>(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.columns.len()).map(|k| self.rank::<S>(k)).collect();
        (0..self.columns.len()).map(|k| self.simplices[k].len() - ranks[k] - ranks[k + 1]).collect()
    }
}

/// Rank by column reduction with pivots at the largest row index.
fn column_rank<S: Scalar>(cols: Vec<Column<S>>) -> usize {
    let mut pivots: HashMap<usize, Column<S>> = HashMap::new();
    for mut col in cols {
        while let Some((p, lead)) = col.last().cloned() {
            let Some(other) = pivots.get(&p) else {
                pivots.insert(p, col);
                break;
            };
            let factor = lead / other.last().expect("stored pivot column is non-empty").1.clone();
            col = axpy(&col, &factor, other);
        }
    }
    pivots.len()
}

/// `a - f·b`, dropping negligible entries.
fn axpy<S: Scalar>(a: &Column<S>, f: &S, b: &Column<S>) -> Column<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let entry = match (a.get(i), b.get(j)) {
            (Some((ra, va)), Some((rb, _))) if ra < rb => {
                i += 1;
                (*ra, va.clone())
            }
            (Some((ra, va)), Some((rb, vb))) if ra == rb => {
                i += 1;
                j += 1;
                (*ra, va.clone() - f.clone() * vb.clone())
            }
            (_, Some((rb, vb))) => {
                j += 1;
                (*rb, -(f.clone() * vb.clone()))
            }
            (Some((ra, va)), None) => {
                i += 1;
                (*ra, va.clone())
            }
            (None, None) => unreachable!(),
        };
        if !entry.1.is_negligible() {
            out.push(entry);
        }
    }
    out
}

/// Betti numbers of a complex over `S`, trailing zeros trimmed (a non-empty
/// complex always keeps `b_0`).
pub fn betti_numbers<S: Scalar>(g: &Complex) -> Result<Vec<usize>> {
    let mut b = BoundaryOperators::new(g)?.betti::<S>();
    while b.len() > 1 && b.last() == Some(&0) {
        b.pop();
    }
    Ok(b)
}

/// Exact Betti numbers over the rationals.
pub fn betti(g: &Complex) -> Result<Vec<usize>> {
    betti_numbers::<crate::Rational>(g)
}

/// Betti numbers of the Whitney complex of `a`. When the clique complex is
/// too large, dominated vertices and then vertices with contractible unit
/// spheres are removed first; each removal is a homotopy step and leaves the
/// Betti numbers unchanged.
pub fn graph_betti(a: &Graph) -> Result<Vec<usize>> {
    if let Ok(f) = a.clique_f_vector(HOMOLOGY_LIMIT) {
        if f.get(super::MAX_CLIQUE_DIM) == 0 {
            return betti(&Complex::whitney(a)?);
        }
    }
    let mut g = remove_dominated(a);
    if let Ok(f) = g.clique_f_vector(HOMOLOGY_LIMIT) {
        if f.get(super::MAX_CLIQUE_DIM) == 0 {
            return betti(&Complex::whitney(&g)?);
        }
    }
    while let Some(&v) = contractible_vertices(&g).first() {
        g = remove_dominated(&g.remove_vertex(v)?);
        if let Ok(f) = g.clique_f_vector(HOMOLOGY_LIMIT) {
            if f.get(super::MAX_CLIQUE_DIM) == 0 {
                return betti(&Complex::whitney(&g)?);
            }
        }
    }
    betti(&Complex::whitney(&g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_rational::Ratio;

    #[test]
    fn basic_betti_numbers() {
        assert_eq!(betti(&catalog::complex("point").unwrap()).unwrap(), vec![1]);
        assert_eq!(betti(&catalog::complex("c3_boundary").unwrap()).unwrap(), vec![1, 1]);
        assert_eq!(betti(&catalog::complex("k3_simplex").unwrap()).unwrap(), vec![1]);
        assert_eq!(betti(&catalog::figure8_complex()).unwrap(), vec![1, 2]);
        assert_eq!(betti(&catalog::complex("octahedron").unwrap()).unwrap(), vec![1, 0, 1]);
        assert_eq!(betti(&catalog::dunce_hat_complex()).unwrap(), vec![1]);
    }

    #[test]
    fn scalar_types_agree() {
        let g = catalog::complex("icosahedron").unwrap();
        let exact = betti(&g).unwrap();
        assert_eq!(betti_numbers::<Ratio<i64>>(&g).unwrap(), exact);
        assert_eq!(betti_numbers::<f64>(&g).unwrap(), exact);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let g = catalog::complex("K_5").unwrap();
        let ops = BoundaryOperators::new(&g).unwrap();
        assert!(ops.squares_to_zero());
        assert_eq!(ops.rank::<crate::Rational>(1), 4);
    }

    #[test]
    fn graph_betti_of_cross_polytope() {
        assert_eq!(graph_betti(&catalog::cross_polytope(3)).unwrap(), vec![1, 0, 0, 1]);
        assert_eq!(graph_betti(&catalog::figure8_graph()).unwrap(), vec![1, 2]);
    }
}
