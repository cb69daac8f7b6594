//! The connection Laplacian `L = 1 + A(ψ(G))`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::functor::{psi, psi_product};
use crate::graph::Graph;

/// Largest order handled by the dense routines.
pub const LAPLACIAN_LIMIT: usize = 1200;

/// A symmetric integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionLaplacian {
    pub order: usize,
    pub entries: Vec<i64>,
}

impl ConnectionLaplacian {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > LAPLACIAN_LIMIT {
            return Err(Error::size(format!("matrix of order {n}"), LAPLACIAN_LIMIT));
        }
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
            for j in g.neighbors(i).ones() {
                entries[i * n + j] = 1;
            }
        }
        Ok(ConnectionLaplacian { order: n, entries })
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.order;
        let m = DMatrix::from_fn(n, n, |i, j| self.get(i, j) as f64);
        let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        ev
    }

    /// Kronecker product with row-major block order.
    pub fn kron(&self, other: &ConnectionLaplacian) -> ConnectionLaplacian {
        let (n, m) = (self.order, other.order);
        let mut entries = vec![0; n * m * n * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        entries[(i * m + k) * n * m + j * m + l] = self.get(i, j) * other.get(k, l);
                    }
                }
            }
        }
        ConnectionLaplacian { order: n * m, entries }
    }
}

pub fn connection_laplacian(g: &Complex) -> Result<ConnectionLaplacian> {
    ConnectionLaplacian::from_graph(&psi(g).graph)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnimodularityReport {
    pub determinant: i64,
    pub positive_eigenvalues: usize,
    pub even_dimensional_sets: usize,
    pub holds: bool,
}

/// `det L ∈ {−1, 1}` and the number of positive eigenvalues equals the number
/// of even-dimensional sets.
pub fn unimodularity_check(g: &Complex) -> Result<UnimodularityReport> {
    let l = connection_laplacian(g)?;
    let det = l.determinant();
    let determinant: i64 = i64::try_from(&det).unwrap_or(i64::MAX);
    let positive_eigenvalues = l.eigenvalues().iter().filter(|&&x| x > 0.0).count();
    let even_dimensional_sets = g.sets().iter().filter(|s| s.dim() % 2 == 0).count();
    Ok(UnimodularityReport {
        determinant,
        positive_eigenvalues,
        even_dimensional_sets,
        holds: determinant.abs() == 1 && positive_eigenvalues == even_dimensional_sets,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumProductReport {
    /// `L(G×H) = L(G) ⊗ L(H)` entry by entry.
    pub tensor_identity: bool,
    /// Largest deviation between sorted spectra.
    pub max_deviation: f64,
    pub holds: bool,
}

/// Compares the spectrum of `L(G×H)` with the products `λ_j μ_k`.
pub fn spectrum_product_check(g: &Complex, h: &Complex, tol: f64) -> Result<SpectrumProductReport> {
    let (lg, lh) = (connection_laplacian(g)?, connection_laplacian(h)?);
    let lp = ConnectionLaplacian::from_graph(&psi_product(g, h))?;
    let tensor_identity = lp == lg.kron(&lh);
    let (eg, eh) = (lg.eigenvalues(), lh.eigenvalues());
    let mut products: Vec<f64> = eg.iter().flat_map(|a| eh.iter().map(move |b| a * b)).collect();
    products.sort_by(|a, b| a.total_cmp(b));
    let direct = lp.eigenvalues();
    let max_deviation = direct.iter().zip(&products).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(SpectrumProductReport { tensor_identity, max_deviation, holds: tensor_identity && max_deviation <= tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn triangle_boundary_is_unimodular() {
        let r = unimodularity_check(&catalog::complex("c3_boundary").unwrap()).unwrap();
        assert_eq!(r.determinant.abs(), 1);
        assert_eq!(r.positive_eigenvalues, 3);
        assert!(r.holds);
        let p = unimodularity_check(&catalog::complex("point").unwrap()).unwrap();
        assert_eq!((p.determinant, p.positive_eigenvalues), (1, 1));
    }

    #[test]
    fn determinant_matches_known_values() {
        let m = ConnectionLaplacian { order: 3, entries: vec![2, 0, 1, 1, 3, 2, 1, 1, 2] };
        assert_eq!(m.determinant(), BigInt::from(6));
        let pivot = ConnectionLaplacian { order: 3, entries: vec![0, 2, 1, 1, 1, 0, 3, 0, 1] };
        assert_eq!(pivot.determinant(), BigInt::from(-5));
        let singular = ConnectionLaplacian { order: 2, entries: vec![1, 1, 1, 1] };
        assert_eq!(singular.determinant(), BigInt::zero());
        let swap = ConnectionLaplacian { order: 2, entries: vec![0, 1, 1, 0] };
        assert_eq!(swap.determinant(), BigInt::from(-1));
    }

    #[test]
    fn products() {
        let interval = catalog::complex("interval").unwrap();
        let point = catalog::complex("point").unwrap();
        let r = spectrum_product_check(&interval, &interval, 1e-9).unwrap();
        assert!(r.tensor_identity && r.holds);
        let lp = ConnectionLaplacian::from_graph(&psi_product(&interval, &point)).unwrap();
        assert_eq!(lp, connection_laplacian(&interval).unwrap());
    }
}
