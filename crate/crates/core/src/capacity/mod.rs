//! Independence numbers, Shannon capacity certificates for connection
//! graphs, the explicit umbrella and connection Laplacian facts.
//!
//! Capacities are only reported when an exact lower bound from an
//! independent set in a strong power meets the umbrella upper bound.

pub mod independence;
pub mod laplacian;
pub mod umbrella;

use serde::{Deserialize, Serialize};

pub use independence::{independence_number, independence_number_capped, is_independent, Independence, INDEPENDENCE_LIMIT};
pub use laplacian::{
    connection_laplacian, spectrum_product_check, unimodularity_check, ConnectionLaplacian, SpectrumProductReport,
    UnimodularityReport, LAPLACIAN_LIMIT,
};
pub use umbrella::{lovasz_umbrella, Umbrella};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::functor::{phi, psi};
use crate::graph::Graph;
use crate::{Label, Rational, Scalar};

/// `i(A^n)` and the lower bound `i(A^n)^{1/n}` on the capacity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerBound {
    pub power: u32,
    pub independence: usize,
    pub lower: f64,
}

pub fn strong_power(a: &Graph, n: u32) -> Graph {
    let mut p = Graph::new(1);
    for _ in 0..n {
        p = p.strong_product(a);
    }
    p
}

pub fn shannon_lower(a: &Graph, n: u32) -> Result<PowerBound> {
    shannon_lower_capped(a, n, INDEPENDENCE_LIMIT)
}

pub fn shannon_lower_capped(a: &Graph, n: u32, limit: usize) -> Result<PowerBound> {
    if n == 0 {
        return Err(Error::InvalidInput("power must be positive".into()));
    }
    let size = (a.n() as u128).checked_pow(n).unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::size(format!("strong power with {size} vertices"), limit));
    }
    let i = independence_number_capped(&strong_power(a, n), limit)?.size;
    Ok(PowerBound { power: n, independence: i, lower: (i as f64).powf(1.0 / n as f64) })
}

/// `Θ(φ(G)) = max(f_0, f_1)` for a complex of dimension at most one, with
/// the witness independent set in `φ(G)` (labels are set indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiCapacity {
    pub value: usize,
    pub witness: Vec<Label>,
}

pub fn phi_capacity_1d(g: &Complex) -> Result<PhiCapacity> {
    if g.dim().unwrap_or(0) > 1 {
        return Err(Error::NotOneDimensional);
    }
    let points: Vec<Label> = (0..g.len()).filter(|&i| g.sets()[i].len() == 1).map(|i| i as Label).collect();
    let edges: Vec<Label> = (0..g.len()).filter(|&i| g.sets()[i].len() == 2).map(|i| i as Label).collect();
    let witness = if edges.len() > points.len() { edges } else { points };
    Ok(PhiCapacity { value: witness.len(), witness })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CapacityReport {
    /// `"psi"` or `"phi"`.
    pub graph: String,
    pub f0: usize,
    pub independence: usize,
    /// Present for the connection graph, where the umbrella applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub umbrella_bound: Option<String>,
    /// Present when the lower and upper bounds coincide.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_theta: Option<usize>,
    /// `max(f_0, f_1)` for one-dimensional complexes on the `φ` side. Only
    /// the lower bound is certified.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asserted_theta: Option<usize>,
    pub power_bounds: Vec<PowerBound>,
}

/// Capacity data for `ψ(G)`, or `φ(G)` when `use_phi` is set, with lower
/// bounds from strong powers `2..=max_power`.
pub fn capacity_report(g: &Complex, max_power: u32, use_phi: bool) -> Result<CapacityReport> {
    let a = if use_phi { phi(g).graph } else { psi(g).graph };
    let i = independence_number(&a)?.size;
    let mut power_bounds = vec![PowerBound { power: 1, independence: i, lower: i as f64 }];
    for n in 2..=max_power {
        power_bounds.push(shannon_lower(&a, n)?);
    }
    let f0 = g.f0();
    if use_phi {
        let asserted_theta = phi_capacity_1d(g).ok().map(|c| c.value);
        return Ok(CapacityReport {
            graph: "phi".into(),
            f0,
            independence: i,
            umbrella_bound: None,
            certified_theta: None,
            asserted_theta,
            power_bounds,
        });
    }
    let u = lovasz_umbrella::<Rational>(g);
    let certified = u.orthogonal && u.bound == Rational::from_int(i as i64);
    Ok(CapacityReport {
        graph: "psi".into(),
        f0,
        independence: i,
        umbrella_bound: Some(u.bound.to_string()),
        certified_theta: certified.then_some(i),
        asserted_theta: None,
        power_bounds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub sum_independence: usize,
    pub sum_expected: usize,
    pub product_independence: usize,
    pub product_expected: usize,
    /// Umbrella bounds of both factors equal their `f_0`.
    pub umbrellas_match: bool,
    pub holds: bool,
}

/// Checks `i(ψ(G)+ψ(H)) = f_0(G)+f_0(H)` and `i(ψ(G)·ψ(H)) = f_0(G)f_0(H)`.
pub fn capacity_ring_check(g: &Complex, h: &Complex) -> Result<RingReport> {
    let (a, b) = (psi(g).graph, psi(h).graph);
    let sum_independence = independence_number(&a.disjoint_union(&b))?.size;
    let product_independence = independence_number(&a.strong_product(&b))?.size;
    let (fg, fh) = (g.f0(), h.f0());
    let umbrellas_match = [g, h].iter().all(|c| {
        let u = lovasz_umbrella::<Rational>(c);
        u.orthogonal && u.bound == Rational::from_int(c.f0() as i64)
    });
    let holds = sum_independence == fg + fh && product_independence == fg * fh && umbrellas_match;
    Ok(RingReport {
        sum_independence,
        sum_expected: fg + fh,
        product_independence,
        product_expected: fg * fh,
        umbrellas_match,
        holds,
    })
}
