//! The explicit orthonormal representation of a connection graph in
//! `R^{f_0}`: a set `x` gets the indicator vector of its points, scaled to
//! unit length, and the stick is `c = (1, …, 1)/√f_0`.
//!
//! Lengths are irrational in general, so vectors are kept unnormalized and
//! every quantity that enters the bound is a square: `‖u(x)‖² = 1` after
//! dividing by `|x|`, and `(u(x)·c)² = |x|/f_0`.

use crate::complex::Complex;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Umbrella<S> {
    pub f0: usize,
    /// Indicator vector of each set over the points of the complex.
    pub indicators: Vec<Vec<S>>,
    /// `|x|`, the squared length of each indicator.
    pub norm_sq: Vec<S>,
    /// `(u(x)·c)²` for the normalized vectors.
    pub stick_sq: Vec<S>,
    /// `max_x (u(x)·c)^{-2}`.
    pub bound: S,
    /// Whether disjoint sets always have orthogonal vectors.
    pub orthogonal: bool,
}

pub fn lovasz_umbrella<S: Scalar>(g: &Complex) -> Umbrella<S> {
    let points = g.vertices();
    let f0 = points.len();
    let indicators: Vec<Vec<S>> = g
        .sets()
        .iter()
        .map(|x| points.iter().map(|&p| if x.contains(p) { S::one() } else { S::zero() }).collect())
        .collect();
    let dot = |a: &[S], b: &[S]| a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
    let norm_sq: Vec<S> = indicators.iter().map(|v| dot(v, v)).collect();
    let f0s = S::from_int(f0 as i64);
    let stick_sq: Vec<S> = indicators
        .iter()
        .zip(&norm_sq)
        .map(|(v, n)| {
            let s = v.iter().cloned().fold(S::zero(), |a, b| a + b);
            s.clone() * s / (n.clone() * f0s.clone())
        })
        .collect();
    let bound = stick_sq
        .iter()
        .map(|s| S::one() / s.clone())
        .fold(None, |m: Option<S>, v| Some(match m {
            Some(m) if m >= v => m,
            _ => v,
        }))
        .unwrap_or_else(S::zero);
    let sets = g.sets();
    let orthogonal = (0..sets.len()).all(|i| {
        (i + 1..sets.len()).all(|j| sets[i].intersects(&sets[j]) || dot(&indicators[i], &indicators[j]).is_negligible())
    });
    Umbrella { f0, indicators, norm_sq, stick_sq, bound, orthogonal }
}
