//! Scalar abstraction shared by the exact and floating-point code paths.
//!
//! Homology ranks, curvatures and umbrella bounds are computed over any
//! [`Scalar`]. Rational types give exact answers; `f32`/`f64` are accepted for
//! quick numerical cross-checks and treat values below a small tolerance as
//! zero.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + Send + Sync {
    /// Whether the value should be treated as zero by elimination routines.
    fn is_negligible(&self) -> bool;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer fits scalar")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Lossy conversion used only for reporting.
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-9
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-5
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for Ratio<i64> {
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for BigRational {
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Whether `S` computes without rounding.
pub fn is_exact<S: Scalar>() -> bool {
    let third = S::from_ratio(1, 3);
    (third.clone() + third.clone() + third - S::one()).is_negligible()
        && !S::from_ratio(1, 1 << 40).is_negligible()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactness_probe() {
        assert!(is_exact::<BigRational>());
        assert!(is_exact::<Ratio<i64>>());
        assert!(!is_exact::<f64>());
    }
}
