//! Coefficient field abstraction.
//!
//! Every algebraic structure in this crate is generic over a [`Scalar`]. The
//! exact instance is [`BigRational`](num_rational::BigRational), which is what
//! all identity checks use; `f64`/`f32` are provided for quick numerical
//! evaluation where exactness is not required.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// A field of characteristic zero that the series and λ-ring code can compute in.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_bigint(n: &BigInt) -> Self;

    /// `true` for exact fields; floating point returns `false`.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Self::from_bigint(num) / Self::from_bigint(den)
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::from_ratio(r.numer(), r.denom())
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        BigRational::new(num.clone(), den.clone())
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn rational_to_string(r: &BigRational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(rational_to_string(&half), "1/2");
        assert_eq!(rational_to_string(&BigRational::from_i64(-3)), "-3");
        let reduced = BigRational::from_ratio(&BigInt::from(6), &BigInt::from(-4));
        assert_eq!(rational_to_string(&reduced), "-3/2");
    }

    #[test]
    fn float_conversions() {
        assert_eq!(f64::from_ratio(&BigInt::from(1), &BigInt::from(4)), 0.25);
        assert_eq!(f32::from_i64(7), 7.0);
    }
}
