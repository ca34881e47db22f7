//! Coefficient scalars.
//!
//! Every coefficient in the crate lives in a field implementing [`Scalar`].
//! The exact instantiation used throughout is [`BigRational`]; fixed-width
//! rationals work for small inputs and `f64` is available for quick
//! numerical sanity checks, with the usual rounding caveats.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A field of coefficients.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static {
    /// Converts an exact rational into this scalar type.
    ///
    /// Panics when the value is not representable (fixed-width overflow).
    fn from_rational(r: &BigRational) -> Self;

    /// The scalar `n` for a small integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integers are representable")
    }

    /// `1/n`, panicking on `n == 0`.
    fn recip_int(n: i64) -> Self {
        assert!(n != 0, "reciprocal of zero");
        Self::one() / Self::from_int(n)
    }
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

macro_rules! impl_fixed_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_rational(r: &BigRational) -> Self {
                let num: $int = r.numer().try_into().expect("numerator overflows fixed width");
                let den: $int = r.denom().try_into().expect("denominator overflows fixed width");
                Ratio::new(num, den)
            }
        }
    };
}

impl_fixed_ratio!(i64);
impl_fixed_ratio!(i128);

impl Scalar for f64 {
    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
}

/// Builds an exact rational from an arbitrary-precision integer.
pub fn rat_from_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
