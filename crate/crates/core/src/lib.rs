//! Exact length-and-area generating functions for height-restricted Dyck
//! paths.
//!
//! Paths take unit up/down steps between a floor at height 0 and a
//! ceiling at height `k`. The length of a path is marked by ζ and its
//! area (the area under the path minus half its length, in plaquettes)
//! by ϑ. Generating functions are computed as ratios of secular
//! determinants, as exclusion-statistics partition functions, and through
//! cluster expansions of their logarithms; a brute-force enumerator
//! provides ground truth.
//!
//! The algebra is generic over the coefficient field (see [`Scalar`]);
//! the aliases below fix it to arbitrary-precision rationals.
//!
//! ```
//! use dyckgen::genfun::{genfun, GenSpec};
//! use dyckgen::Rat;
//!
//! let g = genfun::<Rat>(&GenSpec::finite(4, 1, 2, 13)).unwrap();
//! // coefficient of ζ^13 ϑ^21
//! let c = g.series.coeff(13).coeff(21);
//! assert!(c > Rat::from_integer(0.into()));
//! ```

pub mod algebra;
pub mod cluster;
pub mod error;
pub mod genfun;
pub mod guards;
pub mod oracle;
pub mod scalar;
pub mod spectral;
pub mod touchdown;
pub mod verify;

pub use algebra::{ConventionTag, HalfExp, LSeries, Laurent, QLaurent, Series, TouchExp, TouchLaurent, TouchSeries};
pub use error::{Error, Result};
pub use guards::Guards;
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rat = num_rational::BigRational;

/// ϑ-Laurent polynomial over [`Rat`].
pub type RatLaurent = QLaurent<Rat>;

/// ζ-series with [`RatLaurent`] coefficients.
pub type RatSeries = Series<Rat>;

/// ζ-series with touchdown-marked coefficients over [`Rat`].
pub type RatTouchSeries = TouchSeries<Rat>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
