//! Exact Laurent-polynomial and truncated power series arithmetic.

pub mod convention;
pub mod laurent;
pub mod series;

pub use convention::{ConventionTag, HalfExp};
pub use laurent::{Exponent, Laurent, QLaurent, TouchExp, TouchLaurent};
pub use series::{LSeries, Series, TouchSeries};
