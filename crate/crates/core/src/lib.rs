//! Exact computation of permutation-equivariant K-theoretic genus-0 correlators
//! of the point target.
//!
//! The algebra is generic over the coefficient field ([`Scalar`]); the exact
//! rational instances below are what every identity check uses.
//!
//! - [`combinatorics`]: partitions, cycle types, class sizes
//! - [`series`]: truncated power series in `q`, q-integers and q-factorials
//! - [`lambda`]: symmetric functions in power sums, Adams operations, Schur polynomials
//! - [`characters`]: `S_n` character tables, class functions, induction
//! - [`point`]: graded traces and class-sum correlators
//! - [`jfunction`]: the small J-function and its closed forms

pub mod characters;
pub mod combinatorics;
mod error;
pub mod jfunction;
pub mod lambda;
pub mod point;
mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::{rational_to_string, Scalar};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Exact rationals, the coefficient field used throughout.
pub type Rational = BigRational;

/// Truncated q-series over the rationals.
pub type QSeries = series::TruncSeries<Rational>;
/// Truncated q-series in double precision.
pub type QSeriesF64 = series::TruncSeries<f64>;

/// Element of `Λ ⊗ Q[[q]]` in power-sum generators.
pub type Lambda = lambda::LambdaElement<Rational, lambda::PowerSums>;
/// Element of `Q[x] ⊗ Q[[q]]`, the rank-one (symmetrized) λ-algebra.
pub type Rank1Element = lambda::LambdaElement<Rational, lambda::Rank1>;
/// Symmetric polynomial in `N` variables over the rationals.
pub type SymPoly = lambda::SymPolyN<Rational>;

/// A correlator value lives in `Λ ⊗ Q[[q]]`.
pub type CorrelatorValue<A> = lambda::LambdaElement<Rational, A>;
pub type ClassFunction = characters::ClassFunction<Rational>;
pub type JSeries<A> = jfunction::JSeries<Rational, A>;
pub type XSeries = jfunction::XSeries<Rational>;

pub use characters::CharacterTable;
pub use combinatorics::{CycleType, Partition};
pub use lambda::{PowerSums, Rank1};
pub use point::Space;
