//! Finite, exact experiments around the enumeration of subsets of the
//! naturals, diagonal constructions over arrays of binary strings, relative
//! cardinality as a limiting ratio of counting formulas, and the structure of
//! reductio-style proof chains.
//!
//! Every quantity is computed with arbitrary-precision integers or reduced
//! rationals. Floating point appears only in [`realline::approx`], which
//! exists for display.
//!
//! | module        | what it builds                                              |
//! |---------------|-------------------------------------------------------------|
//! | [`subset`]    | rank/unrank of finite subsets by (cardinality, index)       |
//! | [`powerset`]  | power-set tables by bitmask and by iterated unions          |
//! | [`bitstring`] | binary-string arrays, antidiagonals, diagonal covers        |
//! | [`ratio`]     | relative cardinality of counting formulas                   |
//! | [`chain`]     | parser and classifier for linear proof chains               |
//! | [`realline`]  | rational enumeration, binary expansions, nested intervals   |
//! | [`cli`]       | the `diaglab` command-line front end                        |

pub mod bitstring;
pub mod chain;
pub mod cli;
pub mod powerset;
pub mod ratio;
pub mod realline;
pub mod subset;

mod binom;

pub use num_bigint::{BigInt, BigUint};

/// Exact reduced fraction with an arbitrary-precision numerator and a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub use binom::binomial;
