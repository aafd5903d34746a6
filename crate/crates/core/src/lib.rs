//! Exact-arithmetic structure data for the split real Lie group E7(7) and the
//! screening machinery built on top of it: root systems and chambers, lambda
//! and spin norms, u-small membership, su(8) representation arithmetic,
//! Dirac-inequality filters, and verification of the bundled table data.
//!
//! Everything is computed over the rationals; there is no floating point on
//! any decision path. The crate is `no_std`-compatible (with `alloc`); IO,
//! file formats, and parallel drivers live in the companion `dirac-screen`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cone;
pub mod dataset;
pub mod linalg;
pub mod lp;
pub mod norms;
pub mod qfmt;
pub mod reptheory;
pub mod roots;
pub mod screener;
pub mod su8;
pub mod weight;
pub mod weyl;

mod context;

pub use context::E7;
pub use weight::{Frame, Weight};

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision unsigned integer.
pub type UInt = num_bigint::BigUint;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for the rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}
