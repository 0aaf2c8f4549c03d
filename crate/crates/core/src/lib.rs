//! Exact-arithmetic engine for the Vedāṅga-Jyotiṣa-style five-year yuga
//! calendar.
//!
//! Everything numeric in this crate is an exact rational over
//! arbitrary-precision integers: per-fortnight moon/sun nakṣatra positions,
//! precession-based epoch dating, and a whole-number tally model that is
//! provably equivalent to the rational one after scaling.
//!
//! No floating point is used anywhere in the computation path.

pub mod error;
pub mod precession;
pub mod rational;
pub mod tally;
pub mod yuga;

pub use error::Error;
pub use rational::{MixedNumber, Rational};
