//! Exact enumeration of permutations of `{1..n}` in which no two positions at
//! distance `d` carry values at distance `d`.
//!
//! `a(n, d)` counts the permutations `π` with `|π(i+d) − π(i)| ≠ d` for every
//! `1 ≤ i ≤ n−d`. The case `d = 0` is the circular variant, where positions and
//! values are both read cyclically and neighbouring seats may not hold
//! neighbouring values (OEIS A089222). `d = 1` is the Hertzsprung problem
//! (A002464) and `d = 2` is A110128.
//!
//! The crate provides:
//!
//! * closed inclusion–exclusion formulas for every `d` ([`counts`]),
//! * a brute-force backtracking [`oracle`] to cross-check them,
//! * the combinatorial building blocks those formulas consume ([`combi`]),
//! * [`asymptotics`] for comparing exact counts with their `e^{-2}` limit law.
//!
//! Every engine is generic over an [`ExactScalar`]. [`ExactInt`] (a `BigInt`)
//! never overflows. Machine integers such as `i64` or `i128` run faster and
//! return [`Error::Overflow`] once a value no longer fits.

pub mod asymptotics;
pub mod combi;
pub mod counts;
mod error;
pub mod oracle;
mod scalar;

pub use error::{Error, Result};
pub use scalar::ExactScalar;

pub use counts::{count_exact, CountSpec};

/// Arbitrary-precision signed integer used for all counts.
pub type ExactInt = num_bigint::BigInt;

/// Exact rational over [`ExactInt`].
pub type ExactRatio = num_rational::BigRational;

/// `a(n, d)` as an [`ExactInt`].
pub fn count(n: u32, d: u32) -> Result<ExactInt> {
    count_exact(CountSpec::new(n, d)?)
}
