//! Exact formula engines and the dispatcher that picks one.

mod closed;
mod general;
mod kernel;
mod residue;

pub use closed::{count_d0, count_d0_formula, count_d1};
pub use general::{count_general, count_general_reference, count_general_with};
pub use kernel::{q_value, q_value_enumerated, QKernel};
pub use residue::{PartList, ResidueProfile};

use crate::combi::factorial;
use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// A problem instance: `n` seats and distance `d`, where `d = 0` selects the
/// circular table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CountSpec {
    n: u32,
    d: u32,
}

impl CountSpec {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        Ok(Self { n, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_circular(&self) -> bool {
        self.d == 0
    }
}

/// `a(n, d)` by the matching closed formula.
///
/// For `d ≥ n` no pair of positions is `d` apart, so every permutation
/// counts and the result is `n!`.
pub fn count_exact<T: ExactScalar>(spec: CountSpec) -> Result<T> {
    count_exact_with(&QKernel::new(), spec)
}

/// [`count_exact`] reusing `kernel` for the `d ≥ 2` engine.
pub fn count_exact_with<T: ExactScalar>(kernel: &QKernel<T>, spec: CountSpec) -> Result<T> {
    let CountSpec { n, d } = spec;
    match d {
        0 => count_d0(n),
        1 => count_d1(n),
        _ if d >= n => factorial(i64::from(n)),
        _ => count_general_with(kernel, n, d),
    }
}
