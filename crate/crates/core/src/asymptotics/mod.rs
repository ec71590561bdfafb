//! Exact counts against the `e^{-2}` limit law.
//!
//! `a(n, d)/n! → e^{-2}`, and to first order
//! `a(n, d)/n! = e^{-2} (1 + 4(d−1)/n + O(1/n²))`. Everything here compares
//! exact rationals after multiplying by a single high-precision `e²`, so the
//! only irrational constant carries an explicit error bound.

mod real;
mod series;

pub use real::HighPrecisionReal;
pub use series::{series_bracket, SeriesExpansion, SeriesKind};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::combi::factorial;
use crate::{count, ExactInt, Result};

pub const DEFAULT_DIGITS: u32 = 30;

/// A precomputed `e²` at a chosen precision.
#[derive(Debug, Clone)]
pub struct Asymptotics {
    e_squared: HighPrecisionReal,
    digits: u32,
}

/// One row of a [`Asymptotics::convergence_report`].
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub n: u32,
    /// `a(n, d)/n! · e²`.
    pub scaled_ratio: HighPrecisionReal,
    /// `n · (scaled_ratio − 1)`.
    pub coefficient: HighPrecisionReal,
    /// `4(d − 1)`.
    pub target: i64,
    /// `|coefficient − target|`.
    pub distance: HighPrecisionReal,
}

impl Default for Asymptotics {
    fn default() -> Self {
        Self::new(DEFAULT_DIGITS)
    }
}

impl Asymptotics {
    pub fn new(digits: u32) -> Self {
        Self {
            e_squared: HighPrecisionReal::e_squared(digits),
            digits,
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn e_squared(&self) -> &HighPrecisionReal {
        &self.e_squared
    }

    /// `count/n! · e²` for a count computed elsewhere.
    pub fn scale_count(&self, count: &ExactInt, n: u32) -> Result<HighPrecisionReal> {
        let ratio = BigRational::new(count.clone(), factorial(i64::from(n))?);
        Ok(self.e_squared.mul_ratio(&ratio))
    }

    pub fn scaled_ratio(&self, n: u32, d: u32) -> Result<HighPrecisionReal> {
        self.scale_count(&count(n, d)?, n)
    }

    /// `n · (a(n, d)/n! · e² − 1)`, which tends to `4(d − 1)`.
    pub fn empirical_first_order(&self, n: u32, d: u32) -> Result<HighPrecisionReal> {
        Ok(first_order_of(&self.scaled_ratio(n, d)?, n))
    }

    /// `|a(n, d)/n! · e² − bracket|` for the order-`order` truncation.
    pub fn series_error(&self, kind: SeriesKind, n: u32, order: u32) -> Result<HighPrecisionReal> {
        let d = match kind {
            SeriesKind::Circular => 0,
            SeriesKind::Adjacent => 1,
            SeriesKind::FirstOrder(d) => d,
        };
        let bracket = series_bracket::<BigInt>(kind, n, order)?;
        Ok(self.scaled_ratio(n, d)?.sub_ratio(&bracket).abs())
    }

    /// Empirical first-order coefficients for each `n` (ascending, without
    /// repeats) and their distance to `4(d − 1)`.
    pub fn convergence_report(&self, d: u32, ns: &[u32]) -> Result<Vec<ConvergenceRow>> {
        let mut ns = ns.to_vec();
        ns.sort_unstable();
        ns.dedup();
        let target = 4 * (i64::from(d) - 1);
        ns.into_iter()
            .map(|n| {
                let scaled_ratio = self.scaled_ratio(n, d)?;
                let coefficient = first_order_of(&scaled_ratio, n);
                let distance = coefficient.sub_integer(&BigInt::from(target)).abs();
                Ok(ConvergenceRow {
                    n,
                    scaled_ratio,
                    coefficient,
                    target,
                    distance,
                })
            })
            .collect()
    }
}

fn first_order_of(scaled: &HighPrecisionReal, n: u32) -> HighPrecisionReal {
    scaled.sub_integer(&BigInt::from(1)).mul_integer(&BigInt::from(n))
}

/// `a(n, d)/n! · e²` at the default precision.
pub fn exact_ratio_scaled(n: u32, d: u32) -> Result<HighPrecisionReal> {
    Asymptotics::default().scaled_ratio(n, d)
}

/// `n · (a(n, d)/n! · e² − 1)` at the default precision.
pub fn empirical_first_order(n: u32, d: u32) -> Result<HighPrecisionReal> {
    Asymptotics::default().empirical_first_order(n, d)
}

pub fn convergence_report(d: u32, ns: &[u32]) -> Result<Vec<ConvergenceRow>> {
    Asymptotics::default().convergence_report(d, ns)
}
