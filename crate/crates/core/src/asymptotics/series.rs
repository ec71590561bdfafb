use num_rational::Ratio;
use num_traits::{CheckedAdd, Zero};

use crate::scalar::{from_i64, mul, ExactScalar};
use crate::{Error, Result};

/// Which expansion of `a(n, d)/n!` (divided by `e^{-2}`) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `d = 0`: `1 − 4/n + 20/(3n³) + 58/(3n⁴) + 736/(15n⁵)`.
    Circular,
    /// `d = 1`: `1 − 2/n² − 10/(3n³) − 6/n⁴ − 154/(15n⁵)`.
    Adjacent,
    /// Any `d`, first order only: `1 + 4(d − 1)/n`.
    FirstOrder(u32),
}

const CIRCULAR: [(i64, i64); 6] = [(1, 1), (-4, 1), (0, 1), (20, 3), (58, 3), (736, 15)];
const ADJACENT: [(i64, i64); 6] = [(1, 1), (0, 1), (-2, 1), (-10, 3), (-6, 1), (-154, 15)];

/// Coefficients `c_j` of the bracket `Σ c_j n^{-j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    kind: SeriesKind,
    coeffs: Vec<(i64, i64)>,
}

impl SeriesExpansion {
    pub fn new(kind: SeriesKind) -> Self {
        let coeffs = match kind {
            SeriesKind::Circular => CIRCULAR.to_vec(),
            SeriesKind::Adjacent => ADJACENT.to_vec(),
            SeriesKind::FirstOrder(d) => vec![(1, 1), (4 * (i64::from(d) - 1), 1)],
        };
        Self { kind, coeffs }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// Highest order with a known coefficient.
    pub fn max_order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coefficient<T: ExactScalar>(&self, j: u32) -> Result<Ratio<T>> {
        let &(p, q) = self
            .coeffs
            .get(j as usize)
            .ok_or_else(|| Error::Domain(format!("no coefficient of order {j}")))?;
        Ok(Ratio::new(from_i64(p)?, from_i64(q)?))
    }

    /// `Σ_{j ≤ order} c_j n^{-j}`, exactly.
    pub fn bracket<T: ExactScalar>(&self, n: u32, order: u32) -> Result<Ratio<T>> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if order > self.max_order() {
            return Err(Error::Domain(format!(
                "order {order} exceeds the {} known terms",
                self.max_order()
            )));
        }
        let n = from_i64::<T>(i64::from(n))?;
        let mut power = T::one();
        let mut sum = Ratio::<T>::zero();
        for j in 0..=order {
            let c = self.coefficient::<T>(j)?;
            let term = Ratio::new(c.numer().clone(), mul(c.denom(), &power)?);
            sum = sum.checked_add(&term).ok_or(Error::Overflow)?;
            power = mul(&power, &n)?;
        }
        Ok(sum)
    }
}

/// Truncated bracket of the `d = 0` or `d = 1` expansion.
pub fn series_bracket<T: ExactScalar>(kind: SeriesKind, n: u32, order: u32) -> Result<Ratio<T>> {
    SeriesExpansion::new(kind).bracket(n, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Ratio<i64> {
        Ratio::new(p, q)
    }

    #[test]
    fn bracket_examples() {
        for n in [1, 7, 16] {
            assert_eq!(series_bracket::<i64>(SeriesKind::Circular, n, 0).unwrap(), r(1, 1));
        }
        assert_eq!(series_bracket::<i64>(SeriesKind::Adjacent, 2, 2).unwrap(), r(1, 2));
        assert_eq!(series_bracket::<i64>(SeriesKind::Circular, 16, 1).unwrap(), r(3, 4));
        assert_eq!(series_bracket::<i64>(SeriesKind::FirstOrder(3), 8, 1).unwrap(), r(2, 1));
    }

    #[test]
    fn coefficients_verbatim() {
        let circ = SeriesExpansion::new(SeriesKind::Circular);
        let adj = SeriesExpansion::new(SeriesKind::Adjacent);
        assert_eq!(circ.coefficient::<i64>(5).unwrap(), r(736, 15));
        assert_eq!(circ.coefficient::<i64>(2).unwrap(), r(0, 1));
        assert_eq!(circ.coefficient::<i64>(1).unwrap(), r(-4, 1));
        assert_eq!(adj.coefficient::<i64>(3).unwrap(), r(-10, 3));
        assert_eq!(adj.coefficient::<i64>(1).unwrap(), r(0, 1));
        assert_eq!(adj.coefficient::<i64>(2).unwrap(), r(-2, 1));
        assert_eq!(circ.coefficient::<i64>(0).unwrap(), r(1, 1));
        assert_eq!(adj.coefficient::<i64>(0).unwrap(), r(1, 1));
        assert_eq!(SeriesExpansion::new(SeriesKind::FirstOrder(1)).coefficient::<i64>(1).unwrap(), r(0, 1));
    }

    #[test]
    fn full_order_five_value() {
        // 1 - 4/2 + 20/24 + 58/48 + 736/480
        let v = series_bracket::<i64>(SeriesKind::Circular, 2, 5).unwrap();
        assert_eq!(v, r(1, 1) - r(2, 1) + r(5, 6) + r(29, 24) + r(23, 15));
    }

    #[test]
    fn order_out_of_range() {
        assert!(series_bracket::<i64>(SeriesKind::Adjacent, 5, 6).is_err());
        assert!(series_bracket::<i64>(SeriesKind::FirstOrder(2), 5, 2).is_err());
        assert!(series_bracket::<i64>(SeriesKind::Adjacent, 0, 1).is_err());
    }
}
