//! Closed sums for the circular (`d = 0`) and adjacent (`d = 1`) cases.

use num_rational::Ratio;
use num_traits::{CheckedAdd, Zero};

use crate::combi::{binomial, FactorialTable};
use crate::scalar::{add, from_i64, mul, pow2, sub, ExactScalar};
use crate::{Error, Result};

/// `Σ_{c=0}^{r} 2^c C(r−1, c−1) C(n−r, c)`, the inner sum shared by both
/// closed forms.
fn inner_sum<T: ExactScalar>(n: u32, r: u32) -> Result<T> {
    let (n, r) = (i64::from(n), i64::from(r));
    (0..=r).try_fold(T::zero(), |acc, c| {
        let term = mul(
            &pow2::<T>(c as u32)?,
            &mul(&binomial::<T>(r - 1, c - 1)?, &binomial::<T>(n - r, c)?)?,
        )?;
        add(&acc, &term)
    })
}

/// Robbins' sum for the Hertzsprung problem,
/// `Σ_{r<n} Σ_{c≤r} (−1)^r 2^c (n−r)! C(r−1, c−1) C(n−r, c)`.
pub fn count_d1<T: ExactScalar>(n: u32) -> Result<T> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let fact = FactorialTable::<T>::new(n)?;
    let mut total = T::zero();
    for r in 0..n {
        let term = mul(fact.get(n - r), &inner_sum::<T>(n, r)?)?;
        total = if r % 2 == 0 { add(&total, &term)? } else { sub(&total, &term)? };
    }
    Ok(total)
}

/// The circular sum taken literally, including its `(−1)^n 2n` correction.
///
/// Valid for `n ≥ 3`; it returns `−1` and `−2` at `n = 1, 2` where the true
/// counts are `1` and `0`. Intermediates are exact rationals because of the
/// `(n/(n−r))²` factor, and the total must come out integral.
pub fn count_d0_formula<T: ExactScalar>(n: u32) -> Result<T> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let fact = FactorialTable::<T>::new(n)?;
    let n_sq = mul(&from_i64::<T>(i64::from(n))?, &from_i64(i64::from(n))?)?;
    let mut total = Ratio::<T>::zero();
    for r in 0..n {
        let rest = from_i64::<T>(i64::from(n - r))?;
        let numer = mul(&mul(fact.get(n - r), &inner_sum::<T>(n, r)?)?, &n_sq)?;
        let denom = mul(&rest, &rest)?;
        let mut term = Ratio::new(numer, denom);
        if r % 2 == 1 {
            term = -term;
        }
        total = total.checked_add(&term).ok_or(Error::Overflow)?;
    }
    let two_n = from_i64::<T>(2 * i64::from(n))?;
    let correction = if n.is_multiple_of(2) { two_n } else { -two_n };
    total = total
        .checked_add(&Ratio::from_integer(correction))
        .ok_or(Error::Overflow)?;
    if !total.denom().is_one() {
        return Err(Error::NonIntegral(format!("{}/{}", total.numer(), total.denom())));
    }
    Ok(total.to_integer())
}

/// Circular count: `1` for `n = 1`, `0` for `n = 2`, the formula beyond.
pub fn count_d0<T: ExactScalar>(n: u32) -> Result<T> {
    match n {
        0 => Err(Error::Domain("n must be at least 1".into())),
        1 => Ok(T::one()),
        2 => Ok(T::zero()),
        _ => count_d0_formula(n),
    }
}
