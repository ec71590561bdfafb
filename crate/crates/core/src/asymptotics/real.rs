use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extra decimal places carried beyond the requested significant digits.
const GUARD_DIGITS: u32 = 8;

/// Fixed-point decimal `mantissa · 10^-scale` with a rigorous error radius
/// of `error` units in the last place.
///
/// Every operation widens the radius enough to cover its own rounding, so
/// the true value always lies in `[mid − err, mid + err]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighPrecisionReal {
    mantissa: BigInt,
    error: BigInt,
    scale: u32,
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

impl HighPrecisionReal {
    /// Rounds `value` to `scale` decimal places.
    pub fn from_ratio(value: &BigRational, scale: u32) -> Self {
        let scaled = value * BigRational::from_integer(pow10(scale));
        let mantissa = scaled.round().to_integer();
        let error = if scaled.is_integer() { BigInt::zero() } else { BigInt::one() };
        Self { mantissa, error, scale }
    }

    pub fn from_integer(value: BigInt, scale: u32) -> Self {
        Self {
            mantissa: value * pow10(scale),
            error: BigInt::zero(),
            scale,
        }
    }

    /// `e²` to at least `digits` significant digits.
    ///
    /// Sums `Σ 2^k/k!` until the tail, bounded by a geometric series, drops
    /// below half a unit in the last place.
    pub fn e_squared(digits: u32) -> Self {
        let scale = digits + GUARD_DIGITS;
        let half_ulp = BigRational::new(BigInt::one(), pow10(scale) * 2);
        let two = BigRational::from_integer(BigInt::from(2));
        let mut sum = BigRational::zero();
        let mut term = BigRational::one();
        let mut k = 0u32;
        loop {
            sum += &term;
            k += 1;
            term = term * &two / BigRational::from_integer(BigInt::from(k));
            // tail from index k is at most term_k / (1 - 2/(k+1))
            if k >= 2 {
                let ratio = BigRational::new(BigInt::from(2), BigInt::from(k + 1));
                let tail = &term / (BigRational::one() - ratio);
                if tail < half_ulp {
                    break;
                }
            }
        }
        let mut out = Self::from_ratio(&sum, scale);
        // rounding (<= 1/2 ulp) plus tail (< 1/2 ulp)
        out.error = BigInt::one();
        out
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn midpoint(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn error_bound(&self) -> BigRational {
        BigRational::new(self.error.clone(), pow10(self.scale))
    }

    pub fn lower(&self) -> BigRational {
        self.midpoint() - self.error_bound()
    }

    pub fn upper(&self) -> BigRational {
        self.midpoint() + self.error_bound()
    }

    pub fn contains(&self, value: &BigRational) -> bool {
        &self.lower() <= value && value <= &self.upper()
    }

    /// True when the two enclosures are consistent with the same value.
    pub fn overlaps(&self, other: &Self) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// Strict order that holds for every value in both enclosures.
    pub fn certainly_less_than(&self, other: &Self) -> bool {
        self.upper() < other.lower()
    }

    pub fn mul_ratio(&self, q: &BigRational) -> Self {
        let exact = BigRational::from_integer(self.mantissa.clone()) * q;
        let mantissa = exact.round().to_integer();
        let mut error = (BigRational::from_integer(self.error.clone()) * q.abs())
            .ceil()
            .to_integer();
        if !exact.is_integer() {
            error += 1;
        }
        Self { mantissa, error, scale: self.scale }
    }

    pub fn mul_integer(&self, k: &BigInt) -> Self {
        Self {
            mantissa: &self.mantissa * k,
            error: &self.error * k.abs(),
            scale: self.scale,
        }
    }

    pub fn sub_ratio(&self, q: &BigRational) -> Self {
        let shifted = Self::from_ratio(q, self.scale);
        Self {
            mantissa: &self.mantissa - shifted.mantissa,
            error: &self.error + shifted.error,
            scale: self.scale,
        }
    }

    pub fn sub_integer(&self, k: &BigInt) -> Self {
        Self {
            mantissa: &self.mantissa - k * pow10(self.scale),
            error: self.error.clone(),
            scale: self.scale,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            ..self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Midpoint rounded to `sig` significant digits, in plain decimal
    /// notation.
    pub fn to_significant(&self, sig: u32) -> String {
        if self.mantissa.is_zero() {
            return "0".to_string();
        }
        let negative = self.mantissa.is_negative();
        let magnitude = self.mantissa.abs();
        let len = magnitude.to_string().len() as i64;
        // keep `sig` digits of the mantissa, rounding half away from zero
        let drop = len - i64::from(sig);
        let (kept, scale) = match drop.cmp(&0) {
            Ordering::Greater => {
                let div = pow10(drop as u32);
                let (q, r) = magnitude.div_rem(&div);
                let q = if r * 2 >= div { q + 1 } else { q };
                (q, i64::from(self.scale) - drop)
            }
            _ => (magnitude, i64::from(self.scale)),
        };
        let digits = kept.to_string();
        let body = if scale <= 0 {
            format!("{digits}{}", "0".repeat((-scale) as usize))
        } else {
            let scale = scale as usize;
            if digits.len() > scale {
                let (int, frac) = digits.split_at(digits.len() - scale);
                format!("{int}.{frac}")
            } else {
                format!("0.{}{digits}", "0".repeat(scale - digits.len()))
            }
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(25) as u32;
        write!(f, "{}", self.to_significant(sig))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E2_50: &str = "7.389056098930650227230427460575007813180315570551847";

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn decimal(s: &str) -> BigRational {
        let (int, frac) = s.split_once('.').unwrap();
        let digits: BigInt = format!("{int}{frac}").parse().unwrap();
        BigRational::new(digits, pow10(frac.len() as u32))
    }

    #[test]
    fn e_squared_encloses_reference() {
        // reference truncated to 51 decimals, so it is within 1e-51 of e^2
        let reference = decimal(E2_50);
        for digits in [10, 30, 40] {
            let e2 = HighPrecisionReal::e_squared(digits);
            let slack = BigRational::new(BigInt::one(), pow10(51));
            assert!(e2.lower() - &slack <= reference && reference <= e2.upper() + &slack);
            assert!(e2.error_bound() <= BigRational::new(BigInt::one(), pow10(digits)));
        }
        assert_eq!(HighPrecisionReal::e_squared(30).to_significant(12), "7.38905609893");
    }

    #[test]
    fn rounding_and_exact_inputs() {
        let third = HighPrecisionReal::from_ratio(&ratio(1, 3), 5);
        assert_eq!(third.to_significant(5), "0.33333");
        assert!(third.contains(&ratio(1, 3)));
        let exact = HighPrecisionReal::from_ratio(&ratio(1, 4), 5);
        assert_eq!(exact.error_bound(), BigRational::zero());
        assert_eq!(HighPrecisionReal::from_integer(BigInt::from(-3), 4).to_significant(3), "-3.00");
    }

    #[test]
    fn arithmetic_keeps_enclosure() {
        let e2 = HighPrecisionReal::e_squared(30);
        let reference = decimal(E2_50);
        let q = ratio(9512, 40320);
        let prod = e2.mul_ratio(&q);
        assert!(prod.overlaps(&HighPrecisionReal::from_ratio(&(&reference * &q), 45)));
        let shifted = prod.sub_integer(&BigInt::one()).mul_integer(&BigInt::from(8));
        let expected = (&reference * &q - BigRational::one()) * BigRational::from_integer(BigInt::from(8));
        let tight = HighPrecisionReal::from_ratio(&expected, 45);
        assert!(shifted.overlaps(&tight));
        assert_eq!(shifted.to_significant(4), "5.945");
        let neg = shifted.sub_ratio(&ratio(6, 1));
        assert!(neg.to_f64() < 0.0);
        assert!(neg.abs().to_f64() > 0.0);
    }

    #[test]
    fn ordering_is_rigorous() {
        let a = HighPrecisionReal::from_ratio(&ratio(1, 3), 10);
        let b = HighPrecisionReal::from_ratio(&ratio(1, 2), 10);
        assert!(a.certainly_less_than(&b));
        assert!(!b.certainly_less_than(&a));
        assert!(!a.certainly_less_than(&a));
    }

    #[test]
    fn significant_digit_formatting() {
        let x = HighPrecisionReal::from_ratio(&ratio(123456789, 1000), 6);
        assert_eq!(x.to_significant(4), "123500");
        assert_eq!(x.to_significant(12), "123456.789000");
        assert_eq!(format!("{:.6}", x), "123457");
        let tiny = HighPrecisionReal::from_ratio(&ratio(7, 100000), 8);
        assert_eq!(tiny.to_significant(2), "0.000070");
        assert_eq!(HighPrecisionReal::from_integer(BigInt::zero(), 3).to_significant(5), "0");
    }
}
