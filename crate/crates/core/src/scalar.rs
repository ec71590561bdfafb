use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed};

use crate::{Error, Result};

/// Exact signed integer that the counting engines can run over.
///
/// Machine integers report [`Error::Overflow`] through the checked helpers
/// below instead of wrapping.
pub trait ExactScalar:
    Clone
    + Integer
    + Signed
    + FromPrimitive
    + ToBigInt
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn try_from_bigint(value: &BigInt) -> Option<Self>;
}

impl ExactScalar for BigInt {
    fn try_from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
}

impl ExactScalar for i64 {
    fn try_from_bigint(value: &BigInt) -> Option<Self> {
        i64::try_from(value).ok()
    }
}

impl ExactScalar for i128 {
    fn try_from_bigint(value: &BigInt) -> Option<Self> {
        i128::try_from(value).ok()
    }
}

pub(crate) fn add<T: ExactScalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: ExactScalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: ExactScalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn from_i64<T: ExactScalar>(v: i64) -> Result<T> {
    T::from_i64(v).ok_or(Error::Overflow)
}

pub(crate) fn from_u64<T: ExactScalar>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow)
}

/// `2^e`, built by repeated doubling so overflow is caught.
pub(crate) fn pow2<T: ExactScalar>(e: u32) -> Result<T> {
    let two = from_i64::<T>(2)?;
    (0..e).try_fold(T::one(), |acc, _| mul(&acc, &two))
}
