//! The redistribution kernel `q_{n,d}(L)`.
//!
//! `q` sums, over every way of sending the `c` parts of `L` into `d` labelled
//! (possibly empty) residue blocks with `Σ_{i∈J_k} l_i ≤ n_k`, the product
//! `Π_k C(n_k − Σ_{i∈J_k} l_i, |J_k|) · |J_k|!`.
//!
//! A block's factor only sees how many parts it got and their sum, so `q` is
//! a function of the part multiset. [`QKernel`] distributes multiplicities
//! block by block and memoizes on `(n, d, block, sorted remaining parts)`.
//! [`q_value_enumerated`] walks all `d^c` assignments and is kept as the
//! reference.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::combi::{binomial, block_assignments, factorial};
use crate::counts::ResidueProfile;
use crate::scalar::{add, mul, ExactScalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct QKey {
    n: u32,
    d: u32,
    /// First block still to fill; `0` keys a complete `q` value.
    block: u32,
    /// Remaining parts, ascending.
    parts: Vec<u32>,
}

/// Memoizing evaluator for `q`, shareable across threads.
///
/// Entries are partial sums "place these parts into blocks `k..d`", keyed by
/// `(n, d, k, sorted parts)`. Sub-multisets recur across different `L`, so one
/// kernel serves a whole table. Concurrent callers may compute the same entry
/// twice; the first insert wins and both get the same value.
#[derive(Debug, Default)]
pub struct QKernel<T> {
    memo: RwLock<HashMap<QKey, T>>,
}

impl<T: ExactScalar> QKernel<T> {
    pub fn new() -> Self {
        Self {
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn q(&self, n: u32, d: u32, parts: &[u32]) -> Result<T> {
        check_parts(parts)?;
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        let profile = ResidueProfile::new(n, d)?;
        let capacity = suffix_capacity(&profile);
        Placement {
            kernel: self,
            n,
            d,
            profile: &profile,
            capacity: &capacity,
        }
        .place(0, sorted)
    }

    /// Number of complete `q` values held.
    pub fn cached_entries(&self) -> usize {
        self.memo.read().unwrap().keys().filter(|k| k.block == 0).count()
    }

    fn lookup(&self, key: &QKey) -> Option<T> {
        self.memo.read().unwrap().get(key).cloned()
    }

    fn store(&self, key: QKey, value: T) -> T {
        self.memo.write().unwrap().entry(key).or_insert(value).clone()
    }
}

/// `q_{n,d}(parts)` with a throwaway cache.
pub fn q_value<T: ExactScalar>(n: u32, d: u32, parts: &[u32]) -> Result<T> {
    QKernel::new().q(n, d, parts)
}

/// `q_{n,d}(parts)` by direct enumeration of every block assignment.
pub fn q_value_enumerated<T: ExactScalar>(n: u32, d: u32, parts: &[u32]) -> Result<T> {
    check_parts(parts)?;
    let profile = ResidueProfile::new(n, d)?;
    let mut total = T::zero();
    'assignments: for assignment in block_assignments(parts.len() as u32, d) {
        let mut term = T::one();
        for (k, members) in assignment.blocks().iter().enumerate() {
            let used: u32 = members.iter().map(|&i| parts[i]).sum();
            let size = profile.size(k);
            if used > size {
                continue 'assignments;
            }
            let m = members.len() as i64;
            let ways = mul(
                &binomial::<T>(i64::from(size - used), m)?,
                &factorial::<T>(m)?,
            )?;
            term = mul(&term, &ways)?;
        }
        total = add(&total, &term)?;
    }
    Ok(total)
}

fn check_parts(parts: &[u32]) -> Result<()> {
    if parts.contains(&0) {
        return Err(Error::Domain(format!("q parts must be positive: {parts:?}")));
    }
    Ok(())
}

/// `capacity[k]` = total size of blocks `k..d`.
fn suffix_capacity(profile: &ResidueProfile) -> Vec<u32> {
    let mut out = vec![0; profile.classes() + 1];
    for k in (0..profile.classes()).rev() {
        out[k] = out[k + 1] + profile.size(k);
    }
    out
}

struct Placement<'a, T> {
    kernel: &'a QKernel<T>,
    n: u32,
    d: u32,
    profile: &'a ResidueProfile,
    capacity: &'a [u32],
}

impl<T: ExactScalar> Placement<'_, T> {
    /// Ways to send the labelled parts `remaining` (ascending) into blocks
    /// `block..d`.
    fn place(&self, block: usize, remaining: Vec<u32>) -> Result<T> {
        if remaining.iter().sum::<u32>() > self.capacity[block] {
            return Ok(T::zero());
        }
        let last = self.profile.classes() - 1;
        if block == last {
            let m = remaining.len() as u32;
            return self.block_factor(block, m, remaining.iter().sum());
        }
        let key = QKey {
            n: self.n,
            d: self.d,
            block: block as u32,
            parts: remaining,
        };
        if let Some(v) = self.kernel.lookup(&key) {
            return Ok(v);
        }

        let mut values = Vec::new();
        let mut counts = Vec::new();
        for run in key.parts.chunk_by(|a, b| a == b) {
            values.push(run[0]);
            counts.push(run.len() as u32);
        }
        let size = self.profile.size(block);
        let mut total = T::zero();
        let mut take = vec![0u32; counts.len()];
        loop {
            let used: u32 = values.iter().zip(&take).map(|(v, t)| v * t).sum();
            if used <= size {
                let m: u32 = take.iter().sum();
                let mut here = self.block_factor(block, m, used)?;
                for (&c, &t) in counts.iter().zip(&take) {
                    if t != 0 && t != c {
                        here = mul(&here, &binomial::<T>(i64::from(c), i64::from(t))?)?;
                    }
                }
                let rest: Vec<u32> = values
                    .iter()
                    .zip(counts.iter().zip(&take))
                    .flat_map(|(&v, (&c, &t))| std::iter::repeat_n(v, (c - t) as usize))
                    .collect();
                let below = self.place(block + 1, rest)?;
                if !below.is_zero() {
                    total = add(&total, &mul(&here, &below)?)?;
                }
            }
            if !advance(&mut take, &counts) {
                break;
            }
        }
        Ok(self.kernel.store(key, total))
    }

    /// `C(n_k − used, m) · m!` for a block receiving `m` parts of total `used`.
    fn block_factor(&self, block: usize, m: u32, used: u32) -> Result<T> {
        let size = self.profile.size(block);
        if used > size {
            return Ok(T::zero());
        }
        mul(
            &binomial::<T>(i64::from(size - used), i64::from(m))?,
            &factorial::<T>(i64::from(m))?,
        )
    }
}

/// Odometer over `0..=bound[j]`; false once it wraps.
fn advance(take: &mut [u32], bound: &[u32]) -> bool {
    for (t, &b) in take.iter_mut().zip(bound) {
        if *t < b {
            *t += 1;
            return true;
        }
        *t = 0;
    }
    false
}
