//! Binomials, factorials and the two enumeration streams the counting
//! formulas are built from.
//!
//! Both streams are lexicographic and yield owned values, so a consumer can
//! keep any element without holding up the iterator.

use crate::scalar::{from_i64, mul, ExactScalar};
use crate::{Error, Result};

/// `C(a, b)` extended to `a = −1`.
///
/// For `a ≥ 0` this is the usual binomial, zero when `b < 0` or `b > a`.
/// `C(−1, −1) = 1` and `C(a, −1) = 0` for every other `a`; `C(−1, b) = 0` for
/// `b ≠ −1`. Upper arguments below `−1` are rejected: no formula here ever
/// reaches them, so one showing up means a summation bound is off.
pub fn binomial<T: ExactScalar>(a: i64, b: i64) -> Result<T> {
    if a < -1 {
        return Err(Error::Domain(format!("binomial upper argument {a} is below -1")));
    }
    if b == -1 {
        return Ok(if a == -1 { T::one() } else { T::zero() });
    }
    if a == -1 || b < 0 || b > a {
        return Ok(T::zero());
    }
    let k = b.min(a - b);
    let mut acc = T::one();
    for i in 1..=k {
        // acc = C(a - k + i - 1, i - 1) here, so the division is exact
        acc = mul(&acc, &from_i64(a - k + i)?)? / from_i64(i)?;
    }
    Ok(acc)
}

pub fn factorial<T: ExactScalar>(m: i64) -> Result<T> {
    if m < 0 {
        return Err(Error::Domain(format!("factorial of negative {m}")));
    }
    (2..=m).try_fold(T::one(), |acc, i| mul(&acc, &from_i64(i)?))
}

/// `0!, 1!, …, max!`, computed once and indexed afterwards.
#[derive(Debug, Clone)]
pub struct FactorialTable<T> {
    values: Vec<T>,
}

impl<T: ExactScalar> FactorialTable<T> {
    pub fn new(max: u32) -> Result<Self> {
        let mut values = Vec::with_capacity(max as usize + 1);
        values.push(T::one());
        for i in 1..=i64::from(max) {
            let next = mul(values.last().unwrap(), &from_i64(i)?)?;
            values.push(next);
        }
        Ok(Self { values })
    }

    pub fn get(&self, m: u32) -> &T {
        &self.values[m as usize]
    }
}

/// An ordered list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Fails if any part is zero.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

/// Every composition of `total` into exactly `parts` positive parts, in
/// lexicographic order. There are `C(total − 1, parts − 1)` of them.
pub fn compositions(total: u32, parts: u32) -> Compositions {
    let current = if parts == 0 {
        (total == 0).then(Vec::new)
    } else if parts > total {
        None
    } else {
        let mut first = vec![1; parts as usize];
        first[parts as usize - 1] = total - parts + 1;
        Some(first)
    };
    Compositions { current }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.take()?;
        self.current = next_composition(&out);
        Some(Composition(out))
    }
}

fn next_composition(parts: &[u32]) -> Option<Vec<u32>> {
    let k = parts.len();
    if k < 2 {
        return None;
    }
    let mut tail_sum = parts[k - 1];
    for i in (0..k - 1).rev() {
        let tail_len = (k - 1 - i) as u32;
        if tail_sum > tail_len {
            let mut next = parts.to_vec();
            next[i] += 1;
            next[i + 1..k - 1].fill(1);
            next[k - 1] = tail_sum - tail_len;
            return Some(next);
        }
        tail_sum += parts[i];
    }
    None
}

/// A map from part index `0..c` to one of `d` labelled blocks.
///
/// Indices and block labels are zero-based. Blocks may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockAssignment {
    block_of: Vec<u32>,
    blocks: u32,
}

impl BlockAssignment {
    pub fn block_of(&self, index: usize) -> u32 {
        self.block_of[index]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.block_of
    }

    pub fn num_blocks(&self) -> u32 {
        self.blocks
    }

    /// Indices sent to `block`, ascending.
    pub fn members(&self, block: u32) -> impl Iterator<Item = usize> + '_ {
        self.block_of
            .iter()
            .enumerate()
            .filter(move |&(_, &b)| b == block)
            .map(|(i, _)| i)
    }

    /// Preimage of every block, in block order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks as usize];
        for (i, &b) in self.block_of.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }
}

/// All `d^c` assignments of `c` indices to `d` blocks, lexicographic in
/// `(block_of(0), …, block_of(c−1))`.
pub fn block_assignments(c: u32, d: u32) -> BlockAssignments {
    let current = (c == 0 || d > 0).then(|| vec![0; c as usize]);
    BlockAssignments { current, blocks: d }
}

#[derive(Debug, Clone)]
pub struct BlockAssignments {
    current: Option<Vec<u32>>,
    blocks: u32,
}

impl Iterator for BlockAssignments {
    type Item = BlockAssignment;

    fn next(&mut self) -> Option<BlockAssignment> {
        let out = self.current.take()?;
        let mut next = out.clone();
        for slot in next.iter_mut().rev() {
            *slot += 1;
            if *slot < self.blocks {
                self.current = Some(next);
                break;
            }
            *slot = 0;
        }
        Some(BlockAssignment {
            block_of: out,
            blocks: self.blocks,
        })
    }
}

/// Partitions of `total` into exactly `parts` positive parts, each listed in
/// non-increasing order. Output is reverse-lexicographic.
pub fn partitions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, slots: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // each of the `slots` parts is at least 1 and at most `cap`
        if remaining < slots || remaining > slots * cap {
            return;
        }
        let hi = cap.min(remaining - (slots - 1));
        for first in (1..=hi).rev() {
            prefix.push(first);
            go(remaining - first, slots - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, total.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of distinct orderings of a multiset, `c! / Π mᵢ!`.
pub fn arrangements<T: ExactScalar>(multiset: &[u32]) -> Result<T> {
    let mut sorted = multiset.to_vec();
    sorted.sort_unstable();
    let mut acc = factorial::<T>(sorted.len() as i64)?;
    for run in sorted.chunk_by(|a, b| a == b) {
        acc = acc / factorial::<T>(run.len() as i64)?;
    }
    Ok(acc)
}
