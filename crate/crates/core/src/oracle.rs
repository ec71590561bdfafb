//! Brute-force counting by pruned backtracking.
//!
//! Positions are filled left to right and a value is rejected as soon as it
//! breaks the condition against an already placed neighbour. The circular
//! case (`d = 0`) reads both seats and values cyclically: seats `i` and `i+1`
//! (and seat `n` with seat `1`) may not hold values differing by `1` or `n−1`.
//! A single seat has no neighbour, so `n = 1` counts one permutation.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::scalar::{from_u64, ExactScalar};
use crate::{Error, Result};

/// Largest `n` searched without `force`.
pub const PRACTICAL_BOUND: u32 = 13;

/// Hard ceiling: used-value masks are `u32` and counts `u64`.
const HARD_LIMIT: u32 = 20;

/// Which adjacency relation the search enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `|π(i+d) − π(i)| ≠ d`.
    Linear(u32),
    /// Cyclic seats and cyclic value differences.
    Circular,
}

impl Mode {
    pub fn for_distance(d: u32) -> Self {
        if d == 0 {
            Mode::Circular
        } else {
            Mode::Linear(d)
        }
    }
}

/// Search configuration for one `(n, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    n: u32,
    mode: Mode,
    force: bool,
}

impl Oracle {
    pub fn new(n: u32, d: u32) -> Self {
        Self {
            n,
            mode: Mode::for_distance(d),
            force: false,
        }
    }

    /// Allow `n` above [`PRACTICAL_BOUND`].
    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if self.n > HARD_LIMIT || (self.n > PRACTICAL_BOUND && !self.force) {
            let bound = if self.force { HARD_LIMIT } else { PRACTICAL_BOUND };
            return Err(Error::Refused { n: self.n, bound });
        }
        Ok(())
    }

    pub fn count(&self) -> Result<u64> {
        self.check()?;
        let mut state = Prefix::new(self.n, self.mode);
        Ok(state.count_completions())
    }

    /// Splits the tree at depth `split_depth` and hands the subtrees to
    /// `workers` threads. Prefixes are generated in lexicographic order and
    /// the partial counts are summed, so the result equals [`Oracle::count`].
    pub fn count_parallel(&self, split_depth: u32, workers: usize) -> Result<u64> {
        self.check()?;
        if workers == 0 {
            return Err(Error::Domain("at least one worker is required".into()));
        }
        let mut roots = Vec::new();
        Prefix::new(self.n, self.mode).collect_prefixes(split_depth.min(self.n) as usize, &mut roots);

        let next = AtomicUsize::new(0);
        let total = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers.min(roots.len().max(1)))
                .map(|_| {
                    s.spawn(|| {
                        let mut sum = 0u64;
                        loop {
                            let i = next.fetch_add(1, Ordering::Relaxed);
                            let Some(root) = roots.get(i) else { break };
                            sum += root.clone().count_completions();
                        }
                        sum
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("oracle worker panicked")).sum()
        });
        Ok(total)
    }

    /// Counts permutations with `|π⁻¹(i+d) − π⁻¹(i)| ≠ d`: values `d` apart
    /// never sit `d` apart. The search assigns a seat to each value in turn,
    /// so it walks a different tree from [`Oracle::count`].
    pub fn count_inverse(&self) -> Result<u64> {
        self.check()?;
        let Mode::Linear(d) = self.mode else {
            return Err(Error::Domain("the inverse condition needs d >= 1".into()));
        };
        let mut seat_of = vec![0u32; self.n as usize];
        Ok(seat_values(self.n, d, 0, 0, &mut seat_of))
    }
}

fn seat_values(n: u32, d: u32, value: u32, taken: u32, seat_of: &mut [u32]) -> u64 {
    if value == n {
        return 1;
    }
    let mut total = 0;
    for seat in 0..n {
        if taken & (1 << seat) != 0 {
            continue;
        }
        if value >= d && seat_of[(value - d) as usize].abs_diff(seat) == d {
            continue;
        }
        seat_of[value as usize] = seat;
        total += seat_values(n, d, value + 1, taken | (1 << seat), seat_of);
    }
    total
}

#[derive(Debug, Clone)]
struct Prefix {
    n: u32,
    mode: Mode,
    placed: Vec<u32>,
    used: u32,
}

impl Prefix {
    fn new(n: u32, mode: Mode) -> Self {
        Self {
            n,
            mode,
            placed: Vec::with_capacity(n as usize),
            used: 0,
        }
    }

    fn cyclic_neighbours(&self, a: u32, b: u32) -> bool {
        let diff = a.abs_diff(b);
        diff == 1 || diff == self.n - 1
    }

    /// Whether `value` may go in the next free seat.
    fn accepts(&self, value: u32) -> bool {
        let p = self.placed.len();
        match self.mode {
            Mode::Linear(d) => {
                let d = d as usize;
                p < d || self.placed[p - d].abs_diff(value) != d as u32
            }
            Mode::Circular => {
                if p == 0 {
                    return true;
                }
                if self.cyclic_neighbours(value, self.placed[p - 1]) {
                    return false;
                }
                // last seat closes the circle with the first
                !(p + 1 == self.n as usize && p >= 2 && self.cyclic_neighbours(value, self.placed[0]))
            }
        }
    }

    fn push(&mut self, value: u32) {
        self.placed.push(value);
        self.used |= 1 << value;
    }

    fn pop(&mut self) {
        let value = self.placed.pop().unwrap();
        self.used &= !(1 << value);
    }

    fn count_completions(&mut self) -> u64 {
        if self.placed.len() == self.n as usize {
            return 1;
        }
        let mut total = 0;
        for value in 0..self.n {
            if self.used & (1 << value) == 0 && self.accepts(value) {
                self.push(value);
                total += self.count_completions();
                self.pop();
            }
        }
        total
    }

    fn collect_prefixes(&mut self, depth: usize, out: &mut Vec<Prefix>) {
        if self.placed.len() == depth {
            out.push(self.clone());
            return;
        }
        for value in 0..self.n {
            if self.used & (1 << value) == 0 && self.accepts(value) {
                self.push(value);
                self.collect_prefixes(depth, out);
                self.pop();
            }
        }
    }
}

/// `a(n, d)` by exhaustive search; refuses `n >` [`PRACTICAL_BOUND`].
pub fn oracle_count<T: ExactScalar>(n: u32, d: u32) -> Result<T> {
    from_u64(Oracle::new(n, d).count()?)
}

pub fn oracle_count_parallel<T: ExactScalar>(n: u32, d: u32, split_depth: u32, workers: usize) -> Result<T> {
    from_u64(Oracle::new(n, d).count_parallel(split_depth, workers)?)
}

pub fn inverse_condition_count<T: ExactScalar>(n: u32, d: u32) -> Result<T> {
    from_u64(Oracle::new(n, d).count_inverse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: u32, d: u32) -> u64 {
        Oracle::new(n, d).count().unwrap()
    }

    /// Plain filter over all n! permutations, no pruning.
    fn filtered(n: u32, d: u32) -> u64 {
        let mut perm: Vec<i64> = (0..i64::from(n)).collect();
        let n = n as usize;
        let mut total = 0;
        loop {
            let ok = if d == 0 {
                n == 1
                    || (0..n).all(|i| {
                        let diff = (perm[(i + 1) % n] - perm[i]).rem_euclid(n as i64);
                        diff != 1 && diff != n as i64 - 1
                    })
            } else {
                let d = d as usize;
                (0..n.saturating_sub(d)).all(|i| (perm[i + d] - perm[i]).abs() != d as i64)
            };
            total += u64::from(ok);
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return total;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn named_examples() {
        assert_eq!(count(8, 2), 9512);
        assert_eq!(count(5, 0), 10);
        assert_eq!(count(6, 3), 384);
        assert_eq!(count(1, 0), 1);
        assert_eq!(count(2, 0), 0);
        assert_eq!(count(8, 0), 2832);
        assert_eq!(count(8, 1), 5242);
    }

    #[test]
    fn pruned_search_matches_plain_filter() {
        for n in 1..=8u32 {
            for d in 0..=n + 1 {
                assert_eq!(count(n, d), filtered(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn parallel_examples() {
        assert_eq!(Oracle::new(8, 2).count_parallel(2, 4).unwrap(), 9512);
        assert_eq!(Oracle::new(7, 1).count_parallel(0, 1).unwrap(), count(7, 1));
        assert_eq!(Oracle::new(10, 1).count_parallel(3, 8).unwrap(), 479306);
        // split deeper than the tree
        assert_eq!(Oracle::new(3, 2).count_parallel(6, 2).unwrap(), 4);
        assert!(Oracle::new(3, 2).count_parallel(1, 0).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Oracle::new(8, 2).count_inverse().unwrap(), 9512);
        assert_eq!(Oracle::new(4, 1).count_inverse().unwrap(), 2);
        assert_eq!(Oracle::new(1, 1).count_inverse().unwrap(), 1);
        assert!(Oracle::new(4, 0).count_inverse().is_err());
    }

    #[test]
    fn refuses_above_bound_unless_forced() {
        assert_eq!(
            Oracle::new(14, 2).count(),
            Err(Error::Refused { n: 14, bound: PRACTICAL_BOUND })
        );
        assert!(Oracle::new(14, 2).count_parallel(2, 2).is_err());
        assert!(Oracle::new(14, 2).count_inverse().is_err());
        assert_eq!(
            Oracle::new(21, 30).force(true).count(),
            Err(Error::Refused { n: 21, bound: HARD_LIMIT })
        );
        assert!(Oracle::new(0, 1).count().is_err());
    }

    #[test]
    fn free_case() {
        let mut f = 1u64;
        for n in 1..=9u32 {
            f *= u64::from(n);
            assert_eq!(count(n, n), f);
            assert_eq!(count(n, n + 3), f);
        }
    }
}
