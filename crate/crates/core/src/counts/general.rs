//! Inclusion–exclusion for `d ≥ 2`.
//!
//! For each residue class `k` the outer sums pick `r_k ∈ [0, n_k − 1]`,
//! `c_k ∈ [0, r_k]` and a composition of `r_k` into `c_k` parts. The term is
//!
//! ```text
//! (−1)^r 2^c (n − r − c)! Π_k C(n_k − r_k, c_k) · q_{n,d}(L)
//! ```
//!
//! with `r = Σ r_k`, `c = Σ c_k` and `L` the concatenated parts.
//!
//! [`count_general`] groups compositions by their part multiset and weights
//! each group by its number of orderings. The sign, `2^c`, `(n − r − c)!`
//! and `q` all depend only on the merged multiset of parts, so the classes
//! are folded into one multiset → weight map before any `q` is evaluated.
//! [`count_general_reference`] iterates literal compositions and literal
//! block assignments, so the two paths check each other.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::combi::{arrangements, binomial, compositions, partitions, Composition, FactorialTable};
use crate::counts::kernel::{q_value_enumerated, QKernel};
use crate::counts::ResidueProfile;
use crate::scalar::{add, mul, pow2, sub, ExactScalar};
use crate::{Error, Result};

fn check_range(n: u32, d: u32) -> Result<()> {
    if d < 2 || n < 2 || d > n - 1 {
        return Err(Error::Domain(format!(
            "the general formula needs 2 <= d <= n - 1, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

/// `a(n, d)` for `2 ≤ d ≤ n − 1`, with a private `q` cache.
pub fn count_general<T: ExactScalar>(n: u32, d: u32) -> Result<T> {
    count_general_with(&QKernel::new(), n, d)
}

/// One residue class's contribution to a term.
struct ClassChoice<T> {
    /// Ascending.
    parts: Vec<u32>,
    /// `C(n_k − r_k, c_k)` times the number of compositions with these parts.
    weight: T,
}

/// [`count_general`] sharing `kernel`'s `q` cache, e.g. across a table.
pub fn count_general_with<T: ExactScalar>(kernel: &QKernel<T>, n: u32, d: u32) -> Result<T> {
    check_range(n, d)?;
    let profile = ResidueProfile::new(n, d)?;
    let mut per_class = Vec::with_capacity(d as usize);
    for &size in profile.sizes() {
        let mut choices = Vec::new();
        for r in 0..size.max(1) {
            for c in 0..=r {
                let fit = binomial::<T>(i64::from(size - r), i64::from(c))?;
                if fit.is_zero() {
                    continue;
                }
                for mut parts in partitions(r, c) {
                    let weight = mul(&fit, &arrangements::<T>(&parts)?)?;
                    parts.reverse();
                    choices.push(ClassChoice { parts, weight });
                }
            }
        }
        per_class.push(choices);
    }

    // fold classes one at a time into sorted-multiset -> accumulated weight
    let mut merged: HashMap<Vec<u32>, T> = HashMap::from([(Vec::new(), T::one())]);
    for choices in &per_class {
        let mut next: HashMap<Vec<u32>, T> = HashMap::with_capacity(merged.len() * 2);
        for (parts, weight) in &merged {
            for choice in choices {
                let key = merge_sorted(parts, &choice.parts);
                let w = mul(weight, &choice.weight)?;
                match next.entry(key) {
                    Entry::Occupied(mut e) => {
                        let sum = add(e.get(), &w)?;
                        e.insert(sum);
                    }
                    Entry::Vacant(e) => {
                        e.insert(w);
                    }
                }
            }
        }
        merged = next;
    }

    let fact = FactorialTable::<T>::new(n)?;
    let mut entries: Vec<(Vec<u32>, T)> = merged.into_iter().collect();
    entries.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut total = T::zero();
    for (parts, weight) in entries {
        let r: u32 = parts.iter().sum();
        let c = parts.len() as u32;
        let q = kernel.q(n, d, &parts)?;
        let term = mul(&mul(&weight, &q)?, &mul(&pow2(c)?, fact.get(n - r - c))?)?;
        total = if r.is_multiple_of(2) { add(&total, &term)? } else { sub(&total, &term)? };
    }
    Ok(total)
}

fn merge_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// The same sum over literal compositions, with `q` by enumerating all `d^c`
/// block assignments. Exponential in `c`; meant for cross-checking small `n`.
pub fn count_general_reference<T: ExactScalar>(n: u32, d: u32) -> Result<T> {
    check_range(n, d)?;
    let profile = ResidueProfile::new(n, d)?;
    let per_class: Vec<Vec<Composition>> = profile
        .sizes()
        .iter()
        .map(|&size| {
            (0..size.max(1))
                .flat_map(|r| (0..=r).flat_map(move |c| compositions(r, c)))
                .collect()
        })
        .collect();
    let fact = FactorialTable::<T>::new(n)?;

    let mut total = T::zero();
    let mut pick = vec![0usize; per_class.len()];
    loop {
        let chosen: Vec<&Composition> = pick.iter().zip(&per_class).map(|(&i, list)| &list[i]).collect();
        let mut fit = T::one();
        for (comp, &size) in chosen.iter().zip(profile.sizes()) {
            let b = binomial::<T>(i64::from(size - comp.total()), comp.len() as i64)?;
            fit = mul(&fit, &b)?;
        }
        if !fit.is_zero() {
            let r: u32 = chosen.iter().map(|comp| comp.total()).sum();
            let c = chosen.iter().map(|comp| comp.len()).sum::<usize>() as u32;
            let flat: Vec<u32> = chosen.iter().flat_map(|comp| comp.parts().iter().copied()).collect();
            let q = q_value_enumerated::<T>(n, d, &flat)?;
            let term = mul(&mul(&fit, &q)?, &mul(&pow2(c)?, fact.get(n - r - c))?)?;
            total = if r.is_multiple_of(2) { add(&total, &term)? } else { sub(&total, &term)? };
        }
        // odometer over the per-class lists
        let mut k = pick.len();
        loop {
            if k == 0 {
                return Ok(total);
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < per_class[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}
