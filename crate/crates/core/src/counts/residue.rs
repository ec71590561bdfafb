use crate::combi::Composition;
use crate::{Error, Result};

/// Sizes of the residue classes `{1 ≤ i ≤ n : i ≡ k (mod d)}` for `k = 1..d`,
/// with class `d` collecting the multiples of `d`.
///
/// Under the distance-`d` condition only positions in the same class interact,
/// so each class behaves like an independent path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueProfile {
    sizes: Vec<u32>,
}

impl ResidueProfile {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("residue profile needs n >= 1".into()));
        }
        if d == 0 {
            return Err(Error::Domain(
                "the circular case d = 0 has no residue decomposition".into(),
            ));
        }
        let sizes = (1..=d).map(|k| if k <= n { (n - k) / d + 1 } else { 0 }).collect();
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn size(&self, class: usize) -> u32 {
        self.sizes[class]
    }

    pub fn classes(&self) -> usize {
        self.sizes.len()
    }
}

/// One composition per residue class: class `k` contributes `c_k` parts
/// summing to `r_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartList {
    per_residue: Vec<Composition>,
}

impl PartList {
    pub fn new(per_residue: Vec<Composition>) -> Self {
        Self { per_residue }
    }

    /// Checks `r_k ≤ n_k − 1` (and `r_k = 0` when `n_k ≤ 1`) for every class.
    pub fn for_profile(profile: &ResidueProfile, per_residue: Vec<Composition>) -> Result<Self> {
        if per_residue.len() != profile.classes() {
            return Err(Error::Domain(format!(
                "{} compositions for {} residue classes",
                per_residue.len(),
                profile.classes()
            )));
        }
        for (k, comp) in per_residue.iter().enumerate() {
            let cap = profile.size(k).saturating_sub(1);
            if comp.total() > cap {
                return Err(Error::Domain(format!(
                    "class {} has r = {} but at most {cap} is allowed",
                    k + 1,
                    comp.total()
                )));
            }
        }
        Ok(Self { per_residue })
    }

    pub fn per_residue(&self) -> &[Composition] {
        &self.per_residue
    }

    /// `[l_1, …, l_c]`, class by class.
    pub fn flat(&self) -> Vec<u32> {
        self.per_residue.iter().flat_map(|c| c.parts().iter().copied()).collect()
    }

    /// `r = Σ r_k`.
    pub fn total(&self) -> u32 {
        self.per_residue.iter().map(Composition::total).sum()
    }

    /// `c = Σ c_k`.
    pub fn len(&self) -> usize {
        self.per_residue.iter().map(Composition::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_examples() {
        assert_eq!(ResidueProfile::new(8, 2).unwrap().sizes(), &[4, 4]);
        assert_eq!(ResidueProfile::new(16, 3).unwrap().sizes(), &[6, 5, 5]);
        assert_eq!(ResidueProfile::new(5, 3).unwrap().sizes(), &[2, 2, 1]);
        assert_eq!(ResidueProfile::new(2, 4).unwrap().sizes(), &[1, 1, 0, 0]);
        assert!(ResidueProfile::new(5, 0).is_err());
        assert!(ResidueProfile::new(0, 2).is_err());
    }

    #[test]
    fn profile_matches_direct_count() {
        for n in 1..=40u32 {
            for d in 1..=12u32 {
                let p = ResidueProfile::new(n, d).unwrap();
                for k in 1..=d {
                    let direct = (1..=n).filter(|i| i % d == k % d).count() as u32;
                    assert_eq!(p.size(k as usize - 1), direct);
                }
                assert_eq!(p.sizes().iter().sum::<u32>(), n);
                let (lo, hi) = (n / d, n.div_ceil(d));
                assert!(p.sizes().iter().all(|&s| s == lo || s == hi));
            }
        }
    }

    #[test]
    fn part_list_totals() {
        let profile = ResidueProfile::new(9, 2).unwrap();
        let l = PartList::for_profile(
            &profile,
            vec![
                Composition::new(vec![1, 2]).unwrap(),
                Composition::new(vec![2]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(l.flat(), vec![1, 2, 2]);
        assert_eq!(l.total(), 5);
        assert_eq!(l.len(), 3);

        let too_big = PartList::for_profile(
            &profile,
            vec![Composition::new(vec![5]).unwrap(), Composition::default()],
        );
        assert!(too_big.is_err());
        assert!(PartList::for_profile(&profile, vec![Composition::default()]).is_err());
    }
}
