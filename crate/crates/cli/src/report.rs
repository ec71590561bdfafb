use dconsec::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationEntry {
    pub n: u32,
    pub d: u32,
    pub formula: ExactInt,
    pub oracle: ExactInt,
}

impl VerificationEntry {
    pub fn matches(&self) -> bool {
        self.formula == self.oracle
    }
}

/// Formula against oracle over a grid of `(n, d)` cells, ordered by `(n, d)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<VerificationEntry>,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(VerificationEntry::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &VerificationEntry> {
        self.entries.iter().filter(|e| !e.matches())
    }

    pub fn summary(&self) -> String {
        let bad = self.mismatches().count();
        if bad == 0 {
            format!("verified {} cells: all match", self.entries.len())
        } else {
            format!("verified {} cells: {bad} mismatches", self.entries.len())
        }
    }
}
