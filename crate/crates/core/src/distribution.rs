use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Weight distribution `(w, A_w)`, sorted by weight, zero multiplicities
/// dropped. The weight-0 entry is kept.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightDistribution {
    entries: Vec<(u128, u128)>,
}

/// One weight on which two distributions disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionDiff {
    pub weight: u128,
    pub left: u128,
    pub right: u128,
}

impl WeightDistribution {
    /// Accumulates `(weight, count)` pairs; repeated weights are summed.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (u128, u128)>,
    {
        let mut merged = BTreeMap::new();
        for (w, c) in counts {
            *merged.entry(w).or_insert(0u128) += c;
        }
        Self { entries: merged.into_iter().filter(|&(_, c)| c > 0).collect() }
    }

    /// Histogram indexed by weight.
    pub fn from_histogram(hist: &[u64]) -> Self {
        Self::from_counts(hist.iter().enumerate().map(|(w, &c)| (w as u128, c as u128)))
    }

    pub fn entries(&self) -> &[(u128, u128)] {
        &self.entries
    }

    pub fn multiplicity(&self, weight: u128) -> u128 {
        self.entries.binary_search_by_key(&weight, |&(w, _)| w).map_or(0, |i| self.entries[i].1)
    }

    /// Number of codewords counted, weight 0 included.
    pub fn total(&self) -> u128 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    /// Smallest positive weight.
    pub fn min_distance(&self) -> Option<u128> {
        self.entries.iter().map(|&(w, _)| w).find(|&w| w > 0)
    }

    /// Number of distinct nonzero weights.
    pub fn nonzero_weight_count(&self) -> usize {
        self.entries.iter().filter(|&&(w, _)| w > 0).count()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (u128, u128)> + '_ {
        self.entries.iter().copied().filter(|&(w, _)| w > 0)
    }

    /// Weights where the multiplicities differ.
    pub fn diff(&self, other: &Self) -> Vec<DistributionDiff> {
        let mut weights: Vec<u128> = self.entries.iter().chain(&other.entries).map(|&(w, _)| w).collect();
        weights.sort_unstable();
        weights.dedup();
        weights
            .into_iter()
            .filter_map(|w| {
                let (left, right) = (self.multiplicity(w), other.multiplicity(w));
                (left != right).then_some(DistributionDiff { weight: w, left, right })
            })
            .collect()
    }
}

/// Renders the weight enumerator, e.g. `1+12z^6+54z^8`.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.entries.iter().map(|&(w, c)| if w == 0 { c.to_string() } else { format!("{c}z^{w}") }).collect();
        write!(f, "{}", terms.join("+"))
    }
}
