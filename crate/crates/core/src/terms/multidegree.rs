use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Label;

/// Label content of a homogeneous shape: label ↦ number of occurrences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Multidegree<L: Label>(BTreeMap<L, usize>);

impl<L: Label> Default for Multidegree<L> {
    fn default() -> Self {
        Multidegree(BTreeMap::new())
    }
}

impl<L: Label> Multidegree<L> {
    pub fn from_labels<I: IntoIterator<Item = L>>(labels: I) -> Self {
        let mut counts = BTreeMap::new();
        for l in labels {
            *counts.entry(l).or_insert(0) += 1;
        }
        Multidegree(counts)
    }

    /// Zero counts are dropped.
    pub fn from_counts<I: IntoIterator<Item = (L, usize)>>(counts: I) -> Self {
        let mut map = BTreeMap::new();
        for (l, c) in counts {
            if c > 0 {
                *map.entry(l).or_insert(0) += c;
            }
        }
        Multidegree(map)
    }

    pub fn count(&self, label: &L) -> usize {
        self.0.get(label).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, usize)> {
        self.0.iter().map(|(l, &c)| (l, c))
    }

    /// Distinct labels in increasing order.
    pub fn support(&self) -> impl Iterator<Item = &L> {
        self.0.keys()
    }

    /// Labels with multiplicity, in increasing order.
    pub fn labels(&self) -> Vec<L> {
        self.0
            .iter()
            .flat_map(|(l, &c)| std::iter::repeat_n(l.clone(), c))
            .collect()
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.values().all(|&c| c == 1)
    }

    /// `self - {label: 1}`, or `None` if the label is absent.
    pub fn without_one(&self, label: &L) -> Option<Self> {
        let mut map = self.0.clone();
        match map.get_mut(label) {
            None => None,
            Some(c) if *c == 1 => {
                map.remove(label);
                Some(Multidegree(map))
            }
            Some(c) => {
                *c -= 1;
                Some(Multidegree(map))
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (l, c) in &other.0 {
            *map.entry(l.clone()).or_insert(0) += c;
        }
        Multidegree(map)
    }
}

impl<L: Label> fmt::Display for Multidegree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{c}")?;
        }
        f.write_str("}")
    }
}
