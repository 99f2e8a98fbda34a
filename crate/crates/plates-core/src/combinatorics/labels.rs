use crate::error::{Error, Result};

/// A set of positive integer labels stored as a bitmask; label `i` occupies
/// bit `i - 1`. Labels range over `1..=32`, which comfortably covers every
/// enumeration this crate will attempt (the enumeration cap defaults to 8).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LabelSet(u32);

impl LabelSet {
    pub const MAX_LABEL: u32 = 32;

    pub const fn empty() -> Self {
        LabelSet(0)
    }

    /// The set `{1, …, n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= Self::MAX_LABEL);
        if n == 0 {
            LabelSet(0)
        } else {
            LabelSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(label: u32) -> Self {
        debug_assert!((1..=Self::MAX_LABEL).contains(&label));
        LabelSet(1 << (label - 1))
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self> {
        let mut mask = 0u32;
        for label in labels {
            if label == 0 || label > Self::MAX_LABEL {
                return Err(Error::domain(format!(
                    "label {label} out of range (must be 1..={})",
                    Self::MAX_LABEL
                )));
            }
            let bit = 1 << (label - 1);
            if mask & bit != 0 {
                return Err(Error::domain(format!("label {label} repeated")));
            }
            mask |= bit;
        }
        Ok(LabelSet(mask))
    }

    pub fn contains(&self, label: u32) -> bool {
        label >= 1 && label <= Self::MAX_LABEL && self.0 & (1 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: u32) {
        debug_assert!((1..=Self::MAX_LABEL).contains(&label));
        self.0 |= 1 << (label - 1);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn min_label(&self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max_label(&self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros())
        }
    }

    pub fn union(&self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(&self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    pub fn is_disjoint(&self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(&self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when the set is exactly `{1, …, max}` for its maximum element
    /// (vacuously true for the empty set).
    pub fn is_contiguous_from_1(&self) -> bool {
        match self.max_label() {
            None => true,
            Some(max) => *self == LabelSet::full(max),
        }
    }

    /// Ascending iterator over the labels in the set.
    pub fn labels(&self) -> impl Iterator<Item = u32> {
        let mask = self.0;
        (1..=Self::MAX_LABEL).filter(move |label| mask & (1 << (label - 1)) != 0)
    }

    pub(crate) fn bits(&self) -> u32 {
        self.0
    }

    pub(crate) fn from_bits(bits: u32) -> Self {
        LabelSet(bits)
    }
}

impl std::fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, label) in self.labels().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}
