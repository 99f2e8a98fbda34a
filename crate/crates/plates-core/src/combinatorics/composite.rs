use crate::combinatorics::labels::LabelSet;
use crate::combinatorics::osp::OrderedSetPartition;
use crate::error::{Error, Result};

/// A composite set partition: an unordered collection of ordered set
/// partitions (the factors) with pairwise disjoint supports. Factors are
/// stored sorted by their minimum support label, so equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositeSetPartition {
    factors: Vec<OrderedSetPartition>,
}

impl CompositeSetPartition {
    pub fn new(mut factors: Vec<OrderedSetPartition>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("composite needs at least one factor"));
        }
        let mut seen = LabelSet::empty();
        for f in &factors {
            let support = f.support();
            if !seen.is_disjoint(support) {
                return Err(Error::domain("factor supports must be pairwise disjoint"));
            }
            seen = seen.union(support);
        }
        factors.sort_by_key(|f| f.support().min_label().unwrap());
        Ok(CompositeSetPartition { factors })
    }

    /// The composite with a single factor.
    pub fn single(factor: OrderedSetPartition) -> Self {
        CompositeSetPartition { factors: vec![factor] }
    }

    pub fn factors(&self) -> &[OrderedSetPartition] {
        &self.factors
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ground(&self) -> LabelSet {
        self.factors
            .iter()
            .fold(LabelSet::empty(), |acc, f| acc.union(f.support()))
    }

    /// Total number of blocks across all factors.
    pub fn total_blocks(&self) -> usize {
        self.factors.iter().map(|f| f.len()).sum()
    }

    /// Index of the factor whose support contains `label`.
    pub fn factor_of(&self, label: u32) -> Option<usize> {
        self.factors.iter().position(|f| f.support().contains(label))
    }

    /// A composite is standard when every factor's first block contains the
    /// minimum of that factor's support. Standard composites of `{1, …, n}`
    /// index the canonical basis.
    pub fn is_standard(&self) -> bool {
        self.factors.iter().all(|f| f.first_block_contains_min())
    }

    /// A factor is trivial when it is a single singleton block; such factors
    /// are suppressed when printing canonical labels.
    pub fn nontrivial_factors(&self) -> impl Iterator<Item = &OrderedSetPartition> {
        self.factors
            .iter()
            .filter(|f| !(f.len() == 1 && f.support().len() == 1))
    }

    /// Key realizing the deterministic output order for canonical labels: the
    /// order key of the concatenation `standard_composition` when the
    /// composite is standard, otherwise a structural fallback.
    pub fn order_key(&self) -> Vec<u32> {
        match standard_composition(self) {
            Ok(osp) => osp.order_key(),
            Err(_) => {
                let mut key = vec![u32::MAX];
                for f in &self.factors {
                    key.extend(f.order_key());
                    key.push(u32::MAX - 1);
                }
                key
            }
        }
    }
}

impl std::fmt::Debug for CompositeSetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({factor})")?;
        }
        write!(f, "}}")
    }
}

/// Splits an ordered set partition into its standard factors.
///
/// Reading the blocks left to right, the final factor is cut first: find the
/// block containing the smallest label not yet used, and take everything from
/// that block through the end of the unprocessed prefix. Repeating on the
/// remaining prefix yields factors whose first block contains their support
/// minimum, i.e. a standard composite. This is inverse to
/// `standard_composition`.
pub fn standard_decomposition(osp: &OrderedSetPartition) -> CompositeSetPartition {
    let blocks = osp.blocks();
    let mut factors = Vec::new();
    let mut end = blocks.len();
    let mut remaining = osp.support();
    while end > 0 {
        let min = remaining.min_label().expect("support not exhausted");
        let start = blocks[..end]
            .iter()
            .position(|b| b.contains(min))
            .expect("minimum lies in the unprocessed prefix");
        let factor = OrderedSetPartition::new(blocks[start..end].to_vec())
            .expect("slice of valid partition");
        remaining = remaining.difference(factor.support());
        factors.push(factor);
        end = start;
    }
    CompositeSetPartition::new(factors).expect("factors have disjoint supports")
}

/// Concatenates the factors of a standard composite in decreasing order of
/// their support minima, recovering the ordered set partition whose
/// `standard_decomposition` is the given composite.
pub fn standard_composition(csp: &CompositeSetPartition) -> Result<OrderedSetPartition> {
    if !csp.is_standard() {
        return Err(Error::domain(
            "standard composition is defined for standard composites only",
        ));
    }
    let mut blocks = Vec::with_capacity(csp.total_blocks());
    for factor in csp.factors().iter().rev() {
        blocks.extend_from_slice(factor.blocks());
    }
    OrderedSetPartition::new(blocks)
}
