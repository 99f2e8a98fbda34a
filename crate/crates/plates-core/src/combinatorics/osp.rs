use std::cmp::Ordering;

use crate::combinatorics::labels::LabelSet;
use crate::error::{Error, Result};

/// An ordered set partition: a sequence of disjoint nonempty blocks of labels.
///
/// The support need not be `{1, …, n}`; sub-supported partitions appear as
/// factors of composites. Blocks keep their given order, labels inside a block
/// are a set (stored as a mask, so always canonical).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<LabelSet>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<LabelSet>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::domain("ordered set partition needs at least one block"));
        }
        let mut seen = LabelSet::empty();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::domain("empty block in ordered set partition"));
            }
            if !seen.is_disjoint(*block) {
                return Err(Error::domain("blocks of an ordered set partition must be disjoint"));
            }
            seen = seen.union(*block);
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn from_label_blocks(blocks: &[Vec<u32>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(blocks.len());
        for block in blocks {
            sets.push(LabelSet::from_labels(block.iter().copied())?);
        }
        OrderedSetPartition::new(sets)
    }

    /// The one-block partition of a set.
    pub fn single_block(block: LabelSet) -> Result<Self> {
        OrderedSetPartition::new(vec![block])
    }

    /// The chain of singletons `(labels[0] | labels[1] | …)`.
    pub fn singleton_chain(labels: &[u32]) -> Result<Self> {
        OrderedSetPartition::new(labels.iter().map(|&l| LabelSet::singleton(l)).collect())
    }

    pub fn blocks(&self) -> &[LabelSet] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn support(&self) -> LabelSet {
        self.blocks
            .iter()
            .fold(LabelSet::empty(), |acc, b| acc.union(*b))
    }

    /// Index (0-based) of the block containing `label`, if present.
    pub fn block_of(&self, label: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(label))
    }

    /// True when the support is `{1, …, n}` for some `n`.
    pub fn has_full_support(&self) -> bool {
        self.support().is_contiguous_from_1()
    }

    /// True when the first block contains the minimum of the support. This is
    /// the condition every factor of a canonical-basis label satisfies.
    pub fn first_block_contains_min(&self) -> bool {
        let min = self.support().min_label().expect("nonempty");
        self.blocks[0].contains(min)
    }

    pub fn all_blocks_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// For an all-singleton partition, the labels in block order.
    pub fn singleton_labels(&self) -> Option<Vec<u32>> {
        if !self.all_blocks_singletons() {
            return None;
        }
        Some(self.blocks.iter().map(|b| b.min_label().unwrap()).collect())
    }

    /// The word `(c_1, …, c_n)` with `c_i = j - 1` when label `i` lies in the
    /// `j`-th block. Defined only for full support `{1, …, n}`.
    pub fn packed_word(&self) -> Result<PackedWord> {
        let support = self.support();
        if !support.is_contiguous_from_1() {
            return Err(Error::domain(
                "packed word requires support of the form {1, …, n}",
            ));
        }
        let n = support.max_label().unwrap();
        let mut values = vec![0u8; n as usize];
        for (j, block) in self.blocks.iter().enumerate() {
            for label in block.labels() {
                values[(label - 1) as usize] = j as u8;
            }
        }
        Ok(PackedWord { values })
    }

    /// Key realizing the total order used throughout: supports compared first
    /// (as ascending label sequences), then per-label block indices. On full
    /// support this is exactly lexicographic comparison of packed words.
    pub fn order_key(&self) -> Vec<u32> {
        let support = self.support();
        let mut key: Vec<u32> = support.labels().collect();
        key.push(u32::MAX);
        for label in support.labels() {
            key.push(self.block_of(label).unwrap() as u32);
        }
        key
    }
}

impl std::fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({self})")
    }
}

/// Compares two ordered set partitions of the same ground set `{1, …, n}` in
/// the lexicographic order of their packed words.
pub fn lex_compare(a: &OrderedSetPartition, b: &OrderedSetPartition) -> Result<Ordering> {
    let (sa, sb) = (a.support(), b.support());
    if sa != sb || !sa.is_contiguous_from_1() {
        return Err(Error::domain(
            "lex order is defined for partitions of a common ground set {1, …, n}",
        ));
    }
    Ok(a.packed_word()?.values().cmp(b.packed_word()?.values()))
}

/// A packed word: a sequence over `{0, 1, …}` whose set of values is
/// `{0, …, m}` for some `m`. Packed words of length `n` are in bijection with
/// ordered set partitions of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedWord {
    values: Vec<u8>,
}

impl PackedWord {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("packed word must be nonempty"));
        }
        let max = *values.iter().max().unwrap();
        for v in 0..=max {
            if !values.contains(&v) {
                return Err(Error::domain(format!(
                    "word is not packed: value {v} missing below maximum {max}"
                )));
            }
        }
        Ok(PackedWord { values })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The inverse of `OrderedSetPartition::packed_word`: block `j` collects
    /// the positions holding value `j - 1`.
    pub fn to_ordered_set_partition(&self) -> OrderedSetPartition {
        let block_count = *self.values.iter().max().unwrap() as usize + 1;
        let mut blocks = vec![LabelSet::empty(); block_count];
        for (i, &v) in self.values.iter().enumerate() {
            blocks[v as usize].insert(i as u32 + 1);
        }
        OrderedSetPartition::new(blocks).expect("packed word yields a valid partition")
    }
}
