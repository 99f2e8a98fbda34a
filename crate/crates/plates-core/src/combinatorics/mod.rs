//! Labeled combinatorics underlying the plate calculus: ordered set
//! partitions and their packed words, composite set partitions with the
//! standard (factor) decomposition, orientation constraints, constrained
//! enumeration, and the dimension counts.

pub mod composite;
pub mod counting;
pub mod enumeration;
pub mod labels;
pub mod orientation;
pub mod osp;

pub use composite::{standard_composition, standard_decomposition, CompositeSetPartition};
pub use counting::{
    cyclic_bell, dims, factorial, ordered_bell, standard_composite_row, stirling1_row,
    stirling2_row, DimensionTable,
};
pub use enumeration::{
    enumerate_osps, enumerate_osps_with_cap, enumerate_standard_csps,
    enumerate_standard_csps_with_cap, permutations, shuffle_lumpings, standard_singleton_csps,
    DEFAULT_MAX_N,
};
pub use labels::LabelSet;
pub use orientation::{orientation_satisfied, OrientationConstraint};
pub use osp::{lex_compare, OrderedSetPartition, PackedWord};
