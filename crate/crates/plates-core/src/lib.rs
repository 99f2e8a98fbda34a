//! Exact calculus of permutohedral plates.
//!
//! A plate is the polyhedral cone in the zero-sum hyperplane cut out by the
//! prefix block sums of an ordered set partition. This crate manipulates
//! formal integer combinations of plates in four spaces — the full span, the
//! quotient by higher-codimension cones, the quotient by non-pointed cones,
//! and both at once — entirely in arbitrary-precision rational arithmetic:
//!
//! - [`combinatorics`]: ordered set partitions, packed words, standard
//!   composites and the bijections and counting sequences between them.
//! - [`algebra`]: expansion of composites, trees and Weyl chambers into
//!   signed plate sums, straightening onto the canonical basis of each
//!   space, and the unitriangular change-of-basis matrix.
//! - [`oracle`]: independent verification — exact pointwise membership
//!   tests and the three functional representations, compared at seeded
//!   random rational points.
//! - [`text`] / [`json`]: stable grammars and serializations for all of the
//!   above.

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod json;
pub mod oracle;
pub mod text;

pub use algebra::{
    convolution_expand, default_pivot, project, straighten, straighten_osp,
    straighten_theorem_form, tree_expand, weyl_chamber_expansion, BasisKind, ChangeOfBasis,
    DirectedTree, PlateVector, Space, VectorLabel,
};
pub use combinatorics::{
    dims, enumerate_osps, enumerate_standard_csps, lex_compare, shuffle_lumpings,
    standard_composition, standard_decomposition, standard_singleton_csps, CompositeSetPartition,
    DimensionTable, LabelSet, OrderedSetPartition, PackedWord,
};
pub use error::{Error, Result};
pub use oracle::{
    eval_side, sample_generic_point, verify_identity, Genericity, GenericityPolicy, OracleKind,
    RationalPoint, Side, VerificationReport,
};
