//! Linear algebra over the span of plates: formal vectors, the four working
//! spaces, expansion of composites / trees / chambers into plates, and the
//! change of basis between plates and standard composites.

pub mod expand;
pub mod matrix;
pub mod space;
pub mod straighten;
pub mod tree;
pub mod vector;

pub use expand::{convolution_expand, tree_expand, weyl_chamber_expansion};
pub use matrix::ChangeOfBasis;
pub use space::Space;
pub use straighten::{default_pivot, project, straighten, straighten_osp, straighten_theorem_form};
pub use tree::DirectedTree;
pub use vector::{BasisKind, PlateVector, VectorLabel};
