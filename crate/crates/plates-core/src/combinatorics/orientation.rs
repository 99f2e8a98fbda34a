use std::collections::HashMap;

use crate::combinatorics::osp::OrderedSetPartition;
use crate::error::{Error, Result};

/// A requirement on the relative block positions of two labels: `first`
/// must sit in an earlier block than `second` (strictly, or weakly when
/// `strict` is false).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientationConstraint {
    pub first: u32,
    pub second: u32,
    pub strict: bool,
}

impl OrientationConstraint {
    pub fn strict(first: u32, second: u32) -> Self {
        OrientationConstraint { first, second, strict: true }
    }

    pub fn weak(first: u32, second: u32) -> Self {
        OrientationConstraint { first, second, strict: false }
    }
}

/// Checks a position constraint against an ordered set partition.
///
/// When `factor_map` is given (mapping labels to the factor of a source
/// composite), a constraint between labels of *different* factors is
/// satisfied automatically — positions of distinct factors are incomparable
/// and every orientation between them holds. Labels of the same factor are
/// compared by their block positions in `osp`.
pub fn orientation_satisfied(
    osp: &OrderedSetPartition,
    constraint: OrientationConstraint,
    factor_map: Option<&HashMap<u32, usize>>,
) -> Result<bool> {
    if let Some(map) = factor_map {
        match (map.get(&constraint.first), map.get(&constraint.second)) {
            (Some(a), Some(b)) if a != b => return Ok(true),
            (Some(_), Some(_)) => {}
            _ => {
                return Err(Error::domain(format!(
                    "constraint labels {} and {} must appear in the factor map",
                    constraint.first, constraint.second
                )))
            }
        }
    }
    let pos_first = osp.block_of(constraint.first).ok_or_else(|| {
        Error::domain(format!("label {} not in partition", constraint.first))
    })?;
    let pos_second = osp.block_of(constraint.second).ok_or_else(|| {
        Error::domain(format!("label {} not in partition", constraint.second))
    })?;
    Ok(if constraint.strict {
        pos_first < pos_second
    } else {
        pos_first <= pos_second
    })
}
