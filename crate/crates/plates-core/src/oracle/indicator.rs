//! Exact membership tests for the polyhedral sets behind the algebra. Each
//! test takes a point on the zero-sum hyperplane and decides membership with
//! rational arithmetic, so signed indicator sums can be compared exactly.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::tree::DirectedTree;
use crate::combinatorics::{LabelSet, CompositeSetPartition, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::oracle::point::RationalPoint;

fn check_arity(max_label: Option<u32>, point: &RationalPoint) -> Result<()> {
    if let Some(max) = max_label {
        if max > point.n() {
            return Err(Error::domain(format!(
                "label {max} exceeds the point's {} coordinates",
                point.n()
            )));
        }
    }
    Ok(())
}

fn block_sum(block: LabelSet, point: &RationalPoint) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for label in block.labels() {
        total += point.coord(label)?;
    }
    Ok(total)
}

/// Membership in the cone of a plate: coordinates off the support vanish and
/// every prefix block sum is nonnegative (the full sum is then zero).
pub fn plate_indicator(osp: &OrderedSetPartition, point: &RationalPoint) -> Result<bool> {
    let support = osp.support();
    check_arity(support.max_label(), point)?;
    for label in 1..=point.n() {
        if !support.contains(label) && !point.coord(label)?.is_zero() {
            return Ok(false);
        }
    }
    if !block_sum(support, point)?.is_zero() {
        return Ok(false);
    }
    let mut prefix = BigRational::zero();
    for block in osp.blocks() {
        prefix += block_sum(*block, point)?;
        if prefix < BigRational::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in a dual face: coordinates agree within each block and the
/// block values descend along the chain, strictly at the flagged steps.
/// `strict` carries one flag per adjacent pair of blocks.
pub fn dual_face_indicator(
    osp: &OrderedSetPartition,
    point: &RationalPoint,
    strict: &[bool],
) -> Result<bool> {
    check_arity(osp.support().max_label(), point)?;
    if strict.len() + 1 != osp.len() {
        return Err(Error::domain(format!(
            "expected {} strictness flags for a chain of {} blocks, got {}",
            osp.len() - 1,
            osp.len(),
            strict.len()
        )));
    }
    let mut values = Vec::with_capacity(osp.len());
    for block in osp.blocks() {
        let mut labels = block.labels();
        let first = point.coord(labels.next().expect("blocks are nonempty"))?;
        for label in labels {
            if point.coord(label)? != first {
                return Ok(false);
            }
        }
        values.push(first);
    }
    for (i, &must_be_strict) in strict.iter().enumerate() {
        let ordered = if must_be_strict {
            values[i] > values[i + 1]
        } else {
            values[i] >= values[i + 1]
        };
        if !ordered {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the half-open Weyl chamber of a permutation chain:
/// coordinates descend along the chain, strictly wherever the labels
/// themselves descend.
pub fn chamber_indicator(osp: &OrderedSetPartition, point: &RationalPoint) -> Result<bool> {
    let labels = osp.singleton_labels().ok_or_else(|| {
        Error::domain(format!("chamber '{osp}' must be a chain of singletons"))
    })?;
    let strict: Vec<bool> = labels.windows(2).map(|pair| pair[0] > pair[1]).collect();
    dual_face_indicator(osp, point, &strict)
}

/// Membership in the Minkowski sum of a composite's factors: the factors
/// live on mutually orthogonal coordinate subspaces, so the point belongs
/// iff each factor's restriction sums to zero and sits in that factor's
/// plate, with all unused coordinates vanishing.
pub fn minkowski_indicator(csp: &CompositeSetPartition, point: &RationalPoint) -> Result<bool> {
    let ground = csp.ground();
    check_arity(ground.max_label(), point)?;
    for label in 1..=point.n() {
        if !ground.contains(label) && !point.coord(label)?.is_zero() {
            return Ok(false);
        }
    }
    for factor in csp.factors() {
        if !block_sum(factor.support(), point)?.is_zero() {
            return Ok(false);
        }
        let mut prefix = BigRational::zero();
        for block in factor.blocks() {
            prefix += block_sum(*block, point)?;
            if prefix < BigRational::zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership in the simplicial cone spanned by a tree's edge generators,
/// decided through the dual basis: nonnegative pairing with every dual
/// vector.
pub fn tree_cone_indicator(tree: &DirectedTree, point: &RationalPoint) -> Result<bool> {
    check_arity(Some(tree.n()), point)?;
    for dual in tree.dual_basis() {
        if block_sum(dual, point)? < BigRational::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_csp, parse_osp, parse_point};

    fn point(text: &str) -> RationalPoint {
        RationalPoint::new(parse_point(text).unwrap())
    }

    #[test]
    fn plate_membership_follows_prefix_sums() {
        let chain = parse_osp("1|2|3").unwrap();
        assert!(plate_indicator(&chain, &point("0,0,0")).unwrap());
        assert!(plate_indicator(&chain, &point("1,-1,0")).unwrap());
        assert!(!plate_indicator(&chain, &point("-1,1,0")).unwrap());
    }

    #[test]
    fn sub_support_plates_require_vanishing_coordinates() {
        let sub = parse_osp("2|3").unwrap();
        assert!(plate_indicator(&sub, &point("0,1,-1")).unwrap());
        assert!(!plate_indicator(&sub, &point("1,-1,0")).unwrap());
        assert!(!plate_indicator(&sub, &point("0,-1,1")).unwrap());
    }

    #[test]
    fn dual_face_membership_checks_block_equalities() {
        let face = parse_osp("1,2|3").unwrap();
        assert!(dual_face_indicator(&face, &point("1,1,-2"), &[false]).unwrap());
        assert!(!dual_face_indicator(&face, &point("2,0,-2"), &[false]).unwrap());
        let edge = parse_osp("1|2").unwrap();
        assert!(!dual_face_indicator(&edge, &point("0,0"), &[true]).unwrap());
        assert!(dual_face_indicator(&edge, &point("0,0"), &[false]).unwrap());
    }

    #[test]
    fn chamber_membership_is_strict_at_descents() {
        let chamber = parse_osp("2|1|3").unwrap();
        assert!(!chamber_indicator(&chamber, &point("0,0,0")).unwrap());
        assert!(chamber_indicator(&chamber, &point("0,1,-1")).unwrap());
        assert!(!chamber_indicator(&chamber, &point("1,0,-1")).unwrap());
        let identity = parse_osp("1|2|3").unwrap();
        assert!(chamber_indicator(&identity, &point("1,0,-1")).unwrap());
    }

    #[test]
    fn minkowski_membership_is_factorwise() {
        let csp = parse_csp("1*2|3", Some(3)).unwrap();
        assert!(minkowski_indicator(&csp, &point("0,1,-1")).unwrap());
        assert!(!minkowski_indicator(&csp, &point("1,-1,0")).unwrap());
        assert!(minkowski_indicator(&csp, &point("0,0,0")).unwrap());
    }

    #[test]
    fn tree_cone_membership_uses_the_dual_basis() {
        let star = DirectedTree::from_text("1>2,1>3").unwrap();
        assert!(tree_cone_indicator(&star, &point("1,-1,0")).unwrap());
        assert!(!tree_cone_indicator(&star, &point("-1,1,0")).unwrap());
        let simplex = DirectedTree::from_text("1>3,2>3,1>4").unwrap();
        assert!(tree_cone_indicator(&simplex, &point("0,0,0,0")).unwrap());
    }
}
