//! Exact evaluation of the rational functions that represent plates in the
//! three quotient spaces. Together with the indicator tests these give an
//! independent check of every algebraic identity: both sides are evaluated
//! at random rational points and compared exactly.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::tree::DirectedTree;
use crate::combinatorics::{CompositeSetPartition, LabelSet, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::oracle::point::RationalPoint;
use crate::oracle::OracleKind;

fn block_product(block: LabelSet, point: &RationalPoint) -> Result<BigRational> {
    let mut total = BigRational::one();
    for label in block.labels() {
        total *= point.coord(label)?;
    }
    Ok(total)
}

fn invert(denominator: BigRational, what: &str) -> Result<BigRational> {
    if denominator.is_zero() {
        return Err(Error::pole(format!("{what} vanishes at this point")));
    }
    Ok(denominator.recip())
}

/// Value of a plate in the whole-lattice representation:
/// `∏_i 1/(1 - x_{S_1 ∪ … ∪ S_i})` over the proper prefixes, where `x_T` is
/// the product of the coordinates in `T`. The coordinates over the plate's
/// support must multiply to one; a point violating that torus constraint is
/// reported as a sampling failure so callers can redraw it.
pub fn eval_p(osp: &OrderedSetPartition, point: &RationalPoint) -> Result<BigRational> {
    let support = osp.support();
    if block_product(support, point)? != BigRational::one() {
        return Err(Error::sampling(format!(
            "coordinates over the support of '{osp}' do not multiply to one"
        )));
    }
    let mut value = BigRational::one();
    let mut prefix = BigRational::one();
    for block in &osp.blocks()[..osp.len() - 1] {
        prefix *= block_product(*block, point)?;
        value *= invert(BigRational::one() - &prefix, "a prefix factor 1 - x_T")?;
    }
    Ok(value)
}

/// Whole-lattice value of a canonical element: composites of two or more
/// factors are killed by the quotient and evaluate to zero.
pub fn eval_p_composite(
    csp: &CompositeSetPartition,
    point: &RationalPoint,
) -> Result<BigRational> {
    if csp.len() == 1 {
        eval_p(&csp.factors()[0], point)
    } else {
        Ok(BigRational::zero())
    }
}

/// Value of a plate in the pointed multiplicative representation:
/// `∏_i 1/(1 - x_{a_i}/x_{a_{i+1}})` along a chain of singletons
/// `(a_1 | a_2 | … )`. Plates with a block of two or more labels are killed
/// by the quotient and evaluate to zero.
pub fn eval_hatp1(osp: &OrderedSetPartition, point: &RationalPoint) -> Result<BigRational> {
    let labels = match osp.singleton_labels() {
        Some(labels) => labels,
        None => return Ok(BigRational::zero()),
    };
    let mut value = BigRational::one();
    for pair in labels.windows(2) {
        let above = point.coord(pair[1])?;
        if above.is_zero() {
            return Err(Error::pole(format!(
                "coordinate {} is zero, so the ratio x_{}/x_{} is undefined",
                pair[1], pair[0], pair[1]
            )));
        }
        let ratio = point.coord(pair[0])? / above;
        value *= invert(BigRational::one() - ratio, "a chain factor 1 - x_i/x_j")?;
    }
    Ok(value)
}

/// Pointed multiplicative value of a canonical element: the factors live on
/// disjoint supports, so the representation is the product of the factor
/// values (zero as soon as any factor has a non-singleton block).
pub fn eval_hatp1_composite(
    csp: &CompositeSetPartition,
    point: &RationalPoint,
) -> Result<BigRational> {
    let mut value = BigRational::one();
    for factor in csp.factors() {
        value *= eval_hatp1(factor, point)?;
    }
    Ok(value)
}

/// Value of a plate in the pointed additive representation:
/// `∏_i 1/(y_{a_i} - y_{a_{i+1}})` along a chain of singletons. Plates with
/// a larger block evaluate to zero.
pub fn eval_p1(osp: &OrderedSetPartition, point: &RationalPoint) -> Result<BigRational> {
    let labels = match osp.singleton_labels() {
        Some(labels) => labels,
        None => return Ok(BigRational::zero()),
    };
    let mut value = BigRational::one();
    for pair in labels.windows(2) {
        let difference = point.coord(pair[0])? - point.coord(pair[1])?;
        value *= invert(difference, "a chain factor y_i - y_j")?;
    }
    Ok(value)
}

/// Pointed additive value of a canonical element: killed unless the
/// composite is a single factor.
pub fn eval_p1_composite(
    csp: &CompositeSetPartition,
    point: &RationalPoint,
) -> Result<BigRational> {
    if csp.len() == 1 {
        eval_p1(&csp.factors()[0], point)
    } else {
        Ok(BigRational::zero())
    }
}

/// Closed-form value of the cone of a tree: one factor per edge (or per
/// dual-basis vector in the whole-lattice representation), against which the
/// signed plate expansions are checked.
pub fn eval_tree_rhs(
    tree: &DirectedTree,
    rep: OracleKind,
    point: &RationalPoint,
) -> Result<BigRational> {
    let mut value = BigRational::one();
    match rep {
        OracleKind::Indicator => {
            return Err(Error::domain(
                "the indicator oracle compares memberships, not function values",
            ))
        }
        OracleKind::P => {
            for dual in tree.dual_basis() {
                let product = block_product(dual, point)?;
                value *= invert(BigRational::one() - product, "a dual factor 1 - x_I")?;
            }
        }
        OracleKind::HatP1 => {
            for &(tail, head) in tree.edges() {
                let above = point.coord(head)?;
                if above.is_zero() {
                    return Err(Error::pole(format!(
                        "coordinate {head} is zero, so the ratio x_{tail}/x_{head} is undefined"
                    )));
                }
                let ratio = point.coord(tail)? / above;
                value *= invert(BigRational::one() - ratio, "an edge factor 1 - x_i/x_j")?;
            }
        }
        OracleKind::P1 => {
            for &(tail, head) in tree.edges() {
                let difference = point.coord(tail)? - point.coord(head)?;
                value *= invert(difference, "an edge factor y_i - y_j")?;
            }
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_csp, parse_osp, parse_point};

    fn point(text: &str) -> RationalPoint {
        RationalPoint::new(parse_point(text).unwrap())
    }

    fn rational(text: &str) -> BigRational {
        crate::text::parse_rational(text).unwrap()
    }

    #[test]
    fn whole_lattice_values() {
        let chain = parse_osp("1|2").unwrap();
        assert_eq!(eval_p(&chain, &point("2,1/2")).unwrap(), rational("-1"));
        let lump = parse_osp("1,2").unwrap();
        assert_eq!(eval_p(&lump, &point("2,1/2")).unwrap(), rational("1"));
        assert!(matches!(
            eval_p(&chain, &point("2,2")),
            Err(Error::Sampling(_))
        ));
        assert!(matches!(eval_p(&chain, &point("1,1")), Err(Error::Pole(_))));
    }

    #[test]
    fn multi_factor_composites_vanish_in_the_whole_lattice() {
        let csp = parse_csp("1*2|3", Some(3)).unwrap();
        let p = point("2,3,1/6");
        assert!(eval_p_composite(&csp, &p).unwrap().is_zero());
        let single = parse_csp("1|2,3", Some(3)).unwrap();
        assert_eq!(
            eval_p_composite(&single, &p).unwrap(),
            rational("-1")
        );
    }

    #[test]
    fn pointed_multiplicative_values() {
        let chain = parse_osp("1|2").unwrap();
        assert_eq!(eval_hatp1(&chain, &point("4,2")).unwrap(), rational("-1"));
        let lumped = parse_osp("1,2|3").unwrap();
        assert!(eval_hatp1(&lumped, &point("4,2,1")).unwrap().is_zero());
        let p = point("5,3");
        let total = eval_hatp1(&parse_osp("1|2").unwrap(), &p).unwrap()
            + eval_hatp1(&parse_osp("2|1").unwrap(), &p).unwrap();
        assert_eq!(total, rational("1"));
        let product = parse_csp("1|3*2", Some(3)).unwrap();
        let q = point("7,2,5");
        assert_eq!(
            eval_hatp1_composite(&product, &q).unwrap(),
            eval_hatp1(&parse_osp("1|3").unwrap(), &q).unwrap()
        );
    }

    #[test]
    fn pointed_additive_values() {
        let chain = parse_osp("1|2|3").unwrap();
        assert_eq!(
            eval_p1(&chain, &point("3,1,-4")).unwrap(),
            rational("1/10")
        );
        let p = point("5,3");
        let total = eval_p1(&parse_osp("1|2").unwrap(), &p).unwrap()
            + eval_p1(&parse_osp("2|1").unwrap(), &p).unwrap();
        assert!(total.is_zero());
        assert!(matches!(
            eval_p1(&chain, &point("1,1,2")),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn tree_right_hand_sides() {
        let edge = DirectedTree::from_text("1>2").unwrap();
        assert_eq!(
            eval_tree_rhs(&edge, OracleKind::P1, &point("1,0")).unwrap(),
            rational("1")
        );
        let simplex = DirectedTree::from_text("1>3,2>3,1>4").unwrap();
        let y = point("3,1,-4,2");
        assert_eq!(
            eval_tree_rhs(&simplex, OracleKind::P1, &y).unwrap(),
            (rational("1") / ((rational("3") - rational("-4"))
                * (rational("1") - rational("-4"))
                * (rational("3") - rational("2"))))
        );
        let x = point("2,3,5,1/30");
        let expected = rational("1")
            / ((rational("1") - rational("2") * rational("1/30"))
                * (rational("1") - rational("3"))
                * (rational("1") - rational("2") * rational("3") * rational("5")));
        assert_eq!(
            eval_tree_rhs(&simplex, OracleKind::P, &x).unwrap(),
            expected
        );
    }
}
