use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::tree::DirectedTree;
use crate::algebra::vector::{BasisKind, PlateVector, VectorLabel};
use crate::combinatorics::{CompositeSetPartition, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::oracle::indicator::{
    chamber_indicator, dual_face_indicator, minkowski_indicator, plate_indicator,
    tree_cone_indicator,
};
use crate::oracle::laplace::{
    eval_hatp1, eval_hatp1_composite, eval_p, eval_p1, eval_p1_composite, eval_p_composite,
    eval_tree_rhs,
};
use crate::oracle::point::{sample_generic_point, GenericityPolicy, RationalPoint};
use crate::oracle::OracleKind;

/// One side of an identity: a formal vector, or a closed form whose value
/// every oracle knows directly.
#[derive(Clone, Debug)]
pub enum Side {
    Vector(PlateVector),
    Composite(CompositeSetPartition),
    Tree(DirectedTree),
    Chamber(OrderedSetPartition),
}

impl Side {
    /// Size of the ground set both sides must share.
    pub fn n(&self) -> Result<u32> {
        match self {
            Side::Vector(v) => Ok(v.n()),
            Side::Composite(csp) => {
                let ground = csp.ground();
                if !ground.is_contiguous_from_1() {
                    return Err(Error::domain(format!(
                        "composite '{csp}' does not cover a ground set of the form {{1, …, n}}"
                    )));
                }
                Ok(ground.max_label().unwrap())
            }
            Side::Tree(tree) => Ok(tree.n()),
            Side::Chamber(osp) => {
                if !osp.has_full_support() || osp.singleton_labels().is_none() {
                    return Err(Error::domain(format!(
                        "chamber '{osp}' must be a chain of all singletons 1..n"
                    )));
                }
                Ok(osp.support().max_label().unwrap())
            }
        }
    }
}

fn indicator_value(member: bool) -> BigRational {
    if member {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

fn eval_label(
    label: &VectorLabel,
    basis: BasisKind,
    oracle: OracleKind,
    point: &RationalPoint,
) -> Result<BigRational> {
    if oracle == OracleKind::Indicator {
        let member = match label {
            VectorLabel::Osp(osp) => match basis {
                BasisKind::DualFace => {
                    dual_face_indicator(osp, point, &vec![false; osp.len() - 1])?
                }
                _ => plate_indicator(osp, point)?,
            },
            VectorLabel::Csp(csp) => minkowski_indicator(csp, point)?,
        };
        return Ok(indicator_value(member));
    }
    if basis == BasisKind::DualFace {
        return Err(Error::domain(
            "dual-face vectors can only be compared with the indicator oracle",
        ));
    }
    match (label, oracle) {
        (VectorLabel::Osp(osp), OracleKind::P) => eval_p(osp, point),
        (VectorLabel::Osp(osp), OracleKind::HatP1) => eval_hatp1(osp, point),
        (VectorLabel::Osp(osp), OracleKind::P1) => eval_p1(osp, point),
        (VectorLabel::Csp(csp), OracleKind::P) => eval_p_composite(csp, point),
        (VectorLabel::Csp(csp), OracleKind::HatP1) => eval_hatp1_composite(csp, point),
        (VectorLabel::Csp(csp), OracleKind::P1) => eval_p1_composite(csp, point),
        (_, OracleKind::Indicator) => unreachable!("handled above"),
    }
}

/// Exact value of one side under the chosen oracle at one point.
pub fn eval_side(side: &Side, oracle: OracleKind, point: &RationalPoint) -> Result<BigRational> {
    match side {
        Side::Vector(v) => {
            let mut total = BigRational::zero();
            for (label, coef) in v.iter() {
                total += coef * eval_label(label, v.basis(), oracle, point)?;
            }
            Ok(total)
        }
        Side::Composite(csp) => match oracle {
            OracleKind::Indicator => Ok(indicator_value(minkowski_indicator(csp, point)?)),
            OracleKind::P => eval_p_composite(csp, point),
            OracleKind::HatP1 => eval_hatp1_composite(csp, point),
            OracleKind::P1 => eval_p1_composite(csp, point),
        },
        Side::Tree(tree) => match oracle {
            OracleKind::Indicator => Ok(indicator_value(tree_cone_indicator(tree, point)?)),
            rep => eval_tree_rhs(tree, rep, point),
        },
        Side::Chamber(osp) => match oracle {
            OracleKind::Indicator => Ok(indicator_value(chamber_indicator(osp, point)?)),
            _ => Err(Error::domain(
                "chambers can only be compared with the indicator oracle",
            )),
        },
    }
}

/// The first point at which the two sides disagreed.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub trial: u32,
    pub point: RationalPoint,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Outcome of a randomized identity check. The run is reproducible from the
/// seed: trial `t` draws from stream `t` of a counter-based generator, so
/// reports are stable regardless of evaluation order.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub oracle: OracleKind,
    pub seed: u64,
    pub trials: u32,
    pub passed: u32,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

fn evaluate_at_fresh_point(
    lhs: &Side,
    rhs: &Side,
    oracle: OracleKind,
    n: u32,
    rng: &mut ChaCha8Rng,
    policy: &GenericityPolicy,
) -> Result<(RationalPoint, BigRational, BigRational)> {
    for _ in 0..=policy.max_retries {
        let point = sample_generic_point(n, oracle.genericity(), rng, policy)?;
        let left = match eval_side(lhs, oracle, &point) {
            Ok(value) => value,
            Err(Error::Pole(_)) | Err(Error::Sampling(_)) => continue,
            Err(other) => return Err(other),
        };
        let right = match eval_side(rhs, oracle, &point) {
            Ok(value) => value,
            Err(Error::Pole(_)) | Err(Error::Sampling(_)) => continue,
            Err(other) => return Err(other),
        };
        return Ok((point, left, right));
    }
    Err(Error::sampling(format!(
        "no pole-free point in general position found after {} draws",
        policy.max_retries + 1
    )))
}

/// Compares two sides at `trials` independently sampled points and reports
/// how many agreed, with the first disagreement kept as an exact
/// counterexample. Points that violate a genericity predicate or hit a pole
/// of either side are redrawn, not counted.
pub fn verify_identity(
    lhs: &Side,
    rhs: &Side,
    oracle: OracleKind,
    trials: u32,
    seed: u64,
    policy: &GenericityPolicy,
) -> Result<VerificationReport> {
    let n = lhs.n()?;
    let rhs_n = rhs.n()?;
    if n != rhs_n {
        return Err(Error::domain(format!(
            "sides live on different ground sets ({n} vs {rhs_n})"
        )));
    }
    let mut passed = 0;
    let mut counterexample = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(trial));
        let (point, left, right) =
            evaluate_at_fresh_point(lhs, rhs, oracle, n, &mut rng, policy)?;
        if left == right {
            passed += 1;
        } else if counterexample.is_none() {
            counterexample = Some(Counterexample {
                trial,
                point,
                lhs: left,
                rhs: right,
            });
        }
    }
    Ok(VerificationReport {
        oracle,
        seed,
        trials,
        passed,
        counterexample,
    })
}
