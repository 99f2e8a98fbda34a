use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Genericity checks enumerate coordinate subsets, so sampling is limited to
/// ground sets small enough for that to be cheap.
const MAX_SAMPLED_N: u32 = 20;

/// The position a side of an identity is evaluated at: one rational
/// coordinate per ground-set label, addressed 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn n(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, label: u32) -> Result<&BigRational> {
        self.coords
            .get((label as usize).wrapping_sub(1))
            .ok_or_else(|| {
                Error::domain(format!(
                    "point has {} coordinates but label {label} was requested",
                    self.coords.len()
                ))
            })
    }
}

/// What "in general position" means for a sampled point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genericity {
    /// Coordinates sum to zero and no proper nonempty subset does: every
    /// block-sum inequality is decided strictly.
    Additive,
    /// Coordinates multiply to one and no proper nonempty subset does: no
    /// factor `1 - x_T` over a proper prefix union vanishes.
    Multiplicative,
    /// Coordinates are pairwise distinct (and never zero): no factor
    /// `x_i - x_j` or `1 - x_i/x_j` vanishes.
    FreeDistinct,
}

/// Bounds for the sampled coordinates and how persistently to resample when
/// a draw lands on a degenerate locus.
#[derive(Clone, Copy, Debug)]
pub struct GenericityPolicy {
    pub numerator_bound: i64,
    pub denominator_bound: i64,
    pub max_retries: u32,
}

impl Default for GenericityPolicy {
    fn default() -> Self {
        Self {
            numerator_bound: 10_000,
            denominator_bound: 100,
            max_retries: 64,
        }
    }
}

fn random_rational<R: Rng>(rng: &mut R, policy: &GenericityPolicy) -> BigRational {
    let magnitude = rng.gen_range(1..=policy.numerator_bound);
    let numerator = if rng.gen::<bool>() { magnitude } else { -magnitude };
    let denominator = rng.gen_range(1..=policy.denominator_bound);
    BigRational::new(numerator.into(), denominator.into())
}

/// Folds every subset of `coords` (one entry per bitmask) starting from
/// `unit`, and reports whether any proper nonempty subset folds back to
/// `unit` — the shared degeneracy test for sums (unit 0) and products
/// (unit 1).
fn proper_subset_hits_unit(
    coords: &[BigRational],
    unit: &BigRational,
    combine: impl Fn(&BigRational, &BigRational) -> BigRational,
) -> bool {
    let m = coords.len();
    let full = (1usize << m) - 1;
    let mut folded = vec![unit.clone(); full + 1];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        folded[mask] = combine(&folded[mask & (mask - 1)], &coords[low]);
        if mask != full && folded[mask] == *unit {
            return true;
        }
    }
    false
}

fn is_generic(coords: &[BigRational], genericity: Genericity) -> bool {
    match genericity {
        Genericity::Additive => {
            !proper_subset_hits_unit(coords, &BigRational::zero(), |a, b| a + b)
        }
        Genericity::Multiplicative => {
            !proper_subset_hits_unit(coords, &BigRational::one(), |a, b| a * b)
        }
        Genericity::FreeDistinct => coords
            .iter()
            .enumerate()
            .all(|(i, x)| coords[..i].iter().all(|y| y != x)),
    }
}

/// Draws a point of the requested kind, resampling up to
/// `policy.max_retries` times before giving up with a sampling error.
pub fn sample_generic_point<R: Rng>(
    n: u32,
    genericity: Genericity,
    rng: &mut R,
    policy: &GenericityPolicy,
) -> Result<RationalPoint> {
    if n == 0 {
        return Err(Error::domain("points need at least one coordinate"));
    }
    if n > MAX_SAMPLED_N {
        return Err(Error::resource(format!(
            "point sampling is limited to n <= {MAX_SAMPLED_N} (got {n})"
        )));
    }
    for _ in 0..=policy.max_retries {
        let mut coords: Vec<BigRational> = match genericity {
            Genericity::FreeDistinct => {
                (0..n).map(|_| random_rational(rng, policy)).collect()
            }
            _ => (1..n).map(|_| random_rational(rng, policy)).collect(),
        };
        match genericity {
            Genericity::Additive => {
                let total: BigRational = coords.iter().sum();
                coords.push(-total);
            }
            Genericity::Multiplicative => {
                let total: BigRational = coords.iter().product();
                coords.push(total.recip());
            }
            Genericity::FreeDistinct => {}
        }
        if is_generic(&coords, genericity) {
            return Ok(RationalPoint::new(coords));
        }
    }
    Err(Error::sampling(format!(
        "no generic point found after {} retries",
        policy.max_retries + 1
    )))
}
