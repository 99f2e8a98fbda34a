use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row `n` of the Stirling-second-kind triangle: `S(n, k)` for `k = 1..=n`,
/// the number of partitions of an n-set into k blocks.
pub fn stirling2_row(n: u32) -> Vec<BigUint> {
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for _ in 1..n {
        let mut next = vec![BigUint::zero(); row.len() + 1];
        for (k, value) in row.iter().enumerate() {
            // S(n, k) = k * S(n-1, k) + S(n-1, k-1), with k 1-based here.
            next[k] += value * BigUint::from(k as u64 + 1);
            next[k + 1] += value;
        }
        row = next;
    }
    row
}

/// Row `n` of the unsigned Stirling-first-kind triangle: `c(n, k)` for
/// `k = 1..=n`, the number of permutations of an n-set with k cycles.
pub fn stirling1_row(n: u32) -> Vec<BigUint> {
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..n {
        let mut next = vec![BigUint::zero(); row.len() + 1];
        for (k, value) in row.iter().enumerate() {
            // c(n, k) = (n-1) * c(n-1, k) + c(n-1, k-1).
            next[k] += value * BigUint::from(m as u64);
            next[k + 1] += value;
        }
        row = next;
    }
    row
}

pub fn factorial(n: u32) -> BigUint {
    (1..=u64::from(n)).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// The ordered Bell number: ordered set partitions of an n-set,
/// `sum_k k! * S(n, k)`.
pub fn ordered_bell(n: u32) -> BigUint {
    stirling2_row(n)
        .iter()
        .enumerate()
        .map(|(k, s)| factorial(k as u32 + 1) * s)
        .sum()
}

/// `sum_k (k-1)! * S(n, k)`: the dimension of the span of plates modulo
/// measure-zero cones.
pub fn cyclic_bell(n: u32) -> BigUint {
    stirling2_row(n)
        .iter()
        .enumerate()
        .map(|(k, s)| factorial(k as u32) * s)
        .sum()
}

/// Standard composites of an n-set with exactly `k` factors, for
/// `k = 1..=n`: `T(n, k) = sum_i S(n, i) * c(i, k)` (partition into blocks,
/// then arrange the blocks into k factor cycles).
pub fn standard_composite_row(n: u32) -> Vec<BigUint> {
    let s_row = stirling2_row(n);
    let mut row = vec![BigUint::zero(); n as usize];
    for (i, s) in s_row.iter().enumerate() {
        for (k, c) in stirling1_row(i as u32 + 1).iter().enumerate() {
            row[k] += s * c;
        }
    }
    row
}

/// The dimension table of all four spaces for one value of `n`:
/// `ordered_bell` counts the plate basis and the canonical basis of the full
/// span, `composite_row` breaks the canonical basis down by factor count,
/// `cyclic_bell` is the quotient by measure-zero cones, `factorial` the
/// quotient by non-pointed cones (`stirling1_row` breaks it down by factor
/// count), and `pointed_quotient` the quotient by both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub n: u32,
    pub ordered_bell: BigUint,
    pub composite_row: Vec<BigUint>,
    pub stirling1_row: Vec<BigUint>,
    pub stirling2_row: Vec<BigUint>,
    pub cyclic_bell: BigUint,
    pub factorial: BigUint,
    pub pointed_quotient: BigUint,
}

pub fn dims(n: u32) -> Result<DimensionTable> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    Ok(DimensionTable {
        n,
        ordered_bell: ordered_bell(n),
        composite_row: standard_composite_row(n),
        stirling1_row: stirling1_row(n),
        stirling2_row: stirling2_row(n),
        cyclic_bell: cyclic_bell(n),
        factorial: factorial(n),
        pointed_quotient: factorial(n - 1),
    })
}
