use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::space::Space;
use crate::algebra::vector::{BasisKind, PlateVector, VectorLabel};
use crate::combinatorics::enumeration::{constrained_signed_osps, AtomConstraint};
use crate::combinatorics::{
    permutations, shuffle_lumpings, standard_decomposition, CompositeSetPartition,
    OrderedSetPartition,
};
use crate::error::{Error, Result};

fn rational(value: i64) -> BigRational {
    BigRational::from_integer(value.into())
}

/// 1-based index of the block containing the smallest support label; the
/// pivot at which straightening produces standard output directly.
pub fn default_pivot(osp: &OrderedSetPartition) -> usize {
    let min = osp.support().min_label().expect("partition is nonempty");
    osp.block_of(min).expect("min label is present") + 1
}

fn full_support_size(osp: &OrderedSetPartition) -> Result<u32> {
    if !osp.has_full_support() {
        return Err(Error::domain(format!(
            "plate '{osp}' must cover a ground set of the form {{1, …, n}}"
        )));
    }
    Ok(osp.support().max_label().unwrap())
}

/// Core of the full-space straightening: repeatedly peel the lex-greatest
/// remaining plate label π, emit its coefficient on the canonical element
/// labelled by the standard decomposition of π, and subtract the rest of
/// that element's plate expansion (every other term is lex-smaller, so the
/// loop strictly descends). All input labels must share one support.
fn back_substitute(
    mut residual: BTreeMap<Vec<u32>, (OrderedSetPartition, BigRational)>,
) -> Vec<(CompositeSetPartition, BigRational)> {
    let mut out = Vec::new();
    while let Some((_, (osp, coef))) = residual.pop_last() {
        if coef.is_zero() {
            continue;
        }
        let csp = standard_decomposition(&osp);
        for (term, sign) in shuffle_lumpings(&csp) {
            if term == osp {
                continue;
            }
            let key = term.order_key();
            let entry = residual
                .entry(key)
                .or_insert_with(|| (term, BigRational::zero()));
            entry.1 -= coef.clone() * rational(i64::from(sign));
        }
        out.push((csp, coef));
    }
    out
}

fn plate_terms(v: &PlateVector) -> Result<Vec<(&OrderedSetPartition, &BigRational)>> {
    if v.basis() != BasisKind::Plate {
        return Err(Error::domain(
            "straightening expects a plate-basis vector as input",
        ));
    }
    Ok(v.iter()
        .map(|(label, coef)| (label.as_osp().expect("plate basis"), coef))
        .collect())
}

/// Rewrites a plate-basis vector in the canonical basis of the chosen
/// space. In the full space this solves the unitriangular system by lazy
/// back-substitution; in the quotients it applies the closed-form expansion
/// plate by plate (labels killed by the quotient contribute nothing).
pub fn straighten(v: &PlateVector, space: Space) -> Result<PlateVector> {
    let terms = plate_terms(v)?;
    let mut out = PlateVector::zero(v.n(), BasisKind::Canonical);
    match space {
        Space::HatP => {
            let residual: BTreeMap<_, _> = terms
                .into_iter()
                .map(|(osp, coef)| (osp.order_key(), (osp.clone(), coef.clone())))
                .collect();
            for (csp, coef) in back_substitute(residual) {
                out.add_term(VectorLabel::Csp(csp), coef)?;
            }
        }
        _ => {
            for (osp, coef) in terms {
                let partial = straighten_osp(osp, space)?;
                out = out.add(&partial.scale(coef))?;
            }
        }
    }
    Ok(out)
}

/// Straightens a single plate label.
pub fn straighten_osp(osp: &OrderedSetPartition, space: Space) -> Result<PlateVector> {
    match space {
        Space::HatP => straighten(&PlateVector::unit_plate(osp)?, Space::HatP),
        Space::P => straighten_into_p(osp),
        Space::HatP1 => straighten_into_hatp1(osp),
        Space::P1 => straighten_into_p1(osp),
    }
}

/// Expansion over single surviving plates: arrangements of the input blocks
/// with the prefix up to the block of 1 reversed weakly and the rest chained
/// strictly, signed by `(-1)^(k - l - 1 - len)`.
fn straighten_into_p(osp: &OrderedSetPartition) -> Result<PlateVector> {
    let n = full_support_size(osp)?;
    let k = osp.len();
    let l = default_pivot(osp);
    let atoms = osp.blocks().to_vec();
    let mut constraints = Vec::new();
    for j in 1..l {
        constraints.push(AtomConstraint {
            a: j,
            b: j - 1,
            strict: false,
        });
    }
    for j in l..k {
        constraints.push(AtomConstraint {
            a: j - 1,
            b: j,
            strict: true,
        });
    }
    let flip = l % 2 == 0;
    let mut out = PlateVector::zero(n, BasisKind::Canonical);
    for (pi, sign) in constrained_signed_osps(&atoms, &constraints) {
        let value = if flip { -sign } else { sign };
        out.add_term(
            VectorLabel::Csp(CompositeSetPartition::single(pi)),
            rational(i64::from(value)),
        )?;
    }
    Ok(out)
}

/// Checks the orientation chain of a straightened singleton plate against a
/// permutation chain: positions must descend strictly down to label 1 and
/// ascend strictly afterwards.
fn permutation_chain_holds(chain: &OrderedSetPartition, labels: &[u32], l: usize) -> bool {
    for j in 0..labels.len().saturating_sub(1) {
        let (lo, hi) = if j + 1 < l {
            (labels[j + 1], labels[j])
        } else {
            (labels[j], labels[j + 1])
        };
        if chain.block_of(lo) >= chain.block_of(hi) {
            return false;
        }
    }
    true
}

/// All interleavings of two sequences preserving the internal order of each.
fn shuffles(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut tail in shuffles(&a[1..], b) {
        tail.insert(0, a[0]);
        out.push(tail);
    }
    for mut tail in shuffles(a, &b[1..]) {
        tail.insert(0, b[0]);
        out.push(tail);
    }
    out
}

/// Expansion over all-singleton composites. Reading the blocks up to label 1
/// as an ascending chain from 1 outwards, the factor containing 1 keeps an
/// initial segment of that chain plus every block past 1 (interleaved
/// freely, both in order); the leftover chain labels split into contiguous
/// runs, one factor per run, with sign `(-1)^(chain length - factor count)`.
/// Runs that do not start at their own minimum are rewritten within their
/// support, and any composite keeping a block of two or more labels dies.
fn straighten_into_hatp1(osp: &OrderedSetPartition) -> Result<PlateVector> {
    let n = full_support_size(osp)?;
    let mut out = PlateVector::zero(n, BasisKind::Canonical);
    let labels = match osp.singleton_labels() {
        Some(labels) => labels,
        // A block of two or more labels spans a line; the plate dies here.
        None => return Ok(out),
    };
    let l = labels.iter().position(|&x| x == 1).unwrap() + 1;
    let mut ascending: Vec<u32> = labels[..l].to_vec();
    ascending.reverse();
    let suffix = &labels[l..];
    for seg in 1..=l {
        let mut lead_chains = Vec::new();
        for mix in shuffles(&ascending[1..seg], suffix) {
            let mut order = vec![1u32];
            order.extend(mix);
            lead_chains.push(OrderedSetPartition::singleton_chain(&order)?);
        }
        let rest = &ascending[seg..];
        let cut_slots = rest.len().saturating_sub(1);
        for cuts in 0..1usize << cut_slots {
            let mut runs: Vec<Vec<u32>> = Vec::new();
            for (i, &label) in rest.iter().enumerate() {
                if i == 0 || cuts >> (i - 1) & 1 == 1 {
                    runs.push(vec![label]);
                } else {
                    runs.last_mut().unwrap().push(label);
                }
            }
            let factor_count = 1 + runs.len();
            let segment_sign = if (l + factor_count) % 2 == 0 { 1 } else { -1 };
            let mut raw_factors = Vec::with_capacity(runs.len());
            for run in &runs {
                raw_factors.push(OrderedSetPartition::singleton_chain(run)?);
            }
            for (factors, coef) in standardize_factors(&raw_factors) {
                if !factors.iter().all(OrderedSetPartition::all_blocks_singletons) {
                    continue;
                }
                for lead in &lead_chains {
                    let mut joined = factors.clone();
                    joined.push(lead.clone());
                    out.add_term(
                        VectorLabel::Csp(CompositeSetPartition::new(joined)?),
                        rational(segment_sign) * coef.clone(),
                    )?;
                }
            }
        }
    }
    Ok(out)
}

fn straighten_into_p1(osp: &OrderedSetPartition) -> Result<PlateVector> {
    let n = full_support_size(osp)?;
    let mut out = PlateVector::zero(n, BasisKind::Canonical);
    let labels = match osp.singleton_labels() {
        Some(labels) => labels,
        None => return Ok(out),
    };
    let l = labels.iter().position(|&x| x == 1).unwrap() + 1;
    let sign = if l % 2 == 1 { 1 } else { -1 };
    let rest: Vec<u32> = (2..=n).collect();
    for tail in permutations(&rest) {
        let mut order = vec![1u32];
        order.extend(tail);
        let chain = OrderedSetPartition::singleton_chain(&order)?;
        if permutation_chain_holds(&chain, &labels, l) {
            out.add_term(
                VectorLabel::Csp(CompositeSetPartition::single(chain)),
                rational(sign),
            )?;
        }
    }
    Ok(out)
}

/// Rewrites a vector on the canonical sub-basis surviving in `space`:
/// plate-basis input is first straightened in the full space, then the
/// canonical labels killed by the quotient are zeroed.
pub fn project(v: &PlateVector, space: Space) -> Result<PlateVector> {
    let canonical = match v.basis() {
        BasisKind::Canonical => v.clone(),
        BasisKind::Plate => straighten(v, Space::HatP)?,
        BasisKind::DualFace => {
            return Err(Error::domain(
                "projection of dual-face vectors is not defined",
            ))
        }
    };
    Ok(canonical.filter(|label| match label {
        VectorLabel::Csp(csp) => space.canonical_survives(csp),
        VectorLabel::Osp(_) => false,
    }))
}

#[derive(Clone, Copy)]
enum PrefixLetter {
    Merge,
    Step,
    Split,
}

/// Straightens a plate by the direct triple-sum formula: walk the prefix up
/// to the pivot block and, for every word in {merge, step, split} over its
/// adjacent pairs, lump/chain/cut the reversed prefix into runs; the first
/// run joins the suffix as the atoms of a constrained arrangement sum and
/// the remaining runs become convolution factors. Non-standard factors are
/// rewritten by straightening within their own support. The result equals
/// `straighten(·, hatP)`.
pub fn straighten_theorem_form(
    osp: &OrderedSetPartition,
    pivot: Option<usize>,
) -> Result<PlateVector> {
    let n = full_support_size(osp)?;
    let l = pivot.unwrap_or_else(|| default_pivot(osp));
    if l < 1 || l > osp.len() {
        return Err(Error::domain(format!(
            "pivot {l} out of range 1..={}",
            osp.len()
        )));
    }
    let blocks = osp.blocks();
    let k = blocks.len();
    let mut out = PlateVector::zero(n, BasisKind::Canonical);
    let mut word = vec![PrefixLetter::Merge; l - 1];
    for code in 0..3usize.pow((l - 1) as u32) {
        let mut rem = code;
        for slot in word.iter_mut() {
            *slot = match rem % 3 {
                0 => PrefixLetter::Merge,
                1 => PrefixLetter::Step,
                _ => PrefixLetter::Split,
            };
            rem /= 3;
        }
        // The prefix is consumed back to front: S_1 is the pivot block and
        // S_{i+1} sits one position closer to the front of the plate.
        let mut runs: Vec<Vec<crate::combinatorics::LabelSet>> = vec![vec![blocks[l - 1]]];
        let mut step_count = 0u32;
        for (i, letter) in word.iter().enumerate() {
            let next = blocks[l - 2 - i];
            match letter {
                PrefixLetter::Merge => {
                    let run = runs.last_mut().unwrap();
                    let last = run.last_mut().unwrap();
                    *last = last.union(next);
                }
                PrefixLetter::Step => {
                    runs.last_mut().unwrap().push(next);
                    step_count += 1;
                }
                PrefixLetter::Split => runs.push(vec![next]),
            }
        }
        let word_sign = if step_count % 2 == 0 { 1i64 } else { -1 };
        let mut secondaries = Vec::with_capacity(runs.len() - 1);
        for run in &runs[1..] {
            secondaries.push(OrderedSetPartition::new(run.clone())?);
        }
        let lead = &runs[0];
        let t = lead.len();
        let mut atoms = lead.clone();
        atoms.extend_from_slice(&blocks[l..]);
        let mut constraints = Vec::new();
        for i in 0..t - 1 {
            constraints.push(AtomConstraint {
                a: i,
                b: i + 1,
                strict: true,
            });
        }
        if k > l {
            constraints.push(AtomConstraint {
                a: 0,
                b: t,
                strict: true,
            });
            for i in 0..k - l - 1 {
                constraints.push(AtomConstraint {
                    a: t + i,
                    b: t + i + 1,
                    strict: true,
                });
            }
        }
        for (pi, sign) in constrained_signed_osps(&atoms, &constraints) {
            let coef = rational(word_sign * i64::from(sign));
            let mut raw_factors = secondaries.clone();
            raw_factors.push(pi);
            for (factors, factor_coef) in standardize_factors(&raw_factors) {
                out.add_term(
                    VectorLabel::Csp(CompositeSetPartition::new(factors)?),
                    coef.clone() * factor_coef,
                )?;
            }
        }
    }
    Ok(out)
}

/// Expands a list of disjoint factors into standard-factor lists with
/// coefficients: standard factors pass through, any other factor is
/// straightened within its own support and the results are multiplied out.
fn standardize_factors(
    raw: &[OrderedSetPartition],
) -> Vec<(Vec<OrderedSetPartition>, BigRational)> {
    let mut combined: Vec<(Vec<OrderedSetPartition>, BigRational)> =
        vec![(Vec::new(), rational(1))];
    for factor in raw {
        if factor.first_block_contains_min() {
            for (factors, _) in combined.iter_mut() {
                factors.push(factor.clone());
            }
            continue;
        }
        let mut residual = BTreeMap::new();
        residual.insert(factor.order_key(), (factor.clone(), rational(1)));
        let expansion = back_substitute(residual);
        let mut next = Vec::with_capacity(combined.len() * expansion.len());
        for (factors, coef) in &combined {
            for (csp, csp_coef) in &expansion {
                let mut joined = factors.clone();
                joined.extend(csp.factors().iter().cloned());
                next.push((joined, coef * csp_coef));
            }
        }
        combined = next;
    }
    combined
}
