use num_rational::BigRational;

use crate::algebra::space::Space;
use crate::algebra::tree::DirectedTree;
use crate::algebra::vector::{BasisKind, PlateVector, VectorLabel};
use crate::combinatorics::enumeration::{constrained_signed_osps, AtomConstraint};
use crate::combinatorics::{shuffle_lumpings, CompositeSetPartition, LabelSet, OrderedSetPartition};
use crate::error::{Error, Result};

fn rational(value: i8) -> BigRational {
    BigRational::from_integer(i64::from(value).into())
}

/// Expands a composite into the plate basis: the signed sum of its
/// shuffle-lumpings. The composite must cover a ground set `{1, …, n}`.
pub fn convolution_expand(csp: &CompositeSetPartition) -> Result<PlateVector> {
    let ground = csp.ground();
    if !ground.is_contiguous_from_1() {
        return Err(Error::domain(format!(
            "composite '{csp}' does not cover a ground set of the form {{1, …, n}}"
        )));
    }
    let n = ground.max_label().unwrap();
    let mut out = PlateVector::zero(n, BasisKind::Plate);
    for (osp, sign) in shuffle_lumpings(csp) {
        out.add_term(VectorLabel::Osp(osp), rational(sign))?;
    }
    Ok(out)
}

/// Expands the cone spanned by a tree's root generators into plates: the
/// signed sum, over all arrangements `π` placing each edge's tail strictly
/// before its head, of `(-1)^(n - len(π))`. Projection into a quotient space
/// is applied term by term.
pub fn tree_expand(tree: &DirectedTree, space: Space) -> Result<PlateVector> {
    let n = tree.n();
    let atoms: Vec<LabelSet> = (1..=n).map(LabelSet::singleton).collect();
    let constraints: Vec<AtomConstraint> = tree
        .edges()
        .iter()
        .map(|&(tail, head)| AtomConstraint {
            a: (tail - 1) as usize,
            b: (head - 1) as usize,
            strict: true,
        })
        .collect();
    let mut out = PlateVector::zero(n, BasisKind::Plate);
    for (osp, sign) in constrained_signed_osps(&atoms, &constraints) {
        if space.plate_survives(&osp) {
            out.add_term(VectorLabel::Osp(osp), rational(sign))?;
        }
    }
    Ok(out)
}

/// Expands a closed-below/open-above Weyl chamber into closed dual faces.
///
/// The input is a permutation written as a chain of singletons; the chamber
/// fixes `x_{σ(1)} ≥ … ≥ x_{σ(n)}` with strict inequality at the descents of
/// `σ`. Each subset of the descent positions is lumped and contributes with
/// sign `(-1)^(subset size)`.
pub fn weyl_chamber_expansion(perm: &OrderedSetPartition) -> Result<PlateVector> {
    let labels = perm.singleton_labels().ok_or_else(|| {
        Error::domain("chamber expansion expects a permutation (all singleton blocks)")
    })?;
    if !perm.has_full_support() {
        return Err(Error::domain("permutation must cover {1, …, n}"));
    }
    let n = perm.support().max_label().unwrap();
    let descents: Vec<usize> = (0..labels.len() - 1)
        .filter(|&i| labels[i] > labels[i + 1])
        .collect();
    let mut out = PlateVector::zero(n, BasisKind::DualFace);
    for choice in 0u32..(1 << descents.len()) {
        let mut lumped: Vec<bool> = vec![false; labels.len().saturating_sub(1)];
        for (bit, &pos) in descents.iter().enumerate() {
            if choice & (1 << bit) != 0 {
                lumped[pos] = true;
            }
        }
        let mut blocks: Vec<LabelSet> = vec![LabelSet::singleton(labels[0])];
        for (i, &label) in labels.iter().enumerate().skip(1) {
            if lumped[i - 1] {
                let last = blocks.last_mut().unwrap();
                *last = last.union(LabelSet::singleton(label));
            } else {
                blocks.push(LabelSet::singleton(label));
            }
        }
        let sign = if choice.count_ones() % 2 == 0 { 1 } else { -1 };
        out.add_term(
            VectorLabel::Osp(OrderedSetPartition::new(blocks)?),
            rational(sign),
        )?;
    }
    Ok(out)
}
