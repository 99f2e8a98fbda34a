use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{CompositeSetPartition, OrderedSetPartition};
use crate::error::{Error, Result};

/// Which family of labels a vector's terms are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// Full-support plates, labeled by ordered set partitions of `{1, …, n}`.
    Plate,
    /// Canonical basis elements, labeled by standard composites of `{1, …, n}`.
    Canonical,
    /// Closed dual faces, labeled like plates.
    DualFace,
}

impl BasisKind {
    pub fn name(&self) -> &'static str {
        match self {
            BasisKind::Plate => "plate",
            BasisKind::Canonical => "canonical",
            BasisKind::DualFace => "dual_face",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "plate" => Ok(BasisKind::Plate),
            "canonical" => Ok(BasisKind::Canonical),
            "dual_face" => Ok(BasisKind::DualFace),
            other => Err(Error::domain(format!("unknown basis kind '{other}'"))),
        }
    }
}

/// A basis label: an ordered set partition for the plate and dual-face bases,
/// a composite for the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VectorLabel {
    Osp(OrderedSetPartition),
    Csp(CompositeSetPartition),
}

impl VectorLabel {
    pub fn order_key(&self) -> Vec<u32> {
        match self {
            VectorLabel::Osp(o) => o.order_key(),
            VectorLabel::Csp(c) => c.order_key(),
        }
    }

    pub fn as_osp(&self) -> Option<&OrderedSetPartition> {
        match self {
            VectorLabel::Osp(o) => Some(o),
            VectorLabel::Csp(_) => None,
        }
    }

    pub fn as_csp(&self) -> Option<&CompositeSetPartition> {
        match self {
            VectorLabel::Csp(c) => Some(c),
            VectorLabel::Osp(_) => None,
        }
    }
}

impl std::fmt::Display for VectorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VectorLabel::Osp(o) => write!(f, "{o}"),
            VectorLabel::Csp(c) => write!(f, "{c}"),
        }
    }
}

/// A finite formal sum of basis labels with exact rational coefficients, in a
/// fixed basis over the ground set `{1, …, n}`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlateVector {
    n: u32,
    basis: BasisKind,
    terms: BTreeMap<VectorLabel, BigRational>,
}

impl PlateVector {
    pub fn zero(n: u32, basis: BasisKind) -> Self {
        PlateVector { n, basis, terms: BTreeMap::new() }
    }

    /// The vector with a single coefficient-1 term.
    pub fn unit(n: u32, basis: BasisKind, label: VectorLabel) -> Result<Self> {
        let mut v = PlateVector::zero(n, basis);
        v.add_term(label, BigRational::from_integer(1.into()))?;
        Ok(v)
    }

    pub fn unit_plate(osp: &OrderedSetPartition) -> Result<Self> {
        let support = osp.support();
        if !support.is_contiguous_from_1() {
            return Err(Error::domain("plate labels must cover {1, …, n}"));
        }
        PlateVector::unit(
            support.max_label().unwrap(),
            BasisKind::Plate,
            VectorLabel::Osp(osp.clone()),
        )
    }

    fn check_label(&self, label: &VectorLabel) -> Result<()> {
        match (self.basis, label) {
            (BasisKind::Plate | BasisKind::DualFace, VectorLabel::Osp(o)) => {
                if !o.has_full_support() || o.support().max_label() != Some(self.n) {
                    return Err(Error::domain(format!(
                        "label '{o}' is not an ordered set partition of {{1, …, {}}}",
                        self.n
                    )));
                }
            }
            (BasisKind::Canonical, VectorLabel::Csp(c)) => {
                let ground = c.ground();
                if !ground.is_contiguous_from_1() || ground.max_label() != Some(self.n) {
                    return Err(Error::domain(format!(
                        "label '{c}' is not a composite of {{1, …, {}}}",
                        self.n
                    )));
                }
                if !c.is_standard() {
                    return Err(Error::domain(format!(
                        "canonical label '{c}' is not standard"
                    )));
                }
            }
            _ => {
                return Err(Error::domain(format!(
                    "label kind does not match basis '{}'",
                    self.basis.name()
                )))
            }
        }
        Ok(())
    }

    /// Adds `coef` to the coefficient of `label`, dropping the term if the
    /// result is zero.
    pub fn add_term(&mut self, label: VectorLabel, coef: BigRational) -> Result<()> {
        if coef.is_zero() {
            return Ok(());
        }
        self.check_label(&label)?;
        let entry = self.terms.entry(label).or_insert_with(BigRational::zero);
        *entry += coef;
        if entry.is_zero() {
            // Re-borrowing to remove: find the key again.
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, label: &VectorLabel) -> BigRational {
        self.terms.get(label).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VectorLabel, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted by the lexicographic label order used for all output.
    pub fn terms_sorted(&self) -> Vec<(&VectorLabel, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(label, _)| label.order_key());
        terms
    }

    pub fn add(&self, other: &PlateVector) -> Result<PlateVector> {
        if self.n != other.n || self.basis != other.basis {
            return Err(Error::domain("vector addition requires matching n and basis"));
        }
        let mut out = self.clone();
        for (label, coef) in other.iter() {
            out.add_term(label.clone(), coef.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigRational) -> PlateVector {
        if factor.is_zero() {
            return PlateVector::zero(self.n, self.basis);
        }
        PlateVector {
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * factor))
                .collect(),
        }
    }

    /// Keeps only the terms satisfying `keep`, preserving basis and ground.
    pub fn filter<F: Fn(&VectorLabel) -> bool>(&self, keep: F) -> PlateVector {
        PlateVector {
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Rebuilds the vector with a different basis tag (used when a filter has
    /// made the terms meaningful in another basis). Labels are revalidated.
    pub fn with_basis(&self, basis: BasisKind) -> Result<PlateVector> {
        let mut out = PlateVector::zero(self.n, basis);
        for (label, coef) in self.iter() {
            out.add_term(label.clone(), coef.clone())?;
        }
        Ok(out)
    }
}

impl std::fmt::Display for PlateVector {
    /// Signed-sum rendering in label order, e.g. `+ [1,2|3] - [1|2,3]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (label, coef)) in self.terms_sorted().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}[{label}]", crate::text::format_signed_coefficient(coef))?;
        }
        Ok(())
    }
}
