use crate::combinatorics::{CompositeSetPartition, OrderedSetPartition};
use crate::error::{Error, Result};

/// The four spaces the calculus works in.
///
/// `HatP` is the full span of plates. `P` quotients by cones of positive
/// codimension (every composite with two or more factors dies, trivial
/// factors included, since each extra factor cuts the dimension). `HatP1`
/// quotients by non-pointed cones (any label with a block of size ≥ 2 dies).
/// `P1` applies both quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    HatP,
    P,
    HatP1,
    P1,
}

impl Space {
    pub const ALL: [Space; 4] = [Space::HatP, Space::P, Space::HatP1, Space::P1];

    pub fn name(&self) -> &'static str {
        match self {
            Space::HatP => "hatP",
            Space::P => "P",
            Space::HatP1 => "hatP1",
            Space::P1 => "P1",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "hatP" => Ok(Space::HatP),
            "P" => Ok(Space::P),
            "hatP1" => Ok(Space::HatP1),
            "P1" => Ok(Space::P1),
            other => Err(Error::domain(format!(
                "unknown space '{other}' (expected hatP, P, hatP1 or P1)"
            ))),
        }
    }

    /// Whether a full-support plate label survives term-by-term projection
    /// into this space. Full-support plates span full-dimensional cones, so
    /// only the pointedness quotients kill any of them.
    pub fn plate_survives(&self, osp: &OrderedSetPartition) -> bool {
        match self {
            Space::HatP | Space::P => true,
            Space::HatP1 | Space::P1 => osp.all_blocks_singletons(),
        }
    }

    /// Whether a canonical-basis label survives in this space.
    pub fn canonical_survives(&self, csp: &CompositeSetPartition) -> bool {
        match self {
            Space::HatP => true,
            Space::P => csp.len() == 1,
            Space::HatP1 => csp
                .factors()
                .iter()
                .all(|f| f.all_blocks_singletons()),
            Space::P1 => {
                csp.len() == 1 && csp.factors()[0].all_blocks_singletons()
            }
        }
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
