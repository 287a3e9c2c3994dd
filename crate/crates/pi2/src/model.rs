//! The computable model: loops at the boolean type.
//!
//! A loop is an automorphism of the two-element carrier, of which there
//! are exactly two — the identity and the swap — forming the group Z/2
//! under composition. Because the carrier is a set, a 2-cell between two
//! loops exists precisely when the loops are equal, and carries no
//! further data; this module hence has decidable equality at every level
//! and degenerate structure above level two.

use thiserror::Error;

use crate::semantics::Perm;
use crate::theory::Which;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("permutation {0:?} is not an automorphism of the two-element carrier")]
    NotALoop(Vec<usize>),
    #[error("no 2-cell exists: the loops differ")]
    NoCell,
}

/// One of the two automorphisms of the boolean carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Loop {
    negates: bool,
}

impl Loop {
    pub const IDENTITY: Loop = Loop { negates: false };
    pub const NEGATION: Loop = Loop { negates: true };

    /// Both inhabitants, in classification order.
    pub fn all() -> [Loop; 2] {
        [Loop::IDENTITY, Loop::NEGATION]
    }

    /// View a permutation as a loop; it must be one of the two
    /// automorphisms of the two-element carrier.
    pub fn from_perm(p: &Perm) -> Result<Loop, ModelError> {
        match p.as_slice() {
            [0, 1] => Ok(Loop::IDENTITY),
            [1, 0] => Ok(Loop::NEGATION),
            other => Err(ModelError::NotALoop(other.to_vec())),
        }
    }

    pub fn perm(self) -> Perm {
        let map = if self.negates { vec![1, 0] } else { vec![0, 1] };
        Perm::new(map).expect("two-element maps are bijections")
    }

    /// Path concatenation; the group operation of Z/2.
    pub fn compose(self, other: Loop) -> Loop {
        Loop {
            negates: self.negates != other.negates,
        }
    }

    /// Path inversion. Both loops are their own inverses.
    pub fn invert(self) -> Loop {
        self
    }

    pub fn identity() -> Loop {
        Loop::IDENTITY
    }

    /// Every loop is the identity or the negation.
    pub fn classify(self) -> Which {
        if self.negates {
            Which::Not
        } else {
            Which::Id
        }
    }
}

/// A 2-cell between loops. One exists exactly when the endpoints agree,
/// and any two cells with the same source are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoCell {
    at: Loop,
}

impl TwoCell {
    /// The unique cell from `source` to `target`, if the loops agree.
    pub fn between(source: Loop, target: Loop) -> Result<TwoCell, ModelError> {
        if source == target {
            Ok(TwoCell { at: source })
        } else {
            Err(ModelError::NoCell)
        }
    }

    pub fn source(&self) -> Loop {
        self.at
    }

    pub fn target(&self) -> Loop {
        self.at
    }
}
