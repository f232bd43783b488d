//! The weight-space abstraction: a partial order on weights, an arc update
//! function, the weight of the trivial path, and an optional linear
//! extension oracle (leo) used as the priority key of the label-setting
//! solver.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::CoreError;
use crate::graph::ArcRef;

/// Outcome of comparing two weights under a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparisonResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl ComparisonResult {
    pub fn reverse(self) -> ComparisonResult {
        match self {
            ComparisonResult::Less => ComparisonResult::Greater,
            ComparisonResult::Greater => ComparisonResult::Less,
            other => other,
        }
    }

    /// `a ⪯ b`
    pub fn is_le(self) -> bool {
        matches!(self, ComparisonResult::Less | ComparisonResult::Equal)
    }

    /// `a ⪰ b`
    pub fn is_ge(self) -> bool {
        matches!(self, ComparisonResult::Greater | ComparisonResult::Equal)
    }

    /// Combines the two directions of a (possibly non-antisymmetric)
    /// relation into a comparison. Mutually related but distinct values
    /// are reported as incomparable so the result stays antisymmetric.
    pub fn from_relation(equal: bool, le: bool, ge: bool) -> ComparisonResult {
        match (equal, le, ge) {
            (true, _, _) => ComparisonResult::Equal,
            (false, true, false) => ComparisonResult::Less,
            (false, false, true) => ComparisonResult::Greater,
            _ => ComparisonResult::Incomparable,
        }
    }

    /// Product-order combination of two component comparisons.
    pub fn product(self, other: ComparisonResult) -> ComparisonResult {
        use ComparisonResult::*;
        match (self, other) {
            (Equal, x) | (x, Equal) => x,
            (Less, Less) => Less,
            (Greater, Greater) => Greater,
            _ => Incomparable,
        }
    }
}

/// Result of asking the linear extension oracle which of two weights comes
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeoChoice {
    First,
    Second,
}

/// Which axioms the comparator promises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RelationKind {
    #[default]
    PartialOrder,
    /// Antisymmetric with a transitive strict part; enough for the
    /// label-correcting maximal variant.
    QuasiTransitive,
}

pub trait WeightSpace: Send + Sync {
    type Weight: Clone + Eq + Hash + Debug + Send + Sync;

    /// Partial-order comparison. Weights are assumed to be in the domain;
    /// use [`compare`] to validate first.
    fn compare(&self, a: &Self::Weight, b: &Self::Weight) -> ComparisonResult;

    /// The arc update function `F(w, a)`.
    fn extend(&self, w: &Self::Weight, arc: ArcRef) -> Result<Self::Weight, CoreError>;

    /// Weight of the trivial path at the source.
    fn initial(&self) -> Self::Weight;

    /// Number of arcs the space carries data for, if it is arc-indexed.
    fn arc_count(&self) -> Option<usize> {
        None
    }

    /// Total order extending `compare`, if the space has one. Must return
    /// `Equal` only for structurally equal weights.
    fn leo_cmp(&self, _a: &Self::Weight, _b: &Self::Weight) -> Option<Ordering> {
        None
    }

    fn has_leo(&self) -> bool {
        false
    }

    fn relation_kind(&self) -> RelationKind {
        RelationKind::PartialOrder
    }

    /// Infeasible sentinels (resource exhausted, empty battery, over budget)
    /// report `false`.
    fn is_feasible(&self, _w: &Self::Weight) -> bool {
        true
    }

    fn check_domain(&self, _w: &Self::Weight) -> Result<(), CoreError> {
        Ok(())
    }
}

/// Validated comparison.
pub fn compare<S: WeightSpace>(space: &S, a: &S::Weight, b: &S::Weight) -> Result<ComparisonResult, CoreError> {
    space.check_domain(a)?;
    space.check_domain(b)?;
    Ok(space.compare(a, b))
}

/// Validated arc update.
pub fn extend<S: WeightSpace>(space: &S, w: &S::Weight, arc: ArcRef) -> Result<S::Weight, CoreError> {
    space.check_domain(w)?;
    space.extend(w, arc)
}

/// Asks the oracle which weight precedes the other in its total order.
pub fn leo_pick<S: WeightSpace>(space: &S, a: &S::Weight, b: &S::Weight) -> Result<LeoChoice, CoreError> {
    space.check_domain(a)?;
    space.check_domain(b)?;
    match space.leo_cmp(a, b) {
        None => Err(CoreError::NoLeo),
        Some(Ordering::Greater) => Ok(LeoChoice::Second),
        Some(_) => Ok(LeoChoice::First),
    }
}

/// Componentwise `≤` comparison of two equally long vectors.
pub(crate) fn componentwise<T: Ord>(a: &[T], b: &[T]) -> ComparisonResult {
    let mut le = true;
    let mut ge = true;
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
        if !le && !ge {
            return ComparisonResult::Incomparable;
        }
    }
    match (le, ge) {
        (true, true) => ComparisonResult::Equal,
        (true, false) => ComparisonResult::Less,
        (false, true) => ComparisonResult::Greater,
        (false, false) => ComparisonResult::Incomparable,
    }
}
