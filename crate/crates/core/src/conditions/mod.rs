//! Bounded empirical checks of the structural properties, a validator for
//! linear extension oracles, and the recommender that maps properties to
//! solvers with a correctness guarantee.
//!
//! Every check enumerates walks from the source up to a depth and either
//! reports that the property holds that far or returns a witness that can be
//! recomputed from the instance.

pub mod checks;
pub mod leo;
pub mod orienteering;
pub mod recommend;

use std::fmt;
use std::str::FromStr;

use crate::algorithms::oracle::DEFAULT_BUDGET;
use crate::error::CoreError;
use crate::graph::VertexId;
use crate::instance::{Property, Weighted};
use crate::space::ComparisonResult;

pub use checks::{check, check_history_free, check_independence, check_monotonicity, check_subpath_optimality};
pub use leo::{check_linear_extension, enumerated_weights};
pub use recommend::{close, evaluate, recommend_algorithm, Guarantee, Recommendation, Row, ROWS};

pub const DEFAULT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub depth: usize,
    pub budget: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            depth: DEFAULT_DEPTH,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Bounds {
    pub fn depth(depth: usize) -> Bounds {
        Bounds {
            depth,
            ..Bounds::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    Weak,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonotonicityKind {
    ArcNonDecreasing,
    ArcIncreasing,
    StrictArc,
    CycleNonDecreasing,
    CycleIncreasing,
    StrictCycle,
}

impl MonotonicityKind {
    pub fn is_cycle(self) -> bool {
        matches!(
            self,
            MonotonicityKind::CycleNonDecreasing | MonotonicityKind::CycleIncreasing | MonotonicityKind::StrictCycle
        )
    }

    /// Whether `W(extended)` compared to `W(p)` is allowed.
    pub fn admits(self, extended_vs_base: ComparisonResult) -> bool {
        use MonotonicityKind::*;
        match self {
            ArcNonDecreasing | CycleNonDecreasing => extended_vs_base != ComparisonResult::Less,
            ArcIncreasing | CycleIncreasing => extended_vs_base.is_ge(),
            StrictArc | StrictCycle => extended_vs_base == ComparisonResult::Greater,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    HistoryFree,
    Independence(Strength),
    Monotonicity(MonotonicityKind),
    SubpathOptimality(Strength),
    LinearExtension,
}

impl Condition {
    pub const ALL: [Condition; 12] = [
        Condition::HistoryFree,
        Condition::Independence(Strength::Weak),
        Condition::Independence(Strength::Strict),
        Condition::Monotonicity(MonotonicityKind::ArcNonDecreasing),
        Condition::Monotonicity(MonotonicityKind::ArcIncreasing),
        Condition::Monotonicity(MonotonicityKind::StrictArc),
        Condition::Monotonicity(MonotonicityKind::CycleNonDecreasing),
        Condition::Monotonicity(MonotonicityKind::CycleIncreasing),
        Condition::Monotonicity(MonotonicityKind::StrictCycle),
        Condition::SubpathOptimality(Strength::Weak),
        Condition::SubpathOptimality(Strength::Strict),
        Condition::LinearExtension,
    ];

    pub fn name(self) -> &'static str {
        use MonotonicityKind::*;
        match self {
            Condition::HistoryFree => "history-free",
            Condition::Independence(Strength::Weak) => "weak-independence",
            Condition::Independence(Strength::Strict) => "independence",
            Condition::Monotonicity(ArcNonDecreasing) => "arc-non-decreasing",
            Condition::Monotonicity(ArcIncreasing) => "arc-increasing",
            Condition::Monotonicity(StrictArc) => "strict-arc",
            Condition::Monotonicity(CycleNonDecreasing) => "cycle-non-decreasing",
            Condition::Monotonicity(CycleIncreasing) => "cycle-increasing",
            Condition::Monotonicity(StrictCycle) => "strict-cycle",
            Condition::SubpathOptimality(Strength::Weak) => "weak-subpath-optimality",
            Condition::SubpathOptimality(Strength::Strict) => "subpath-optimality",
            Condition::LinearExtension => "linear-extension",
        }
    }

    /// The declarable property this condition tests, if any.
    pub fn property(self) -> Option<Property> {
        use MonotonicityKind::*;
        match self {
            Condition::HistoryFree => Some(Property::HistoryFree),
            Condition::Independence(Strength::Weak) => Some(Property::WeaklyIndependent),
            Condition::Independence(Strength::Strict) => Some(Property::Independent),
            Condition::Monotonicity(ArcIncreasing) => Some(Property::ArcIncreasing),
            Condition::Monotonicity(CycleNonDecreasing) => Some(Property::CycleNonDecreasing),
            Condition::Monotonicity(CycleIncreasing) => Some(Property::CycleIncreasing),
            Condition::Monotonicity(_) => None,
            Condition::SubpathOptimality(Strength::Weak) => Some(Property::WeaklySubpathOptimal),
            Condition::SubpathOptimality(Strength::Strict) => Some(Property::SubpathOptimal),
            Condition::LinearExtension => Some(Property::LeoMonotone),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Condition, CoreError> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CoreError::InvalidParameter(format!("unknown condition `{s}`")))
    }
}

/// Which relation a recorded comparison used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Order,
    Leo,
}

/// `relation(weights[left], weights[right]) = result`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub left: usize,
    pub right: usize,
    pub relation: Relation,
    pub result: ComparisonResult,
}

/// The leo requirement a linear-extension witness breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeoClause {
    Totality,
    Antisymmetry,
    Transitivity,
    ExtendsOrder,
    MonotoneAlongArcs,
}

impl LeoClause {
    pub fn name(self) -> &'static str {
        match self {
            LeoClause::Totality => "totality",
            LeoClause::Antisymmetry => "antisymmetry",
            LeoClause::Transitivity => "transitivity",
            LeoClause::ExtendsOrder => "extends-order",
            LeoClause::MonotoneAlongArcs => "monotone-along-arcs",
        }
    }
}

/// A counterexample. `weights[i]` is the weight of `paths[i]`; sampled leo
/// witnesses carry weights only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<W> {
    pub paths: Vec<Vec<VertexId>>,
    pub weights: Vec<W>,
    pub arc: Option<(VertexId, VertexId)>,
    pub comparisons: Vec<Comparison>,
    pub clause: Option<LeoClause>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    HoldsToDepth(usize),
    Violated(Box<Witness<W>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport<W> {
    pub condition: Condition,
    pub verdict: Verdict<W>,
}

impl<W> ConditionReport<W> {
    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::HoldsToDepth(_))
    }

    pub fn witness(&self) -> Option<&Witness<W>> {
        match &self.verdict {
            Verdict::Violated(w) => Some(w),
            Verdict::HoldsToDepth(_) => None,
        }
    }
}

fn order(left: usize, right: usize, result: ComparisonResult) -> Comparison {
    Comparison {
        left,
        right,
        relation: Relation::Order,
        result,
    }
}

fn leo(left: usize, right: usize, result: ComparisonResult) -> Comparison {
    Comparison {
        left,
        right,
        relation: Relation::Leo,
        result,
    }
}

/// Recomputes a violated report from scratch: path weights, every recorded
/// comparison, and whether those comparisons really contradict the
/// condition. Reports that hold revalidate trivially.
pub fn revalidate<I: Weighted>(inst: &I, report: &ConditionReport<I::Weight>) -> bool {
    let Some(w) = report.witness() else { return true };
    for (path, weight) in w.paths.iter().zip(&w.weights) {
        match inst.weigh(path) {
            Ok(x) if &x == weight => {}
            _ => return false,
        }
    }
    for c in &w.comparisons {
        let (Some(a), Some(b)) = (w.weights.get(c.left), w.weights.get(c.right)) else {
            return false;
        };
        let got = match c.relation {
            Relation::Order => inst.compare(a, b),
            Relation::Leo => match inst.leo_cmp(a, b) {
                Some(o) => ordering_result(o),
                None => return false,
            },
        };
        if got != c.result {
            return false;
        }
    }
    contradicts(report.condition, w)
}

pub(crate) fn ordering_result(o: std::cmp::Ordering) -> ComparisonResult {
    match o {
        std::cmp::Ordering::Less => ComparisonResult::Less,
        std::cmp::Ordering::Equal => ComparisonResult::Equal,
        std::cmp::Ordering::Greater => ComparisonResult::Greater,
    }
}

fn contradicts<W: PartialEq>(condition: Condition, w: &Witness<W>) -> bool {
    use ComparisonResult::*;
    let c = &w.comparisons;
    let is_prefix = |a: usize, b: usize| {
        w.paths
            .get(a)
            .zip(w.paths.get(b))
            .is_some_and(|(p, q)| p.len() < q.len() && q.starts_with(p))
    };
    match condition {
        Condition::HistoryFree => c.len() == 2 && c[0].result == Equal && c[1].result != Equal,
        Condition::Independence(s) => {
            c.len() == 2
                && c[0].result == Less
                && match s {
                    Strength::Weak => !c[1].result.is_le(),
                    Strength::Strict => c[1].result != Less,
                }
        }
        Condition::Monotonicity(kind) => {
            c.len() == 1 && c[0].left == 1 && c[0].right == 0 && is_prefix(0, 1) && !kind.admits(c[0].result)
        }
        Condition::SubpathOptimality(_) => {
            c.len() == 1
                && (c[0].left, c[0].right) == (2, 1)
                && c[0].result == Less
                && is_prefix(1, 0)
                && w.paths[1].last() == w.paths.get(2).and_then(|p| p.last())
        }
        Condition::LinearExtension => match w.clause {
            Some(LeoClause::Totality) => {
                c.len() == 1 && c[0].result == Equal && w.weights.get(c[0].left) != w.weights.get(c[0].right)
            }
            Some(LeoClause::Antisymmetry) => c.len() == 2 && c[0].result != c[1].result.reverse(),
            Some(LeoClause::Transitivity) => c.len() == 3 && c.iter().all(|x| x.result == Less),
            Some(LeoClause::ExtendsOrder) => c.len() == 2 && c[0].result == Less && c[1].result != Less,
            Some(LeoClause::MonotoneAlongArcs) => c.len() == 1 && c[0].result == Greater && is_prefix(0, 1),
            None => false,
        },
    }
}
