//! Instances: a graph, a source, a weight space, and the structural
//! properties the author claims for the combination.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;
use crate::graph::{ArcRef, Graph, VertexId};
use crate::space::{ComparisonResult, WeightSpace};

/// Structural properties that decide which solver is correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    WellPosed,
    HistoryFree,
    CycleNonDecreasing,
    CycleIncreasing,
    ArcIncreasing,
    WeaklyIndependent,
    Independent,
    WeaklySubpathOptimal,
    SubpathOptimal,
    MuBounded,
    /// Every path weight precedes its one-arc extensions in the leo.
    LeoMonotone,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::WellPosed,
        Property::HistoryFree,
        Property::CycleNonDecreasing,
        Property::CycleIncreasing,
        Property::ArcIncreasing,
        Property::WeaklyIndependent,
        Property::Independent,
        Property::WeaklySubpathOptimal,
        Property::SubpathOptimal,
        Property::MuBounded,
        Property::LeoMonotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::WellPosed => "well-posed",
            Property::HistoryFree => "history-free",
            Property::CycleNonDecreasing => "cycle-non-decreasing",
            Property::CycleIncreasing => "cycle-increasing",
            Property::ArcIncreasing => "arc-increasing",
            Property::WeaklyIndependent => "weakly-independent",
            Property::Independent => "independent",
            Property::WeaklySubpathOptimal => "weakly-subpath-optimal",
            Property::SubpathOptimal => "subpath-optimal",
            Property::MuBounded => "mu-bounded",
            Property::LeoMonotone => "leo-monotone",
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Property, CoreError> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CoreError::InvalidParameter(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PropertySet(u16);

impl PropertySet {
    pub const fn empty() -> PropertySet {
        PropertySet(0)
    }

    pub fn of(props: &[Property]) -> PropertySet {
        props.iter().fold(PropertySet::empty(), |s, &p| s.with(p))
    }

    pub fn with(self, p: Property) -> PropertySet {
        PropertySet(self.0 | p.bit())
    }

    pub fn insert(&mut self, p: Property) {
        self.0 |= p.bit();
    }

    pub fn contains(self, p: Property) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn contains_all(self, other: PropertySet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn union(self, other: PropertySet) -> PropertySet {
        PropertySet(self.0 | other.0)
    }

    pub fn difference(self, other: PropertySet) -> PropertySet {
        PropertySet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Property> {
        Property::ALL.into_iter().filter(move |p| self.contains(*p))
    }
}

impl fmt::Debug for PropertySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Property::name)).finish()
    }
}

impl FromIterator<Property> for PropertySet {
    fn from_iter<I: IntoIterator<Item = Property>>(iter: I) -> PropertySet {
        iter.into_iter().fold(PropertySet::empty(), PropertySet::with)
    }
}

/// A solver-facing instance: every path weight is obtained by folding the
/// space's update function along the path's arcs.
#[derive(Debug, Clone)]
pub struct Instance<S> {
    graph: Graph,
    source: VertexId,
    space: S,
    declared: PropertySet,
    mu: Option<usize>,
}

impl<S: WeightSpace> Instance<S> {
    pub fn new(graph: Graph, source: VertexId, space: S) -> Result<Instance<S>, CoreError> {
        if source >= graph.vertex_count() {
            return Err(CoreError::SourceOutOfRange {
                source_vertex: source,
                vertex_count: graph.vertex_count(),
            });
        }
        if let Some(n) = space.arc_count() {
            if n != graph.arc_count() {
                return Err(CoreError::ArcCountMismatch {
                    space: n,
                    graph: graph.arc_count(),
                });
            }
        }
        Ok(Instance {
            graph,
            source,
            space,
            declared: PropertySet::empty(),
            mu: None,
        })
    }

    pub fn with_properties(mut self, declared: PropertySet, mu: Option<usize>) -> Result<Instance<S>, CoreError> {
        if declared.contains(Property::MuBounded) && mu.is_none() {
            return Err(CoreError::MissingMu);
        }
        if mu == Some(0) {
            return Err(CoreError::InvalidParameter("mu must be positive".into()));
        }
        self.declared = declared;
        self.mu = mu;
        Ok(self)
    }

    /// Re-wraps the space, e.g. into [`crate::weights::any::AnySpace`]. The
    /// new space must describe the same arcs.
    pub fn map_space<T: WeightSpace>(self, f: impl FnOnce(S) -> T) -> Instance<T> {
        let space = f(self.space);
        debug_assert!(space.arc_count().is_none_or(|n| n == self.graph.arc_count()));
        Instance {
            graph: self.graph,
            source: self.source,
            space,
            declared: self.declared,
            mu: self.mu,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn declared(&self) -> PropertySet {
        self.declared
    }

    pub fn mu(&self) -> Option<usize> {
        self.mu
    }

    /// Folds the update function along `path`, which must start at the
    /// source.
    pub fn path_weight(&self, path: &[VertexId]) -> Result<S::Weight, CoreError> {
        if path.first() != Some(&self.source) || !self.graph.is_walk(path) {
            return Err(CoreError::InvalidParameter(format!(
                "{path:?} is not a walk from the source"
            )));
        }
        let mut w = self.space.initial();
        for pair in path.windows(2) {
            let arc = self.graph.find_arc(pair[0], pair[1]).expect("walk checked");
            w = self.space.extend(&w, arc)?;
        }
        Ok(w)
    }
}

/// Anything that assigns weights to paths from a source: the oracle and the
/// condition checkers work on this, so they also accept instances whose
/// weights depend on the full vertex sequence.
pub trait Weighted: Sync {
    type Weight: Clone + Eq + std::hash::Hash + fmt::Debug + Send + Sync;

    fn graph(&self) -> &Graph;
    fn source(&self) -> VertexId;
    fn root_weight(&self) -> Self::Weight;
    /// Weight of `path + arc`, given `path` (ending at `arc.tail`) and its
    /// weight.
    fn step(&self, path: &[VertexId], weight: &Self::Weight, arc: ArcRef) -> Result<Self::Weight, CoreError>;
    fn compare(&self, a: &Self::Weight, b: &Self::Weight) -> ComparisonResult;
    fn leo_cmp(&self, _a: &Self::Weight, _b: &Self::Weight) -> Option<Ordering> {
        None
    }
    fn is_feasible(&self, _w: &Self::Weight) -> bool {
        true
    }
    /// True if `step` never looks at the path, only at the weight.
    fn uses_update_function(&self) -> bool {
        false
    }

    fn weigh(&self, path: &[VertexId]) -> Result<Self::Weight, CoreError> {
        if path.first() != Some(&self.source()) || !self.graph().is_walk(path) {
            return Err(CoreError::InvalidParameter(format!(
                "{path:?} is not a walk from the source"
            )));
        }
        let mut w = self.root_weight();
        for i in 1..path.len() {
            let arc = self.graph().find_arc(path[i - 1], path[i]).expect("walk checked");
            w = self.step(&path[..i], &w, arc)?;
        }
        Ok(w)
    }
}

impl<S: WeightSpace> Weighted for Instance<S> {
    type Weight = S::Weight;

    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn source(&self) -> VertexId {
        self.source
    }

    fn root_weight(&self) -> S::Weight {
        self.space.initial()
    }

    fn step(&self, _path: &[VertexId], weight: &S::Weight, arc: ArcRef) -> Result<S::Weight, CoreError> {
        self.space.extend(weight, arc)
    }

    fn compare(&self, a: &S::Weight, b: &S::Weight) -> ComparisonResult {
        self.space.compare(a, b)
    }

    fn leo_cmp(&self, a: &S::Weight, b: &S::Weight) -> Option<Ordering> {
        self.space.leo_cmp(a, b)
    }

    fn is_feasible(&self, w: &S::Weight) -> bool {
        self.space.is_feasible(w)
    }

    fn uses_update_function(&self) -> bool {
        true
    }
}
