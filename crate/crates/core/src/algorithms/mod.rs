//! Solvers: the label-correcting fixed point ([`bellman_solve`]), the
//! label-setting multi-criteria Dijkstra ([`mda_solve`]), and the
//! enumeration oracle ([`brute_force_frontier`]).

pub mod bellman;
pub mod heap;
pub mod mda;
pub mod merge;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::CoreError;
use crate::graph::VertexId;
use crate::label::{Label, LabelId, LabelStore};

pub use bellman::bellman_solve;
pub use mda::mda_solve;
pub use merge::{max_merge, min_merge};
pub use oracle::{brute_force_frontier, enumerate_paths, OracleEntry, OracleOptions, OracleResult, PathRecord};

/// Which problem variant to solve: a minimal complete set (one path per
/// nondominated weight) or a maximal one (every efficient path).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Min,
    Max,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Min => "min",
            Variant::Max => "max",
        })
    }
}

impl FromStr for Variant {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Variant, CoreError> {
        match s {
            "min" => Ok(Variant::Min),
            "max" => Ok(Variant::Max),
            _ => Err(CoreError::InvalidParameter(format!("unknown variant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Bellman,
    Mda,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Bellman => "bellman",
            Algorithm::Mda => "mda",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub variant: Variant,
    /// Outer-iteration cap for the label-correcting solver.
    pub max_iterations: Option<usize>,
    /// Extraction cap for the label-setting solver.
    pub max_extractions: Option<usize>,
    /// Discard infeasible labels as soon as they are created.
    pub drop_infeasible: bool,
    /// Stop the label-setting solver at the first permanent label that a
    /// later extraction strictly dominates.
    pub abort_on_violation: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            variant: Variant::Min,
            max_iterations: None,
            max_extractions: None,
            drop_infeasible: false,
            abort_on_violation: true,
        }
    }
}

impl SolveOptions {
    pub fn new(variant: Variant) -> SolveOptions {
        SolveOptions {
            variant,
            ..SolveOptions::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Converged,
    IterationGuardHit,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub iterations: usize,
    pub extractions: usize,
    pub insertions: usize,
    pub comparisons: u64,
    pub merges: usize,
    pub leo_calls: u64,
    /// Frontier size of every vertex after each outer iteration
    /// (label-correcting solver only).
    pub frontier_sizes: Vec<Vec<usize>>,
    /// Extractions whose weight precedes, in the leo, the weight extracted
    /// just before it.
    pub leo_order_violations: usize,
    /// Same, restricted to consecutive extractions at one vertex.
    pub vertex_leo_order_violations: usize,
    /// Permanent labels strictly dominated by a later extraction.
    pub label_setting_violations: usize,
}

/// A permanent label that a later extraction strictly dominates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSettingViolation {
    pub vertex: VertexId,
    pub permanent_path: Vec<VertexId>,
    pub permanent_weight: String,
    pub extracted_path: Vec<VertexId>,
    pub extracted_weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(
        "label-setting violated at vertex {}: extracted {:?} with weight {} strictly dominates permanent {:?} with weight {}",
        .0.vertex, .0.extracted_path, .0.extracted_weight, .0.permanent_path, .0.permanent_weight
    )]
    LabelSetting(Box<LabelSettingViolation>),
}

#[derive(Debug, Clone)]
pub struct SolveResult<W> {
    pub algorithm: Algorithm,
    pub variant: Variant,
    pub store: LabelStore<W>,
    /// Label ids per vertex, in the order they were accepted.
    pub frontiers: Vec<Vec<LabelId>>,
    pub stats: Stats,
    pub status: Status,
}

impl<W: Clone> SolveResult<W> {
    pub fn labels(&self, v: VertexId) -> impl Iterator<Item = &Label<W>> + '_ {
        self.frontiers[v].iter().map(move |&id| self.store.get(id))
    }

    pub fn weights(&self, v: VertexId) -> Vec<W> {
        self.labels(v).map(|l| l.weight.clone()).collect()
    }

    pub fn paths(&self, v: VertexId) -> Vec<Vec<VertexId>> {
        self.frontiers[v]
            .iter()
            .map(|&id| self.store.reconstruct_path(id))
            .collect()
    }

    pub fn converged(&self) -> bool {
        self.status == Status::Converged
    }

    pub fn label_count(&self) -> usize {
        self.frontiers.iter().map(Vec::len).sum()
    }
}
