//! Exhaustive path enumeration. Used as the reference the solvers are
//! checked against and as the engine behind the condition checkers.

use std::collections::HashMap;

use crate::algorithms::Variant;
use crate::error::CoreError;
use crate::graph::VertexId;
use crate::instance::Weighted;
use crate::space::ComparisonResult;

pub const DEFAULT_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub budget: usize,
    pub drop_infeasible: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: DEFAULT_BUDGET,
            drop_infeasible: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord<W> {
    pub path: Vec<VertexId>,
    pub weight: W,
}

impl<W> PathRecord<W> {
    pub fn head(&self) -> VertexId {
        *self.path.last().expect("paths are nonempty")
    }

    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() == 1
    }
}

/// Every walk from the source with at most `max_len` arcs, shortest first,
/// then in arc order. Fails once more than `budget` walks are produced.
pub fn enumerate_paths<I: Weighted>(
    inst: &I,
    max_len: usize,
    budget: usize,
) -> Result<Vec<PathRecord<I::Weight>>, CoreError> {
    let g = inst.graph();
    let mut out = vec![PathRecord {
        path: vec![inst.source()],
        weight: inst.root_weight(),
    }];
    let mut layer_start = 0;
    for _ in 0..max_len {
        let layer_end = out.len();
        for i in layer_start..layer_end {
            let tail = out[i].head();
            for arc in g.outgoing(tail) {
                if out.len() >= budget {
                    return Err(CoreError::BudgetExceeded { budget });
                }
                let weight = inst.step(&out[i].path, &out[i].weight, arc)?;
                let mut path = out[i].path.clone();
                path.push(arc.head);
                out.push(PathRecord { path, weight });
            }
        }
        layer_start = layer_end;
    }
    Ok(out)
}

/// A nondominated weight at a vertex with the enumerated paths attaining it.
/// In min mode only the first (shortest) witness is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleEntry<W> {
    pub weight: W,
    pub paths: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<W> {
    pub max_len: usize,
    pub enumerated: usize,
    pub frontiers: Vec<Vec<OracleEntry<W>>>,
}

impl<W: Clone> OracleResult<W> {
    pub fn weights(&self, v: VertexId) -> Vec<W> {
        self.frontiers[v].iter().map(|e| e.weight.clone()).collect()
    }

    pub fn paths(&self, v: VertexId) -> Vec<Vec<VertexId>> {
        self.frontiers[v].iter().flat_map(|e| e.paths.iter().cloned()).collect()
    }
}

/// Nondominated weights per vertex among all walks of at most `max_len`
/// arcs. Entries keep first-discovery order.
pub fn brute_force_frontier<I: Weighted>(
    inst: &I,
    max_len: usize,
    variant: Variant,
    opts: &OracleOptions,
) -> Result<OracleResult<I::Weight>, CoreError> {
    let records = enumerate_paths(inst, max_len, opts.budget)?;
    let n = inst.graph().vertex_count();

    // group by (vertex, weight) in discovery order
    let mut groups: Vec<Vec<OracleEntry<I::Weight>>> = vec![Vec::new(); n];
    let mut index: HashMap<(VertexId, &I::Weight), usize> = HashMap::new();
    for r in &records {
        if opts.drop_infeasible && !inst.is_feasible(&r.weight) {
            continue;
        }
        let v = r.head();
        match index.get(&(v, &r.weight)) {
            Some(&i) => {
                if variant == Variant::Max {
                    groups[v][i].paths.push(r.path.clone());
                }
            }
            None => {
                index.insert((v, &r.weight), groups[v].len());
                groups[v].push(OracleEntry {
                    weight: r.weight.clone(),
                    paths: vec![r.path.clone()],
                });
            }
        }
    }

    // incremental antichain; survivors stay in discovery order
    let frontiers = groups
        .into_iter()
        .map(|entries| {
            let mut front: Vec<OracleEntry<I::Weight>> = Vec::new();
            for e in entries {
                if front
                    .iter()
                    .any(|o| inst.compare(&o.weight, &e.weight) == ComparisonResult::Less)
                {
                    continue;
                }
                front.retain(|o| inst.compare(&e.weight, &o.weight) != ComparisonResult::Less);
                front.push(e);
            }
            front
        })
        .collect();

    Ok(OracleResult {
        max_len,
        enumerated: records.len(),
        frontiers,
    })
}
