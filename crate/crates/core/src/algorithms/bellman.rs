//! Label-correcting solver: a Jacobi-style fixed point where iteration `k`
//! merges the one-arc extensions of every frontier of iteration `k - 1`.

use std::collections::HashMap;

use crate::algorithms::merge::{max_merge, min_merge};
use crate::algorithms::{Algorithm, SolveError, SolveOptions, SolveResult, Stats, Status, Variant};
use crate::graph::ArcId;
use crate::instance::Instance;
use crate::label::{LabelId, LabelStore};
use crate::space::WeightSpace;

pub fn default_iteration_guard<S: WeightSpace>(inst: &Instance<S>) -> usize {
    let base = 4 * inst.graph().vertex_count().max(1);
    match inst.mu() {
        Some(mu) => base.max(mu + 2),
        None => base,
    }
}

pub fn bellman_solve<S: WeightSpace>(
    inst: &Instance<S>,
    opts: &SolveOptions,
) -> Result<SolveResult<S::Weight>, SolveError> {
    let g = inst.graph();
    let space = inst.space();
    let n = g.vertex_count();
    let guard = opts.max_iterations.unwrap_or_else(|| default_iteration_guard(inst));

    let mut store = LabelStore::new();
    let mut stats = Stats::default();
    let root = store.root(inst.source(), space.initial());
    stats.insertions += 1;

    let mut current: Vec<Vec<LabelId>> = vec![Vec::new(); n];
    current[inst.source()].push(root);
    // extension (label, arc) -> label, so the same path keeps its identity
    let mut memo: HashMap<(LabelId, ArcId), Option<LabelId>> = HashMap::new();
    let mut comparisons = 0u64;
    let mut status = Status::IterationGuardHit;

    for k in 1..=guard {
        stats.iterations = k;
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut candidates = Vec::new();
            for arc in g.incoming(v) {
                stats.merges += 1;
                for &l in &current[arc.tail] {
                    let id = match memo.get(&(l, arc.id)) {
                        Some(&id) => id,
                        None => {
                            let w = space.extend(store.weight(l), arc)?;
                            let id = if opts.drop_infeasible && !space.is_feasible(&w) {
                                None
                            } else {
                                stats.insertions += 1;
                                Some(store.extend(l, arc.id, v, w))
                            };
                            memo.insert((l, arc.id), id);
                            id
                        }
                    };
                    candidates.extend(id);
                }
            }
            let cmp = |a: LabelId, b: LabelId| {
                comparisons += 1;
                space.compare(store.weight(a), store.weight(b))
            };
            let merged = match opts.variant {
                Variant::Min => min_merge(&current[v], candidates, cmp),
                Variant::Max => max_merge(&current[v], candidates, cmp),
            };
            next.push(merged);
        }
        stats.frontier_sizes.push(next.iter().map(Vec::len).collect());
        if next == current {
            status = Status::Converged;
            break;
        }
        current = next;
    }
    stats.comparisons = comparisons;

    Ok(SolveResult {
        algorithm: Algorithm::Bellman,
        variant: opts.variant,
        store,
        frontiers: current,
        stats,
        status,
    })
}
