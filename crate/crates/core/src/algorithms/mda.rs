//! Label-setting solver. A vertex-keyed heap holds at most one candidate per
//! vertex, ordered by the space's linear extension oracle. Extracted labels
//! are permanent.
//!
//! The next candidate of a vertex is the leo-minimum over the one-arc
//! extensions of permanent predecessor labels that are neither dominated by
//! nor already among the vertex's permanent labels. Every such extension is
//! created exactly once, when its predecessor becomes permanent, and kept in
//! a per-vertex pool; pool entries leave for good once they are dominated or
//! extracted, since permanent sets only grow.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::algorithms::heap::VertexHeap;
use crate::algorithms::{
    Algorithm, LabelSettingViolation, SolveError, SolveOptions, SolveResult, Stats, Status, Variant,
};
use crate::error::CoreError;
use crate::instance::Instance;
use crate::label::{LabelId, LabelStore};
use crate::space::{ComparisonResult, WeightSpace};

struct Run<'a, S: WeightSpace> {
    space: &'a S,
    variant: Variant,
    store: LabelStore<S::Weight>,
    permanent: Vec<Vec<LabelId>>,
    permanent_set: HashSet<LabelId>,
    pool: Vec<Vec<LabelId>>,
    stats: Stats,
}

impl<S: WeightSpace> Run<'_, S> {
    fn leo(&mut self, a: LabelId, b: LabelId) -> Ordering {
        self.stats.leo_calls += 1;
        self.space
            .leo_cmp(self.store.weight(a), self.store.weight(b))
            .expect("leo presence checked")
    }

    fn compare(&mut self, a: LabelId, b: LabelId) -> ComparisonResult {
        self.stats.comparisons += 1;
        self.space.compare(self.store.weight(a), self.store.weight(b))
    }

    /// Some permanent label at `v` is `⊏` `l`.
    fn blocked(&mut self, v: usize, l: LabelId) -> bool {
        for i in 0..self.permanent[v].len() {
            let p = self.permanent[v][i];
            let rel = self.compare(p, l);
            let hit = match self.variant {
                Variant::Min => rel.is_le(),
                Variant::Max => rel == ComparisonResult::Less,
            };
            if hit {
                return true;
            }
        }
        false
    }

    fn next_candidate(&mut self, v: usize) -> Option<LabelId> {
        let pool = std::mem::take(&mut self.pool[v]);
        let mut kept = Vec::with_capacity(pool.len());
        let mut best: Option<LabelId> = None;
        for l in pool {
            if self.permanent_set.contains(&l) || self.blocked(v, l) {
                continue;
            }
            kept.push(l);
            best = match best {
                Some(b) if self.leo(b, l) != Ordering::Greater => Some(b),
                _ => Some(l),
            };
        }
        self.pool[v] = kept;
        best
    }
}

pub fn mda_solve<S: WeightSpace>(
    inst: &Instance<S>,
    opts: &SolveOptions,
) -> Result<SolveResult<S::Weight>, SolveError> {
    let space = inst.space();
    if !space.has_leo() {
        return Err(CoreError::NoLeo.into());
    }
    let g = inst.graph();
    let n = g.vertex_count();
    let mut run = Run {
        space,
        variant: opts.variant,
        store: LabelStore::new(),
        permanent: vec![Vec::new(); n],
        permanent_set: HashSet::new(),
        pool: vec![Vec::new(); n],
        stats: Stats::default(),
    };
    let root = run.store.root(inst.source(), space.initial());
    run.stats.insertions += 1;

    let mut heap: VertexHeap<LabelId> = VertexHeap::new(n);
    let leo_of = |store: &LabelStore<S::Weight>, a: &LabelId, b: &LabelId| {
        space
            .leo_cmp(store.weight(*a), store.weight(*b))
            .expect("leo presence checked")
    };
    heap.set(inst.source(), root, &mut |a, b| leo_of(&run.store, a, b));

    let cap = opts.max_extractions.unwrap_or(usize::MAX);
    let mut last: Option<LabelId> = None;
    let mut status = Status::Converged;

    loop {
        let top = {
            let store = &run.store;
            heap.pop(&mut |a, b| leo_of(store, a, b))
        };
        let Some(top) = top else { break };
        if run.stats.extractions >= cap {
            status = Status::IterationGuardHit;
            break;
        }
        let (v, star) = (top.vertex, top.item);
        run.stats.extractions += 1;

        if let Some(prev) = last {
            if run.leo(prev, star) == Ordering::Greater {
                run.stats.leo_order_violations += 1;
            }
        }
        last = Some(star);
        if let Some(&prev) = run.permanent[v].last() {
            if run.leo(prev, star) == Ordering::Greater {
                run.stats.vertex_leo_order_violations += 1;
            }
        }
        for i in 0..run.permanent[v].len() {
            let p = run.permanent[v][i];
            if run.compare(star, p) == ComparisonResult::Less {
                run.stats.label_setting_violations += 1;
                if opts.abort_on_violation {
                    let violation = LabelSettingViolation {
                        vertex: v,
                        permanent_path: run.store.reconstruct_path(p),
                        permanent_weight: format!("{:?}", run.store.weight(p)),
                        extracted_path: run.store.reconstruct_path(star),
                        extracted_weight: format!("{:?}", run.store.weight(star)),
                    };
                    return Err(SolveError::LabelSetting(Box::new(violation)));
                }
            }
        }

        run.permanent[v].push(star);
        run.permanent_set.insert(star);

        if let Some(next) = run.next_candidate(v) {
            let store = &run.store;
            heap.set(v, next, &mut |a, b| leo_of(store, a, b));
        }

        for arc in g.outgoing(v) {
            let w = space.extend(run.store.weight(star), arc)?;
            if opts.drop_infeasible && !space.is_feasible(&w) {
                continue;
            }
            let ext = run.store.extend(star, arc.id, arc.head, w);
            run.stats.insertions += 1;
            run.pool[arc.head].push(ext);
            if run.blocked(arc.head, ext) {
                continue;
            }
            let replace = match heap.get(arc.head) {
                None => true,
                Some(cur) => run.leo(ext, cur) == Ordering::Less,
            };
            if replace {
                let store = &run.store;
                heap.set(arc.head, ext, &mut |a, b| leo_of(store, a, b));
            }
        }
    }

    Ok(SolveResult {
        algorithm: Algorithm::Mda,
        variant: opts.variant,
        store: run.store,
        frontiers: run.permanent,
        stats: run.stats,
        status,
    })
}
