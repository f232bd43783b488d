//! Depth-bounded checks over all walks from the source.

use std::collections::HashMap;

use crate::algorithms::oracle::{enumerate_paths, PathRecord};
use crate::conditions::leo::{check_linear_extension, enumerated_weights};
use crate::conditions::{order, Bounds, Condition, ConditionReport, MonotonicityKind, Strength, Verdict, Witness};
use crate::error::CoreError;
use crate::graph::VertexId;
use crate::instance::Weighted;
use crate::space::ComparisonResult;

type Report<I> = Result<ConditionReport<<I as Weighted>::Weight>, CoreError>;

/// Runs any condition.
pub fn check<I: Weighted>(inst: &I, condition: Condition, bounds: Bounds) -> Report<I> {
    match condition {
        Condition::HistoryFree => check_history_free(inst, bounds),
        Condition::Independence(s) => check_independence(inst, bounds, s),
        Condition::Monotonicity(kind) => check_monotonicity(inst, bounds, kind),
        Condition::SubpathOptimality(s) => check_subpath_optimality(inst, bounds, s),
        Condition::LinearExtension => {
            let sample = enumerated_weights(inst, bounds)?;
            check_linear_extension(inst, &sample, bounds)
        }
    }
}

fn holds<W>(condition: Condition, bounds: Bounds) -> ConditionReport<W> {
    ConditionReport {
        condition,
        verdict: Verdict::HoldsToDepth(bounds.depth),
    }
}

fn violated<W>(condition: Condition, witness: Witness<W>) -> ConditionReport<W> {
    ConditionReport {
        condition,
        verdict: Verdict::Violated(Box::new(witness)),
    }
}

fn extended(path: &[VertexId], head: VertexId) -> Vec<VertexId> {
    let mut p = path.to_vec();
    p.push(head);
    p
}

/// Two equal-weight walks to one vertex whose one-arc extensions differ.
pub fn check_history_free<I: Weighted>(inst: &I, bounds: Bounds) -> Report<I> {
    let records = enumerate_paths(inst, bounds.depth, bounds.budget)?;
    let mut first: HashMap<(VertexId, &I::Weight), usize> = HashMap::new();
    for (i, r) in records.iter().enumerate() {
        let Some(&j) = first.get(&(r.head(), &r.weight)) else {
            first.insert((r.head(), &r.weight), i);
            continue;
        };
        let rep = &records[j];
        for arc in inst.graph().outgoing(r.head()) {
            let a = inst.step(&rep.path, &rep.weight, arc)?;
            let b = inst.step(&r.path, &r.weight, arc)?;
            if a != b {
                let rel = inst.compare(&a, &b);
                return Ok(violated(
                    Condition::HistoryFree,
                    Witness {
                        paths: vec![
                            rep.path.clone(),
                            r.path.clone(),
                            extended(&rep.path, arc.head),
                            extended(&r.path, arc.head),
                        ],
                        weights: vec![rep.weight.clone(), r.weight.clone(), a, b],
                        arc: Some((arc.tail, arc.head)),
                        comparisons: vec![order(0, 1, ComparisonResult::Equal), order(2, 3, rel)],
                        clause: None,
                    },
                ));
            }
        }
    }
    Ok(holds(Condition::HistoryFree, bounds))
}

/// Record indices per vertex to pair up. When weights come from an update
/// function, one walk per distinct weight stands for all of them.
fn representatives<I: Weighted>(inst: &I, records: &[PathRecord<I::Weight>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); inst.graph().vertex_count()];
    let mut seen: HashMap<(VertexId, &I::Weight), ()> = HashMap::new();
    for (i, r) in records.iter().enumerate() {
        if inst.uses_update_function() && seen.insert((r.head(), &r.weight), ()).is_some() {
            continue;
        }
        out[r.head()].push(i);
    }
    out
}

/// Strict dominance between two walks to one vertex must survive every
/// common arc: as `≺` (strict) or as `⪯` (weak).
pub fn check_independence<I: Weighted>(inst: &I, bounds: Bounds, strength: Strength) -> Report<I> {
    let condition = Condition::Independence(strength);
    let records = enumerate_paths(inst, bounds.depth, bounds.budget)?;
    let g = inst.graph();
    for (v, reps) in representatives(inst, &records).into_iter().enumerate() {
        let arcs: Vec<_> = g.outgoing(v).collect();
        if arcs.is_empty() {
            continue;
        }
        let mut ext: Vec<Vec<I::Weight>> = Vec::with_capacity(reps.len());
        for &i in &reps {
            let r = &records[i];
            ext.push(
                arcs.iter()
                    .map(|&a| inst.step(&r.path, &r.weight, a))
                    .collect::<Result<_, _>>()?,
            );
        }
        for (x, &i) in reps.iter().enumerate() {
            for (y, &j) in reps.iter().enumerate() {
                if inst.compare(&records[i].weight, &records[j].weight) != ComparisonResult::Less {
                    continue;
                }
                for (k, arc) in arcs.iter().enumerate() {
                    let rel = inst.compare(&ext[x][k], &ext[y][k]);
                    let ok = match strength {
                        Strength::Weak => rel.is_le(),
                        Strength::Strict => rel == ComparisonResult::Less,
                    };
                    if !ok {
                        let (p, q) = (&records[i], &records[j]);
                        return Ok(violated(
                            condition,
                            Witness {
                                paths: vec![
                                    p.path.clone(),
                                    q.path.clone(),
                                    extended(&p.path, arc.head),
                                    extended(&q.path, arc.head),
                                ],
                                weights: vec![p.weight.clone(), q.weight.clone(), ext[x][k].clone(), ext[y][k].clone()],
                                arc: Some((arc.tail, arc.head)),
                                comparisons: vec![order(0, 1, ComparisonResult::Less), order(2, 3, rel)],
                                clause: None,
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(holds(condition, bounds))
}

fn path_index<W>(records: &[PathRecord<W>]) -> HashMap<&[VertexId], usize> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| (r.path.as_slice(), i))
        .collect()
}

/// Compares every walk with its prefix one arc shorter (arc kinds) or with
/// every prefix ending at the same vertex (cycle kinds).
pub fn check_monotonicity<I: Weighted>(inst: &I, bounds: Bounds, kind: MonotonicityKind) -> Report<I> {
    let condition = Condition::Monotonicity(kind);
    let records = enumerate_paths(inst, bounds.depth, bounds.budget)?;
    let index = path_index(&records);
    for r in records.iter().skip(1) {
        let head = r.head();
        let cuts: Vec<usize> = if kind.is_cycle() {
            (0..r.len()).filter(|&i| r.path[i] == head).collect()
        } else {
            vec![r.len() - 1]
        };
        for cut in cuts {
            let base = &records[index[&r.path[..=cut]]];
            let rel = inst.compare(&r.weight, &base.weight);
            if !kind.admits(rel) {
                let arc = (!kind.is_cycle()).then(|| (r.path[cut], head));
                return Ok(violated(
                    condition,
                    Witness {
                        paths: vec![base.path.clone(), r.path.clone()],
                        weights: vec![base.weight.clone(), r.weight.clone()],
                        arc,
                        comparisons: vec![order(1, 0, rel)],
                        clause: None,
                    },
                ));
            }
        }
    }
    Ok(holds(condition, bounds))
}

/// Efficiency is judged among the enumerated walks: a walk is efficient if
/// no enumerated walk to the same vertex has a strictly smaller weight.
pub fn check_subpath_optimality<I: Weighted>(inst: &I, bounds: Bounds, strength: Strength) -> Report<I> {
    let condition = Condition::SubpathOptimality(strength);
    let records = enumerate_paths(inst, bounds.depth, bounds.budget)?;
    let index = path_index(&records);
    let n = inst.graph().vertex_count();

    // distinct weights per vertex, each with every walk attaining it
    let mut groups: Vec<Vec<(&I::Weight, Vec<usize>)>> = vec![Vec::new(); n];
    let mut slot: HashMap<(VertexId, &I::Weight), usize> = HashMap::new();
    for (i, r) in records.iter().enumerate() {
        let v = r.head();
        match slot.get(&(v, &r.weight)) {
            Some(&k) => groups[v][k].1.push(i),
            None => {
                slot.insert((v, &r.weight), groups[v].len());
                groups[v].push((&r.weight, vec![i]));
            }
        }
    }
    // first walk strictly dominating each (vertex, weight)
    let mut dominator: HashMap<(VertexId, &I::Weight), Option<usize>> = HashMap::new();
    for (v, group) in groups.iter().enumerate() {
        for (w, _) in group {
            let d = group
                .iter()
                .find(|(o, _)| inst.compare(o, w) == ComparisonResult::Less)
                .map(|(_, walks)| walks[0]);
            dominator.insert((v, *w), d);
        }
    }
    let dominated_prefix = |r: &PathRecord<I::Weight>| -> Option<(usize, usize)> {
        (0..r.len()).find_map(|cut| {
            let p = index[&r.path[..=cut]];
            dominator[&(records[p].head(), &records[p].weight)].map(|d| (p, d))
        })
    };
    let witness = |r: &PathRecord<I::Weight>, (p, d): (usize, usize)| Witness {
        paths: vec![r.path.clone(), records[p].path.clone(), records[d].path.clone()],
        weights: vec![r.weight.clone(), records[p].weight.clone(), records[d].weight.clone()],
        arc: None,
        comparisons: vec![order(2, 1, ComparisonResult::Less)],
        clause: None,
    };

    for (v, group) in groups.iter().enumerate() {
        for (w, walks) in group {
            if dominator[&(v, *w)].is_some() {
                continue;
            }
            match strength {
                Strength::Strict => {
                    for &i in walks {
                        if let Some(hit) = dominated_prefix(&records[i]) {
                            return Ok(violated(condition, witness(&records[i], hit)));
                        }
                    }
                }
                Strength::Weak => {
                    if walks.iter().all(|&i| dominated_prefix(&records[i]).is_some()) {
                        let r = &records[walks[0]];
                        let hit = dominated_prefix(r).expect("checked above");
                        return Ok(violated(condition, witness(r, hit)));
                    }
                }
            }
        }
    }
    Ok(holds(condition, bounds))
}
