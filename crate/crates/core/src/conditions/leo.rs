//! Validates a linear extension oracle: a total order on a weight sample
//! that extends the partial order, and that never puts a walk's extension
//! before the walk itself.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::algorithms::oracle::enumerate_paths;
use crate::conditions::{leo, order, ordering_result, Bounds, Condition, ConditionReport, LeoClause, Verdict, Witness};
use crate::error::CoreError;
use crate::instance::Weighted;
use crate::space::ComparisonResult;

/// Distinct weights of all walks up to the depth, in discovery order.
pub fn enumerated_weights<I: Weighted>(inst: &I, bounds: Bounds) -> Result<Vec<I::Weight>, CoreError> {
    let records = enumerate_paths(inst, bounds.depth, bounds.budget)?;
    let mut seen = HashSet::new();
    Ok(records
        .into_iter()
        .filter(|r| seen.insert(r.weight.clone()))
        .map(|r| r.weight)
        .collect())
}

fn sampled<W>(
    weights: Vec<W>,
    comparisons: Vec<crate::conditions::Comparison>,
    clause: LeoClause,
) -> ConditionReport<W> {
    ConditionReport {
        condition: Condition::LinearExtension,
        verdict: Verdict::Violated(Box::new(Witness {
            paths: Vec::new(),
            weights,
            arc: None,
            comparisons,
            clause: Some(clause),
        })),
    }
}

/// Checks the leo on `sample` (totality, antisymmetry, transitivity,
/// agreement with the partial order), then along every enumerated walk of
/// the instance up to the depth.
pub fn check_linear_extension<I: Weighted>(
    inst: &I,
    sample: &[I::Weight],
    bounds: Bounds,
) -> Result<ConditionReport<I::Weight>, CoreError> {
    let mut seen = HashSet::new();
    let ws: Vec<&I::Weight> = sample.iter().filter(|w| seen.insert(*w)).collect();
    let cmp = |a: &I::Weight, b: &I::Weight| inst.leo_cmp(a, b).ok_or(CoreError::NoLeo);
    if ws.is_empty() {
        cmp(&inst.root_weight(), &inst.root_weight())?;
    }

    for (i, a) in ws.iter().enumerate() {
        for b in &ws[i + 1..] {
            let ab = ordering_result(cmp(a, b)?);
            let ba = ordering_result(cmp(b, a)?);
            let pair = vec![(*a).clone(), (*b).clone()];
            if ab == ComparisonResult::Equal {
                return Ok(sampled(pair, vec![leo(0, 1, ab)], LeoClause::Totality));
            }
            if ab != ba.reverse() {
                return Ok(sampled(
                    pair,
                    vec![leo(0, 1, ab), leo(1, 0, ba)],
                    LeoClause::Antisymmetry,
                ));
            }
        }
    }

    // a total antisymmetric relation is transitive iff the numbers of
    // predecessors are pairwise distinct
    let mut rank = Vec::with_capacity(ws.len());
    for a in &ws {
        let mut r = 0;
        for b in &ws {
            if cmp(b, a)? == Ordering::Less {
                r += 1;
            }
        }
        rank.push(r);
    }
    let distinct: HashSet<usize> = rank.iter().copied().collect();
    if distinct.len() != ws.len() {
        for (i, a) in ws.iter().enumerate() {
            for (j, b) in ws.iter().enumerate() {
                if cmp(a, b)? != Ordering::Less {
                    continue;
                }
                for (k, c) in ws.iter().enumerate() {
                    if k != i && k != j && cmp(b, c)? == Ordering::Less && cmp(c, a)? == Ordering::Less {
                        let less = ComparisonResult::Less;
                        return Ok(sampled(
                            vec![(*a).clone(), (*b).clone(), (*c).clone()],
                            vec![leo(0, 1, less), leo(1, 2, less), leo(2, 0, less)],
                            LeoClause::Transitivity,
                        ));
                    }
                }
            }
        }
    }

    for a in &ws {
        for b in &ws {
            if inst.compare(a, b) == ComparisonResult::Less {
                let o = ordering_result(cmp(a, b)?);
                if o != ComparisonResult::Less {
                    return Ok(sampled(
                        vec![(*a).clone(), (*b).clone()],
                        vec![order(0, 1, ComparisonResult::Less), leo(0, 1, o)],
                        LeoClause::ExtendsOrder,
                    ));
                }
            }
        }
    }

    let records = enumerate_paths(inst, bounds.depth, bounds.budget)?;
    let index: HashMap<&[usize], usize> = records
        .iter()
        .enumerate()
        .map(|(i, r)| (r.path.as_slice(), i))
        .collect();
    for r in records.iter().skip(1) {
        let base = &records[index[&r.path[..r.len()]]];
        if cmp(&base.weight, &r.weight)? == Ordering::Greater {
            return Ok(ConditionReport {
                condition: Condition::LinearExtension,
                verdict: Verdict::Violated(Box::new(Witness {
                    paths: vec![base.path.clone(), r.path.clone()],
                    weights: vec![base.weight.clone(), r.weight.clone()],
                    arc: Some((base.head(), r.head())),
                    comparisons: vec![leo(0, 1, ComparisonResult::Greater)],
                    clause: Some(LeoClause::MonotoneAlongArcs),
                })),
            });
        }
    }

    Ok(ConditionReport {
        condition: Condition::LinearExtension,
        verdict: Verdict::HoldsToDepth(bounds.depth),
    })
}
