//! Seeded verification runs shared by the test suites, the acceptance
//! report, and the `bench` command: solver output against the enumeration
//! oracle, the maximal variant on acyclic instances, and the worst-case
//! growth on the complete digraph.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use crate::algorithms::{
    bellman_solve, brute_force_frontier, mda_solve, Algorithm, OracleOptions, SolveOptions, SolveResult, Stats, Variant,
};
use crate::batch;
use crate::conditions::{check_subpath_optimality, recommend_algorithm, Bounds, Strength};
use crate::fixtures;
use crate::instance::{Instance, Property};
use crate::random::{generate, generate_acyclic, AcyclicStructure, Structure};
use crate::space::WeightSpace;
use crate::weights::any::AnySpace;

pub const ORACLE_DEPTH: usize = 10;

/// Solver statistics that must stay zero in every suite solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Violations {
    pub label_setting: usize,
    /// Extractions out of leo order although the instance declares the
    /// leo monotone along arcs.
    pub leo_order: usize,
    pub vertex_leo_order: usize,
    /// Labels whose stored weight differs from re-folding their path.
    pub label_weight: usize,
}

impl Violations {
    fn add(&mut self, o: Violations) {
        self.label_setting += o.label_setting;
        self.leo_order += o.leo_order;
        self.vertex_leo_order += o.vertex_leo_order;
        self.label_weight += o.label_weight;
    }

    pub fn is_zero(&self) -> bool {
        *self == Violations::default()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: String,
    pub instances: usize,
    pub mda_instances: usize,
    /// One line per disagreement.
    pub mismatches: Vec<String>,
    pub violations: Violations,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.violations.is_zero()
    }

    fn absorb(&mut self, o: SuiteOutcome) {
        self.instances += o.instances;
        self.mda_instances += o.mda_instances;
        self.mismatches.extend(o.mismatches);
        self.violations.add(o.violations);
    }
}

fn audit<S: WeightSpace>(inst: &Instance<S>, r: &SolveResult<S::Weight>) -> Violations {
    let mut v = stats_violations(&r.stats, inst.declared().contains(Property::LeoMonotone));
    for labels in &r.frontiers {
        for &id in labels {
            let path = r.store.reconstruct_path(id);
            if inst.path_weight(&path).ok().as_ref() != Some(r.store.weight(id)) {
                v.label_weight += 1;
            }
        }
    }
    v
}

fn stats_violations(stats: &Stats, leo_monotone: bool) -> Violations {
    Violations {
        label_setting: stats.label_setting_violations,
        leo_order: if leo_monotone { stats.leo_order_violations } else { 0 },
        vertex_leo_order: stats.vertex_leo_order_violations,
        label_weight: 0,
    }
}

fn as_set<T: Eq + Hash + Clone>(xs: &[T]) -> HashSet<T> {
    xs.iter().cloned().collect()
}

fn mda_allowed(inst: &Instance<AnySpace>, variant: Variant) -> bool {
    recommend_algorithm(inst.declared(), variant)
        .iter()
        .any(|r| r.algorithm == Algorithm::Mda)
}

fn diagnostics_opts(variant: Variant) -> SolveOptions {
    SolveOptions {
        abort_on_violation: false,
        ..SolveOptions::new(variant)
    }
}

/// Minimal variant on one instance: weight sets of the label-correcting
/// solver, the label-setting solver (when a recommendation row allows it),
/// and the oracle must coincide at every vertex, without repeated weights.
pub fn min_equivalence(label: &str, inst: &Instance<AnySpace>, depth: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        name: label.to_string(),
        instances: 1,
        ..SuiteOutcome::default()
    };
    let opts = diagnostics_opts(Variant::Min);
    let oracle = match brute_force_frontier(inst, depth, Variant::Min, &OracleOptions::default()) {
        Ok(o) => o,
        Err(e) => {
            out.mismatches.push(format!("{label}: oracle failed: {e}"));
            return out;
        }
    };
    let mut runs = vec![(Algorithm::Bellman, bellman_solve(inst, &opts))];
    if mda_allowed(inst, Variant::Min) {
        out.mda_instances = 1;
        runs.push((Algorithm::Mda, mda_solve(inst, &opts)));
    }
    for (alg, run) in runs {
        let r = match run {
            Ok(r) => r,
            Err(e) => {
                out.mismatches.push(format!("{label}: {alg} failed: {e}"));
                continue;
            }
        };
        if !r.converged() {
            out.mismatches.push(format!("{label}: {alg} hit its iteration guard"));
        }
        out.violations.add(audit(inst, &r));
        for v in 0..inst.graph().vertex_count() {
            let got = r.weights(v);
            let want = oracle.weights(v);
            if got.len() != as_set(&got).len() {
                out.mismatches
                    .push(format!("{label}: {alg} repeats a weight at vertex {v}"));
            }
            if as_set(&got) != as_set(&want) {
                out.mismatches.push(format!(
                    "{label}: {alg} at vertex {v}: {} vs oracle {}",
                    show(&got),
                    show(&want)
                ));
            }
        }
    }
    out
}

fn show<T: Debug>(xs: &[T]) -> String {
    format!("{xs:?}")
}

/// `count` seeded instances per structure, run in parallel.
pub fn oracle_equivalence(structures: &[Structure], count: u64, depth: usize) -> Vec<SuiteOutcome> {
    structures
        .iter()
        .map(|&s| {
            let seeds: Vec<u64> = (0..count).collect();
            let parts = batch::map(&seeds, |&seed| {
                min_equivalence(&format!("{s}#{seed}"), &generate(s, seed), depth)
            });
            let mut total = SuiteOutcome {
                name: s.name().to_string(),
                ..SuiteOutcome::default()
            };
            for p in parts {
                total.absorb(p);
            }
            total
        })
        .collect()
}

/// Acyclic instances that are bounded and subpath optimal. Tourist
/// candidates are kept only if the strong subpath-optimality check passes,
/// which on a DAG at depth `|V|` covers every path.
pub fn max_mode_instances(count: usize) -> Vec<(String, Instance<AnySpace>)> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    let half = count / 2;
    while out.len() < half {
        out.push((
            format!("mosp-dag#{seed}"),
            generate_acyclic(AcyclicStructure::Mosp, seed),
        ));
        seed += 1;
    }
    seed = 0;
    while out.len() < count {
        let inst = generate_acyclic(AcyclicStructure::Tourist, seed);
        let depth = inst.graph().vertex_count();
        let so = check_subpath_optimality(&inst, Bounds::depth(depth), Strength::Strict).is_ok_and(|r| r.holds());
        if so {
            let mu = inst.mu();
            let props = inst
                .declared()
                .with(Property::SubpathOptimal)
                .with(Property::WeaklySubpathOptimal);
            let inst = inst.with_properties(props, mu).expect("mu present");
            out.push((format!("tourist-dag#{seed}"), inst));
        }
        seed += 1;
    }
    out
}

/// Maximal variant: path sets of the solvers equal every efficient path
/// the oracle finds up to `μ`.
pub fn max_equivalence(label: &str, inst: &Instance<AnySpace>) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        name: label.to_string(),
        instances: 1,
        ..SuiteOutcome::default()
    };
    let depth = inst.mu().unwrap_or(ORACLE_DEPTH);
    let opts = diagnostics_opts(Variant::Max);
    let oracle = match brute_force_frontier(inst, depth, Variant::Max, &OracleOptions::default()) {
        Ok(o) => o,
        Err(e) => {
            out.mismatches.push(format!("{label}: oracle failed: {e}"));
            return out;
        }
    };
    let mut runs = vec![(Algorithm::Bellman, bellman_solve(inst, &opts))];
    if mda_allowed(inst, Variant::Max) {
        out.mda_instances = 1;
        runs.push((Algorithm::Mda, mda_solve(inst, &opts)));
    }
    for (alg, run) in runs {
        let r = match run {
            Ok(r) => r,
            Err(e) => {
                out.mismatches.push(format!("{label}: {alg} failed: {e}"));
                continue;
            }
        };
        out.violations.add(audit(inst, &r));
        for v in 0..inst.graph().vertex_count() {
            let got = r.paths(v);
            let want = oracle.paths(v);
            if got.len() != as_set(&got).len() || as_set(&got) != as_set(&want) {
                out.mismatches.push(format!(
                    "{label}: {alg} paths at vertex {v}: {} vs oracle {}",
                    show(&got),
                    show(&want)
                ));
            }
        }
    }
    out
}

pub fn max_suite(count: usize) -> SuiteOutcome {
    let instances = max_mode_instances(count);
    let parts = batch::map(&instances, |(label, inst)| max_equivalence(label, inst));
    let mut total = SuiteOutcome {
        name: "max".into(),
        ..SuiteOutcome::default()
    };
    for p in parts {
        total.absorb(p);
    }
    total
}

/// Worst-case growth on the complete digraph with loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnOutcome {
    pub n: usize,
    pub m: usize,
    pub iterations: usize,
    /// Per-vertex frontier sizes after each iteration.
    pub sizes: Vec<Vec<usize>>,
    /// Labels other than the root, summed over vertices, after each
    /// iteration.
    pub totals: Vec<usize>,
    /// `Σ_{i=1..k} nⁱ` for every iteration `k < M`.
    pub predicted: Vec<usize>,
    pub comparisons: u64,
    /// Every vertex ends with exactly one label: weight zero, `M` arcs.
    pub final_ok: bool,
}

impl KnOutcome {
    pub fn counts_match(&self) -> bool {
        self.predicted.len() == self.m - 1
            && self.totals.len() > self.predicted.len()
            && self.totals[..self.predicted.len()] == self.predicted[..]
    }
}

pub fn predicted_kn_total(n: usize, k: usize) -> usize {
    (1..=k).map(|i| n.pow(i as u32)).sum()
}

pub fn kn_worst_case(n: usize, m: usize) -> KnOutcome {
    use crate::weights::kn::KnWeight;
    let inst = fixtures::kn(n, m);
    let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).expect("kn never fails");
    let source = inst.source();
    let totals = r
        .stats
        .frontier_sizes
        .iter()
        .enumerate()
        .map(|(k, sizes)| {
            let all: usize = sizes.iter().sum();
            // the root label survives at the source until zero arrives
            let root_alive = k + 1 < m && sizes[source] > 0;
            all - usize::from(root_alive)
        })
        .collect();
    let final_ok = (0..n).all(|v| {
        let labels: Vec<_> = r.labels(v).collect();
        labels.len() == 1 && labels[0].weight == KnWeight::Zero && labels[0].length == m
    });
    KnOutcome {
        n,
        m,
        iterations: r.stats.iterations,
        sizes: r.stats.frontier_sizes.clone(),
        totals,
        predicted: (1..m).map(|k| predicted_kn_total(n, k)).collect(),
        comparisons: r.stats.comparisons,
        final_ok,
    }
}
