//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posp_core::algorithms::{bellman_solve, brute_force_frontier, OracleOptions, SolveOptions, Status, Variant};
use posp_core::conditions::{
    check_history_free, check_independence, check_linear_extension, check_monotonicity, check_subpath_optimality,
    enumerated_weights, Bounds, LeoClause, MonotonicityKind, Strength,
};
use posp_core::fixtures;
use posp_core::random::Structure;
use posp_core::suite::{self, SuiteOutcome, Violations, ORACLE_DEPTH};
use posp_core::weights::interval::{IntervalSpace, IntervalWeight};
use posp_core::weights::semilattice::{compare_caps, Cap};
use posp_core::weights::subset::{compare_subsets, shortlex, SubsetSpace, SubsetWeight};
use posp_core::weights::vector::{MospSpace, VectorWeight};
use posp_core::{ArcRef, ComparisonResult, WeightSpace, Q};

const FAST: Duration = Duration::from_secs(1);
const SUITE_BUDGET: Duration = Duration::from_secs(60);
const SAMPLES: usize = 10_000;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn timed(f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f();
    let took = start.elapsed();
    verdict(
        v.ok && took < FAST,
        format!("{}; {:.1} ms", v.detail, took.as_secs_f64() * 1e3),
    )
}

fn criterion1() -> Verdict {
    timed(|| {
        let inst = fixtures::detour();
        let s = inst.space();
        let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).unwrap();
        let o = brute_force_frontier(&inst, ORACLE_DEPTH, Variant::Min, &OracleOptions::default()).unwrap();
        let mut solved: Vec<(&str, Vec<usize>)> = r.weights(2).into_iter().map(|w| s.name(w)).zip(r.paths(2)).collect();
        solved.sort();
        let mut oracle: Vec<&str> = o.weights(2).into_iter().map(|w| s.name(w)).collect();
        oracle.sort();
        let want = vec![("B", vec![0, 2, 1, 2]), ("C", vec![0, 2])];
        verdict(
            solved == want && oracle == ["B", "C"],
            format!("bellman {solved:?}, oracle {oracle:?}"),
        )
    })
}

fn criterion2() -> Verdict {
    timed(|| {
        let inst = fixtures::order_flip();
        let s = inst.space();
        let r = check_independence(&inst, Bounds::depth(4), Strength::Weak).unwrap();
        let Some(w) = r.witness() else {
            return verdict(false, "weak independence not violated");
        };
        let names: Vec<&str> = w.weights.iter().map(|x| s.name(*x)).collect();
        let exact =
            w.paths[..2] == [vec![0, 1, 3], vec![0, 2, 3]] && w.arc == Some((3, 4)) && names == ["1", "2", "4", "3"];
        let hf = check_history_free(&inst, Bounds::depth(4)).unwrap().holds();
        let ai = check_monotonicity(&inst, Bounds::depth(4), MonotonicityKind::ArcIncreasing)
            .unwrap()
            .holds();
        verdict(
            exact && hf && ai,
            format!(
                "witness {:?} via {:?}, weights {names:?}; history-free {hf}, arc-increasing {ai}",
                &w.paths[..2],
                w.arc
            ),
        )
    })
}

fn criterion3() -> Verdict {
    timed(|| {
        let inst = fixtures::improving_loop();
        let s = inst.space();
        let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).unwrap();
        let v2: Vec<&str> = r.weights(1).into_iter().map(|w| s.name(w)).collect();
        let bellman = r.status == Status::Converged && r.stats.iterations == 3 && v2 == ["1"];
        let wso = !check_subpath_optimality(&inst, Bounds::depth(5), Strength::Weak)
            .unwrap()
            .holds();
        let sample = enumerated_weights(&inst, Bounds::depth(4)).unwrap();
        let leo = check_linear_extension(&inst, &sample, Bounds::depth(4)).unwrap();
        let clause = leo.witness().and_then(|w| w.clause);
        verdict(
            bellman && wso && clause == Some(LeoClause::MonotoneAlongArcs),
            format!(
                "{} iterations, v2 frontier {v2:?}; weak subpath optimality violated {wso}; leo rejected by {clause:?}",
                r.stats.iterations
            ),
        )
    })
}

fn summarize(outcomes: &[SuiteOutcome]) -> (bool, String, Violations) {
    let mut total = Violations::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for o in outcomes {
        ok &= o.mismatches.is_empty();
        total.label_setting += o.violations.label_setting;
        total.leo_order += o.violations.leo_order;
        total.vertex_leo_order += o.violations.vertex_leo_order;
        total.label_weight += o.violations.label_weight;
        parts.push(format!(
            "{} {}/{} mda {}",
            o.name,
            o.instances - o.mismatches.len().min(o.instances),
            o.instances,
            o.mda_instances
        ));
        for m in o.mismatches.iter().take(3) {
            eprintln!("  mismatch: {m}");
        }
    }
    (ok, parts.join(", "), total)
}

fn criterion4() -> (Verdict, Violations) {
    let start = Instant::now();
    let outcomes = suite::oracle_equivalence(&Structure::ALL, 100, ORACLE_DEPTH);
    let took = start.elapsed();
    let (ok, detail, violations) = summarize(&outcomes);
    let all_there = outcomes.len() == Structure::ALL.len() && outcomes.iter().all(|o| o.instances == 100);
    let v = verdict(
        ok && all_there && took < SUITE_BUDGET,
        format!("{detail}; {:.1} s", took.as_secs_f64()),
    );
    (v, violations)
}

fn criterion5() -> (Verdict, Violations) {
    let o = suite::max_suite(50);
    let (ok, detail, violations) = summarize(std::slice::from_ref(&o));
    (verdict(ok && o.instances == 50, detail), violations)
}

fn criterion6() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, m) in [(3usize, 3usize), (4, 3)] {
        let out = suite::kn_worst_case(n, m);
        // before saturation the frontier holds every tuple of length 1..=k
        let expected: Vec<usize> = (1..m).map(|k| (1..=k).map(|i| n.pow(i as u32)).sum()).collect();
        let counts = out.totals.len() >= expected.len() && out.totals[..expected.len()] == expected[..];
        ok &= counts && out.final_ok;
        parts.push(format!(
            "n={n} M={m}: totals {:?} expected {expected:?} final {}",
            out.totals, out.final_ok
        ));
    }
    verdict(ok, parts.join("; "))
}

const ARC: ArcRef = ArcRef {
    id: 0,
    tail: 0,
    head: 1,
};

fn le(r: ComparisonResult) -> bool {
    matches!(r, ComparisonResult::Less | ComparisonResult::Equal)
}

#[derive(Default)]
struct Laws {
    checked: usize,
    counterexamples: Vec<String>,
}

impl Laws {
    fn expect(&mut self, law: &str, holds: bool, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds {
            self.counterexamples.push(format!("{law}: {}", case()));
        }
    }
}

fn vector_laws(laws: &mut Laws, rng: &mut ChaCha8Rng) {
    let vec_le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    for _ in 0..SAMPLES {
        let mut draw = || -> Vec<i64> { (0..3).map(|_| rng.gen_range(0..20)).collect() };
        let (a, b, c) = (draw(), draw(), draw());
        let space = MospSpace::new(3, vec![c.iter().map(|&x| Q::int(x)).collect()]).unwrap();
        let (wa, wb) = (VectorWeight::ints(&a), VectorWeight::ints(&b));
        let (ta, tb) = (space.extend(&wa, ARC).unwrap(), space.extend(&wb, ARC).unwrap());
        let sum: Vec<i64> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
        laws.expect("vector order", le(space.compare(&wa, &wb)) == vec_le(&a, &b), || {
            format!("{a:?} {b:?}")
        });
        laws.expect("vector translation", ta == VectorWeight::ints(&sum), || {
            format!("{a:?}+{c:?}")
        });
        laws.expect("vector positivity", le(space.compare(&wa, &ta)), || {
            format!("{a:?}+{c:?}")
        });
        if vec_le(&a, &b) {
            laws.expect("vector compatibility", le(space.compare(&ta, &tb)), || {
                format!("{a:?} {b:?} {c:?}")
            });
        }
    }
}

fn subset_laws(laws: &mut Laws) {
    let all: Vec<SubsetWeight> = (0..16u64).map(SubsetWeight).collect();
    let shift = |c: SubsetWeight| SubsetSpace::new(4, vec![c.elements()]).unwrap();
    for &c in &all {
        let sc = shift(c);
        for &a in &all {
            let ta = sc.extend(&a, ARC).unwrap();
            laws.expect("subset translation", ta.0 == a.0 | c.0, || format!("{a:?} {c:?}"));
            laws.expect("subset positivity", le(sc.compare(&a, &ta)), || format!("{a:?} {c:?}"));
            for &b in &all {
                let inclusion = a.0 & !b.0 == 0;
                laws.expect("subset order", le(sc.compare(&a, &b)) == inclusion, || {
                    format!("{a:?} {b:?}")
                });
                if inclusion {
                    let tb = sc.extend(&b, ARC).unwrap();
                    laws.expect("subset compatibility", le(sc.compare(&ta, &tb)), || {
                        format!("{a:?} {b:?} {c:?}")
                    });
                }
                let sb = shift(b);
                let left = sb.extend(&ta, ARC).unwrap();
                laws.expect("subset associativity", left.0 == a.0 | c.0 | b.0, || {
                    format!("{a:?} {c:?} {b:?}")
                });
            }
        }
    }
}

fn shortlex_laws(laws: &mut Laws) {
    let all: Vec<SubsetWeight> = (0..32u64).map(SubsetWeight).collect();
    for &a in &all {
        for &b in &all {
            let ord = shortlex(a, b);
            laws.expect("shortlex antisymmetry", (ord == Ordering::Equal) == (a == b), || {
                format!("{a:?} {b:?}")
            });
            laws.expect("shortlex totality", ord == shortlex(b, a).reverse(), || {
                format!("{a:?} {b:?}")
            });
            if compare_subsets(a, b) == ComparisonResult::Less {
                laws.expect("shortlex extends inclusion", ord == Ordering::Less, || {
                    format!("{a:?} {b:?}")
                });
            }
            for &c in &all {
                if ord.is_le() && shortlex(b, c).is_le() {
                    laws.expect("shortlex transitivity", shortlex(a, c).is_le(), || {
                        format!("{a:?} {b:?} {c:?}")
                    });
                }
            }
        }
    }
}

fn cap_laws(laws: &mut Laws, rng: &mut ChaCha8Rng) {
    let mut draw = || -> Vec<Cap> {
        (0..2)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    Cap::Unbounded
                } else {
                    Cap::Finite(Q::int(rng.gen_range(0..10)))
                }
            })
            .collect()
    };
    let meet = |x: &[Cap], y: &[Cap]| -> Vec<Cap> { x.iter().zip(y).map(|(p, q)| p.meet(*q)).collect() };
    for _ in 0..SAMPLES {
        let (a, b, c) = (draw(), draw(), draw());
        laws.expect("meet idempotence", meet(&a, &a) == a, || format!("{a:?}"));
        laws.expect("meet commutativity", meet(&a, &b) == meet(&b, &a), || {
            format!("{a:?} {b:?}")
        });
        laws.expect(
            "meet associativity",
            meet(&meet(&a, &b), &c) == meet(&a, &meet(&b, &c)),
            || format!("{a:?} {b:?} {c:?}"),
        );
        laws.expect("meet positivity", le(compare_caps(&a, &meet(&a, &b))), || {
            format!("{a:?} {b:?}")
        });
        let wider = a.iter().zip(&b).all(|(x, y)| x >= y);
        laws.expect("capacity order", le(compare_caps(&a, &b)) == wider, || {
            format!("{a:?} {b:?}")
        });
    }
}

/// `a ⪯ b` iff `g·(wa−wb) ≤ cb−ca` and `h·(wa−wb) ≤ cb−ca`, with both
/// slopes over a common denominator.
fn interval_laws(laws: &mut Laws, rng: &mut ChaCha8Rng) {
    for (g, h, den) in [(-1i64, 1i64, 1i64), (0, 1, 1), (-1, 1, 2)] {
        let oracle = |a: &IntervalWeight, b: &IntervalWeight| {
            let dw = a.w - b.w;
            let dc = (b.c - a.c) * Q::int(den);
            dw * Q::int(g) <= dc && dw * Q::int(h) <= dc
        };
        for _ in 0..SAMPLES {
            let mut draw = || {
                let w = rng.gen_range(0..10);
                IntervalWeight::ints(w + rng.gen_range(0..10), w)
            };
            let (a, b, c) = (draw(), draw(), draw());
            let space =
                IntervalSpace::new(Q::new(g.into(), den.into()), Q::new(h.into(), den.into()), vec![c]).unwrap();
            let (ta, tb) = (space.extend(&a, ARC).unwrap(), space.extend(&b, ARC).unwrap());
            laws.expect("interval order", le(space.compare(&a, &b)) == oracle(&a, &b), || {
                format!("{a:?} {b:?}")
            });
            laws.expect("interval translation", ta == a + c, || format!("{a:?} {c:?}"));
            laws.expect("interval positivity", le(space.compare(&a, &ta)), || {
                format!("{a:?} {c:?}")
            });
            laws.expect(
                "interval strict independence",
                space.compare(&a, &b) == space.compare(&ta, &tb),
                || format!("{a:?} {b:?} {c:?}"),
            );
        }
    }
}

fn criterion7() -> Verdict {
    let mut laws = Laws::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    vector_laws(&mut laws, &mut rng);
    subset_laws(&mut laws);
    shortlex_laws(&mut laws);
    cap_laws(&mut laws, &mut rng);
    interval_laws(&mut laws, &mut rng);
    for c in laws.counterexamples.iter().take(5) {
        eprintln!("  counterexample: {c}");
    }
    verdict(
        laws.counterexamples.is_empty(),
        format!(
            "{} checks, {} counterexamples",
            laws.checked,
            laws.counterexamples.len()
        ),
    )
}

fn criterion8(violations: Violations) -> Verdict {
    verdict(violations.is_zero(), format!("{violations:?}"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

fn run(args: &[String]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_posp"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn criterion9() -> Verdict {
    let file = |n: &str| fixture(n).to_string_lossy().into_owned();
    let owned = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut commands: Vec<Vec<String>> = Vec::new();
    for name in ["detour", "order_flip", "subset", "evsp", "wcspr", "tourist", "product"] {
        commands.push(vec!["solve".into(), file(name), "--force".into()]);
        commands.push(vec!["oracle".into(), file(name), "--max-len".into(), "6".into()]);
        commands.push(vec!["check".into(), file(name), "--depth".into(), "4".into()]);
        commands.push(vec!["recommend".into(), file(name)]);
    }
    commands.push(vec![
        "solve".into(),
        file("tourist_dag"),
        "--variant".into(),
        "max".into(),
    ]);
    commands.push(owned(&["bench", "--suite", "kn-worst-case", "--n", "3", "--m", "3"]));
    commands.push(owned(&["bench", "--suite", "random", "--count", "3", "--seed", "9"]));
    let differing: Vec<String> = commands
        .iter()
        .filter(|c| run(c) != run(c))
        .map(|c| c[..2].join(" "))
        .collect();
    verdict(
        differing.is_empty(),
        format!("{} commands run twice, differing: {differing:?}", commands.len()),
    )
}

fn main() {
    let mut results = vec![(1, criterion1()), (2, criterion2()), (3, criterion3())];
    let (c4, v4) = criterion4();
    let (c5, v5) = criterion5();
    results.push((4, c4));
    results.push((5, c5));
    results.push((6, criterion6()));
    results.push((7, criterion7()));
    let total = Violations {
        label_setting: v4.label_setting + v5.label_setting,
        leo_order: v4.leo_order + v5.leo_order,
        vertex_leo_order: v4.vertex_leo_order + v5.vertex_leo_order,
        label_weight: v4.label_weight + v5.label_weight,
    };
    results.push((8, criterion8(total)));
    results.push((9, criterion9()));

    let mut failed = 0;
    for (n, v) in &results {
        println!("criterion {n}: {} ({})", if v.ok { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
