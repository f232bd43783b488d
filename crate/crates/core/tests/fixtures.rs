use posp_core::algorithms::{
    bellman_solve, brute_force_frontier, mda_solve, OracleOptions, SolveError, SolveOptions, Status, Variant,
};
use posp_core::fixtures;
use posp_core::weights::KnWeight;
use posp_core::{ComparisonResult, WeightSpace};

#[test]
fn detour_space_basics() {
    let inst = fixtures::detour();
    let s = inst.space();
    let (a, b, c) = (s.weight("A").unwrap(), s.weight("B").unwrap(), s.weight("C").unwrap());
    assert_eq!(posp_core::compare(s, &b, &a).unwrap(), ComparisonResult::Less);
    assert_eq!(posp_core::compare(s, &c, &b).unwrap(), ComparisonResult::Incomparable);
    assert_eq!(posp_core::compare(s, &a, &a).unwrap(), ComparisonResult::Equal);
    let st = inst.graph().find_arc(0, 2).unwrap();
    let tv = inst.graph().find_arc(2, 1).unwrap();
    assert_eq!(s.extend(&a, st).unwrap(), c);
    assert_eq!(s.extend(&c, tv).unwrap(), b);
}

#[test]
fn detour_bellman_frontier_at_t() {
    let inst = fixtures::detour();
    let s = inst.space();
    let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).unwrap();
    assert_eq!(r.status, Status::Converged);
    assert_eq!(r.stats.iterations, 4);
    let names: Vec<&str> = r.weights(2).into_iter().map(|w| s.name(w)).collect();
    assert_eq!(names, vec!["C", "B"]);
    let paths = r.paths(2);
    assert_eq!(paths, vec![vec![0, 2], vec![0, 2, 1, 2]]);
}

#[test]
fn detour_oracle_agrees() {
    let inst = fixtures::detour();
    let s = inst.space();
    let o = brute_force_frontier(&inst, 4, Variant::Min, &OracleOptions::default()).unwrap();
    let names: Vec<&str> = o.weights(2).into_iter().map(|w| s.name(w)).collect();
    assert_eq!(names, vec!["C", "B"]);
    assert_eq!(o.frontiers[2][1].paths, vec![vec![0, 2, 1, 2]]);
}

#[test]
fn improving_loop_bellman_three_iterations() {
    let inst = fixtures::improving_loop();
    let s = inst.space();
    let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).unwrap();
    assert_eq!(r.status, Status::Converged);
    assert_eq!(r.stats.iterations, 3);
    let names: Vec<&str> = r.weights(1).into_iter().map(|w| s.name(w)).collect();
    assert_eq!(names, vec!["1"]);
    assert_eq!(r.paths(1), vec![vec![0, 1, 1]]);
}

#[test]
fn improving_loop_label_setting_rejected() {
    let inst = fixtures::improving_loop();
    match mda_solve(&inst, &SolveOptions::new(Variant::Min)) {
        Err(SolveError::LabelSetting(v)) => {
            assert_eq!(v.vertex, 1);
            assert_eq!(v.permanent_path, vec![0, 1]);
            assert_eq!(v.extracted_path, vec![0, 1, 1]);
        }
        other => panic!("expected a label-setting violation, got {other:?}"),
    }
}

#[test]
fn order_flip_shortcut_wins() {
    let inst = fixtures::order_flip();
    let s = inst.space();
    let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).unwrap();
    let names: Vec<&str> = r.weights(4).into_iter().map(|w| s.name(w)).collect();
    assert_eq!(names, vec!["0"]);
    assert_eq!(r.paths(4), vec![vec![0, 4]]);
    let o = brute_force_frontier(&inst, 4, Variant::Min, &OracleOptions::default()).unwrap();
    assert_eq!(o.paths(4), vec![vec![0, 4]]);
}

#[test]
fn single_vertex_oracle() {
    let g = posp_core::Graph::new(1, vec![]).unwrap();
    let space = posp_core::weights::MospSpace::new(2, vec![]).unwrap();
    let inst = posp_core::Instance::new(g, 0, space).unwrap();
    let o = brute_force_frontier(&inst, 5, Variant::Min, &OracleOptions::default()).unwrap();
    assert_eq!(o.weights(0), vec![inst.space().initial()]);
}

#[test]
fn kn_collapses_to_one_zero_label() {
    for (n, m) in [(3, 3), (4, 3)] {
        let inst = fixtures::kn(n, m);
        let r = bellman_solve(&inst, &SolveOptions::new(Variant::Min)).unwrap();
        assert_eq!(r.status, Status::Converged);
        assert_eq!(r.stats.iterations, m + 1);
        for v in 0..n {
            let labels: Vec<_> = r.labels(v).collect();
            assert_eq!(labels.len(), 1);
            assert_eq!(labels[0].weight, KnWeight::Zero);
            assert_eq!(labels[0].length, m);
        }
    }
}
