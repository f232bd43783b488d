//! Small hand-made instances with known answers.

use crate::graph::Graph;
use crate::instance::{Instance, Property, PropertySet};
use crate::space::RelationKind;
use crate::table::{ArcTable, TableDefault, TableWeightSpace};
use crate::weights::kn::KnSpace;
use crate::weights::subset::SubsetSpace;

use TableDefault::{Identity, Missing};

/// Three weights with only `B ≺ A`. Vertices `s=0, v=1, t=2`. The efficient
/// set at `t` needs the non-simple path `(s, t, v, t)` of weight `B`.
pub fn detour() -> Instance<TableWeightSpace> {
    let graph = Graph::new(3, vec![(0, 2), (0, 1), (2, 1), (1, 2)]).expect("valid graph");
    let space = TableWeightSpace::new(
        &["A", "B", "C"],
        &[("B", "A")],
        "A",
        vec![
            ArcTable::new(&[("A", "C")], Identity),
            ArcTable::new(&[("A", "A")], Identity),
            ArcTable::new(&[("A", "A"), ("C", "B"), ("B", "B")], Identity),
            ArcTable::new(&[("A", "A"), ("B", "B")], Identity),
        ],
        None,
        RelationKind::PartialOrder,
    )
    .expect("valid table");
    Instance::new(graph, 0, space)
        .and_then(|i| {
            i.with_properties(
                PropertySet::of(&[Property::WellPosed, Property::HistoryFree, Property::Independent]),
                None,
            )
        })
        .expect("valid instance")
}

/// Two vertices `v1=0, v2=1`, arc `(v1, v2)` of weight 2 and a loop at `v2`
/// that drops every weight to 1, over the chain `0 < 1 < 2`.
pub fn improving_loop() -> Instance<TableWeightSpace> {
    let graph = Graph::new(2, vec![(0, 1), (1, 1)]).expect("valid graph");
    let space = TableWeightSpace::new(
        &["0", "1", "2"],
        &[("0", "1"), ("1", "2")],
        "0",
        vec![
            ArcTable::new(&[("0", "2")], Missing),
            ArcTable::new(&[("2", "1"), ("1", "1")], Missing),
        ],
        Some(&["0", "1", "2"]),
        RelationKind::PartialOrder,
    )
    .expect("valid table");
    Instance::new(graph, 0, space)
        .and_then(|i| {
            i.with_properties(
                PropertySet::of(&[Property::WellPosed, Property::HistoryFree, Property::WeaklyIndependent]),
                None,
            )
        })
        .expect("valid instance")
}

/// Natural numbers with `s=0, v=1, u=2, r=3, t=4`: arc-increasing but not
/// weakly independent, since `(s,v,r) < (s,u,r)` flips after `(r,t)`.
pub fn order_flip() -> Instance<TableWeightSpace> {
    let graph = Graph::new(5, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (0, 4)]).expect("valid graph");
    let space = TableWeightSpace::new(
        &["0", "1", "2", "3", "4"],
        &[("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")],
        "0",
        vec![
            ArcTable::new(&[("0", "1")], Missing),
            ArcTable::new(&[("0", "2")], Missing),
            ArcTable::new(&[("1", "1")], Missing),
            ArcTable::new(&[("2", "2")], Missing),
            ArcTable::new(&[("1", "4"), ("2", "3")], Missing),
            ArcTable::new(&[("0", "0")], Missing),
        ],
        Some(&["0", "1", "2", "3", "4"]),
        RelationKind::PartialOrder,
    )
    .expect("valid table");
    Instance::new(graph, 0, space)
        .and_then(|i| {
            i.with_properties(
                PropertySet::of(&[
                    Property::WellPosed,
                    Property::HistoryFree,
                    Property::WeaklySubpathOptimal,
                    Property::ArcIncreasing,
                ]),
                None,
            )
        })
        .expect("valid instance")
}

/// Subset lattice where a dominated path catches up: at `t=3`,
/// `{1,2} ⊂ {1,2,3}`, and the arc `(t, x)` adds `{3}` to both.
pub fn subset_catch_up() -> Instance<SubsetSpace> {
    let graph = Graph::new(5, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).expect("valid graph");
    let space = SubsetSpace::new(3, vec![vec![1, 2], vec![1, 2, 3], vec![], vec![], vec![3]]).expect("valid sets");
    Instance::new(graph, 0, space)
        .and_then(|i| {
            i.with_properties(
                PropertySet::of(&[
                    Property::WellPosed,
                    Property::HistoryFree,
                    Property::WeaklyIndependent,
                    Property::ArcIncreasing,
                    Property::LeoMonotone,
                ]),
                None,
            )
        })
        .expect("valid instance")
}

/// The complete digraph with loops on `n` vertices, source 0.
pub fn kn(n: usize, m: usize) -> Instance<KnSpace> {
    let space = KnSpace::new(n, m, 0).expect("valid parameters");
    Instance::new(KnSpace::graph(n), 0, space)
        .and_then(|i| {
            i.with_properties(
                PropertySet::of(&[Property::WellPosed, Property::HistoryFree, Property::WeaklyIndependent]),
                None,
            )
        })
        .expect("valid instance")
}
