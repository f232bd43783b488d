//! Seeded random instances of every weight structure, small enough for the
//! enumeration oracle: at most 8 vertices and 20 arcs.
//!
//! The generators keep efficient paths short. Costs are small integers or
//! tenths, EVSP road consumption comes from vertex heights plus a positive
//! base so no cycle gains charge, and tourist budgets stay below 10.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CoreError;
use crate::graph::{Graph, VertexId};
use crate::instance::{Instance, Property, PropertySet};
use crate::rational::Q;
use crate::weights::any::AnySpace;
use crate::weights::bottleneck::{BottleneckArc, BottleneckSpace};
use crate::weights::evsp::{ChargeCurve, EvspArc, EvspSpace};
use crate::weights::fifo::{FifoSpace, TravelTime};
use crate::weights::interval::{IntervalSpace, IntervalWeight};
use crate::weights::subset::SubsetSpace;
use crate::weights::tourist::TouristSpace;
use crate::weights::vector::MospSpace;
use crate::weights::wcspr::{WcsprArc, WcsprSpace};

pub const MAX_VERTICES: usize = 8;
pub const MAX_ARCS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    Mosp2,
    Mosp3,
    Bottleneck,
    Subset,
    /// `α = -1, β = 1`
    IntervalWide,
    /// `α = 0, β = 1`
    IntervalUpper,
    /// `α = -1/2, β = 1/2`
    IntervalHalf,
    Fifo,
    Wcspr,
    Evsp,
    Tourist,
}

impl Structure {
    pub const ALL: [Structure; 11] = [
        Structure::Mosp2,
        Structure::Mosp3,
        Structure::Bottleneck,
        Structure::Subset,
        Structure::IntervalWide,
        Structure::IntervalUpper,
        Structure::IntervalHalf,
        Structure::Fifo,
        Structure::Wcspr,
        Structure::Evsp,
        Structure::Tourist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::Mosp2 => "mosp2",
            Structure::Mosp3 => "mosp3",
            Structure::Bottleneck => "bottleneck",
            Structure::Subset => "subset",
            Structure::IntervalWide => "interval-wide",
            Structure::IntervalUpper => "interval-upper",
            Structure::IntervalHalf => "interval-half",
            Structure::Fifo => "fifo_time",
            Structure::Wcspr => "wcspr",
            Structure::Evsp => "evsp",
            Structure::Tourist => "tourist",
        }
    }

    /// Properties every generated instance has.
    pub fn properties(self) -> PropertySet {
        use Property::*;
        let ahw = PropertySet::of(&[WellPosed, HistoryFree, WeaklyIndependent, ArcIncreasing, LeoMonotone]);
        match self {
            Structure::Mosp2
            | Structure::Mosp3
            | Structure::IntervalWide
            | Structure::IntervalUpper
            | Structure::IntervalHalf => ahw.with(Independent),
            Structure::Bottleneck | Structure::Subset | Structure::Fifo => ahw,
            Structure::Wcspr => PropertySet::of(&[
                WellPosed,
                HistoryFree,
                WeaklyIndependent,
                CycleNonDecreasing,
                WeaklySubpathOptimal,
                LeoMonotone,
            ]),
            Structure::Evsp | Structure::Tourist => PropertySet::of(&[
                WellPosed,
                HistoryFree,
                WeaklyIndependent,
                WeaklySubpathOptimal,
                LeoMonotone,
            ]),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Structure {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Structure, CoreError> {
        Structure::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CoreError::InvalidParameter(format!("unknown structure `{s}`")))
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tenths(n: i64) -> Q {
    Q::new(n as i128, 10)
}

pub const MAX_OUT_DEGREE: usize = 3;

/// Keeps shuffled candidate arcs while their tail has room, up to `m`.
fn pick_arcs(rng: &mut impl Rng, n: usize, mut pairs: Vec<(VertexId, VertexId)>, m: usize) -> Graph {
    pairs.shuffle(rng);
    let mut out = vec![0; n];
    let mut kept = Vec::with_capacity(m);
    for (u, v) in pairs {
        if kept.len() == m {
            break;
        }
        if out[u] < MAX_OUT_DEGREE {
            out[u] += 1;
            kept.push((u, v));
        }
    }
    kept.sort_unstable();
    Graph::new(n, kept).expect("distinct pairs")
}

/// Random simple digraph without loops: 3 to 8 vertices, out-degree at
/// most 3, between `n` and `max_arcs` arcs where room allows.
pub fn random_graph(rng: &mut impl Rng, max_arcs: usize) -> Graph {
    let n = rng.gen_range(3..=MAX_VERTICES);
    let pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let m = rng.gen_range(n.min(max_arcs)..=max_arcs);
    pick_arcs(rng, n, pairs, m)
}

/// Random DAG over `0..n` with arcs from lower to higher index.
pub fn random_dag(rng: &mut impl Rng, max_arcs: usize) -> Graph {
    let n = rng.gen_range(3..=MAX_VERTICES);
    let pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = rng.gen_range((n - 1).min(max_arcs)..=max_arcs);
    pick_arcs(rng, n, pairs, m)
}

fn finish(graph: Graph, space: AnySpace, props: PropertySet, mu: Option<usize>) -> Instance<AnySpace> {
    Instance::new(graph, 0, space)
        .and_then(|i| i.with_properties(props, mu))
        .expect("generated instance is valid")
}

fn ints(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vec<Q> {
    (0..len).map(|_| Q::int(rng.gen_range(lo..=hi))).collect()
}

pub fn mosp_space(rng: &mut impl Rng, graph: &Graph, d: usize) -> MospSpace {
    let costs = (0..graph.arc_count()).map(|_| ints(rng, d, 0, 9)).collect();
    MospSpace::new(d, costs).expect("valid dimensions")
}

pub fn bottleneck_space(rng: &mut impl Rng, graph: &Graph, m: usize, n: usize) -> BottleneckSpace {
    let arcs = (0..graph.arc_count())
        .map(|_| BottleneckArc {
            additive: ints(rng, m, 0, 9),
            bottleneck: ints(rng, n, 1, 9),
        })
        .collect();
    BottleneckSpace::new(m, n, arcs).expect("nonnegative data")
}

fn subset_space(rng: &mut impl Rng, graph: &Graph) -> SubsetSpace {
    let n = 5;
    let sets = (0..graph.arc_count())
        .map(|_| {
            let k = rng.gen_range(0..=2);
            let mut s: Vec<usize> = (1..=n).collect();
            s.shuffle(rng);
            s.truncate(k);
            s.sort_unstable();
            s
        })
        .collect();
    SubsetSpace::new(n, sets).expect("elements in range")
}

fn interval_space(rng: &mut impl Rng, graph: &Graph, alpha: Q, beta: Q) -> IntervalSpace {
    let arcs = (0..graph.arc_count())
        .map(|_| {
            let w = rng.gen_range(0..=4);
            IntervalWeight::ints(w + rng.gen_range(0..=5), w)
        })
        .collect();
    IntervalSpace::new(alpha, beta, arcs).expect("valid intervals")
}

fn fifo_space(rng: &mut impl Rng, graph: &Graph) -> FifoSpace {
    let tables = (0..graph.arc_count())
        .map(|a| {
            let k = rng.gen_range(1..=3);
            let mut t = rng.gen_range(1..=6i64);
            let mut points = Vec::with_capacity(k);
            for i in 0..k {
                points.push((Q::int(4 * i as i64), Q::int(t)));
                // slope at least -1 keeps arrivals ordered
                t = (t + rng.gen_range(-4..=4)).max(1);
            }
            TravelTime::new(a, points).expect("FIFO by construction")
        })
        .collect();
    FifoSpace::new(Q::int(rng.gen_range(0..=5)), tables).expect("valid tables")
}

fn wcspr_space(rng: &mut impl Rng, graph: &Graph) -> WcsprSpace {
    let arcs = (0..graph.arc_count())
        .map(|_| {
            let replenish = rng.gen_bool(0.2);
            WcsprArc {
                cost: Q::int(rng.gen_range(if replenish { 1 } else { 0 }..=6)),
                resource: Q::int(rng.gen_range(0..=5)),
                replenish,
            }
        })
        .collect();
    WcsprSpace::new(Q::int(rng.gen_range(6..=12)), arcs).expect("nonnegative data")
}

fn evsp_instance(rng: &mut impl Rng) -> (Graph, AnySpace) {
    let road = random_graph(rng, MAX_ARCS - 2);
    let n = road.vertex_count();
    let mut vertices: Vec<VertexId> = (0..n).collect();
    vertices.shuffle(rng);
    let stations: BTreeSet<VertexId> = vertices.into_iter().take(rng.gen_range(1..=2)).collect();

    let height: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
    let mut pairs: Vec<(VertexId, VertexId)> = road.arcs().iter().map(|a| (a.tail, a.head)).collect();
    let mut arcs: Vec<EvspArc> = pairs
        .iter()
        .map(|&(u, v)| EvspArc::Road {
            time: Q::int(rng.gen_range(1..=5)),
            delta: tenths(rng.gen_range(1..=2) + height[v] - height[u]),
        })
        .collect();
    let mut curves = BTreeMap::new();
    for &v in &stations {
        pairs.push((v, v));
        arcs.push(EvspArc::Charge);
        let mid = tenths(rng.gen_range(5..=9));
        let curve = ChargeCurve::new(vec![(Q::ZERO, Q::ZERO), (Q::ONE, mid), (Q::int(2), Q::ONE)]).expect("monotone");
        curves.insert(v, curve);
    }
    let graph = Graph::new(n, pairs).expect("distinct pairs");
    let space = EvspSpace::new(tenths(rng.gen_range(3..=10)), Q::ONE, arcs, curves).expect("valid parameters");
    space.validate_graph(&graph).expect("charging loops at stations");
    (graph, AnySpace::Evsp(space))
}

pub fn tourist_space(rng: &mut impl Rng, graph: &Graph, budget: Q) -> TouristSpace {
    let n = graph.vertex_count();
    let q = rng.gen_range(1..=2usize);
    let mut categories = vec![Vec::new(); q];
    for v in 0..n {
        categories[if v < q { v } else { rng.gen_range(0..q) }].push(v);
    }
    TouristSpace::new(
        budget,
        ints(rng, n, 0, 9),
        ints(rng, graph.arc_count(), 1, 4),
        categories,
        0,
    )
    .expect("valid parameters")
}

/// One random instance of `structure`, fully determined by `seed`.
pub fn generate(structure: Structure, seed: u64) -> Instance<AnySpace> {
    let mut rng = rng_for(seed);
    let rng = &mut rng;
    let props = structure.properties();
    if structure == Structure::Evsp {
        let (graph, space) = evsp_instance(rng);
        return finish(graph, space, props, None);
    }
    let graph = random_graph(rng, MAX_ARCS);
    let space = match structure {
        Structure::Mosp2 => AnySpace::Mosp(mosp_space(rng, &graph, 2)),
        Structure::Mosp3 => AnySpace::Mosp(mosp_space(rng, &graph, 3)),
        Structure::Bottleneck => {
            let (m, n) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            AnySpace::Bottleneck(bottleneck_space(rng, &graph, m, n))
        }
        Structure::Subset => AnySpace::Subset(subset_space(rng, &graph)),
        Structure::IntervalWide => AnySpace::Interval(interval_space(rng, &graph, Q::int(-1), Q::ONE)),
        Structure::IntervalUpper => AnySpace::Interval(interval_space(rng, &graph, Q::ZERO, Q::ONE)),
        Structure::IntervalHalf => AnySpace::Interval(interval_space(rng, &graph, Q::new(-1, 2), Q::new(1, 2))),
        Structure::Fifo => AnySpace::Fifo(fifo_space(rng, &graph)),
        Structure::Wcspr => AnySpace::Wcspr(wcspr_space(rng, &graph)),
        Structure::Tourist => {
            let budget = Q::int(rng.gen_range(4..=9));
            AnySpace::Tourist(tourist_space(rng, &graph, budget))
        }
        Structure::Evsp => unreachable!("handled above"),
    };
    finish(graph, space, props, None)
}

/// Acyclic structures for the maximal variant: every path has fewer than
/// `|V|` arcs, so the instance is bounded by `|V| - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcyclicStructure {
    Mosp,
    Tourist,
}

/// A DAG instance. Mosp instances are independent, hence subpath optimal;
/// tourist instances only declare what always holds and must be screened
/// for subpath optimality by the caller.
pub fn generate_acyclic(structure: AcyclicStructure, seed: u64) -> Instance<AnySpace> {
    use Property::*;
    let mut rng = rng_for(seed);
    let rng = &mut rng;
    let graph = random_dag(rng, MAX_ARCS);
    let mu = Some(graph.vertex_count().saturating_sub(1).max(1));
    match structure {
        AcyclicStructure::Mosp => {
            let d = rng.gen_range(2..=3);
            let space = AnySpace::Mosp(mosp_space(rng, &graph, d));
            let props = Structure::Mosp2.properties().union(PropertySet::of(&[
                MuBounded,
                SubpathOptimal,
                WeaklySubpathOptimal,
            ]));
            finish(graph, space, props, mu)
        }
        AcyclicStructure::Tourist => {
            // budget large enough that every path is feasible
            let space = AnySpace::Tourist(tourist_space(rng, &graph, Q::int(100)));
            let props = Structure::Tourist.properties().with(MuBounded);
            finish(graph, space, props, mu)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_size_limits() {
        for s in Structure::ALL {
            for seed in 0..20 {
                let inst = generate(s, seed);
                assert!(inst.graph().vertex_count() <= MAX_VERTICES, "{s}");
                assert!(inst.graph().arc_count() <= MAX_ARCS, "{s}");
            }
        }
    }

    #[test]
    fn same_seed_same_instance() {
        for s in Structure::ALL {
            let a = generate(s, 7);
            let b = generate(s, 7);
            assert_eq!(format!("{:?}", a), format!("{:?}", b));
        }
    }

    #[test]
    fn dags_are_acyclic() {
        for seed in 0..20 {
            assert!(generate_acyclic(AcyclicStructure::Mosp, seed).graph().is_acyclic());
            assert!(generate_acyclic(AcyclicStructure::Tourist, seed).graph().is_acyclic());
        }
    }

    #[test]
    fn structure_names_round_trip() {
        for s in Structure::ALL {
            assert_eq!(s.name().parse::<Structure>().unwrap(), s);
        }
    }
}
