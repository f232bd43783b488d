//! Kind-specific JSON for weights.

use serde_json::{json, Value};

use posp_core::weights::any::{AnySpace, AnyWeight};
use posp_core::weights::kn::KnWeight;
use posp_core::weights::semilattice::Cap;
use posp_core::weights::tourist::TouristWeight;
use posp_core::Q;

use crate::document::num_value;

fn nums(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(|&q| num_value(q)).collect())
}

fn caps(xs: &[Cap]) -> Value {
    Value::Array(
        xs.iter()
            .map(|c| match c {
                Cap::Finite(q) => num_value(*q),
                Cap::Unbounded => json!("inf"),
            })
            .collect(),
    )
}

pub fn weight(space: &AnySpace, w: &AnyWeight) -> Value {
    match (space, w) {
        (_, AnyWeight::Vector(v)) => nums(&v.0),
        (_, AnyWeight::Bottleneck(b)) => json!({ "additive": nums(&b.additive), "bottleneck": caps(&b.bottleneck) }),
        (_, AnyWeight::Caps(c)) => caps(c),
        (_, AnyWeight::Subset(s)) => json!(s.elements()),
        (_, AnyWeight::Interval(i)) => json!({ "c": num_value(i.c), "w": num_value(i.w) }),
        (_, AnyWeight::Time(t)) => num_value(t.0),
        (_, AnyWeight::Wcspr(x)) => json!({ "cost": num_value(x.cost), "resource": num_value(x.resource) }),
        (_, AnyWeight::Evsp(x)) => json!({ "time": num_value(x.time), "soc": num_value(x.soc) }),
        (_, AnyWeight::Tourist(TouristWeight::Feasible { length, values })) => {
            json!({ "length": num_value(*length), "values": nums(values) })
        }
        (_, AnyWeight::Tourist(TouristWeight::Infeasible)) => json!("infeasible"),
        (AnySpace::Table(s), AnyWeight::Table(t)) => json!(s.name(*t)),
        (_, AnyWeight::Table(t)) => json!(t.0),
        (_, AnyWeight::Kn(KnWeight::Zero)) => json!("zero"),
        (_, AnyWeight::Kn(KnWeight::Tuple(vs))) => json!(vs),
        (AnySpace::Product(p), AnyWeight::Pair(pair)) => json!([weight(&p.first, &pair.0), weight(&p.second, &pair.1)]),
        (_, AnyWeight::Pair(pair)) => json!([weight(space, &pair.0), weight(space, &pair.1)]),
    }
}
