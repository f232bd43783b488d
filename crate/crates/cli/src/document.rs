//! JSON instance documents: parsing into core instances and the canonical
//! form written back out.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, DeserializeOwned};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use posp_core::table::{ArcTable, TableDefault, TableWeightSpace};
use posp_core::weights::any::AnySpace;
use posp_core::weights::bottleneck::{BottleneckArc, BottleneckSpace};
use posp_core::weights::evsp::{ChargeCurve, EvspArc, EvspSpace};
use posp_core::weights::fifo::{FifoSpace, TravelTime};
use posp_core::weights::interval::{IntervalSpace, IntervalWeight};
use posp_core::weights::kn::KnSpace;
use posp_core::weights::product::ProductSpace;
use posp_core::weights::semilattice::MinSemilatticeSpace;
use posp_core::weights::subset::SubsetSpace;
use posp_core::weights::tourist::TouristSpace;
use posp_core::weights::vector::MospSpace;
use posp_core::weights::wcspr::{WcsprArc, WcsprSpace};
use posp_core::{CoreError, Graph, Instance, Property, PropertySet, RelationKind, WeightSpace, Q};

pub const FORMAT_VERSION: u32 = 1;

/// An exact rational in JSON: an integer, a decimal, or a `"p/q"` string.
/// Written as an integer when whole, otherwise as `"p/q"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Num(pub Q);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        num_value(self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Num, D::Error> {
        let text = match Value::deserialize(d)? {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s,
            other => return Err(de::Error::custom(format!("expected a number, found {other}"))),
        };
        text.parse().map(Num).map_err(de::Error::custom)
    }
}

pub fn num_value(q: Q) -> Value {
    match i64::try_from(q.numer()) {
        Ok(n) if q.is_integer() => json!(n),
        _ => json!(q.to_string()),
    }
}

fn nums(xs: &[Q]) -> Vec<Num> {
    xs.iter().copied().map(Num).collect()
}

fn qs(xs: Vec<Num>) -> Vec<Q> {
    xs.into_iter().map(|n| n.0).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub format_version: u32,
    pub graph: GraphDoc,
    pub source: usize,
    pub weight_space: SpaceDoc,
    #[serde(default)]
    pub declared_properties: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<OptionsDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertex_count: usize,
    pub arcs: Vec<ArcDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDoc {
    pub tail: usize,
    pub head: usize,
    #[serde(default)]
    pub payload: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub kind: String,
    #[serde(default)]
    pub params: Value,
}

/// Defaults for `solve`; command-line flags take precedence.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drop_infeasible: Option<bool>,
}

/// A document rejected while parsing, with the path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub path: String,
    pub message: String,
}

impl DocError {
    fn new(path: impl Into<String>, message: impl fmt::Display) -> DocError {
        DocError {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for DocError {}

pub fn read_document(text: &str) -> Result<InstanceDocument, DocError> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| DocError::new("", e))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(DocError::new(
            "format_version",
            format!("unsupported version {}, expected {FORMAT_VERSION}", doc.format_version),
        ));
    }
    Ok(doc)
}

fn field<T: DeserializeOwned>(value: &Value, path: &str) -> Result<T, DocError> {
    T::deserialize(value).map_err(|e| DocError::new(path, e))
}

fn core(path: &str) -> impl Fn(CoreError) -> DocError + '_ {
    move |e| DocError::new(path, e)
}

pub fn parse_instance(doc: &InstanceDocument) -> Result<Instance<AnySpace>, DocError> {
    let pairs = doc.graph.arcs.iter().map(|a| (a.tail, a.head)).collect();
    let graph = Graph::new(doc.graph.vertex_count, pairs).map_err(core("graph.arcs"))?;
    let payloads: Vec<(String, &Value)> = doc
        .graph
        .arcs
        .iter()
        .enumerate()
        .map(|(i, a)| (format!("graph.arcs[{i}].payload"), &a.payload))
        .collect();
    let space = build_space(&doc.weight_space, "weight_space", &payloads, &graph, doc.source)?;
    let mut declared = PropertySet::empty();
    for (i, name) in doc.declared_properties.iter().enumerate() {
        let p: Property = name
            .parse()
            .map_err(|e| DocError::new(format!("declared_properties[{i}]"), e))?;
        declared.insert(p);
    }
    Instance::new(graph, doc.source, space)
        .map_err(core("source"))?
        .with_properties(declared, doc.mu)
        .map_err(core("mu"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DimParams {
    dim: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BottleneckParams {
    additive_dim: usize,
    bottleneck_dim: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BottleneckPayload {
    additive: Vec<Num>,
    bottleneck: Vec<Num>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubsetParams {
    ground: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalParams {
    alpha: Num,
    beta: Num,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalPayload {
    c: Num,
    w: Num,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FifoParams {
    tau0: Num,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WcsprParams {
    limit: Num,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WcsprPayload {
    cost: Num,
    resource: Num,
    #[serde(default)]
    replenish: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Station {
    vertex: usize,
    curve: Vec<(Num, Num)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EvspParams {
    beta: Num,
    epsilon: Num,
    #[serde(default)]
    stations: Vec<Station>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum EvspPayload {
    Road { time: Num, delta: Num },
    Charge,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TouristParams {
    budget: Num,
    rho: Vec<Num>,
    categories: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TouristPayload {
    length: Num,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableParams {
    weights: Vec<String>,
    #[serde(default)]
    strict_pairs: Vec<(String, String)>,
    initial: String,
    #[serde(default)]
    leo: Option<Vec<String>>,
    #[serde(default)]
    relation: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum TableDefaultDoc {
    Missing,
    Identity,
    Const(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TablePayload {
    #[serde(default)]
    entries: Vec<(String, String)>,
    #[serde(default = "missing")]
    default: TableDefaultDoc,
}

fn missing() -> TableDefaultDoc {
    TableDefaultDoc::Missing
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KnParams {
    m: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductParams {
    first: SpaceDoc,
    second: SpaceDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductPayload {
    #[serde(default)]
    first: Value,
    #[serde(default)]
    second: Value,
}

fn each<T: DeserializeOwned>(payloads: &[(String, &Value)]) -> Result<Vec<T>, DocError> {
    payloads.iter().map(|(path, v)| field(v, path)).collect()
}

fn build_space(
    doc: &SpaceDoc,
    path: &str,
    payloads: &[(String, &Value)],
    graph: &Graph,
    source: usize,
) -> Result<AnySpace, DocError> {
    let params_path = format!("{path}.params");
    let pp = params_path.as_str();
    let space = match doc.kind.as_str() {
        "mosp" => {
            let p: DimParams = field(&doc.params, pp)?;
            let costs = each::<Vec<Num>>(payloads)?.into_iter().map(qs).collect();
            AnySpace::Mosp(MospSpace::new(p.dim, costs).map_err(core(pp))?)
        }
        "semilattice" => {
            let p: DimParams = field(&doc.params, pp)?;
            let caps = each::<Vec<Num>>(payloads)?.into_iter().map(qs).collect();
            AnySpace::Semilattice(MinSemilatticeSpace::new(p.dim, caps).map_err(core(pp))?)
        }
        "bottleneck" => {
            let p: BottleneckParams = field(&doc.params, pp)?;
            let arcs = each::<BottleneckPayload>(payloads)?
                .into_iter()
                .map(|a| BottleneckArc {
                    additive: qs(a.additive),
                    bottleneck: qs(a.bottleneck),
                })
                .collect();
            AnySpace::Bottleneck(BottleneckSpace::new(p.additive_dim, p.bottleneck_dim, arcs).map_err(core(pp))?)
        }
        "subset" => {
            let p: SubsetParams = field(&doc.params, pp)?;
            let sets = each::<Vec<usize>>(payloads)?;
            AnySpace::Subset(SubsetSpace::new(p.ground, sets).map_err(core(pp))?)
        }
        "interval" => {
            let p: IntervalParams = field(&doc.params, pp)?;
            let arcs = each::<IntervalPayload>(payloads)?
                .into_iter()
                .map(|a| IntervalWeight::new(a.c.0, a.w.0))
                .collect();
            AnySpace::Interval(IntervalSpace::new(p.alpha.0, p.beta.0, arcs).map_err(core(pp))?)
        }
        "fifo_time" => {
            let p: FifoParams = field(&doc.params, pp)?;
            let mut tables = Vec::with_capacity(payloads.len());
            for (i, (path, v)) in payloads.iter().enumerate() {
                let points: Vec<(Num, Num)> = field(v, path)?;
                let points = points.into_iter().map(|(t, d)| (t.0, d.0)).collect();
                tables.push(TravelTime::new(i, points).map_err(core(path))?);
            }
            AnySpace::Fifo(FifoSpace::new(p.tau0.0, tables).map_err(core(pp))?)
        }
        "wcspr" => {
            let p: WcsprParams = field(&doc.params, pp)?;
            let arcs = each::<WcsprPayload>(payloads)?
                .into_iter()
                .map(|a| WcsprArc {
                    cost: a.cost.0,
                    resource: a.resource.0,
                    replenish: a.replenish,
                })
                .collect();
            AnySpace::Wcspr(WcsprSpace::new(p.limit.0, arcs).map_err(core(pp))?)
        }
        "evsp" => {
            let p: EvspParams = field(&doc.params, pp)?;
            let arcs = each::<EvspPayload>(payloads)?
                .into_iter()
                .map(|a| match a {
                    EvspPayload::Road { time, delta } => EvspArc::Road {
                        time: time.0,
                        delta: delta.0,
                    },
                    EvspPayload::Charge => EvspArc::Charge,
                })
                .collect();
            let mut stations = BTreeMap::new();
            for (i, s) in p.stations.into_iter().enumerate() {
                let spath = format!("{pp}.stations[{i}]");
                let curve =
                    ChargeCurve::new(s.curve.into_iter().map(|(t, y)| (t.0, y.0)).collect()).map_err(core(&spath))?;
                if stations.insert(s.vertex, curve).is_some() {
                    return Err(DocError::new(spath, format!("vertex {} listed twice", s.vertex)));
                }
            }
            let space = EvspSpace::new(p.beta.0, p.epsilon.0, arcs, stations).map_err(core(pp))?;
            space.validate_graph(graph).map_err(core("graph.arcs"))?;
            AnySpace::Evsp(space)
        }
        "tourist" => {
            let p: TouristParams = field(&doc.params, pp)?;
            let lengths = each::<TouristPayload>(payloads)?
                .into_iter()
                .map(|a| a.length.0)
                .collect();
            AnySpace::Tourist(
                TouristSpace::new(p.budget.0, qs(p.rho), lengths, p.categories, source).map_err(core(pp))?,
            )
        }
        "table" => {
            let p: TableParams = field(&doc.params, pp)?;
            let kind = match p.relation.as_deref() {
                None | Some("partial-order") => RelationKind::PartialOrder,
                Some("quasi-transitive") => RelationKind::QuasiTransitive,
                Some(other) => {
                    return Err(DocError::new(
                        format!("{pp}.relation"),
                        format!("unknown relation `{other}`"),
                    ))
                }
            };
            let arcs = each::<TablePayload>(payloads)?
                .into_iter()
                .map(|a| ArcTable {
                    entries: a.entries,
                    default: match a.default {
                        TableDefaultDoc::Missing => TableDefault::Missing,
                        TableDefaultDoc::Identity => TableDefault::Identity,
                        TableDefaultDoc::Const(n) => TableDefault::Const(n),
                    },
                })
                .collect();
            let names: Vec<&str> = p.weights.iter().map(String::as_str).collect();
            let pairs: Vec<(&str, &str)> = p.strict_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let leo: Option<Vec<&str>> = p.leo.as_ref().map(|l| l.iter().map(String::as_str).collect());
            AnySpace::Table(
                TableWeightSpace::new(&names, &pairs, &p.initial, arcs, leo.as_deref(), kind).map_err(core(pp))?,
            )
        }
        "kn" => {
            let p: KnParams = field(&doc.params, pp)?;
            AnySpace::Kn(KnSpace::new(graph.vertex_count(), p.m, source).map_err(core(pp))?)
        }
        "product" => {
            let p: ProductParams = field(&doc.params, pp)?;
            let split = each::<ProductPayload>(payloads)?;
            let first: Vec<(String, &Value)> = payloads
                .iter()
                .zip(&split)
                .map(|((path, _), s)| (format!("{path}.first"), &s.first))
                .collect();
            let second: Vec<(String, &Value)> = payloads
                .iter()
                .zip(&split)
                .map(|((path, _), s)| (format!("{path}.second"), &s.second))
                .collect();
            let a = build_space(&p.first, &format!("{pp}.first"), &first, graph, source)?;
            let b = build_space(&p.second, &format!("{pp}.second"), &second, graph, source)?;
            AnySpace::Product(Box::new(ProductSpace::new(a, b).map_err(core(pp))?))
        }
        other => {
            return Err(DocError::new(
                format!("{path}.kind"),
                format!("unknown weight-space kind `{other}`"),
            ))
        }
    };
    if let Some(n) = space.arc_count() {
        if n != graph.arc_count() {
            return Err(DocError::new(
                "graph.arcs",
                CoreError::ArcCountMismatch {
                    space: n,
                    graph: graph.arc_count(),
                },
            ));
        }
    }
    Ok(space)
}

fn to_value<T: Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

/// Params and per-arc payloads of a space.
fn describe(space: &AnySpace, arc_count: usize) -> (SpaceDoc, Vec<Value>) {
    let (params, payloads): (Value, Vec<Value>) = match space {
        AnySpace::Mosp(s) => (
            json!({ "dim": s.dim() }),
            s.costs().iter().map(|c| to_value(nums(c))).collect(),
        ),
        AnySpace::Semilattice(s) => (
            json!({ "dim": s.dim() }),
            s.caps().iter().map(|c| to_value(nums(c))).collect(),
        ),
        AnySpace::Bottleneck(s) => {
            let (m, n) = s.dims();
            (
                json!({ "additive_dim": m, "bottleneck_dim": n }),
                s.arcs()
                    .iter()
                    .map(|a| {
                        to_value(BottleneckPayload {
                            additive: nums(&a.additive),
                            bottleneck: nums(&a.bottleneck),
                        })
                    })
                    .collect(),
            )
        }
        AnySpace::Subset(s) => (
            json!({ "ground": s.ground() }),
            s.sets().iter().map(|w| to_value(w.elements())).collect(),
        ),
        AnySpace::Interval(s) => (
            json!({ "alpha": num_value(s.alpha()), "beta": num_value(s.beta()) }),
            s.arcs()
                .iter()
                .map(|a| {
                    to_value(IntervalPayload {
                        c: Num(a.c),
                        w: Num(a.w),
                    })
                })
                .collect(),
        ),
        AnySpace::Fifo(s) => (
            json!({ "tau0": num_value(s.tau0()) }),
            s.tables()
                .iter()
                .map(|t| to_value(t.points().iter().map(|&(a, b)| (Num(a), Num(b))).collect::<Vec<_>>()))
                .collect(),
        ),
        AnySpace::Wcspr(s) => (
            json!({ "limit": num_value(s.limit()) }),
            s.arcs()
                .iter()
                .map(|a| {
                    to_value(WcsprPayload {
                        cost: Num(a.cost),
                        resource: Num(a.resource),
                        replenish: a.replenish,
                    })
                })
                .collect(),
        ),
        AnySpace::Evsp(s) => {
            let stations: Vec<Station> = s
                .stations()
                .iter()
                .map(|(&vertex, c)| Station {
                    vertex,
                    curve: c.points().iter().map(|&(t, y)| (Num(t), Num(y))).collect(),
                })
                .collect();
            (
                json!({ "beta": num_value(s.beta()), "epsilon": num_value(s.epsilon()), "stations": to_value(stations) }),
                s.arcs()
                    .iter()
                    .map(|a| match *a {
                        EvspArc::Road { time, delta } => to_value(EvspPayload::Road {
                            time: Num(time),
                            delta: Num(delta),
                        }),
                        EvspArc::Charge => to_value(EvspPayload::Charge),
                    })
                    .collect(),
            )
        }
        AnySpace::Tourist(s) => (
            json!({ "budget": num_value(s.budget()), "rho": to_value(nums(s.rho())), "categories": s.categories() }),
            s.lengths()
                .iter()
                .map(|&l| to_value(TouristPayload { length: Num(l) }))
                .collect(),
        ),
        AnySpace::Table(s) => {
            let mut params = json!({
                "weights": s.names(),
                "strict_pairs": s.strict_pairs(),
                "initial": s.initial_name(),
            });
            if let Some(leo) = s.leo_order() {
                params["leo"] = json!(leo);
            }
            if s.relation_kind() == RelationKind::QuasiTransitive {
                params["relation"] = json!("quasi-transitive");
            }
            let payloads = s
                .arc_tables()
                .iter()
                .map(|t| {
                    to_value(TablePayload {
                        entries: t.entries.clone(),
                        default: match &t.default {
                            TableDefault::Missing => TableDefaultDoc::Missing,
                            TableDefault::Identity => TableDefaultDoc::Identity,
                            TableDefault::Const(n) => TableDefaultDoc::Const(n.clone()),
                        },
                    })
                })
                .collect();
            (params, payloads)
        }
        AnySpace::Kn(s) => (json!({ "m": s.m() }), vec![Value::Null; arc_count]),
        AnySpace::Product(p) => {
            let (a, pa) = describe(&p.first, arc_count);
            let (b, pb) = describe(&p.second, arc_count);
            (
                json!({ "first": to_value(a), "second": to_value(b) }),
                pa.into_iter()
                    .zip(pb)
                    .map(|(x, y)| json!({ "first": x, "second": y }))
                    .collect(),
            )
        }
    };
    (
        SpaceDoc {
            kind: space.kind().to_string(),
            params,
        },
        payloads,
    )
}

/// The canonical document of an instance.
pub fn to_document(inst: &Instance<AnySpace>) -> InstanceDocument {
    let g = inst.graph();
    let (space, payloads) = describe(inst.space(), g.arc_count());
    InstanceDocument {
        format_version: FORMAT_VERSION,
        graph: GraphDoc {
            vertex_count: g.vertex_count(),
            arcs: g
                .arcs()
                .iter()
                .zip(payloads)
                .map(|(a, payload)| ArcDoc {
                    tail: a.tail,
                    head: a.head,
                    payload,
                })
                .collect(),
        },
        source: inst.source(),
        weight_space: space,
        declared_properties: inst.declared().iter().map(|p| p.name().to_string()).collect(),
        mu: inst.mu(),
        options: None,
    }
}

pub fn canonical_json(doc: &InstanceDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}
