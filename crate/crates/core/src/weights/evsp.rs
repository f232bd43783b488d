//! Electric vehicle routing with recuperation and discretized charging.
//! A weight is `(elapsed time, state of charge)`; an empty battery is
//! absorbing.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::graph::{ArcRef, VertexId};
use crate::rational::Q;
use crate::space::{ComparisonResult, WeightSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EvspWeight {
    pub time: Q,
    pub soc: Q,
}

impl EvspWeight {
    pub fn new(time: Q, soc: Q) -> EvspWeight {
        EvspWeight { time, soc }
    }
}

/// Sampled charge curve `(charge time, SoC reached from empty)`, linearly
/// interpolated and constant after the last sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeCurve {
    points: Vec<(Q, Q)>,
}

impl ChargeCurve {
    pub fn new(points: Vec<(Q, Q)>) -> Result<ChargeCurve, CoreError> {
        match points.first() {
            Some(&(t, _)) if t == Q::ZERO => {}
            _ => return Err(CoreError::InvalidParameter("charge curve must start at time 0".into())),
        }
        if points.iter().any(|&(_, y)| y.is_negative() || y > Q::ONE) {
            return Err(CoreError::InvalidParameter("charge curve leaves [0, 1]".into()));
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(CoreError::InvalidParameter("charge curve times must increase".into()));
            }
            if w[0].1 > w[1].1 {
                return Err(CoreError::InvalidParameter(format!(
                    "charge curve is not monotone between t={} and t={}",
                    w[0].0, w[1].0
                )));
            }
        }
        Ok(ChargeCurve { points })
    }

    pub fn points(&self) -> &[(Q, Q)] {
        &self.points
    }

    pub fn soc_at(&self, t: Q) -> Q {
        let p = &self.points;
        let last = p[p.len() - 1];
        if t >= last.0 {
            return last.1;
        }
        let i = p.partition_point(|&(x, _)| x <= t);
        let (x0, y0) = p[i - 1];
        let (x1, y1) = p[i];
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    /// Earliest charge time reaching `y`, if the curve gets there.
    pub fn time_for(&self, y: Q) -> Option<Q> {
        let p = &self.points;
        let i = p.iter().position(|&(_, s)| s >= y)?;
        if i == 0 {
            return Some(p[0].0);
        }
        let (x0, y0) = p[i - 1];
        let (x1, y1) = p[i];
        Some(x0 + (y - y0) * (x1 - x0) / (y1 - y0))
    }

    /// SoC after charging for `eps` starting from `y`.
    pub fn charge(&self, y: Q, eps: Q) -> Q {
        match self.time_for(y) {
            Some(t) => y.max(self.soc_at(t + eps)),
            None => y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvspArc {
    /// Road segment consuming `delta` (negative when recuperating).
    Road { time: Q, delta: Q },
    /// Charging loop at a station, lasting the space's `epsilon`.
    Charge,
}

#[derive(Debug, Clone)]
pub struct EvspSpace {
    beta: Q,
    epsilon: Q,
    arcs: Vec<EvspArc>,
    stations: BTreeMap<VertexId, ChargeCurve>,
}

impl EvspSpace {
    pub fn new(
        beta: Q,
        epsilon: Q,
        arcs: Vec<EvspArc>,
        stations: BTreeMap<VertexId, ChargeCurve>,
    ) -> Result<EvspSpace, CoreError> {
        if !(Q::ZERO < beta && beta <= Q::ONE) {
            return Err(CoreError::InvalidParameter("initial SoC must lie in (0, 1]".into()));
        }
        if epsilon <= Q::ZERO {
            return Err(CoreError::InvalidParameter(
                "charging step epsilon must be positive".into(),
            ));
        }
        for (i, a) in arcs.iter().enumerate() {
            if let EvspArc::Road { time, .. } = a {
                if *time <= Q::ZERO {
                    return Err(CoreError::InvalidParameter(format!(
                        "arc {i}: travel time must be positive"
                    )));
                }
            }
        }
        Ok(EvspSpace {
            beta,
            epsilon,
            arcs,
            stations,
        })
    }

    /// Checks that charging arcs are loops at stations.
    pub fn validate_graph(&self, graph: &crate::graph::Graph) -> Result<(), CoreError> {
        for (i, a) in self.arcs.iter().enumerate() {
            if let EvspArc::Charge = a {
                let r = graph.arc(i);
                if !r.is_loop() || !self.stations.contains_key(&r.tail) {
                    return Err(CoreError::InvalidParameter(format!(
                        "arc {i}: charging arcs must be loops at charging stations"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn beta(&self) -> Q {
        self.beta
    }

    pub fn epsilon(&self) -> Q {
        self.epsilon
    }

    pub fn arcs(&self) -> &[EvspArc] {
        &self.arcs
    }

    pub fn stations(&self) -> &BTreeMap<VertexId, ChargeCurve> {
        &self.stations
    }
}

impl WeightSpace for EvspSpace {
    type Weight = EvspWeight;

    fn compare(&self, a: &EvspWeight, b: &EvspWeight) -> ComparisonResult {
        ComparisonResult::from_relation(
            a == b,
            a.time <= b.time && a.soc >= b.soc,
            b.time <= a.time && b.soc >= a.soc,
        )
    }

    fn extend(&self, w: &EvspWeight, arc: ArcRef) -> Result<EvspWeight, CoreError> {
        let (dt, soc) = match self.arcs[arc.id] {
            EvspArc::Road { time, delta } => (time, Q::ONE.min(Q::ZERO.max(w.soc - delta))),
            EvspArc::Charge => {
                let curve = self.stations.get(&arc.tail).ok_or_else(|| {
                    CoreError::InvalidParameter(format!("arc {}: no charge curve at vertex {}", arc.id, arc.tail))
                })?;
                (self.epsilon, curve.charge(w.soc, self.epsilon))
            }
        };
        let soc = if w.soc > Q::ZERO { soc } else { Q::ZERO };
        Ok(EvspWeight::new(w.time + dt, soc))
    }

    fn initial(&self) -> EvspWeight {
        EvspWeight::new(Q::ZERO, self.beta)
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.arcs.len())
    }

    fn leo_cmp(&self, a: &EvspWeight, b: &EvspWeight) -> Option<Ordering> {
        Some(a.time.cmp(&b.time).then(b.soc.cmp(&a.soc)))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn is_feasible(&self, w: &EvspWeight) -> bool {
        w.soc > Q::ZERO
    }

    fn check_domain(&self, w: &EvspWeight) -> Result<(), CoreError> {
        if w.time.is_negative() || w.soc.is_negative() || w.soc > Q::ONE {
            Err(CoreError::DomainMismatch(format!("({}, {})", w.time, w.soc)))
        } else {
            Ok(())
        }
    }
}
