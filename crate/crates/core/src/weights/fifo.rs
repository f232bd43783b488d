//! Time-dependent arrival times with piecewise-linear travel-time functions
//! obeying First-In-First-Out.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::rational::Q;
use crate::space::{ComparisonResult, WeightSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimeWeight(pub Q);

/// Breakpoints `(departure, travel time)` with strictly increasing
/// departures. Linear in between, constant outside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TravelTime {
    points: Vec<(Q, Q)>,
}

impl TravelTime {
    pub fn constant(t: Q) -> TravelTime {
        TravelTime {
            points: vec![(Q::ZERO, t)],
        }
    }

    pub fn new(arc: usize, points: Vec<(Q, Q)>) -> Result<TravelTime, CoreError> {
        if points.is_empty() {
            return Err(CoreError::InvalidParameter(format!(
                "arc {arc}: empty travel-time table"
            )));
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(CoreError::InvalidParameter(format!(
                    "arc {arc}: breakpoints must have increasing departure times"
                )));
            }
        }
        if let Some(p) = points.iter().find(|p| p.1.is_negative()) {
            return Err(CoreError::InvalidParameter(format!(
                "arc {arc}: negative travel time {}",
                p.1
            )));
        }
        for w in points.windows(2) {
            let (t1, d1) = w[0];
            let (t2, d2) = w[1];
            if t1 + d1 > t2 + d2 {
                return Err(CoreError::FifoViolation {
                    arc,
                    first: format!("t({t1})={d1}"),
                    second: format!("t({t2})={d2}"),
                });
            }
        }
        Ok(TravelTime { points })
    }

    pub fn points(&self) -> &[(Q, Q)] {
        &self.points
    }

    pub fn at(&self, tau: Q) -> Q {
        let p = &self.points;
        if tau <= p[0].0 {
            return p[0].1;
        }
        let last = p[p.len() - 1];
        if tau >= last.0 {
            return last.1;
        }
        let i = p.partition_point(|&(x, _)| x <= tau);
        let (x0, y0) = p[i - 1];
        let (x1, y1) = p[i];
        y0 + (y1 - y0) * (tau - x0) / (x1 - x0)
    }
}

#[derive(Debug, Clone)]
pub struct FifoSpace {
    tau0: Q,
    tables: Vec<TravelTime>,
}

impl FifoSpace {
    pub fn new(tau0: Q, tables: Vec<TravelTime>) -> Result<FifoSpace, CoreError> {
        if tau0.is_negative() {
            return Err(CoreError::InvalidParameter("start time must be nonnegative".into()));
        }
        Ok(FifoSpace { tau0, tables })
    }

    pub fn tau0(&self) -> Q {
        self.tau0
    }

    pub fn tables(&self) -> &[TravelTime] {
        &self.tables
    }
}

impl WeightSpace for FifoSpace {
    type Weight = TimeWeight;

    fn compare(&self, a: &TimeWeight, b: &TimeWeight) -> ComparisonResult {
        match a.cmp(b) {
            Ordering::Less => ComparisonResult::Less,
            Ordering::Equal => ComparisonResult::Equal,
            Ordering::Greater => ComparisonResult::Greater,
        }
    }

    fn extend(&self, w: &TimeWeight, arc: ArcRef) -> Result<TimeWeight, CoreError> {
        Ok(TimeWeight(w.0 + self.tables[arc.id].at(w.0)))
    }

    fn initial(&self) -> TimeWeight {
        TimeWeight(self.tau0)
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.tables.len())
    }

    fn leo_cmp(&self, a: &TimeWeight, b: &TimeWeight) -> Option<Ordering> {
        Some(a.cmp(b))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn check_domain(&self, w: &TimeWeight) -> Result<(), CoreError> {
        if w.0.is_negative() {
            Err(CoreError::DomainMismatch(format!("time {}", w.0)))
        } else {
            Ok(())
        }
    }
}
