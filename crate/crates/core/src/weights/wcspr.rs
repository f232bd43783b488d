//! Weight-constrained shortest paths with replenishment arcs. A weight is
//! `(cost, consumed resource)`; reaching the limit `M` saturates and marks
//! the path infeasible.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::rational::Q;
use crate::space::{componentwise, ComparisonResult, WeightSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WcsprWeight {
    pub cost: Q,
    pub resource: Q,
}

impl WcsprWeight {
    pub fn new(cost: Q, resource: Q) -> WcsprWeight {
        WcsprWeight { cost, resource }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WcsprArc {
    pub cost: Q,
    pub resource: Q,
    pub replenish: bool,
}

#[derive(Debug, Clone)]
pub struct WcsprSpace {
    limit: Q,
    arcs: Vec<WcsprArc>,
}

impl WcsprSpace {
    pub fn new(limit: Q, arcs: Vec<WcsprArc>) -> Result<WcsprSpace, CoreError> {
        if limit <= Q::ZERO {
            return Err(CoreError::InvalidParameter("resource limit M must be positive".into()));
        }
        if let Some(i) = arcs
            .iter()
            .position(|a| a.cost.is_negative() || a.resource.is_negative())
        {
            return Err(CoreError::InvalidParameter(format!(
                "arc {i}: negative cost or resource"
            )));
        }
        Ok(WcsprSpace { limit, arcs })
    }

    pub fn limit(&self) -> Q {
        self.limit
    }

    pub fn arcs(&self) -> &[WcsprArc] {
        &self.arcs
    }

    pub fn replenishment_costs_positive(&self) -> bool {
        self.arcs.iter().all(|a| !a.replenish || a.cost > Q::ZERO)
    }
}

impl WeightSpace for WcsprSpace {
    type Weight = WcsprWeight;

    fn compare(&self, a: &WcsprWeight, b: &WcsprWeight) -> ComparisonResult {
        componentwise(&[a.cost, a.resource], &[b.cost, b.resource])
    }

    fn extend(&self, w: &WcsprWeight, arc: ArcRef) -> Result<WcsprWeight, CoreError> {
        let a = &self.arcs[arc.id];
        let cost = w.cost + a.cost;
        let used = w.resource + a.resource;
        let resource = if used >= self.limit {
            self.limit
        } else if a.replenish {
            a.resource
        } else {
            used
        };
        Ok(WcsprWeight { cost, resource })
    }

    fn initial(&self) -> WcsprWeight {
        WcsprWeight::new(Q::ZERO, Q::ZERO)
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.arcs.len())
    }

    fn leo_cmp(&self, a: &WcsprWeight, b: &WcsprWeight) -> Option<Ordering> {
        Some(a.cmp(b))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn is_feasible(&self, w: &WcsprWeight) -> bool {
        w.resource < self.limit
    }

    fn check_domain(&self, w: &WcsprWeight) -> Result<(), CoreError> {
        if w.cost.is_negative() || w.resource.is_negative() || w.resource > self.limit {
            Err(CoreError::DomainMismatch(format!("({}, {})", w.cost, w.resource)))
        } else {
            Ok(())
        }
    }
}
