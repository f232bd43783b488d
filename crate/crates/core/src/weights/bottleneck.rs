//! Multi-objective bottleneck weights: an additive cost block that should be
//! small and a capacity block, combined by `min`, that should be large.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::rational::Q;
use crate::space::{componentwise, ComparisonResult, WeightSpace};
use crate::weights::semilattice::{compare_caps, leo_caps, meet_caps, Cap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BottleneckWeight {
    pub additive: Vec<Q>,
    pub bottleneck: Vec<Cap>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleneckArc {
    pub additive: Vec<Q>,
    pub bottleneck: Vec<Q>,
}

#[derive(Debug, Clone)]
pub struct BottleneckSpace {
    m: usize,
    n: usize,
    arcs: Vec<BottleneckArc>,
}

impl BottleneckSpace {
    pub fn new(m: usize, n: usize, arcs: Vec<BottleneckArc>) -> Result<BottleneckSpace, CoreError> {
        for a in &arcs {
            if a.additive.len() != m {
                return Err(CoreError::DimensionMismatch {
                    expected: m,
                    found: a.additive.len(),
                });
            }
            if a.bottleneck.len() != n {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    found: a.bottleneck.len(),
                });
            }
            if a.additive.iter().chain(&a.bottleneck).any(Q::is_negative) {
                return Err(CoreError::InvalidParameter("negative bottleneck arc entry".into()));
            }
        }
        Ok(BottleneckSpace { m, n, arcs })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn arcs(&self) -> &[BottleneckArc] {
        &self.arcs
    }
}

impl WeightSpace for BottleneckSpace {
    type Weight = BottleneckWeight;

    fn compare(&self, a: &BottleneckWeight, b: &BottleneckWeight) -> ComparisonResult {
        componentwise(&a.additive, &b.additive).product(compare_caps(&a.bottleneck, &b.bottleneck))
    }

    fn extend(&self, w: &BottleneckWeight, arc: ArcRef) -> Result<BottleneckWeight, CoreError> {
        let data = &self.arcs[arc.id];
        Ok(BottleneckWeight {
            additive: w.additive.iter().zip(&data.additive).map(|(&x, &c)| x + c).collect(),
            bottleneck: meet_caps(&w.bottleneck, &data.bottleneck),
        })
    }

    fn initial(&self) -> BottleneckWeight {
        BottleneckWeight {
            additive: vec![Q::ZERO; self.m],
            bottleneck: vec![Cap::Unbounded; self.n],
        }
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.arcs.len())
    }

    fn leo_cmp(&self, a: &BottleneckWeight, b: &BottleneckWeight) -> Option<Ordering> {
        Some(
            a.additive
                .cmp(&b.additive)
                .then_with(|| leo_caps(&a.bottleneck, &b.bottleneck)),
        )
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn check_domain(&self, w: &BottleneckWeight) -> Result<(), CoreError> {
        if w.additive.len() != self.m {
            return Err(CoreError::DimensionMismatch {
                expected: self.m,
                found: w.additive.len(),
            });
        }
        if w.bottleneck.len() != self.n {
            return Err(CoreError::DimensionMismatch {
                expected: self.n,
                found: w.bottleneck.len(),
            });
        }
        Ok(())
    }
}
