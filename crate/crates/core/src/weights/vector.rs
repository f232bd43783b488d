//! Additive vector weights under the componentwise order.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::rational::Q;
use crate::space::{componentwise, ComparisonResult, WeightSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorWeight(pub Vec<Q>);

impl VectorWeight {
    pub fn ints(v: &[i64]) -> VectorWeight {
        VectorWeight(v.iter().map(|&x| Q::int(x)).collect())
    }
}

#[derive(Debug, Clone)]
pub struct MospSpace {
    dim: usize,
    costs: Vec<Vec<Q>>,
}

impl MospSpace {
    pub fn new(dim: usize, costs: Vec<Vec<Q>>) -> Result<MospSpace, CoreError> {
        if dim == 0 {
            return Err(CoreError::InvalidParameter("dimension must be positive".into()));
        }
        for c in &costs {
            if c.len() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
        }
        Ok(MospSpace { dim, costs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn costs(&self) -> &[Vec<Q>] {
        &self.costs
    }

    pub fn is_nonnegative(&self) -> bool {
        self.costs.iter().flatten().all(|q| !q.is_negative())
    }
}

impl WeightSpace for MospSpace {
    type Weight = VectorWeight;

    fn compare(&self, a: &VectorWeight, b: &VectorWeight) -> ComparisonResult {
        componentwise(&a.0, &b.0)
    }

    fn extend(&self, w: &VectorWeight, arc: ArcRef) -> Result<VectorWeight, CoreError> {
        Ok(VectorWeight(
            w.0.iter().zip(&self.costs[arc.id]).map(|(&x, &c)| x + c).collect(),
        ))
    }

    fn initial(&self) -> VectorWeight {
        VectorWeight(vec![Q::ZERO; self.dim])
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.costs.len())
    }

    fn leo_cmp(&self, a: &VectorWeight, b: &VectorWeight) -> Option<Ordering> {
        Some(a.0.cmp(&b.0))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn check_domain(&self, w: &VectorWeight) -> Result<(), CoreError> {
        if w.0.len() == self.dim {
            Ok(())
        } else {
            Err(CoreError::DimensionMismatch {
                expected: self.dim,
                found: w.0.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{compare, leo_pick, LeoChoice};

    fn arc() -> ArcRef {
        ArcRef {
            id: 0,
            tail: 0,
            head: 1,
        }
    }

    #[test]
    fn vector_addition() {
        let s = MospSpace::new(2, vec![vec![Q::int(3), Q::int(0)]]).unwrap();
        assert_eq!(
            s.extend(&VectorWeight::ints(&[1, 2]), arc()).unwrap(),
            VectorWeight::ints(&[4, 2])
        );
    }

    #[test]
    fn componentwise_comparisons() {
        let s = MospSpace::new(2, vec![]).unwrap();
        assert_eq!(
            s.compare(&VectorWeight::ints(&[1, 2]), &VectorWeight::ints(&[2, 1])),
            ComparisonResult::Incomparable
        );
        assert_eq!(
            s.compare(&VectorWeight::ints(&[1, 1]), &VectorWeight::ints(&[2, 1])),
            ComparisonResult::Less
        );
    }

    #[test]
    fn lexicographic_leo() {
        let s = MospSpace::new(2, vec![]).unwrap();
        assert_eq!(
            leo_pick(&s, &VectorWeight::ints(&[3, 9]), &VectorWeight::ints(&[3, 2])).unwrap(),
            LeoChoice::Second
        );
    }

    #[test]
    fn dimension_errors() {
        assert!(matches!(
            MospSpace::new(2, vec![vec![Q::ONE]]),
            Err(CoreError::DimensionMismatch { expected: 2, found: 1 })
        ));
        let s = MospSpace::new(2, vec![]).unwrap();
        assert!(compare(&s, &VectorWeight::ints(&[1]), &VectorWeight::ints(&[1, 2])).is_err());
    }
}
