//! Diagonal product of two weight spaces under the product order.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::space::{ComparisonResult, RelationKind, WeightSpace};

#[derive(Debug, Clone)]
pub struct ProductSpace<A, B> {
    pub first: A,
    pub second: B,
}

impl<A: WeightSpace, B: WeightSpace> ProductSpace<A, B> {
    pub fn new(first: A, second: B) -> Result<ProductSpace<A, B>, CoreError> {
        if let (Some(x), Some(y)) = (first.arc_count(), second.arc_count()) {
            if x != y {
                return Err(CoreError::ArcCountMismatch { space: x, graph: y });
            }
        }
        Ok(ProductSpace { first, second })
    }
}

impl<A: WeightSpace, B: WeightSpace> WeightSpace for ProductSpace<A, B> {
    type Weight = (A::Weight, B::Weight);

    fn compare(&self, a: &Self::Weight, b: &Self::Weight) -> ComparisonResult {
        self.first.compare(&a.0, &b.0).product(self.second.compare(&a.1, &b.1))
    }

    fn extend(&self, w: &Self::Weight, arc: ArcRef) -> Result<Self::Weight, CoreError> {
        Ok((self.first.extend(&w.0, arc)?, self.second.extend(&w.1, arc)?))
    }

    fn initial(&self) -> Self::Weight {
        (self.first.initial(), self.second.initial())
    }

    fn arc_count(&self) -> Option<usize> {
        self.first.arc_count().or(self.second.arc_count())
    }

    fn leo_cmp(&self, a: &Self::Weight, b: &Self::Weight) -> Option<Ordering> {
        let x = self.first.leo_cmp(&a.0, &b.0)?;
        let y = self.second.leo_cmp(&a.1, &b.1)?;
        Some(x.then(y))
    }

    fn has_leo(&self) -> bool {
        self.first.has_leo() && self.second.has_leo()
    }

    fn relation_kind(&self) -> RelationKind {
        match (self.first.relation_kind(), self.second.relation_kind()) {
            (RelationKind::PartialOrder, RelationKind::PartialOrder) => RelationKind::PartialOrder,
            _ => RelationKind::QuasiTransitive,
        }
    }

    fn is_feasible(&self, w: &Self::Weight) -> bool {
        self.first.is_feasible(&w.0) && self.second.is_feasible(&w.1)
    }

    fn check_domain(&self, w: &Self::Weight) -> Result<(), CoreError> {
        self.first.check_domain(&w.0)?;
        self.second.check_domain(&w.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Q;
    use crate::weights::vector::{MospSpace, VectorWeight};

    #[test]
    fn product_order() {
        let s = ProductSpace::new(MospSpace::new(1, vec![]).unwrap(), MospSpace::new(1, vec![]).unwrap()).unwrap();
        let v = |x| VectorWeight(vec![Q::int(x)]);
        assert_eq!(s.compare(&(v(1), v(3)), &(v(2), v(3))), ComparisonResult::Less);
        assert_eq!(s.compare(&(v(1), v(4)), &(v(2), v(3))), ComparisonResult::Incomparable);
    }
}
