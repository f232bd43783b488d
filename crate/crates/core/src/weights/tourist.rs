//! Tourist trip planning with attraction categories: a weight is the route
//! length together with the best attraction value seen in each category.
//! Routes longer than the budget collapse into a single infeasible weight
//! that every feasible weight dominates.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::{ArcRef, VertexId};
use crate::rational::Q;
use crate::space::{componentwise, ComparisonResult, WeightSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TouristWeight {
    Feasible { length: Q, values: Vec<Q> },
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct TouristSpace {
    budget: Q,
    rho: Vec<Q>,
    lengths: Vec<Q>,
    categories: Vec<Vec<VertexId>>,
    category_of: Vec<usize>,
    source: VertexId,
}

impl TouristSpace {
    pub fn new(
        budget: Q,
        rho: Vec<Q>,
        lengths: Vec<Q>,
        categories: Vec<Vec<VertexId>>,
        source: VertexId,
    ) -> Result<TouristSpace, CoreError> {
        if budget.is_negative() {
            return Err(CoreError::InvalidParameter("budget must be nonnegative".into()));
        }
        if rho.iter().any(Q::is_negative) {
            return Err(CoreError::InvalidParameter(
                "attraction values must be nonnegative".into(),
            ));
        }
        if let Some(i) = lengths.iter().position(|l| *l <= Q::ZERO) {
            return Err(CoreError::InvalidParameter(format!("arc {i}: length must be positive")));
        }
        let n = rho.len();
        let mut category_of = vec![usize::MAX; n];
        for (k, cat) in categories.iter().enumerate() {
            for &v in cat {
                if v >= n || category_of[v] != usize::MAX {
                    return Err(CoreError::InvalidParameter(
                        "categories do not partition the vertices".into(),
                    ));
                }
                category_of[v] = k;
            }
        }
        if category_of.contains(&usize::MAX) {
            return Err(CoreError::InvalidParameter(
                "categories do not partition the vertices".into(),
            ));
        }
        if source >= n {
            return Err(CoreError::SourceOutOfRange {
                source_vertex: source,
                vertex_count: n,
            });
        }
        Ok(TouristSpace {
            budget,
            rho,
            lengths,
            categories,
            category_of,
            source,
        })
    }

    pub fn budget(&self) -> Q {
        self.budget
    }

    pub fn rho(&self) -> &[Q] {
        &self.rho
    }

    pub fn lengths(&self) -> &[Q] {
        &self.lengths
    }

    pub fn categories(&self) -> &[Vec<VertexId>] {
        &self.categories
    }

    pub fn source(&self) -> VertexId {
        self.source
    }
}

impl WeightSpace for TouristSpace {
    type Weight = TouristWeight;

    fn compare(&self, a: &TouristWeight, b: &TouristWeight) -> ComparisonResult {
        use TouristWeight::*;
        match (a, b) {
            (Infeasible, Infeasible) => ComparisonResult::Equal,
            (Infeasible, _) => ComparisonResult::Greater,
            (_, Infeasible) => ComparisonResult::Less,
            (Feasible { length: la, values: va }, Feasible { length: lb, values: vb }) => {
                componentwise(&[*la], &[*lb]).product(componentwise(va, vb).reverse())
            }
        }
    }

    fn extend(&self, w: &TouristWeight, arc: ArcRef) -> Result<TouristWeight, CoreError> {
        let TouristWeight::Feasible { length, values } = w else {
            return Ok(TouristWeight::Infeasible);
        };
        let length = *length + self.lengths[arc.id];
        if length > self.budget {
            return Ok(TouristWeight::Infeasible);
        }
        let mut values = values.clone();
        let k = self.category_of[arc.head];
        values[k] = values[k].max(self.rho[arc.head]);
        Ok(TouristWeight::Feasible { length, values })
    }

    fn initial(&self) -> TouristWeight {
        let mut values = vec![Q::ZERO; self.categories.len()];
        values[self.category_of[self.source]] = self.rho[self.source];
        TouristWeight::Feasible {
            length: Q::ZERO,
            values,
        }
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.lengths.len())
    }

    fn leo_cmp(&self, a: &TouristWeight, b: &TouristWeight) -> Option<Ordering> {
        use TouristWeight::*;
        Some(match (a, b) {
            (Infeasible, Infeasible) => Ordering::Equal,
            (Infeasible, _) => Ordering::Greater,
            (_, Infeasible) => Ordering::Less,
            (Feasible { length: la, values: va }, Feasible { length: lb, values: vb }) => {
                la.cmp(lb).then_with(|| vb.cmp(va))
            }
        })
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn is_feasible(&self, w: &TouristWeight) -> bool {
        matches!(w, TouristWeight::Feasible { .. })
    }

    fn check_domain(&self, w: &TouristWeight) -> Result<(), CoreError> {
        match w {
            TouristWeight::Feasible { values, .. } if values.len() != self.categories.len() => {
                Err(CoreError::DimensionMismatch {
                    expected: self.categories.len(),
                    found: values.len(),
                })
            }
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: i64, v: i64) -> TouristWeight {
        TouristWeight::Feasible {
            length: Q::int(l),
            values: vec![Q::int(v)],
        }
    }

    fn space() -> TouristSpace {
        TouristSpace::new(
            Q::int(7),
            vec![Q::int(7), Q::int(9), Q::int(3)],
            vec![Q::int(2), Q::int(2)],
            vec![vec![0, 1, 2]],
            0,
        )
        .unwrap()
    }

    #[test]
    fn max_update() {
        let s = space();
        assert_eq!(
            s.extend(
                &w(4, 7),
                ArcRef {
                    id: 0,
                    tail: 0,
                    head: 1
                }
            )
            .unwrap(),
            w(6, 9)
        );
        assert_eq!(
            s.extend(
                &w(4, 7),
                ArcRef {
                    id: 1,
                    tail: 1,
                    head: 2
                }
            )
            .unwrap(),
            w(6, 7)
        );
        assert_eq!(
            s.extend(
                &w(6, 7),
                ArcRef {
                    id: 1,
                    tail: 1,
                    head: 2
                }
            )
            .unwrap(),
            TouristWeight::Infeasible
        );
    }

    #[test]
    fn order_and_initial() {
        let s = space();
        assert_eq!(s.compare(&w(4, 7), &w(6, 7)), ComparisonResult::Less);
        assert_eq!(s.compare(&w(4, 7), &w(6, 9)), ComparisonResult::Incomparable);
        assert_eq!(s.compare(&w(9, 0), &TouristWeight::Infeasible), ComparisonResult::Less);
        assert_eq!(s.initial(), w(0, 7));
    }

    #[test]
    fn categories_must_partition() {
        let r = TouristSpace::new(Q::ONE, vec![Q::ONE; 3], vec![], vec![vec![0, 1]], 0);
        assert!(r.is_err());
        let r = TouristSpace::new(Q::ONE, vec![Q::ONE; 2], vec![], vec![vec![0, 1], vec![1]], 0);
        assert!(r.is_err());
    }
}
