//! Interval weights given by center and width, ordered by a pair of
//! parameters `-1 <= alpha <= beta <= 1`.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::rational::Q;
use crate::space::{ComparisonResult, WeightSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalWeight {
    pub c: Q,
    pub w: Q,
}

impl IntervalWeight {
    pub fn new(c: Q, w: Q) -> IntervalWeight {
        IntervalWeight { c, w }
    }

    pub fn ints(c: i64, w: i64) -> IntervalWeight {
        IntervalWeight::new(Q::int(c), Q::int(w))
    }

    /// Lies in the nonnegative reals: `0 <= w <= c`.
    pub fn is_valid(&self) -> bool {
        !self.w.is_negative() && self.w <= self.c
    }
}

impl std::ops::Add for IntervalWeight {
    type Output = IntervalWeight;
    fn add(self, o: IntervalWeight) -> IntervalWeight {
        IntervalWeight::new(self.c + o.c, self.w + o.w)
    }
}

/// `a ⪯_{g,h} b`
fn related(g: Q, h: Q, a: &IntervalWeight, b: &IntervalWeight) -> bool {
    let dw = a.w - b.w;
    let dc = b.c - a.c;
    g * dw <= dc && h * dw <= dc
}

#[derive(Debug, Clone)]
pub struct IntervalSpace {
    alpha: Q,
    beta: Q,
    arcs: Vec<IntervalWeight>,
}

impl IntervalSpace {
    pub fn new(alpha: Q, beta: Q, arcs: Vec<IntervalWeight>) -> Result<IntervalSpace, CoreError> {
        if !(-Q::ONE <= alpha && alpha <= beta && beta <= Q::ONE) {
            return Err(CoreError::InvalidParameter(format!(
                "interval order needs -1 <= alpha <= beta <= 1, got alpha={alpha}, beta={beta}"
            )));
        }
        if let Some((i, a)) = arcs.iter().enumerate().find(|(_, a)| !a.is_valid()) {
            return Err(CoreError::InvalidParameter(format!(
                "arc {i}: interval (c={}, w={}) is not within the nonnegative reals",
                a.c, a.w
            )));
        }
        Ok(IntervalSpace { alpha, beta, arcs })
    }

    pub fn alpha(&self) -> Q {
        self.alpha
    }

    pub fn beta(&self) -> Q {
        self.beta
    }

    pub fn arcs(&self) -> &[IntervalWeight] {
        &self.arcs
    }

    pub fn compare_with(alpha: Q, beta: Q, a: &IntervalWeight, b: &IntervalWeight) -> ComparisonResult {
        ComparisonResult::from_relation(a == b, related(alpha, beta, a, b), related(alpha, beta, b, a))
    }
}

impl WeightSpace for IntervalSpace {
    type Weight = IntervalWeight;

    fn compare(&self, a: &IntervalWeight, b: &IntervalWeight) -> ComparisonResult {
        IntervalSpace::compare_with(self.alpha, self.beta, a, b)
    }

    fn extend(&self, w: &IntervalWeight, arc: ArcRef) -> Result<IntervalWeight, CoreError> {
        Ok(*w + self.arcs[arc.id])
    }

    fn initial(&self) -> IntervalWeight {
        IntervalWeight::new(Q::ZERO, Q::ZERO)
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.arcs.len())
    }

    /// `⪯_{alpha,alpha}` is the preorder by `c + alpha*w`; ties go to the
    /// narrower interval, which keeps strict `⪯_{alpha,beta}` pairs in order.
    fn leo_cmp(&self, a: &IntervalWeight, b: &IntervalWeight) -> Option<Ordering> {
        let ka = a.c + self.alpha * a.w;
        let kb = b.c + self.alpha * b.w;
        Some(ka.cmp(&kb).then(a.w.cmp(&b.w)).then(a.c.cmp(&b.c)))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn check_domain(&self, w: &IntervalWeight) -> Result<(), CoreError> {
        if w.is_valid() {
            Ok(())
        } else {
            Err(CoreError::DomainMismatch(format!("interval (c={}, w={})", w.c, w.w)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_evaluated_comparisons() {
        let a = IntervalWeight::ints(5, 1);
        let b = IntervalWeight::ints(6, 3);
        assert_eq!(
            IntervalSpace::compare_with(-Q::ONE, Q::ONE, &a, &b),
            ComparisonResult::Incomparable
        );
        assert_eq!(
            IntervalSpace::compare_with(Q::ZERO, Q::ZERO, &a, &b),
            ComparisonResult::Less
        );
    }

    #[test]
    fn parameter_range() {
        assert!(IntervalSpace::new(Q::new(1, 2), Q::new(1, 5), vec![]).is_err());
        assert!(IntervalSpace::new(Q::int(-2), Q::ZERO, vec![]).is_err());
        assert!(IntervalSpace::new(Q::ZERO, Q::ZERO, vec![IntervalWeight::ints(1, 2)]).is_err());
    }

    #[test]
    fn adding_an_interval_never_improves() {
        let s = IntervalSpace::new(-Q::ONE, Q::ONE, vec![IntervalWeight::ints(2, 1)]).unwrap();
        let arc = ArcRef {
            id: 0,
            tail: 0,
            head: 1,
        };
        for (c, w) in [(0, 0), (3, 1), (7, 7), (10, 2)] {
            let v = IntervalWeight::ints(c, w);
            assert!(s.compare(&v, &s.extend(&v, arc).unwrap()).is_le());
        }
    }
}
