//! Capacity vectors combined by pairwise `min`. Larger capacities are
//! better, so `a ⪯ b` iff `a ≥ b` componentwise.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::rational::Q;
use crate::space::{componentwise, ComparisonResult, WeightSpace};

/// A capacity; `Unbounded` is the neutral element of `min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cap {
    Finite(Q),
    Unbounded,
}

impl Cap {
    pub fn meet(self, other: Cap) -> Cap {
        self.min(other)
    }
}

impl Ord for Cap {
    fn cmp(&self, other: &Cap) -> Ordering {
        match (self, other) {
            (Cap::Finite(a), Cap::Finite(b)) => a.cmp(b),
            (Cap::Finite(_), Cap::Unbounded) => Ordering::Less,
            (Cap::Unbounded, Cap::Finite(_)) => Ordering::Greater,
            (Cap::Unbounded, Cap::Unbounded) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Cap {
    fn partial_cmp(&self, other: &Cap) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `a ⪯ b` for capacity blocks: `a` is at least `b` everywhere.
pub fn compare_caps(a: &[Cap], b: &[Cap]) -> ComparisonResult {
    componentwise(a, b).reverse()
}

/// Leo for capacity blocks: lexicographically descending.
pub fn leo_caps(a: &[Cap], b: &[Cap]) -> Ordering {
    b.cmp(a)
}

pub fn meet_caps(w: &[Cap], caps: &[Q]) -> Vec<Cap> {
    w.iter().zip(caps).map(|(&x, &c)| x.meet(Cap::Finite(c))).collect()
}

#[derive(Debug, Clone)]
pub struct MinSemilatticeSpace {
    dim: usize,
    caps: Vec<Vec<Q>>,
}

impl MinSemilatticeSpace {
    pub fn new(dim: usize, caps: Vec<Vec<Q>>) -> Result<MinSemilatticeSpace, CoreError> {
        for c in &caps {
            if c.len() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
            if c.iter().any(Q::is_negative) {
                return Err(CoreError::InvalidParameter("negative capacity".into()));
            }
        }
        Ok(MinSemilatticeSpace { dim, caps })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn caps(&self) -> &[Vec<Q>] {
        &self.caps
    }
}

impl WeightSpace for MinSemilatticeSpace {
    type Weight = Vec<Cap>;

    fn compare(&self, a: &Vec<Cap>, b: &Vec<Cap>) -> ComparisonResult {
        compare_caps(a, b)
    }

    fn extend(&self, w: &Vec<Cap>, arc: ArcRef) -> Result<Vec<Cap>, CoreError> {
        Ok(meet_caps(w, &self.caps[arc.id]))
    }

    fn initial(&self) -> Vec<Cap> {
        vec![Cap::Unbounded; self.dim]
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.caps.len())
    }

    fn leo_cmp(&self, a: &Vec<Cap>, b: &Vec<Cap>) -> Option<Ordering> {
        Some(leo_caps(a, b))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn check_domain(&self, w: &Vec<Cap>) -> Result<(), CoreError> {
        if w.len() != self.dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim,
                found: w.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<Cap> {
        let mut v: Vec<Cap> = [0, 1, 2, 3].iter().map(|&x| Cap::Finite(Q::new(x, 2))).collect();
        v.push(Cap::Unbounded);
        v
    }

    #[test]
    fn meet_is_a_semilattice_operation() {
        let g = grid();
        for &a in &g {
            assert_eq!(a.meet(a), a);
            for &b in &g {
                assert_eq!(a.meet(b), b.meet(a));
                for &c in &g {
                    assert_eq!(a.meet(b).meet(c), a.meet(b.meet(c)));
                }
            }
        }
    }

    #[test]
    fn larger_capacity_is_better() {
        let a = vec![Cap::Finite(Q::int(5))];
        let b = vec![Cap::Finite(Q::int(4))];
        assert_eq!(compare_caps(&a, &b), ComparisonResult::Less);
        assert_eq!(compare_caps(&[Cap::Unbounded], &a), ComparisonResult::Less);
        assert_eq!(leo_caps(&a, &b), Ordering::Less);
    }
}
