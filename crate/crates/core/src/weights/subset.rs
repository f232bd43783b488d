//! The subset lattice on `{1, ..., n}` with union as the update and
//! inclusion as the order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::space::{ComparisonResult, WeightSpace};

pub const MAX_GROUND: usize = 64;

/// Bitset; element `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetWeight(pub u64);

impl SubsetWeight {
    pub fn from_elements(elems: &[usize]) -> SubsetWeight {
        SubsetWeight(elems.iter().fold(0u64, |acc, &e| acc | (1 << (e - 1))))
    }

    pub fn elements(self) -> Vec<usize> {
        (0..64).filter(|i| self.0 & (1 << i) != 0).map(|i| i + 1).collect()
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: SubsetWeight) -> SubsetWeight {
        SubsetWeight(self.0 | other.0)
    }

    pub fn is_subset(self, other: SubsetWeight) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Debug for SubsetWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

/// Shortlex: smaller sets first; equal sizes are ordered by which set holds
/// the smallest element of the symmetric difference.
pub fn shortlex(a: SubsetWeight, b: SubsetWeight) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let diff = a.0 ^ b.0;
        if diff == 0 {
            Ordering::Equal
        } else if a.0 & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

pub fn compare_subsets(a: SubsetWeight, b: SubsetWeight) -> ComparisonResult {
    ComparisonResult::from_relation(a == b, a.is_subset(b), b.is_subset(a))
}

#[derive(Debug, Clone)]
pub struct SubsetSpace {
    n: usize,
    sets: Vec<SubsetWeight>,
}

impl SubsetSpace {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<SubsetSpace, CoreError> {
        if n > MAX_GROUND {
            return Err(CoreError::InvalidParameter(format!(
                "ground set larger than {MAX_GROUND}"
            )));
        }
        let mut out = Vec::with_capacity(sets.len());
        for s in sets {
            if let Some(&e) = s.iter().find(|&&e| e == 0 || e > n) {
                return Err(CoreError::InvalidParameter(format!("element {e} outside of 1..={n}")));
            }
            out.push(SubsetWeight::from_elements(&s));
        }
        Ok(SubsetSpace { n, sets: out })
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[SubsetWeight] {
        &self.sets
    }
}

impl WeightSpace for SubsetSpace {
    type Weight = SubsetWeight;

    fn compare(&self, a: &SubsetWeight, b: &SubsetWeight) -> ComparisonResult {
        compare_subsets(*a, *b)
    }

    fn extend(&self, w: &SubsetWeight, arc: ArcRef) -> Result<SubsetWeight, CoreError> {
        Ok(w.union(self.sets[arc.id]))
    }

    fn initial(&self) -> SubsetWeight {
        SubsetWeight(0)
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.sets.len())
    }

    fn leo_cmp(&self, a: &SubsetWeight, b: &SubsetWeight) -> Option<Ordering> {
        Some(shortlex(*a, *b))
    }

    fn has_leo(&self) -> bool {
        true
    }

    fn check_domain(&self, w: &SubsetWeight) -> Result<(), CoreError> {
        if self.n < 64 && w.0 >> self.n != 0 {
            return Err(CoreError::DomainMismatch(format!("{w:?}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{leo_pick, LeoChoice};

    fn set(e: &[usize]) -> SubsetWeight {
        SubsetWeight::from_elements(e)
    }

    #[test]
    fn catch_up_under_union() {
        let s = SubsetSpace::new(3, vec![vec![3]]).unwrap();
        let arc = ArcRef {
            id: 0,
            tail: 0,
            head: 0,
        };
        assert_eq!(s.extend(&set(&[1, 2]), arc).unwrap(), set(&[1, 2, 3]));
        assert_eq!(s.extend(&set(&[1, 2, 3]), arc).unwrap(), set(&[1, 2, 3]));
        assert_eq!(s.compare(&set(&[1, 2]), &set(&[1, 2, 3])), ComparisonResult::Less);
    }

    #[test]
    fn shortlex_picks() {
        let s = SubsetSpace::new(3, vec![]).unwrap();
        assert_eq!(leo_pick(&s, &set(&[1, 3]), &set(&[2, 3])).unwrap(), LeoChoice::First);
        assert_eq!(leo_pick(&s, &set(&[]), &set(&[1])).unwrap(), LeoChoice::First);
        assert_eq!(leo_pick(&s, &set(&[2]), &set(&[1, 3])).unwrap(), LeoChoice::First);
        assert_eq!(leo_pick(&s, &set(&[2, 3]), &set(&[1, 3])).unwrap(), LeoChoice::Second);
    }

    #[test]
    fn out_of_ground_set() {
        assert!(SubsetSpace::new(3, vec![vec![4]]).is_err());
        assert!(SubsetSpace::new(3, vec![vec![0]]).is_err());
        let s = SubsetSpace::new(3, vec![]).unwrap();
        assert!(s.check_domain(&set(&[4])).is_err());
    }
}
