//! Worst case for the label-correcting solver: on the complete digraph with
//! loops, every path with fewer than `M` arcs carries its own vertex
//! sequence as weight (pairwise incomparable) and longer paths collapse to
//! a bottom element `0`.

use crate::error::CoreError;
use crate::graph::{ArcRef, Graph, VertexId};
use crate::space::{ComparisonResult, WeightSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnWeight {
    Zero,
    Tuple(Vec<VertexId>),
}

#[derive(Debug, Clone)]
pub struct KnSpace {
    n: usize,
    m: usize,
    source: VertexId,
}

impl KnSpace {
    pub fn new(n: usize, m: usize, source: VertexId) -> Result<KnSpace, CoreError> {
        if n == 0 || m < 1 || source >= n {
            return Err(CoreError::InvalidParameter(format!(
                "bad worst-case parameters n={n}, M={m}"
            )));
        }
        Ok(KnSpace { n, m, source })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// Complete digraph with a loop at every vertex.
    pub fn graph(n: usize) -> Graph {
        let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
        Graph::new(n, arcs).expect("complete graph is valid")
    }
}

impl WeightSpace for KnSpace {
    type Weight = KnWeight;

    fn compare(&self, a: &KnWeight, b: &KnWeight) -> ComparisonResult {
        match (a, b) {
            (KnWeight::Zero, KnWeight::Zero) => ComparisonResult::Equal,
            (KnWeight::Zero, _) => ComparisonResult::Less,
            (_, KnWeight::Zero) => ComparisonResult::Greater,
            (x, y) if x == y => ComparisonResult::Equal,
            _ => ComparisonResult::Incomparable,
        }
    }

    fn extend(&self, w: &KnWeight, arc: ArcRef) -> Result<KnWeight, CoreError> {
        Ok(match w {
            KnWeight::Zero => KnWeight::Zero,
            // a tuple of k vertices is a path of k - 1 arcs
            KnWeight::Tuple(t) if t.len() >= self.m => KnWeight::Zero,
            KnWeight::Tuple(t) => {
                let mut t = t.clone();
                t.push(arc.head);
                KnWeight::Tuple(t)
            }
        })
    }

    fn initial(&self) -> KnWeight {
        KnWeight::Tuple(vec![self.source])
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.n * self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_at_length_m() {
        let s = KnSpace::new(3, 3, 0).unwrap();
        let g = KnSpace::graph(3);
        let mut w = s.initial();
        for (i, v) in [1, 2, 0].into_iter().enumerate() {
            let cur = *match &w {
                KnWeight::Tuple(t) => t.last().unwrap(),
                KnWeight::Zero => unreachable!(),
            };
            w = s.extend(&w, g.find_arc(cur, v).unwrap()).unwrap();
            if i < 2 {
                assert!(matches!(w, KnWeight::Tuple(_)));
            }
        }
        assert_eq!(w, KnWeight::Zero);
        assert_eq!(g.arc_count(), 9);
    }
}
