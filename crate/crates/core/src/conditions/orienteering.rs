//! A prize-collecting walk whose weight depends on which vertices were
//! already visited, so it has no arc update function. Only the oracle and
//! the checkers accept it.

use crate::error::CoreError;
use crate::graph::{ArcRef, Graph, VertexId};
use crate::instance::Weighted;
use crate::space::ComparisonResult;

/// Travelled length and collected prize; shorter and richer is better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tour {
    pub length: u64,
    pub prize: u64,
}

#[derive(Debug, Clone)]
pub struct Orienteering {
    graph: Graph,
    source: VertexId,
    lengths: Vec<u64>,
    prizes: Vec<u64>,
}

impl Orienteering {
    pub fn new(graph: Graph, source: VertexId, lengths: Vec<u64>, prizes: Vec<u64>) -> Result<Orienteering, CoreError> {
        if lengths.len() != graph.arc_count() {
            return Err(CoreError::ArcCountMismatch {
                space: lengths.len(),
                graph: graph.arc_count(),
            });
        }
        if prizes.len() != graph.vertex_count() {
            return Err(CoreError::DimensionMismatch {
                expected: graph.vertex_count(),
                found: prizes.len(),
            });
        }
        if source >= graph.vertex_count() {
            return Err(CoreError::SourceOutOfRange {
                source_vertex: source,
                vertex_count: graph.vertex_count(),
            });
        }
        Ok(Orienteering {
            graph,
            source,
            lengths,
            prizes,
        })
    }

    /// `s=0` reaches `c=3` through `a=1` or `b=2`, both worth 5; the arc
    /// `(c, a)` pays again only for the walk that skipped `a`.
    pub fn demo() -> Orienteering {
        let graph = Graph::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 1)]).expect("valid graph");
        Orienteering::new(graph, 0, vec![1; 5], vec![0, 5, 5, 0]).expect("valid data")
    }
}

impl Weighted for Orienteering {
    type Weight = Tour;

    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn source(&self) -> VertexId {
        self.source
    }

    fn root_weight(&self) -> Tour {
        Tour {
            length: 0,
            prize: self.prizes[self.source],
        }
    }

    fn step(&self, path: &[VertexId], w: &Tour, arc: ArcRef) -> Result<Tour, CoreError> {
        let fresh = !path.contains(&arc.head);
        Ok(Tour {
            length: w.length + self.lengths[arc.id],
            prize: w.prize + if fresh { self.prizes[arc.head] } else { 0 },
        })
    }

    fn compare(&self, a: &Tour, b: &Tour) -> ComparisonResult {
        ComparisonResult::from_relation(
            a == b,
            a.length <= b.length && a.prize >= b.prize,
            a.length >= b.length && a.prize <= b.prize,
        )
    }
}
