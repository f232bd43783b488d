//! Static digraph with loops allowed and parallel arcs rejected.

use std::collections::HashSet;

use crate::error::CoreError;

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

/// An arc together with its position in the instance's arc list. Weight
/// spaces look up their per-arc data by `id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcRef {
    pub id: ArcId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl ArcRef {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    arcs: Vec<Arc>,
    outgoing: Vec<Vec<ArcId>>,
    incoming: Vec<Vec<ArcId>>,
}

impl Graph {
    pub fn new(vertex_count: usize, arcs: Vec<(VertexId, VertexId)>) -> Result<Graph, CoreError> {
        let mut seen = HashSet::with_capacity(arcs.len());
        let mut outgoing = vec![Vec::new(); vertex_count];
        let mut incoming = vec![Vec::new(); vertex_count];
        let mut stored = Vec::with_capacity(arcs.len());
        for (id, (tail, head)) in arcs.into_iter().enumerate() {
            for v in [tail, head] {
                if v >= vertex_count {
                    return Err(CoreError::EndpointOutOfRange {
                        arc: id,
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if !seen.insert((tail, head)) {
                return Err(CoreError::ParallelArc { tail, head });
            }
            outgoing[tail].push(id);
            incoming[head].push(id);
            stored.push(Arc { tail, head });
        }
        Ok(Graph {
            vertex_count,
            arcs: stored,
            outgoing,
            incoming,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> ArcRef {
        let a = self.arcs[id];
        ArcRef {
            id,
            tail: a.tail,
            head: a.head,
        }
    }

    pub fn outgoing(&self, v: VertexId) -> impl Iterator<Item = ArcRef> + '_ {
        self.outgoing[v].iter().map(move |&id| self.arc(id))
    }

    pub fn incoming(&self, v: VertexId) -> impl Iterator<Item = ArcRef> + '_ {
        self.incoming[v].iter().map(move |&id| self.arc(id))
    }

    pub fn find_arc(&self, tail: VertexId, head: VertexId) -> Option<ArcRef> {
        self.outgoing(tail).find(|a| a.head == head)
    }

    /// True if the graph has no directed cycle (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let mut indegree: Vec<usize> = self.incoming.iter().map(Vec::len).collect();
        let mut stack: Vec<VertexId> = (0..self.vertex_count).filter(|&v| indegree[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = stack.pop() {
            visited += 1;
            for a in self.outgoing(v) {
                indegree[a.head] -= 1;
                if indegree[a.head] == 0 {
                    stack.push(a.head);
                }
            }
        }
        visited == self.vertex_count
    }

    /// Checks that `path` is a walk in the graph.
    pub fn is_walk(&self, path: &[VertexId]) -> bool {
        !path.is_empty()
            && path.iter().all(|&v| v < self.vertex_count)
            && path.windows(2).all(|w| self.find_arc(w[0], w[1]).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_parallel_arcs_and_bad_endpoints() {
        assert_eq!(
            Graph::new(2, vec![(0, 1), (0, 1)]),
            Err(CoreError::ParallelArc { tail: 0, head: 1 })
        );
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(CoreError::EndpointOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn loops_are_allowed() {
        let g = Graph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        assert!(g.arc(1).is_loop());
        assert!(!g.is_acyclic());
        assert_eq!(g.incoming(1).count(), 2);
        assert!(g.is_walk(&[0, 1, 1, 1]));
        assert!(!g.is_walk(&[1, 0]));
    }
}
