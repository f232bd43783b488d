//! Labels are immutable path records linked to their predecessor. A solve
//! owns a [`LabelStore`]; labels removed from a frontier stay in the store so
//! predecessor chains of surviving labels remain valid.

use crate::graph::{ArcId, VertexId};

pub type LabelId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Label<W> {
    pub vertex: VertexId,
    pub pred: Option<LabelId>,
    /// Arc from the predecessor's vertex to `vertex`.
    pub arc: Option<ArcId>,
    pub weight: W,
    /// Number of arcs.
    pub length: usize,
}

#[derive(Debug, Clone)]
pub struct LabelStore<W> {
    labels: Vec<Label<W>>,
}

impl<W> Default for LabelStore<W> {
    fn default() -> Self {
        LabelStore { labels: Vec::new() }
    }
}

impl<W> LabelStore<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn root(&mut self, vertex: VertexId, weight: W) -> LabelId {
        self.labels.push(Label {
            vertex,
            pred: None,
            arc: None,
            weight,
            length: 0,
        });
        self.labels.len() - 1
    }

    pub fn extend(&mut self, pred: LabelId, arc: ArcId, head: VertexId, weight: W) -> LabelId {
        let length = self.labels[pred].length + 1;
        self.labels.push(Label {
            vertex: head,
            pred: Some(pred),
            arc: Some(arc),
            weight,
            length,
        });
        self.labels.len() - 1
    }

    pub fn get(&self, id: LabelId) -> &Label<W> {
        &self.labels[id]
    }

    pub fn weight(&self, id: LabelId) -> &W {
        &self.labels[id].weight
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex sequence of the path a label represents, from the source.
    pub fn reconstruct_path(&self, id: LabelId) -> Vec<VertexId> {
        let mut path = Vec::with_capacity(self.labels[id].length + 1);
        let mut cur = Some(id);
        while let Some(l) = cur {
            path.push(self.labels[l].vertex);
            cur = self.labels[l].pred;
        }
        path.reverse();
        path
    }
}
