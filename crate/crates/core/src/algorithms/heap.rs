//! Binary heap holding at most one entry per vertex, ordered by a caller
//! supplied comparator. Supports replacing the entry of a vertex.

use std::cmp::Ordering;

use crate::graph::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry<T> {
    pub vertex: VertexId,
    pub item: T,
    /// Insertion counter, the last tie-breaker.
    pub seq: u64,
}

#[derive(Debug, Clone)]
pub struct VertexHeap<T> {
    heap: Vec<Entry<T>>,
    pos: Vec<Option<usize>>,
    seq: u64,
}

impl<T: Copy> VertexHeap<T> {
    pub fn new(vertex_count: usize) -> Self {
        VertexHeap {
            heap: Vec::new(),
            pos: vec![None; vertex_count],
            seq: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<T> {
        self.pos[v].map(|i| self.heap[i].item)
    }

    /// Inserts or replaces the entry for `v`.
    pub fn set<F>(&mut self, v: VertexId, item: T, less: &mut F)
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        self.seq += 1;
        let e = Entry {
            vertex: v,
            item,
            seq: self.seq,
        };
        match self.pos[v] {
            Some(i) => {
                self.heap[i] = e;
                self.sift_up(i, less);
                let i = self.pos[v].expect("present");
                self.sift_down(i, less);
            }
            None => {
                self.heap.push(e);
                let i = self.heap.len() - 1;
                self.pos[v] = Some(i);
                self.sift_up(i, less);
            }
        }
    }

    pub fn pop<F>(&mut self, less: &mut F) -> Option<Entry<T>>
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        if self.heap.is_empty() {
            return None;
        }
        let last = self.heap.len() - 1;
        self.swap(0, last);
        let top = self.heap.pop().expect("nonempty");
        self.pos[top.vertex] = None;
        if !self.heap.is_empty() {
            self.sift_down(0, less);
        }
        Some(top)
    }

    fn before<F>(&self, a: usize, b: usize, cmp: &mut F) -> bool
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        let (x, y) = (&self.heap[a], &self.heap[b]);
        cmp(&x.item, &y.item)
            .then(x.vertex.cmp(&y.vertex))
            .then(x.seq.cmp(&y.seq))
            == Ordering::Less
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.pos[self.heap[a].vertex] = Some(a);
        self.pos[self.heap[b].vertex] = Some(b);
    }

    fn sift_up<F>(&mut self, mut i: usize, cmp: &mut F)
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.before(i, parent, cmp) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down<F>(&mut self, mut i: usize, cmp: &mut F)
    where
        F: FnMut(&T, &T) -> Ordering,
    {
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < self.heap.len() && self.before(l, best, cmp) {
                best = l;
            }
            if r < self.heap.len() && self.before(r, best, cmp) {
                best = r;
            }
            if best == i {
                break;
            }
            self.swap(i, best);
            i = best;
        }
    }
}
