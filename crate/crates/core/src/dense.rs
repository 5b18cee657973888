//! Bitset view of a graph used by the exhaustive searches.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, Vertex, VertexSet};

/// Vertices are re-indexed `0..n` in increasing id order, so iterating a
/// bitset visits vertices by increasing id.
#[derive(Debug, Clone)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub rows: Vec<FixedBitSet>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        Self::of_subset(g, &g.vertex_set())
    }

    pub fn of_subset(g: &Graph, x: &VertexSet) -> Self {
        let ids: Vec<Vertex> = x.iter().copied().filter(|v| g.has_vertex(*v)).collect();
        let n = ids.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (i, &v) in ids.iter().enumerate() {
            for u in g.neighbors(v) {
                if let Ok(j) = ids.binary_search(u) {
                    rows[i].insert(j);
                }
            }
        }
        Dense { ids, rows }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn empty(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n())
    }

    pub fn full(&self) -> FixedBitSet {
        let mut s = self.empty();
        s.insert_range(..);
        s
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Closed neighborhood of `i` as a bitset.
    pub fn closed(&self, i: usize) -> FixedBitSet {
        let mut s = self.rows[i].clone();
        s.insert(i);
        s
    }

    /// Union of closed neighborhoods of the members of `x`.
    pub fn closed_of(&self, x: &FixedBitSet) -> FixedBitSet {
        let mut s = x.clone();
        for i in x.ones() {
            s.union_with(&self.rows[i]);
        }
        s
    }
}
