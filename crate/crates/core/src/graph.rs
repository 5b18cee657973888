//! Simple undirected graphs keyed by stable integer vertex ids.
//!
//! Induced subgraphs keep the ids of their host, so a set computed inside a
//! subgraph can be used verbatim in the parent graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{input_err, Result};

pub type Vertex = u32;
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::with_vertices(0..n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vs: I) -> Self {
        let mut g = Graph::new();
        for v in vs {
            g.add_vertex(v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds `uv`, creating missing endpoints. Self-loops are rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(input_err!("self-loop at vertex {u}"));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if let Some(n) = self.adj.get_mut(&u) {
            n.remove(&v);
        }
        if let Some(n) = self.adj.get_mut(&v) {
            n.remove(&u);
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Open neighborhood of a single vertex; empty for unknown ids.
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        static EMPTY: VertexSet = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn check_subset(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|v| !self.has_vertex(**v)) {
            Some(v) => Err(input_err!("unknown vertex id {v}")),
            None => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(input_err!("unknown vertex id {v}"))
        }
    }

    /// `G[x]`, keeping the original ids. Unknown ids are ignored.
    pub fn induced(&self, x: &VertexSet) -> Graph {
        let adj = x
            .iter()
            .filter_map(|v| {
                self.adj
                    .get(v)
                    .map(|ns| (*v, ns.intersection(x).copied().collect()))
            })
            .collect();
        Graph { adj }
    }

    /// `G \ x`.
    pub fn without(&self, x: &VertexSet) -> Graph {
        let keep: VertexSet = self.vertices().filter(|v| !x.contains(v)).collect();
        self.induced(&keep)
    }

    /// `N(x)` (open) or `N[x]` (closed).
    pub fn neighborhood(&self, x: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_subset(x)?;
        Ok(self.neighborhood_unchecked(x, closed))
    }

    pub(crate) fn neighborhood_unchecked(&self, x: &VertexSet, closed: bool) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            for u in self.neighbors(*v) {
                if !x.contains(u) {
                    out.insert(*u);
                }
            }
        }
        if closed {
            out.extend(x.iter().copied());
        }
        out
    }

    /// Closed neighborhood of a single vertex.
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = self.neighbors(v).clone();
        s.insert(v);
        s
    }

    /// Components of `G \ removed`, ordered by their minimum vertex id.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_subset(removed)?;
        Ok(self.components_unchecked(removed))
    }

    pub(crate) fn components_unchecked(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen: VertexSet = removed.clone();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            out.push(self.flood(v, &mut seen));
        }
        out
    }

    fn flood(&self, start: Vertex, seen: &mut VertexSet) -> VertexSet {
        let mut comp = VertexSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            comp.insert(u);
            for &x in self.neighbors(u) {
                if seen.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        comp
    }

    /// The component of `G \ removed` containing `v`, if `v` is not removed.
    pub fn component_of(&self, v: Vertex, removed: &VertexSet) -> Option<VertexSet> {
        if removed.contains(&v) || !self.has_vertex(v) {
            return None;
        }
        let mut seen = removed.clone();
        Some(self.flood(v, &mut seen))
    }

    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        match x.first() {
            None => true,
            Some(&v) => self.induced(x).component_of(v, &VertexSet::new()).map(|c| c.len()) == Some(x.len()),
        }
    }

    /// Length of a shortest path with one end in `x` and the other in `y`;
    /// `None` stands for infinity.
    pub fn distance_between_sets(&self, x: &VertexSet, y: &VertexSet) -> Result<Option<usize>> {
        if x.is_empty() || y.is_empty() {
            return Err(input_err!("distance needs two nonempty sets"));
        }
        self.check_subset(x)?;
        self.check_subset(y)?;
        Ok(self.bfs_distance(x, y))
    }

    pub(crate) fn bfs_distance(&self, x: &VertexSet, y: &VertexSet) -> Option<usize> {
        let mut dist: BTreeMap<Vertex, usize> = x.iter().map(|&v| (v, 0)).collect();
        let mut queue: VecDeque<Vertex> = x.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            if y.contains(&u) {
                return Some(du);
            }
            for &w in self.neighbors(u) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(du + 1);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Vertices at distance 1..=radius from `x` (so `x` itself is excluded).
    pub fn ball_shell(&self, x: &VertexSet, radius: usize) -> VertexSet {
        let mut dist: BTreeMap<Vertex, usize> = x.iter().map(|&v| (v, 0)).collect();
        let mut queue: VecDeque<Vertex> = x.iter().copied().collect();
        let mut out = VertexSet::new();
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            if du == radius {
                continue;
            }
            for &w in self.neighbors(u) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(du + 1);
                    out.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// True iff no component of `G \ cut` meets both `a` and `b`.
    pub fn separates(&self, cut: &VertexSet, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        self.check_subset(cut)?;
        self.check_subset(a)?;
        self.check_subset(b)?;
        if !a.is_disjoint(cut) || !b.is_disjoint(cut) {
            return Err(input_err!("separated sides must avoid the cut"));
        }
        Ok(self.separates_unchecked(cut, a, b))
    }

    pub(crate) fn separates_unchecked(&self, cut: &VertexSet, a: &VertexSet, b: &VertexSet) -> bool {
        let mut seen = cut.clone();
        for &v in a {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.flood(v, &mut seen);
            if !comp.is_disjoint(b) {
                return false;
            }
        }
        true
    }

    /// Components `D` of `G \ x` with `N(D) = x`.
    pub fn full_components(&self, x: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_subset(x)?;
        Ok(self
            .components_unchecked(x)
            .into_iter()
            .filter(|d| self.neighborhood_unchecked(d, false) == *x)
            .collect())
    }

    /// At least two full components. The empty set qualifies exactly when
    /// the graph is disconnected.
    pub fn is_minimal_separator(&self, x: &VertexSet) -> Result<bool> {
        Ok(self.full_components(x)?.len() >= 2)
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter()
            .all(|&u| x.range(u + 1..).all(|&v| self.adjacent(u, v)))
    }

    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter()
            .all(|&u| x.range(u + 1..).all(|&v| !self.adjacent(u, v)))
    }

    /// No edges between `a` and `b`.
    pub fn anticomplete(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|&u| self.neighbors(u).is_disjoint(b))
    }

    /// True iff `seq` is an induced path (consecutive vertices adjacent,
    /// no other adjacencies, no repeats).
    pub fn is_induced_path(&self, seq: &[Vertex]) -> bool {
        let distinct: VertexSet = seq.iter().copied().collect();
        if distinct.len() != seq.len() || seq.iter().any(|v| !self.has_vertex(*v)) {
            return false;
        }
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if self.adjacent(seq[i], seq[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `seq` is an induced cycle of length at least four.
    pub fn is_hole(&self, seq: &[Vertex]) -> bool {
        let k = seq.len();
        if k < 4 {
            return false;
        }
        let distinct: VertexSet = seq.iter().copied().collect();
        if distinct.len() != k || seq.iter().any(|v| !self.has_vertex(*v)) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.adjacent(seq[i], seq[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Does `x` induce a cycle of length at least four?
    pub fn induces_hole(&self, x: &VertexSet) -> bool {
        x.len() >= 4
            && x.iter().all(|&v| self.neighbors(v).intersection(x).count() == 2)
            && self.is_connected_set(x)
    }
}

/// Convenience constructor for vertex sets.
pub fn vset<I: IntoIterator<Item = Vertex>>(it: I) -> VertexSet {
    it.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn k23() -> Graph {
        // sides {0,1} and {2,3,4}
        let mut e = vec![];
        for a in 0..2 {
            for x in 2..5 {
                e.push((a, x));
            }
        }
        Graph::from_edges(5, &e).unwrap()
    }

    #[test]
    fn neighborhood_examples() {
        let p = path3();
        assert_eq!(p.neighborhood(&vset([1]), false).unwrap(), vset([0, 2]));
        assert_eq!(p.neighborhood(&vset([0, 1, 2]), false).unwrap(), vset([]));
        assert_eq!(k23().neighborhood(&vset([0]), true).unwrap(), vset([0, 2, 3, 4]));
        assert!(p.neighborhood(&vset([7]), false).is_err());
        assert!(p.neighborhood(&vset([]), true).unwrap().is_empty());
    }

    #[test]
    fn components_examples() {
        let c6 = cycle(6);
        assert_eq!(
            c6.components(&vset([0, 3])).unwrap(),
            vec![vset([1, 2]), vset([4, 5])]
        );
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.components(&vset([])).unwrap(), vec![vset([0, 1, 2, 3])]);
        assert_eq!(c6.components(&vset([0])).unwrap(), vec![vset([1, 2, 3, 4, 5])]);
    }

    #[test]
    fn distance_examples() {
        let c6 = cycle(6);
        assert_eq!(c6.distance_between_sets(&vset([0]), &vset([3])).unwrap(), Some(3));
        assert_eq!(c6.distance_between_sets(&vset([2, 4]), &vset([2, 4])).unwrap(), Some(0));
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(two.distance_between_sets(&vset([0, 1, 2]), &vset([3, 4, 5])).unwrap(), None);
        assert!(c6.distance_between_sets(&vset([]), &vset([1])).is_err());
    }

    #[test]
    fn separation_examples() {
        let c6 = cycle(6);
        assert!(c6.separates(&vset([0, 3]), &vset([1]), &vset([4])).unwrap());
        assert!(!c6.separates(&vset([0]), &vset([1]), &vset([4])).unwrap());
        assert!(c6.separates(&vset([0, 2, 3, 5]), &vset([1]), &vset([4])).unwrap());
        assert!(c6.separates(&vset([0]), &vset([0]), &vset([4])).is_err());
    }

    #[test]
    fn minimal_separator_examples() {
        let c6 = cycle(6);
        assert!(c6.is_minimal_separator(&vset([0, 3])).unwrap());
        assert!(!c6.is_minimal_separator(&vset([0, 1])).unwrap());
        let disc = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(disc.is_minimal_separator(&vset([])).unwrap());
        assert!(!c6.is_minimal_separator(&vset([])).unwrap());
    }

    #[test]
    fn self_loops_rejected() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn induced_keeps_ids() {
        let c6 = cycle(6);
        let sub = c6.induced(&vset([2, 3, 4]));
        assert_eq!(sub.vertex_set(), vset([2, 3, 4]));
        assert!(sub.adjacent(2, 3) && sub.adjacent(3, 4) && !sub.adjacent(2, 4));
        assert!(c6.is_hole(&[0, 1, 2, 3, 4, 5]));
        assert!(c6.induces_hole(&c6.vertex_set()));
        assert!(c6.is_induced_path(&[1, 2, 3]));
        assert!(!c6.is_induced_path(&[0, 1, 2, 3, 4, 5]));
    }
}
