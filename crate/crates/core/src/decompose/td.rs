use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::stable::stability_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdNode {
    pub id: usize,
    pub bag: VertexSet,
}

/// A tree of bags. Serializes as
/// `{"nodes":[{"id":0,"bag":[..]},..],"edges":[[0,1],..]}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub nodes: Vec<TdNode>,
    pub edges: Vec<(usize, usize)>,
}

/// Every axiom violation found by [`validate_tree_decomposition`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub tree_errors: Vec<String>,
    /// bag members that are not vertices of the graph
    pub foreign_vertices: Vec<Vertex>,
    pub uncovered_vertices: Vec<Vertex>,
    pub uncovered_edges: Vec<(Vertex, Vertex)>,
    /// vertices whose bags do not form a subtree
    pub disconnected_vertices: Vec<Vertex>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.tree_errors.is_empty()
            && self.foreign_vertices.is_empty()
            && self.uncovered_vertices.is_empty()
            && self.uncovered_edges.is_empty()
            && self.disconnected_vertices.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut parts = self.tree_errors.clone();
        if !self.foreign_vertices.is_empty() {
            parts.push(format!("unknown vertices in bags: {:?}", self.foreign_vertices));
        }
        if !self.uncovered_vertices.is_empty() {
            parts.push(format!("vertices in no bag: {:?}", self.uncovered_vertices));
        }
        if !self.uncovered_edges.is_empty() {
            parts.push(format!("edges in no bag: {:?}", self.uncovered_edges));
        }
        if !self.disconnected_vertices.is_empty() {
            parts.push(format!("vertices whose bags are not connected: {:?}", self.disconnected_vertices));
        }
        if parts.is_empty() {
            "valid".to_string()
        } else {
            parts.join("; ")
        }
    }
}

impl TreeDecomposition {
    pub fn single_bag(bag: VertexSet) -> Self {
        TreeDecomposition { nodes: vec![TdNode { id: 0, bag }], edges: vec![] }
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Adjacency lists indexed by position in `nodes`, if every edge names
    /// known node ids.
    pub(crate) fn adjacency(&self) -> Option<Vec<Vec<usize>>> {
        let pos: BTreeMap<usize, usize> = self.nodes.iter().enumerate().map(|(i, n)| (n.id, i)).collect();
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            let (&i, &j) = (pos.get(&a)?, pos.get(&b)?);
            adj[i].push(j);
            adj[j].push(i);
        }
        Some(adj)
    }
}

fn tree_errors(td: &TreeDecomposition) -> Vec<String> {
    let mut errs = Vec::new();
    if td.nodes.is_empty() {
        errs.push("no nodes".to_string());
        return errs;
    }
    let ids: BTreeSet<usize> = td.nodes.iter().map(|n| n.id).collect();
    if ids.len() != td.nodes.len() {
        errs.push("duplicate node ids".to_string());
    }
    for &(a, b) in &td.edges {
        if !ids.contains(&a) || !ids.contains(&b) {
            errs.push(format!("edge [{a},{b}] names an unknown node"));
        } else if a == b {
            errs.push(format!("loop at node {a}"));
        }
    }
    if !errs.is_empty() {
        return errs;
    }
    if td.edges.len() + 1 != td.nodes.len() {
        errs.push(format!("{} edges on {} nodes is not a tree", td.edges.len(), td.nodes.len()));
    }
    let adj = td.adjacency().expect("edges checked");
    let mut seen = vec![false; td.nodes.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        errs.push("tree is disconnected".to_string());
    }
    errs
}

/// Checks that the tree is a tree, every vertex and edge lies in a bag, and
/// the bags containing any vertex are connected.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> ValidationReport {
    let mut report = ValidationReport { tree_errors: tree_errors(td), ..Default::default() };
    let mut holders: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    let mut foreign = BTreeSet::new();
    for (i, node) in td.nodes.iter().enumerate() {
        for &v in &node.bag {
            if g.has_vertex(v) {
                holders.entry(v).or_default().push(i);
            } else {
                foreign.insert(v);
            }
        }
    }
    report.foreign_vertices = foreign.into_iter().collect();
    report.uncovered_vertices = g.vertices().filter(|v| !holders.contains_key(v)).collect();
    report.uncovered_edges = g
        .edges()
        .filter(|&(u, v)| match (holders.get(&u), holders.get(&v)) {
            (Some(a), Some(b)) => !a.iter().any(|i| b.contains(i)),
            _ => true,
        })
        .collect();
    if let Some(adj) = td.adjacency() {
        for (&v, nodes) in &holders {
            let inside: BTreeSet<usize> = nodes.iter().copied().collect();
            let mut seen = BTreeSet::from([nodes[0]]);
            let mut stack = vec![nodes[0]];
            while let Some(u) = stack.pop() {
                for &x in &adj[u] {
                    if inside.contains(&x) && seen.insert(x) {
                        stack.push(x);
                    }
                }
            }
            if seen.len() != inside.len() {
                report.disconnected_vertices.push(v);
            }
        }
    }
    report
}

/// Stability number of each bag, in node order.
pub fn bag_stability(g: &Graph, td: &TreeDecomposition) -> Result<Vec<usize>> {
    td.nodes.par_iter().map(|n| stability_number(g, &n.bag)).collect()
}

/// `max_t α(G[χ(t)])` of a valid decomposition.
pub fn td_independence_number(g: &Graph, td: &TreeDecomposition) -> Result<usize> {
    let report = validate_tree_decomposition(g, td);
    if !report.is_valid() {
        return Err(input_err!("invalid tree decomposition: {}", report.summary()));
    }
    Ok(bag_stability(g, td)?.into_iter().max().unwrap_or(0))
}
