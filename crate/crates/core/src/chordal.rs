//! Chordal graph recognition and clique decompositions.

use std::collections::BTreeMap;

use crate::decompose::{TdNode, TreeDecomposition};
use crate::error::{input_err, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Maximum cardinality search visit order, ties to the smallest id.
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let mut weight: BTreeMap<Vertex, usize> = g.vertices().map(|v| (v, 0)).collect();
    let mut order = Vec::with_capacity(g.len());
    while !weight.is_empty() {
        let (&v, _) = weight.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).expect("nonempty");
        weight.remove(&v);
        for u in g.neighbors(v) {
            if let Some(c) = weight.get_mut(u) {
                *c += 1;
            }
        }
        order.push(v);
    }
    order
}

/// Later neighbors of each vertex under `order`.
fn later_neighbors(g: &Graph, order: &[Vertex]) -> BTreeMap<Vertex, Vec<Vertex>> {
    let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    order
        .iter()
        .map(|&v| {
            let mut later: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|u| pos[u] > pos[&v]).collect();
            later.sort_by_key(|u| pos[u]);
            (v, later)
        })
        .collect()
}

/// Whether every vertex's later neighbors form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    if order.len() != g.len() || order.iter().copied().collect::<VertexSet>().len() != order.len() {
        return false;
    }
    if order.iter().any(|&v| !g.has_vertex(v)) {
        return false;
    }
    let later = later_neighbors(g, order);
    // checking each vertex's later set against its first later neighbor suffices
    order.iter().all(|v| match later[v].split_first() {
        Some((&u, rest)) => rest.iter().all(|&x| g.adjacent(u, x)),
        None => true,
    })
}

pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<Vertex>> {
    let mut order = mcs_order(g);
    order.reverse();
    is_perfect_elimination_order(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// Decomposition with one clique bag `{v} ∪ later(v)` per vertex, each
/// attached to the bag of its first later neighbor. Components are chained
/// through their last vertices.
pub fn clique_tree_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    let order = perfect_elimination_order(g).ok_or_else(|| input_err!("the graph is not chordal"))?;
    if order.is_empty() {
        return Ok(TreeDecomposition::single_bag(VertexSet::new()));
    }
    let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let later = later_neighbors(g, &order);
    let mut nodes = Vec::with_capacity(order.len());
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, v) in order.iter().enumerate() {
        let mut bag: VertexSet = later[v].iter().copied().collect();
        bag.insert(*v);
        nodes.push(TdNode { id: i, bag });
        match later[v].first() {
            Some(u) => edges.push((pos[u], i)),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    Ok(TreeDecomposition { nodes, edges })
}
