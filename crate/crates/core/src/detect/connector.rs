//! Minimal connected subgraphs attaching to three vertices, and the claw
//! connectors they yield inside cooperative subgraphs.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{input_err, invariant_err, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separate::{Certificate, CooperativeSubgraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectorShape {
    /// `H` is the interior of an induced path (or of a hole through the edge
    /// `x_i x_j`) from `x_i` to `x_j`; `x_k` is the remaining attachment.
    PathThrough { ends: (Vertex, Vertex), middle: Vertex },
    /// Three legs from a branch vertex `a`.
    BranchVertex { center: Vertex },
    /// Three legs from the vertices of a triangle.
    BranchTriangle { triangle: [Vertex; 3] },
}

/// A minimal connector `H` of three attachment vertices with the paths of
/// its shape: the single `x_i`-`x_j` path for a path-through connector, and
/// the three legs ending at `x_1, x_2, x_3` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectorWitness {
    pub shape: ConnectorShape,
    pub attachments: [Vertex; 3],
    pub vertices: VertexSet,
    pub paths: Vec<Vec<Vertex>>,
}

fn meets_all(g: &Graph, h: &VertexSet, xs: &[Vertex; 3]) -> bool {
    xs.iter().all(|&x| g.neighbors(x).iter().any(|v| h.contains(v)))
}

fn is_connector(g: &Graph, h: &VertexSet, xs: &[Vertex; 3]) -> bool {
    !h.is_empty() && g.is_connected_set(h) && meets_all(g, h, xs)
}

/// Is `h` a connector of `xs` from which no single vertex can be removed?
pub fn is_minimal_connector(g: &Graph, h: &VertexSet, xs: &[Vertex; 3]) -> bool {
    if !is_connector(g, h, xs) || xs.iter().any(|x| h.contains(x)) {
        return false;
    }
    h.iter().all(|&v| {
        let mut rest = h.clone();
        rest.remove(&v);
        !is_connector(g, &rest, xs)
    })
}

/// An inclusion-minimal connected `H ⊆ G \ {x1, x2, x3}` meeting all three
/// neighborhoods, with its structure.
pub fn minimal_connected_connector(g: &Graph, x1: Vertex, x2: Vertex, x3: Vertex) -> Result<ConnectorWitness> {
    let xs = [x1, x2, x3];
    for &x in &xs {
        g.check_vertex(x)?;
    }
    if x1 == x2 || x1 == x3 || x2 == x3 {
        return Err(input_err!("attachment vertices must be distinct"));
    }
    let removed: VertexSet = xs.iter().copied().collect();
    let mut h = g
        .components_unchecked(&removed)
        .into_iter()
        .find(|c| meets_all(g, c, &xs))
        .ok_or_else(|| Error::NotFound(format!("no connected subgraph attaches to {x1}, {x2} and {x3}")))?;
    'shrink: loop {
        for &v in h.iter() {
            let mut rest = h.clone();
            rest.remove(&v);
            if is_connector(g, &rest, &xs) {
                h = rest;
                continue 'shrink;
            }
        }
        break;
    }
    classify_connector(g, &h, xs)
}

fn h_neighbors(g: &Graph, h: &VertexSet, x: Vertex) -> VertexSet {
    g.neighbors(x).intersection(h).copied().collect()
}

/// Shortest path from `from` to `to` inside `within`.
fn path_within(g: &Graph, within: &VertexSet, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if within.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Orders the vertices of `h` along the induced path it forms, starting at
/// `start`; `None` if `h` is not such a path.
fn path_order(g: &Graph, h: &VertexSet, start: Vertex) -> Option<Vec<Vertex>> {
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next: Vec<Vertex> = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|v| h.contains(v) && Some(*v) != prev)
            .collect();
        match next.as_slice() {
            [] => break,
            [v] => {
                prev = Some(cur);
                cur = *v;
                order.push(cur);
            }
            _ => return None,
        }
        if order.len() > h.len() {
            return None;
        }
    }
    (order.len() == h.len() && g.is_induced_path(&order)).then_some(order)
}

/// The three legs are pairwise disjoint and see each other only through
/// the allowed edges.
fn legs_ok(g: &Graph, legs: &[Vec<Vertex>; 3], allowed: &dyn Fn(Vertex, Vertex) -> bool) -> bool {
    for i in 0..3 {
        for j in i + 1..3 {
            for &u in &legs[i] {
                for &v in &legs[j] {
                    if u == v || (g.adjacent(u, v) && !allowed(u, v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Reads off which of the three connector shapes `h` has.
pub fn classify_connector(g: &Graph, h: &VertexSet, xs: [Vertex; 3]) -> Result<ConnectorWitness> {
    let nbrs: Vec<VertexSet> = xs.iter().map(|&x| h_neighbors(g, h, x)).collect();
    let xset: VertexSet = xs.iter().copied().collect();
    let x_edge = |u: Vertex, v: Vertex| xset.contains(&u) && xset.contains(&v);
    let witness = |shape, paths| ConnectorWitness { shape, attachments: xs, vertices: h.clone(), paths };

    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if nbrs[i].len() != 1 || nbrs[j].len() != 1 || h.len() < 2 {
            continue;
        }
        let first = *nbrs[i].first().expect("one neighbor");
        let last = *nbrs[j].first().expect("one neighbor");
        let Some(order) = path_order(g, h, first) else { continue };
        if *order.last().expect("nonempty") != last {
            continue;
        }
        let nk = &nbrs[k];
        let nonadjacent_pair = nk.iter().any(|&u| nk.iter().any(|&v| u != v && !g.adjacent(u, v)));
        if !(nonadjacent_pair || nk.len() == 2) {
            continue;
        }
        let mut path = vec![xs[i]];
        path.extend(order);
        path.push(xs[j]);
        return Ok(witness(ConnectorShape::PathThrough { ends: (xs[i], xs[j]), middle: xs[k] }, vec![path]));
    }

    if nbrs.iter().all(|n| n.len() == 1) {
        let tips: Vec<Vertex> = nbrs.iter().map(|n| *n.first().expect("one neighbor")).collect();
        let edges_in_h = h.iter().map(|&v| g.neighbors(v).intersection(h).count()).sum::<usize>() / 2;
        if edges_in_h + 1 == h.len() {
            for &a in h {
                let legs = tips.iter().map(|&t| path_within(g, h, a, t)).collect::<Option<Vec<_>>>();
                let Some(legs) = legs else { continue };
                let tails: [Vec<Vertex>; 3] = std::array::from_fn(|i| {
                    let mut l: Vec<Vertex> = legs[i][1..].to_vec();
                    l.push(xs[i]);
                    l
                });
                let covered: VertexSet = legs.iter().flatten().copied().collect();
                if covered == *h && legs_ok(g, &tails, &x_edge) {
                    let paths = (0..3).map(|i| [legs[i].clone(), vec![xs[i]]].concat()).collect();
                    return Ok(witness(ConnectorShape::BranchVertex { center: a }, paths));
                }
            }
        }
        for &a1 in h {
            for &a2 in g.neighbors(a1).iter().filter(|v| h.contains(v)) {
                for &a3 in g.neighbors(a1).intersection(g.neighbors(a2)).filter(|v| h.contains(v)) {
                    let tri = [a1, a2, a3];
                    let tri_set: VertexSet = tri.iter().copied().collect();
                    let legs = (0..3)
                        .map(|i| {
                            let mut within: VertexSet = h.difference(&tri_set).copied().collect();
                            within.insert(tri[i]);
                            path_within(g, &within, tri[i], tips[i])
                        })
                        .collect::<Option<Vec<_>>>();
                    let Some(legs) = legs else { continue };
                    let full: [Vec<Vertex>; 3] = std::array::from_fn(|i| [legs[i].clone(), vec![xs[i]]].concat());
                    let covered: VertexSet = legs.iter().flatten().copied().collect();
                    let allowed = |u: Vertex, v: Vertex| x_edge(u, v) || (tri_set.contains(&u) && tri_set.contains(&v));
                    if covered == *h && legs_ok(g, &full, &allowed) {
                        return Ok(witness(ConnectorShape::BranchTriangle { triangle: tri }, full.to_vec()));
                    }
                }
            }
        }
    }
    Err(invariant_err!("minimal connector {h:?} of {xs:?} matches none of the three shapes"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClawShape {
    SubdividedClaw,
    LineGraphOfSubdividedClaw,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClawConnector {
    pub shape: ClawShape,
    pub vertices: VertexSet,
}

fn simplicial_vertices(k: &Graph) -> VertexSet {
    k.vertices().filter(|&v| k.is_clique(k.neighbors(v))).collect()
}

/// Recognizes `G[k]` as a subdivided claw or the line graph of one, with
/// simplicial vertices exactly `leaves`.
pub fn claw_shape(g: &Graph, k: &VertexSet, leaves: &VertexSet) -> Option<ClawShape> {
    let kg = g.induced(k);
    if kg.is_empty() || !g.is_connected_set(k) || simplicial_vertices(&kg) != *leaves || leaves.len() != 3 {
        return None;
    }
    let degrees: Vec<usize> = kg.vertices().map(|v| kg.degree(v)).collect();
    let edges = kg.edge_count();
    if edges + 1 == kg.len() {
        let branch = degrees.iter().filter(|&&d| d == 3).count();
        let ok = branch == 1 && degrees.iter().all(|&d| d <= 3) && degrees.iter().filter(|&&d| d == 1).count() == 3;
        return ok.then_some(ClawShape::SubdividedClaw);
    }
    if edges == kg.len() {
        let tri: Vec<Vertex> = kg.vertices().filter(|&v| kg.degree(v) == 3).collect();
        if tri.len() == 3 && kg.is_clique(&tri.iter().copied().collect()) && degrees.iter().all(|&d| d <= 3) {
            return Some(ClawShape::LineGraphOfSubdividedClaw);
        }
    }
    None
}

/// Inside a cooperative `H`, a subdivided claw or line graph of a subdivided
/// claw whose simplicial vertices are exactly `n1, n2, n3`.
pub fn extract_claw_connector(g: &Graph, h: &CooperativeSubgraph, ns: [Vertex; 3]) -> Result<ClawConnector> {
    g.check_subset(&h.members)?;
    let nset: VertexSet = ns.iter().copied().collect();
    if nset.len() != 3 || !g.is_stable(&nset) {
        return Err(input_err!("the three outside vertices must be distinct and pairwise nonadjacent"));
    }
    for &n in &ns {
        g.check_vertex(n)?;
        if h.members.contains(&n) || g.neighbors(n).is_disjoint(&h.members) {
            return Err(input_err!("vertex {n} is not in the neighborhood of H"));
        }
    }
    let mut hs = [0; 3];
    for i in 0..3 {
        hs[i] = *h
            .boundary
            .iter()
            .find(|&&v| (0..3).all(|j| g.adjacent(v, ns[j]) == (i == j)))
            .ok_or_else(|| input_err!("no boundary vertex of H sees {} alone among the three", ns[i]))?;
    }
    let hset: VertexSet = hs.iter().copied().collect();
    let mut k: VertexSet = nset.union(&hset).copied().collect();
    let h_edges: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .filter(|&(i, j)| g.adjacent(hs[i], hs[j]))
        .collect();
    if h_edges.len() < 2 {
        if h.certificate == Certificate::Clique {
            return Err(invariant_err!("a clique certificate with nonadjacent boundary vertices"));
        }
        let interior = h.interior();
        if h_edges.len() == 1 {
            let (i, j) = h_edges[0];
            let lone = 3 - i - j;
            let pair = [hs[i], hs[j]];
            let path = shortest_into(g, &interior, hs[lone], &pair)
                .ok_or_else(|| invariant_err!("interior of H does not reach the adjacent boundary pair"))?;
            k.extend(path);
        } else {
            let mut sub = interior.clone();
            sub.extend(&hset);
            let conn = minimal_connected_connector(&g.induced(&sub), hs[0], hs[1], hs[2])?;
            match &conn.shape {
                ConnectorShape::PathThrough { middle, .. } => {
                    let path = &conn.paths[0];
                    let inner = &path[1..path.len() - 1];
                    let on: Vec<usize> = (0..inner.len()).filter(|&p| g.adjacent(*middle, inner[p])).collect();
                    let (u1, u2) = (on[0], on[on.len() - 1]);
                    if u2 == u1 + 1 {
                        k.extend(inner);
                    } else {
                        k.extend(&inner[..=u1]);
                        k.extend(&inner[u2..]);
                    }
                }
                _ => k.extend(&conn.vertices),
            }
        }
    }
    let shape = claw_shape(g, &k, &nset)
        .ok_or_else(|| invariant_err!("extracted set {k:?} is neither a subdivided claw nor its line graph"))?;
    Ok(ClawConnector { shape, vertices: k })
}

/// Shortest path from `start` whose other vertices lie in `interior`, ending
/// at the first vertex with a neighbor in `targets`; the path excludes
/// `start`.
fn shortest_into(g: &Graph, interior: &VertexSet, start: Vertex, targets: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbors(start) {
        if interior.contains(&w) && !parent.contains_key(&w) {
            parent.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        if targets.iter().any(|&t| g.adjacent(u, t)) {
            let mut path = vec![u];
            let mut cur = u;
            while parent[&cur] != start {
                cur = parent[&cur];
                path.push(cur);
            }
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if interior.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    None
}
