use std::collections::HashMap;

use crate::decompose::td::{validate_tree_decomposition, TreeDecomposition};
use crate::error::{input_err, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::weight::{tie_prefers, Rational, WeightFunction};

pub const DEFAULT_STATE_LIMIT: usize = 1 << 20;

/// Stable subsets of `bag`, by branch and prune in ascending vertex order.
fn stable_subsets(g: &Graph, bag: &[Vertex], limit: usize) -> Option<Vec<Vec<Vertex>>> {
    fn go(g: &Graph, bag: &[Vertex], i: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>, limit: usize) -> bool {
        if i == bag.len() {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        if cur.iter().all(|&u| !g.adjacent(u, bag[i])) {
            cur.push(bag[i]);
            let ok = go(g, bag, i + 1, cur, out, limit);
            cur.pop();
            if !ok {
                return false;
            }
        }
        go(g, bag, i + 1, cur, out, limit)
    }
    let mut out = Vec::new();
    go(g, bag, 0, &mut Vec::new(), &mut out, limit).then_some(out)
}

#[derive(Clone)]
struct Best {
    value: Rational,
    set: VertexSet,
}

impl Best {
    fn beats(&self, other: &Best) -> bool {
        self.value > other.value || (self.value == other.value && tie_prefers(&self.set, &other.set))
    }
}

/// Maximum weight stable set by dynamic programming over the stable subsets
/// of each bag. Ties go to the set containing the smallest vertex of the
/// symmetric difference, the same order the brute-force oracle uses.
pub fn mwis_td(g: &Graph, w: &WeightFunction, td: &TreeDecomposition) -> Result<(VertexSet, Rational)> {
    mwis_td_with_limit(g, w, td, DEFAULT_STATE_LIMIT)
}

pub fn mwis_td_with_limit(
    g: &Graph,
    w: &WeightFunction,
    td: &TreeDecomposition,
    state_limit: usize,
) -> Result<(VertexSet, Rational)> {
    let report = validate_tree_decomposition(g, td);
    if !report.is_valid() {
        return Err(input_err!("invalid tree decomposition: {}", report.summary()));
    }
    if let Some((v, _)) = w.iter().find(|(v, _)| !g.has_vertex(*v)) {
        return Err(input_err!("weight given for unknown vertex {v}"));
    }
    let adj = td.adjacency().expect("validated");
    let root = (0..td.nodes.len()).min_by_key(|&i| td.nodes[i].id).expect("validated");
    let mut parent = vec![usize::MAX; td.nodes.len()];
    let mut order = vec![root];
    let mut k = 0;
    while k < order.len() {
        let u = order[k];
        for &v in &adj[u] {
            if v != root && parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
        k += 1;
    }

    // per node: projection onto the parent bag -> best completion within the subtree
    let mut tables: Vec<HashMap<Vec<Vertex>, Best>> = vec![HashMap::new(); td.nodes.len()];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); td.nodes.len()];
    for &u in &order[1..] {
        children[parent[u]].push(u);
    }
    let mut answer = None;
    for &u in order.iter().rev() {
        let bag: Vec<Vertex> = td.nodes[u].bag.iter().copied().collect();
        let subsets = stable_subsets(g, &bag, state_limit).ok_or_else(|| {
            Error::Resource(format!("bag {} has more than {state_limit} stable subsets", td.nodes[u].id))
        })?;
        let parent_bag = (u != root).then(|| &td.nodes[parent[u]].bag);
        let mut table: HashMap<Vec<Vertex>, Best> = HashMap::new();
        for s in subsets {
            let mut set: VertexSet = s.iter().copied().collect();
            let mut value = w.total(&s);
            for &c in &children[u] {
                let key: Vec<Vertex> = s.iter().copied().filter(|v| td.nodes[c].bag.contains(v)).collect();
                let best = &tables[c][&key];
                value += &best.value;
                set.extend(&best.set);
            }
            let key: Vec<Vertex> = match parent_bag {
                Some(pb) => s.iter().copied().filter(|v| pb.contains(v)).collect(),
                None => Vec::new(),
            };
            // value counted beyond the shared part
            let shared = w.total(&key);
            let cand = Best { value: value - shared, set };
            match table.get(&key) {
                Some(cur) if !cand.beats(cur) => {}
                _ => {
                    table.insert(key, cand);
                }
            }
        }
        for &c in &children[u] {
            tables[c] = HashMap::new();
        }
        if u == root {
            answer = table.remove(&Vec::new());
        } else {
            tables[u] = table;
        }
    }
    let best = answer.expect("the empty set is stable");
    let total = w.total(&best.set);
    debug_assert!(g.is_stable(&best.set));
    Ok((best.set, total))
}
