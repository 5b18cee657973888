//! Independent oracles and instance families shared by the integration and
//! acceptance tests. Nothing here calls the library's algorithms; only the
//! `Graph` container is reused.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treealpha::decompose::TreeDecomposition;
use treealpha::{Graph, Rational, Vertex, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- small graphs

/// Graph on `0..n` from adjacency bitmasks.
pub fn from_masks(adj: &[u16]) -> Graph {
    let n = adj.len() as u32;
    let mut g = Graph::with_vertices(0..n);
    for u in 0..n {
        for v in u + 1..n {
            if adj[u as usize] >> v & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color = vec![0usize; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

/// Canonical code: the largest adjacency word over orderings that respect
/// the color-refinement classes.
pub fn canonical(adj: &[u16]) -> u64 {
    let n = adj.len();
    let color = refine(adj);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(color[v]).or_default().push(v);
    }
    let slots: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(adj: &[u16], slots: &[Vec<usize>], ci: usize, order: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
        if ci == slots.len() {
            let n = order.len();
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | (adj[order[i]] >> order[j] & 1) as u64;
                }
            }
            *best = (*best).max(code);
            return;
        }
        let class = &slots[ci];
        let placed = order.iter().filter(|v| class.contains(v)).count();
        if placed == class.len() {
            return go(adj, slots, ci + 1, order, used, best);
        }
        for &v in class {
            if !used[v] {
                used[v] = true;
                order.push(v);
                go(adj, slots, ci, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    go(adj, &slots, 0, &mut order, &mut used, &mut best);
    best
}

/// One representative of each isomorphism class of graphs on `n` vertices,
/// by one-vertex extension of the classes on `n - 1` vertices.
pub fn nonisomorphic(n: usize) -> Vec<Vec<u16>> {
    let mut level: Vec<Vec<u16>> = vec![vec![]];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u16..(1 << (k - 1)) {
                let mut adj = g.clone();
                adj.push(mask);
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        adj[u] |= 1 << (k - 1);
                    }
                }
                if seen.insert(canonical(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    level
}

// ---------------------------------------------------------------- 3PC catalog

struct Shape {
    edges: Vec<(u32, u32)>,
    n: u32,
}

impl Shape {
    fn new(n: u32) -> Self {
        Shape { edges: vec![], n }
    }
    fn path(&mut self, a: u32, b: u32, len: usize) {
        let mut prev = a;
        for _ in 1..len {
            self.edges.push((prev, self.n));
            prev = self.n;
            self.n += 1;
        }
        self.edges.push((prev, b));
    }
    fn graph(self) -> Graph {
        Graph::from_edges(self.n, &self.edges).unwrap()
    }
}

/// Every theta, pyramid, prism and pinched prism with at most `max_n`
/// vertices, up to isomorphism, labelled by kind.
pub fn catalog(max_n: usize) -> Vec<(&'static str, Graph)> {
    let mut out = Vec::new();
    let max = max_n as i64;
    let lens = |lo: usize| (lo..=max_n).collect::<Vec<_>>();
    for &a in &lens(2) {
        for &b in lens(2).iter().filter(|&&b| b >= a) {
            for &c in lens(2).iter().filter(|&&c| c >= b) {
                if 2 + (a + b + c) as i64 - 3 <= max {
                    let mut s = Shape::new(2);
                    for l in [a, b, c] {
                        s.path(0, 1, l);
                    }
                    out.push(("theta", s.graph()));
                }
            }
        }
    }
    for &a in &lens(1) {
        for &b in lens(1).iter().filter(|&&b| b >= a) {
            for &c in lens(1).iter().filter(|&&c| c >= b) {
                if b == 1 || 4 + (a + b + c) as i64 - 3 > max {
                    continue;
                }
                let mut s = Shape::new(4);
                s.edges.extend([(1, 2), (2, 3), (1, 3)]);
                for (i, l) in [a, b, c].into_iter().enumerate() {
                    s.path(0, 1 + i as u32, l);
                }
                out.push(("pyramid", s.graph()));
            }
        }
    }
    for &a in &lens(1) {
        for &b in lens(1).iter().filter(|&&b| b >= a) {
            for &c in lens(1).iter().filter(|&&c| c >= b) {
                if 6 + (a + b + c) as i64 - 3 > max {
                    continue;
                }
                let mut s = Shape::new(6);
                s.edges.extend([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
                for (i, l) in [a, b, c].into_iter().enumerate() {
                    s.path(i as u32, 3 + i as u32, l);
                }
                out.push(("prism", s.graph()));
            }
        }
    }
    for &a in &lens(2) {
        for &b in lens(2).iter().filter(|&&b| b >= a) {
            if 5 + (a + b) as i64 - 2 > max {
                continue;
            }
            let mut s = Shape::new(5);
            s.edges.extend([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
            s.path(1, 3, a);
            s.path(2, 4, b);
            out.push(("pinched-prism", s.graph()));
        }
    }
    out
}

/// Whether `pattern` is isomorphic to an induced subgraph of `host`.
pub fn has_induced(host: &Graph, pattern: &Graph) -> bool {
    let hv: Vec<Vertex> = host.vertices().collect();
    // pattern vertices in BFS order so each new vertex is constrained early
    let mut order: Vec<Vertex> = Vec::new();
    let mut seen = BTreeSet::new();
    for s in pattern.vertices() {
        if seen.insert(s) {
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                order.push(u);
                for &w in pattern.neighbors(u) {
                    if seen.insert(w) {
                        q.push_back(w);
                    }
                }
            }
        }
    }
    if order.len() > hv.len() {
        return false;
    }
    let mut map: Vec<Vertex> = Vec::new();
    fn go(host: &Graph, pattern: &Graph, hv: &[Vertex], order: &[Vertex], map: &mut Vec<Vertex>) -> bool {
        let i = map.len();
        if i == order.len() {
            return true;
        }
        let p = order[i];
        for &h in hv {
            if map.contains(&h) || host.degree(h) < pattern.degree(p) {
                continue;
            }
            if (0..i).all(|j| pattern.adjacent(p, order[j]) == host.adjacent(h, map[j])) {
                map.push(h);
                if go(host, pattern, hv, order, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(host, pattern, &hv, &order, &mut map)
}

pub fn catalog_contains_3pc(g: &Graph, catalog: &[(&'static str, Graph)]) -> bool {
    catalog.iter().any(|(_, p)| p.len() <= g.len() && p.edge_count() <= g.edge_count() && has_induced(g, p))
}

// ---------------------------------------------------------------- stability

fn components(g: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let mut left = set.clone();
    let mut out = Vec::new();
    while let Some(&s) = left.iter().next() {
        let mut comp = VertexSet::from([s]);
        left.remove(&s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if left.remove(&w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn alpha_rec(g: &Graph, set: &VertexSet) -> usize {
    components(g, set)
        .into_iter()
        .map(|comp| {
            let deg = |v: Vertex| g.neighbors(v).iter().filter(|u| comp.contains(u)).count();
            // a vertex of degree at most one lies in some maximum stable set
            if let Some(&v) = comp.iter().find(|&&v| deg(v) <= 1) {
                let mut rest = comp.clone();
                rest.remove(&v);
                for u in g.neighbors(v) {
                    rest.remove(u);
                }
                return 1 + alpha_rec(g, &rest);
            }
            let &v = comp.iter().max_by_key(|&&v| deg(v)).unwrap();
            let mut without = comp.clone();
            without.remove(&v);
            let mut with = without.clone();
            for u in g.neighbors(v) {
                with.remove(u);
            }
            alpha_rec(g, &without).max(1 + alpha_rec(g, &with))
        })
        .sum()
}

/// Simplicial elimination order of `G[set]`, if chordal.
pub fn simplicial_order(g: &Graph, set: &VertexSet) -> Option<Vec<Vertex>> {
    let mut left = set.clone();
    let mut order = Vec::new();
    while !left.is_empty() {
        let v = *left.iter().find(|&&v| {
            let nb: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|u| left.contains(u)).collect();
            nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.adjacent(a, b)))
        })?;
        left.remove(&v);
        order.push(v);
    }
    Some(order)
}

/// `α(G[set])`: greedy along a simplicial order for chordal sets, otherwise
/// branching with component splitting.
pub fn alpha(g: &Graph, set: &VertexSet) -> usize {
    if let Some(order) = simplicial_order(g, set) {
        let mut taken = VertexSet::new();
        for v in order {
            if g.neighbors(v).iter().all(|u| !taken.contains(u)) {
                taken.insert(v);
            }
        }
        return taken.len();
    }
    alpha_rec(g, set)
}

// ---------------------------------------------------------------- cuts and decompositions

/// No path from `a` to `b` avoids `cut`.
pub fn separates(g: &Graph, cut: &VertexSet, a: &VertexSet, b: &VertexSet) -> bool {
    let mut seen: VertexSet = a.iter().copied().filter(|v| !cut.contains(v)).collect();
    let mut stack: Vec<Vertex> = seen.iter().copied().collect();
    while let Some(u) = stack.pop() {
        if b.contains(&u) {
            return false;
        }
        for &w in g.neighbors(u) {
            if !cut.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    true
}

/// Largest component weight of `G - cut`.
pub fn heaviest_piece(g: &Graph, w: &BTreeMap<Vertex, Rational>, cut: &VertexSet) -> Rational {
    let rest: VertexSet = g.vertices().filter(|v| !cut.contains(v)).collect();
    components(g, &rest)
        .iter()
        .map(|c| c.iter().map(|v| w.get(v).cloned().unwrap_or_else(Rational::zero)).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn td_is_valid(g: &Graph, td: &TreeDecomposition) -> bool {
    let k = td.nodes.len();
    if k == 0 || td.edges.len() + 1 != k {
        return false;
    }
    let idx: BTreeMap<usize, usize> = td.nodes.iter().enumerate().map(|(i, n)| (n.id, i)).collect();
    if idx.len() != k {
        return false;
    }
    // union-find over tree edges: k - 1 edges without a cycle span a tree
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(a, b) in &td.edges {
        let (Some(&i), Some(&j)) = (idx.get(&a), idx.get(&b)) else { return false };
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri == rj {
            return false;
        }
        parent[ri] = rj;
    }
    let covered: VertexSet = td.nodes.iter().flat_map(|n| n.bag.iter().copied()).collect();
    if covered != g.vertex_set() {
        return false;
    }
    if !g.edges().all(|(u, v)| td.nodes.iter().any(|n| n.bag.contains(&u) && n.bag.contains(&v))) {
        return false;
    }
    g.vertices().all(|v| {
        let holders: BTreeSet<usize> = td.nodes.iter().enumerate().filter(|(_, n)| n.bag.contains(&v)).map(|(i, _)| i).collect();
        let inner = td
            .edges
            .iter()
            .filter(|(a, b)| holders.contains(&idx[a]) && holders.contains(&idx[b]))
            .count();
        inner + 1 == holders.len()
    })
}

/// Maximum weight of a stable set, by depth-first enumeration of stable
/// sets over integer-scaled weights.
pub fn mwis_weight(g: &Graph, w: &BTreeMap<Vertex, Rational>) -> Rational {
    let verts: Vec<Vertex> = g.vertices().collect();
    let lcm = verts.iter().fold(BigInt::one(), |acc, v| {
        let d = w[v].denom().clone();
        let gcd = num_integer_gcd(&acc, &d);
        acc * d / gcd
    });
    let scaled: Vec<BigInt> = verts.iter().map(|v| (w[v].clone() * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut best = BigInt::zero();
    fn go(g: &Graph, verts: &[Vertex], s: &[BigInt], i: usize, chosen: &mut Vec<Vertex>, acc: BigInt, best: &mut BigInt) {
        if i == verts.len() {
            if acc > *best {
                *best = acc;
            }
            return;
        }
        if chosen.iter().all(|&u| !g.adjacent(u, verts[i])) {
            chosen.push(verts[i]);
            go(g, verts, s, i + 1, chosen, &acc + &s[i], best);
            chosen.pop();
        }
        go(g, verts, s, i + 1, chosen, acc, best);
    }
    go(g, &verts, &scaled, 0, &mut Vec::new(), BigInt::zero(), &mut best);
    Rational::new(best, lcm)
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

pub fn random_weights(g: &Graph, rng: &mut ChaCha8Rng) -> BTreeMap<Vertex, Rational> {
    g.vertices()
        .map(|v| (v, Rational::new(BigInt::from(rng.gen_range(0..20)), BigInt::from(rng.gen_range(1..7)))))
        .collect()
}

// ---------------------------------------------------------------- instance families

/// A hole of length `k` on `0..k` plus hub `k` whose neighbors leave at least
/// two long sectors, rejection-sampled until 3PC-free.
pub fn random_useful_wheel(rng: &mut ChaCha8Rng) -> (Graph, Vec<Vertex>, Vertex) {
    loop {
        let k = rng.gen_range(7..=10usize);
        let nb: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.4)).collect();
        let mut marks = nb.clone();
        marks.sort();
        if marks.len() < 2 {
            continue;
        }
        let long = marks.iter().enumerate().filter(|(i, &m)| (marks[(i + 1) % marks.len()] + k - m) % k > 1).count();
        if long < 2 {
            continue;
        }
        let mut g = Graph::from_edges(k as u32, &(0..k as u32).map(|i| (i, (i + 1) % k as u32)).collect::<Vec<_>>()).unwrap();
        g.add_vertex(k as u32);
        for &x in &nb {
            g.add_edge(k as u32, x as u32).unwrap();
        }
        if treealpha::detect::is_3pc_free(&g).unwrap() {
            return (g, (0..k as u32).collect(), k as u32);
        }
    }
}

/// Extends `g` by `extra` vertices with random neighborhoods, keeping only
/// 3PC-free results (exact search, so `g.len() + extra` must stay small).
pub fn grow_3pc_free(g: &Graph, extra: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = g.clone();
    for _ in 0..extra {
        for _attempt in 0..40 {
            let v = g.max_vertex().map_or(0, |m| m + 1);
            let mut h = g.clone();
            h.add_vertex(v);
            for u in g.vertices() {
                if rng.gen_bool(p) {
                    h.add_edge(u, v).unwrap();
                }
            }
            let opts = treealpha::detect::DetectOptions::exact_up_to(h.len());
            if treealpha::detect::is_3pc_free_with(&h, &opts).unwrap() {
                g = h;
                break;
            }
        }
    }
    g
}

/// Clique-sum of `base` with `pieces` random 3PC-free graphs; `base` keeps its
/// ids.
pub fn glue_pieces(base: &Graph, pieces: usize, piece_n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = base.clone();
    for _ in 0..pieces {
        let n = rng.gen_range(3..=piece_n);
        let p = rng.gen_range(0.15..0.5);
        let seed = rng.gen();
        let piece = treealpha::generate::tpcfree_random(n, p, seed, 5_000).unwrap();
        treealpha::generate::clique_sum(&mut g, &piece, rng);
    }
    g
}

/// Mixed 3PC-free family: chordal graphs or clique-sums of small verified
/// pieces, with about `n` vertices.
pub fn tpc_free_instance(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if rng.gen_bool(0.4) {
        let density = [0.1, 0.3, 0.6][rng.gen_range(0..3)];
        treealpha::generate::chordal_random(n, density, rng.gen()).unwrap()
    } else {
        let mut g = Graph::new();
        while g.len() < n {
            g = glue_pieces(&g, 1, 9.min(n - g.len() + 2).max(3), rng);
        }
        g
    }
}

/// Random nonadjacent pair in one component, if any.
pub fn far_pair(g: &Graph, rng: &mut ChaCha8Rng) -> Option<(Vertex, Vertex)> {
    let verts: Vec<Vertex> = g.vertices().collect();
    for _ in 0..50 {
        let a = *verts.choose(rng)?;
        let comp = components(g, &g.vertex_set()).into_iter().find(|c| c.contains(&a)).unwrap();
        let cands: Vec<Vertex> = comp.iter().copied().filter(|&b| b != a && !g.adjacent(a, b)).collect();
        if let Some(&b) = cands.choose(rng) {
            return Some((a, b));
        }
    }
    None
}

pub fn log2(n: usize) -> f64 {
    (n.max(1) as f64).log2()
}
