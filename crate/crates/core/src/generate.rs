//! Gadgets and random graph families.
//!
//! Specs read as `family(arg,...)`, e.g. `theta(2,2,2)`, `wheel(9,0,3,6)`
//! (hole length, then hub neighbors) or `chordal-random(30,0.3,7)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detect::{is_3pc_free_with, DetectOptions};
use crate::error::{input_err, Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Theta(usize, usize, usize),
    Pyramid(usize, usize, usize),
    Prism(usize, usize, usize),
    PinchedPrism(usize, usize),
    Wheel { hole_len: usize, hub_neighbors: Vec<usize> },
    ChordalRandom { n: usize, density: f64, seed: u64 },
    TpcFreeRandom { n: usize, p: f64, seed: u64, max_rejects: usize },
    /// Clique-sums of `pieces` verified 3PC-free random graphs on
    /// `piece_n` vertices, glued along a vertex or an edge.
    TpcFreeComposite { pieces: usize, piece_n: usize, p: f64, seed: u64 },
    Cycle(usize),
    Clique(usize),
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorSpec::*;
        match self {
            Theta(a, b, c) => write!(f, "theta({a},{b},{c})"),
            Pyramid(a, b, c) => write!(f, "pyramid({a},{b},{c})"),
            Prism(a, b, c) => write!(f, "prism({a},{b},{c})"),
            PinchedPrism(a, b) => write!(f, "pinched-prism({a},{b})"),
            Wheel { hole_len, hub_neighbors } => {
                write!(f, "wheel({hole_len}")?;
                for x in hub_neighbors {
                    write!(f, ",{x}")?;
                }
                write!(f, ")")
            }
            ChordalRandom { n, density, seed } => write!(f, "chordal-random({n},{density},{seed})"),
            TpcFreeRandom { n, p, seed, max_rejects } => write!(f, "tpcfree-random({n},{p},{seed},{max_rejects})"),
            TpcFreeComposite { pieces, piece_n, p, seed } => {
                write!(f, "tpcfree-composite({pieces},{piece_n},{p},{seed})")
            }
            Cycle(n) => write!(f, "cycle({n})"),
            Clique(n) => write!(f, "clique({n})"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s.split_once('(').ok_or_else(|| input_err!("expected family(args), got {s:?}"))?;
        let args: Vec<&str> = rest
            .strip_suffix(')')
            .ok_or_else(|| input_err!("missing ')' in {s:?}"))?
            .split(',')
            .map(str::trim)
            .filter(|a| !a.is_empty())
            .collect();
        let int = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| input_err!("argument {} of {s:?} must be an integer", i + 1))
        };
        let float = |i: usize| -> Result<f64> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| input_err!("argument {} of {s:?} must be a number", i + 1))
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(input_err!("{name} takes {k} arguments, got {}", args.len()))
            }
        };
        use GeneratorSpec::*;
        let spec = match name.trim() {
            "theta" => {
                arity(3)?;
                Theta(int(0)?, int(1)?, int(2)?)
            }
            "pyramid" => {
                arity(3)?;
                Pyramid(int(0)?, int(1)?, int(2)?)
            }
            "prism" => {
                arity(3)?;
                Prism(int(0)?, int(1)?, int(2)?)
            }
            "pinched-prism" => {
                arity(2)?;
                PinchedPrism(int(0)?, int(1)?)
            }
            "wheel" => Wheel {
                hole_len: int(0)?,
                hub_neighbors: (1..args.len()).map(int).collect::<Result<_>>()?,
            },
            "chordal-random" => {
                arity(3)?;
                ChordalRandom { n: int(0)?, density: float(1)?, seed: int(2)? as u64 }
            }
            "tpcfree-random" => {
                arity(4)?;
                TpcFreeRandom { n: int(0)?, p: float(1)?, seed: int(2)? as u64, max_rejects: int(3)? }
            }
            "tpcfree-composite" => {
                arity(4)?;
                TpcFreeComposite { pieces: int(0)?, piece_n: int(1)?, p: float(2)?, seed: int(3)? as u64 }
            }
            "cycle" => {
                arity(1)?;
                Cycle(int(0)?)
            }
            "clique" => {
                arity(1)?;
                Clique(int(0)?)
            }
            other => return Err(input_err!("unknown family {other:?}")),
        };
        Ok(spec)
    }
}

/// Incremental builder that hands out fresh ids.
struct Builder {
    g: Graph,
    next: Vertex,
}

impl Builder {
    fn new() -> Self {
        Builder { g: Graph::new(), next: 0 }
    }

    fn fresh(&mut self) -> Vertex {
        let v = self.next;
        self.next += 1;
        self.g.add_vertex(v);
        v
    }

    fn edge(&mut self, u: Vertex, v: Vertex) {
        self.g.add_edge(u, v).expect("distinct fresh vertices");
    }

    /// Path of `len` edges from `a` to `b` through fresh vertices.
    fn path(&mut self, a: Vertex, b: Vertex, len: usize) {
        let mut prev = a;
        for _ in 1..len {
            let x = self.fresh();
            self.edge(prev, x);
            prev = x;
        }
        self.edge(prev, b);
    }

    fn triangle(&mut self) -> [Vertex; 3] {
        let t = [self.fresh(), self.fresh(), self.fresh()];
        self.edge(t[0], t[1]);
        self.edge(t[1], t[2]);
        self.edge(t[0], t[2]);
        t
    }
}

fn check_prob(p: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(input_err!("{what} must lie in [0, 1], got {p}"))
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(input_err!("a cycle needs at least 3 vertices"));
    }
    let n = n as u32;
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn clique(n: usize) -> Graph {
    let n = n as u32;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).expect("valid ids")
}

/// Chordal graph from a random construction order: each new vertex joins
/// `{u}` plus each earlier neighbor of a random earlier vertex `u` with
/// probability `density`. The reverse construction order is a perfect
/// elimination order. Ids are shuffled at the end.
pub fn chordal_random(n: usize, density: f64, seed: u64) -> Result<Graph> {
    check_prob(density, "density")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut nb = Vec::new();
        if v > 0 {
            let u = rng.gen_range(0..v);
            nb.push(u);
            for &x in &back[u] {
                if rng.gen_bool(density) {
                    nb.push(x);
                }
            }
        }
        back.push(nb);
    }
    let mut label: Vec<Vertex> = (0..n as u32).collect();
    label.shuffle(&mut rng);
    let edges: Vec<_> = back.iter().enumerate().flat_map(|(v, nb)| nb.iter().map(move |&u| (v, u))).map(|(v, u)| (label[v], label[u])).collect();
    Graph::from_edges(n as u32, &edges)
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::with_vertices(0..n as u32);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct");
            }
        }
    }
    g
}

fn exact(n: usize) -> DetectOptions {
    DetectOptions::exact_up_to(n.max(crate::detect::three_path::DEFAULT_EXACT_LIMIT))
}

fn tpcfree_sample(n: usize, p: f64, rng: &mut ChaCha8Rng, max_rejects: usize) -> Result<Graph> {
    for _ in 0..=max_rejects {
        let g = gnp(n, p, rng);
        if is_3pc_free_with(&g, &exact(n))? {
            return Ok(g);
        }
    }
    Err(Error::Resource(format!("no 3PC-free sample in {} tries", max_rejects + 1)))
}

pub fn tpcfree_random(n: usize, p: f64, seed: u64, max_rejects: usize) -> Result<Graph> {
    check_prob(p, "p")?;
    tpcfree_sample(n, p, &mut ChaCha8Rng::seed_from_u64(seed), max_rejects)
}

/// Glues `piece` onto `g` by identifying a random vertex or edge of the
/// piece with one of `g` (or nothing, when either side has none). Returns
/// the id each piece vertex received.
pub fn clique_sum(g: &mut Graph, piece: &Graph, rng: &mut ChaCha8Rng) -> std::collections::BTreeMap<Vertex, Vertex> {
    let base = g.max_vertex().map_or(0, |m| m + 1);
    let g_edges: Vec<_> = g.edges().collect();
    let p_edges: Vec<_> = piece.edges().collect();
    let p_verts: Vec<_> = piece.vertices().collect();
    let g_verts: Vec<_> = g.vertices().collect();
    let mut glue: Vec<(Vertex, Vertex)> = Vec::new();
    if !g_verts.is_empty() && !p_verts.is_empty() {
        if rng.gen_bool(0.5) && !g_edges.is_empty() && !p_edges.is_empty() {
            let (a, b) = *g_edges.choose(rng).expect("nonempty");
            let (x, y) = *p_edges.choose(rng).expect("nonempty");
            glue = vec![(x, a), (y, b)];
        } else {
            glue = vec![(*p_verts.choose(rng).expect("nonempty"), *g_verts.choose(rng).expect("nonempty"))];
        }
    }
    let mut next = base;
    let map: std::collections::BTreeMap<Vertex, Vertex> = p_verts
        .iter()
        .map(|&v| match glue.iter().find(|(x, _)| *x == v) {
            Some(&(_, a)) => (v, a),
            None => {
                next += 1;
                (v, next - 1)
            }
        })
        .collect();
    for &v in map.values() {
        g.add_vertex(v);
    }
    for (u, v) in p_edges {
        let (a, b) = (map[&u], map[&v]);
        if !g.adjacent(a, b) {
            g.add_edge(a, b).expect("distinct");
        }
    }
    map
}

/// 3PC-free because thetas, pyramids and prisms have no clique cutset, so
/// any such configuration would lie inside one piece.
pub fn tpcfree_composite(pieces: usize, piece_n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_prob(p, "p")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    for _ in 0..pieces {
        let piece = tpcfree_sample(piece_n, p, &mut rng, 10_000)?;
        clique_sum(&mut g, &piece, &mut rng);
    }
    Ok(g)
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    use GeneratorSpec::*;
    let mut b = Builder::new();
    match *spec {
        Theta(l1, l2, l3) => {
            if [l1, l2, l3].iter().any(|&l| l < 2) {
                return Err(input_err!("theta paths need length at least 2"));
            }
            let (a, z) = (b.fresh(), b.fresh());
            for l in [l1, l2, l3] {
                b.path(a, z, l);
            }
        }
        Pyramid(l1, l2, l3) => {
            let ls = [l1, l2, l3];
            if ls.contains(&0) || ls.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(input_err!("pyramid paths need length at least 1, with at most one of length 1"));
            }
            let apex = b.fresh();
            let t = b.triangle();
            for i in 0..3 {
                b.path(apex, t[i], ls[i]);
            }
        }
        Prism(l1, l2, l3) => {
            let ls = [l1, l2, l3];
            if ls.contains(&0) {
                return Err(input_err!("prism paths need length at least 1"));
            }
            let (s, t) = (b.triangle(), b.triangle());
            for i in 0..3 {
                b.path(s[i], t[i], ls[i]);
            }
        }
        PinchedPrism(l2, l3) => {
            if l2 < 2 || l3 < 2 {
                return Err(input_err!("pinched prism paths need length at least 2"));
            }
            let s = b.triangle();
            let (x, y) = (b.fresh(), b.fresh());
            b.edge(s[0], x);
            b.edge(s[0], y);
            b.edge(x, y);
            b.path(s[1], x, l2);
            b.path(s[2], y, l3);
        }
        Wheel { hole_len, ref hub_neighbors } => {
            let mut g = cycle(hole_len)?;
            let hub = hole_len as Vertex;
            g.add_vertex(hub);
            for &x in hub_neighbors {
                if x >= hole_len {
                    return Err(input_err!("hub neighbor {x} is not on the hole"));
                }
                g.add_edge(hub, x as Vertex)?;
            }
            return Ok(g);
        }
        ChordalRandom { n, density, seed } => return chordal_random(n, density, seed),
        TpcFreeRandom { n, p, seed, max_rejects } => return tpcfree_random(n, p, seed, max_rejects),
        TpcFreeComposite { pieces, piece_n, p, seed } => return tpcfree_composite(pieces, piece_n, p, seed),
        Cycle(n) => return cycle(n),
        Clique(n) => return Ok(clique(n)),
    }
    Ok(b.g)
}
