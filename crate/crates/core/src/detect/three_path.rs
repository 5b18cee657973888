//! Thetas, pyramids and generalized prisms.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::dense::Dense;
use crate::detect::paths::{induced_paths, reachable, Budget, Flow};
use crate::error::{invariant_err, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThreePathKind {
    Theta,
    Pyramid,
    Prism,
    PinchedPrism,
}

impl std::fmt::Display for ThreePathKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ThreePathKind::Theta => "theta",
            ThreePathKind::Pyramid => "pyramid",
            ThreePathKind::Prism => "prism",
            ThreePathKind::PinchedPrism => "pinched-prism",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Anchors {
    /// Two nonadjacent ends; every path runs from `a` to `b`.
    Theta { a: Vertex, b: Vertex },
    /// Path `i` runs from the apex to `base[i]`.
    Pyramid { apex: Vertex, base: [Vertex; 3] },
    /// Path `i` runs from `first[i]` to `second[i]`; for a pinched prism
    /// `first[0] == second[0]` and path 0 is that single vertex.
    Prism { first: [Vertex; 3], second: [Vertex; 3] },
}

/// A three-path configuration found as an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreePathConfig {
    pub kind: ThreePathKind,
    pub anchors: Anchors,
    pub paths: [Vec<Vertex>; 3],
}

impl ThreePathConfig {
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().flatten().copied().collect()
    }

    /// Re-checks the witness against `g`: the paths are induced, they end
    /// at the anchors, and every two of them induce a hole.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: &str| Err(invariant_err!("invalid {} witness: {msg}", self.kind));
        for p in &self.paths {
            if !g.is_induced_path(p) {
                return fail("a path is not induced");
            }
        }
        let ends: Vec<(Vertex, Vertex)> = self
            .paths
            .iter()
            .map(|p| (p[0], *p.last().expect("nonempty path")))
            .collect();
        match (&self.kind, &self.anchors) {
            (ThreePathKind::Theta, Anchors::Theta { a, b }) => {
                if g.adjacent(*a, *b) || ends.iter().any(|e| *e != (*a, *b)) {
                    return fail("ends do not match");
                }
            }
            (ThreePathKind::Pyramid, Anchors::Pyramid { apex, base }) => {
                if !g.is_clique(&base.iter().copied().collect()) || base.contains(apex) {
                    return fail("base is not a triangle");
                }
                if (0..3).any(|i| ends[i] != (*apex, base[i])) {
                    return fail("ends do not match");
                }
                if self.paths.iter().filter(|p| p.len() == 2).count() > 1 {
                    return fail("two paths of length one");
                }
            }
            (kind @ (ThreePathKind::Prism | ThreePathKind::PinchedPrism), Anchors::Prism { first, second }) => {
                let a: VertexSet = first.iter().copied().collect();
                let b: VertexSet = second.iter().copied().collect();
                if a.len() != 3 || b.len() != 3 || !g.is_clique(&a) || !g.is_clique(&b) {
                    return fail("anchors are not triangles");
                }
                let shared = a.intersection(&b).count();
                let expect = if *kind == ThreePathKind::Prism { 0 } else { 1 };
                if shared != expect {
                    return fail("triangle intersection does not match the kind");
                }
                if (0..3).any(|i| ends[i] != (first[i], second[i])) {
                    return fail("ends do not match");
                }
            }
            _ => return fail("anchors do not match the kind"),
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let u: VertexSet = self.paths[i].iter().chain(&self.paths[j]).copied().collect();
                if !g.induces_hole(&u) {
                    return fail("two paths do not induce a hole");
                }
            }
        }
        Ok(())
    }
}

/// Exactness contract for [`find_3pc`].
#[derive(Debug, Clone, Copy)]
pub struct DetectOptions {
    /// Graphs up to this many vertices are searched without a step budget.
    pub exact_limit: usize,
    /// Refuse (resource error) instead of searching above `exact_limit`.
    pub require_exact: bool,
    /// Step budget for graphs above `exact_limit`.
    pub step_limit: u64,
}

pub const DEFAULT_EXACT_LIMIT: usize = 14;

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            exact_limit: DEFAULT_EXACT_LIMIT,
            require_exact: true,
            step_limit: 20_000_000,
        }
    }
}

impl DetectOptions {
    pub fn exact_up_to(limit: usize) -> Self {
        DetectOptions { exact_limit: limit, ..Default::default() }
    }

    pub fn best_effort(step_limit: u64) -> Self {
        DetectOptions { require_exact: false, step_limit, ..Default::default() }
    }
}

/// Outcome of a search. `exact` is false only when a best-effort search ran
/// out of budget without finding a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detection {
    pub witness: Option<ThreePathConfig>,
    pub exact: bool,
}

/// Searches thetas, then pyramids, then generalized prisms, with anchors in
/// lexicographic order; the first witness found is returned.
pub fn find_3pc(g: &Graph, opts: &DetectOptions) -> Result<Detection> {
    let mut budget = if g.len() <= opts.exact_limit {
        Budget::unlimited()
    } else if opts.require_exact {
        return Err(Error::Resource(format!(
            "exact 3PC detection is limited to {} vertices, got {}",
            opts.exact_limit,
            g.len()
        )));
    } else {
        Budget::new(opts.step_limit)
    };
    let d = Dense::new(g);
    let mut search = Search { d: &d, budget: &mut budget, found: None };
    let _ = search.all();
    let witness = search.found.take();
    let exact = witness.is_some() || !budget.exhausted();
    if let Some(w) = &witness {
        w.validate(g)?;
    }
    Ok(Detection { witness, exact })
}

/// [`find_3pc`] with the default exactness contract.
pub fn find_3pc_exact(g: &Graph) -> Result<Option<ThreePathConfig>> {
    Ok(find_3pc(g, &DetectOptions::default())?.witness)
}

pub fn is_3pc_free(g: &Graph) -> Result<bool> {
    is_3pc_free_with(g, &DetectOptions::default())
}

pub fn is_3pc_free_with(g: &Graph, opts: &DetectOptions) -> Result<bool> {
    let det = find_3pc(g, opts)?;
    if !det.exact {
        return Err(Error::Resource("3PC search budget exhausted".into()));
    }
    Ok(det.witness.is_none())
}

/// Theta-freeness, by the theta stage of the search alone.
pub fn is_theta_free(g: &Graph) -> Result<bool> {
    let d = Dense::new(g);
    let mut budget = Budget::unlimited();
    let mut search = Search { d: &d, budget: &mut budget, found: None };
    let _ = search.thetas();
    Ok(search.found.is_none())
}

struct Candidate {
    seq: Vec<usize>,
    interior: FixedBitSet,
    /// closed neighborhood of the interior
    reach: FixedBitSet,
}

impl Candidate {
    fn compatible(&self, other: &Candidate) -> bool {
        self.interior.is_disjoint(&other.reach)
    }
}

struct Search<'a> {
    d: &'a Dense,
    budget: &'a mut Budget,
    found: Option<ThreePathConfig>,
}

impl Search<'_> {
    fn all(&mut self) -> Flow {
        self.thetas()?;
        self.pyramids()?;
        self.prisms()
    }

    fn collect(&mut self, s: usize, t: usize, interior: &FixedBitSet, min_len: usize) -> Option<Vec<Candidate>> {
        let d = self.d;
        let mut out = Vec::new();
        let flow = induced_paths(d, s, t, interior, min_len, self.budget, &mut |p| {
            let mut int = d.empty();
            for &v in &p[1..p.len() - 1] {
                int.insert(v);
            }
            let reach = d.closed_of(&int);
            out.push(Candidate { seq: p.to_vec(), interior: int, reach });
            Flow::Continue(())
        });
        if flow.is_break() {
            None
        } else {
            Some(out)
        }
    }

    fn ids(&self, seq: &[usize]) -> Vec<Vertex> {
        seq.iter().map(|&i| self.d.ids[i]).collect()
    }

    fn triangles(&self) -> Vec<[usize; 3]> {
        let d = self.d;
        let mut out = Vec::new();
        for a in 0..d.n() {
            for b in d.rows[a].ones().filter(|&b| b > a) {
                for c in d.rows[a].intersection(&d.rows[b]).filter(|&c| c > b) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    fn thetas(&mut self) -> Flow {
        let n = self.d.n();
        for a in 0..n {
            for b in a + 1..n {
                if self.d.adjacent(a, b) {
                    continue;
                }
                let mut interior = self.d.full();
                interior.set(a, false);
                interior.set(b, false);
                // three paths need three distinct neighbors on each side
                if self.d.rows[a].count_ones(..) < 3 || self.d.rows[b].count_ones(..) < 3 {
                    continue;
                }
                let Some(paths) = self.collect(a, b, &interior, 2) else {
                    return Flow::Break(());
                };
                if let Some([i, j, k]) = pick_triple(&paths, &paths, &paths, true) {
                    self.found = Some(ThreePathConfig {
                        kind: ThreePathKind::Theta,
                        anchors: Anchors::Theta { a: self.d.ids[a], b: self.d.ids[b] },
                        paths: [self.ids(&paths[i].seq), self.ids(&paths[j].seq), self.ids(&paths[k].seq)],
                    });
                    return Flow::Break(());
                }
            }
        }
        Flow::Continue(())
    }

    fn pyramids(&mut self) -> Flow {
        let d = self.d;
        for tri in self.triangles() {
            for apex in 0..d.n() {
                if tri.contains(&apex) || tri.iter().filter(|&&b| d.adjacent(apex, b)).count() > 1 {
                    continue;
                }
                let mut lists = Vec::with_capacity(3);
                for i in 0..3 {
                    let mut interior = d.full();
                    for &b in &tri {
                        interior.set(b, false);
                    }
                    interior.set(apex, false);
                    for (j, &b) in tri.iter().enumerate() {
                        if j != i {
                            interior.difference_with(&d.rows[b]);
                        }
                    }
                    if !reachable(d, apex, tri[i], &interior) {
                        break;
                    }
                    match self.collect(apex, tri[i], &interior, 1) {
                        Some(p) => lists.push(p),
                        None => return Flow::Break(()),
                    }
                }
                if lists.len() < 3 {
                    continue;
                }
                if let Some([i, j, k]) = pick_triple(&lists[0], &lists[1], &lists[2], false) {
                    self.found = Some(ThreePathConfig {
                        kind: ThreePathKind::Pyramid,
                        anchors: Anchors::Pyramid {
                            apex: d.ids[apex],
                            base: [d.ids[tri[0]], d.ids[tri[1]], d.ids[tri[2]]],
                        },
                        paths: [self.ids(&lists[0][i].seq), self.ids(&lists[1][j].seq), self.ids(&lists[2][k].seq)],
                    });
                    return Flow::Break(());
                }
            }
        }
        Flow::Continue(())
    }

    fn prisms(&mut self) -> Flow {
        let tris = self.triangles();
        for (x, a) in tris.iter().enumerate() {
            for b in &tris[x + 1..] {
                let shared: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
                match shared.len() {
                    0 => {
                        for perm in PERMS {
                            let bb = [b[perm[0]], b[perm[1]], b[perm[2]]];
                            self.prism_with(*a, bb)?;
                        }
                    }
                    1 => {
                        let s = shared[0];
                        let ar: Vec<usize> = a.iter().copied().filter(|&v| v != s).collect();
                        let br: Vec<usize> = b.iter().copied().filter(|&v| v != s).collect();
                        self.pinched_with(s, [ar[0], ar[1]], [br[0], br[1]])?;
                        self.pinched_with(s, [ar[0], ar[1]], [br[1], br[0]])?;
                    }
                    _ => {}
                }
            }
        }
        Flow::Continue(())
    }

    fn prism_with(&mut self, a: [usize; 3], b: [usize; 3]) -> Flow {
        let d = self.d;
        for i in 0..3 {
            for j in 0..3 {
                if i != j && d.adjacent(a[i], b[j]) {
                    return Flow::Continue(());
                }
            }
        }
        let mut lists = Vec::with_capacity(3);
        for i in 0..3 {
            let mut interior = d.full();
            for j in 0..3 {
                interior.set(a[j], false);
                interior.set(b[j], false);
                if j != i {
                    interior.difference_with(&d.rows[a[j]]);
                    interior.difference_with(&d.rows[b[j]]);
                }
            }
            if !d.adjacent(a[i], b[i]) && !reachable(d, a[i], b[i], &interior) {
                return Flow::Continue(());
            }
            match self.collect(a[i], b[i], &interior, 1) {
                Some(p) => lists.push(p),
                None => return Flow::Break(()),
            }
        }
        if let Some([i, j, k]) = pick_triple(&lists[0], &lists[1], &lists[2], false) {
            self.found = Some(ThreePathConfig {
                kind: ThreePathKind::Prism,
                anchors: Anchors::Prism {
                    first: a.map(|v| d.ids[v]),
                    second: b.map(|v| d.ids[v]),
                },
                paths: [self.ids(&lists[0][i].seq), self.ids(&lists[1][j].seq), self.ids(&lists[2][k].seq)],
            });
            return Flow::Break(());
        }
        Flow::Continue(())
    }

    fn pinched_with(&mut self, s: usize, a: [usize; 2], b: [usize; 2]) -> Flow {
        let d = self.d;
        if d.adjacent(a[0], b[1]) || d.adjacent(a[1], b[0]) {
            return Flow::Continue(());
        }
        let mut lists = Vec::with_capacity(2);
        for i in 0..2 {
            let mut interior = d.full();
            interior.difference_with(&d.closed(s));
            for j in 0..2 {
                interior.set(a[j], false);
                interior.set(b[j], false);
            }
            interior.difference_with(&d.rows[a[1 - i]]);
            interior.difference_with(&d.rows[b[1 - i]]);
            if !reachable(d, a[i], b[i], &interior) {
                return Flow::Continue(());
            }
            match self.collect(a[i], b[i], &interior, 2) {
                Some(p) => lists.push(p),
                None => return Flow::Break(()),
            }
        }
        for p in &lists[0] {
            if let Some(q) = lists[1].iter().find(|q| p.compatible(q)) {
                self.found = Some(ThreePathConfig {
                    kind: ThreePathKind::PinchedPrism,
                    anchors: Anchors::Prism {
                        first: [d.ids[s], d.ids[a[0]], d.ids[a[1]]],
                        second: [d.ids[s], d.ids[b[0]], d.ids[b[1]]],
                    },
                    paths: [vec![d.ids[s]], self.ids(&p.seq), self.ids(&q.seq)],
                });
                return Flow::Break(());
            }
        }
        Flow::Continue(())
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// First pairwise-compatible triple; with `same` the three lists are one
/// list and indices must increase.
fn pick_triple(p: &[Candidate], q: &[Candidate], r: &[Candidate], same: bool) -> Option<[usize; 3]> {
    for (i, a) in p.iter().enumerate() {
        let j0 = if same { i + 1 } else { 0 };
        for (j, b) in q.iter().enumerate().skip(j0) {
            if !a.compatible(b) {
                continue;
            }
            let k0 = if same { j + 1 } else { 0 };
            for (k, c) in r.iter().enumerate().skip(k0) {
                if a.compatible(c) && b.compatible(c) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}
