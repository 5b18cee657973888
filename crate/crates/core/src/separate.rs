//! Separators between far-apart parts of a 3PC-free graph: the wheel cutset,
//! cooperative subgraphs and the recursive cooperative-pair separator.

use serde::Serialize;

use crate::detect::wheel::{Sector, UsefulWheel};
use crate::error::{input_err, invariant_err, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::stable::stability_number;

/// Upper bound on the stability number of the common neighborhood of two
/// disjoint, anticomplete cooperative subgraphs of a 3PC-free graph.
pub const COMMON_NEIGHBOR_ALPHA: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    Clique,
    InteriorConnected,
}

/// A vertex set `H` that is a clique, or whose interior `H \ δ(H)` is
/// connected and has exactly `δ(H)` as its neighborhood inside `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CooperativeSubgraph {
    pub members: VertexSet,
    pub boundary: VertexSet,
    pub certificate: Certificate,
}

impl CooperativeSubgraph {
    pub fn interior(&self) -> VertexSet {
        self.members.difference(&self.boundary).copied().collect()
    }
}

/// `δ(H)`: members of `h` with a neighbor outside `h`.
pub fn boundary(g: &Graph, h: &VertexSet) -> VertexSet {
    h.iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|u| !h.contains(u)))
        .collect()
}

pub fn make_cooperative(g: &Graph, members: &VertexSet) -> Result<Option<CooperativeSubgraph>> {
    if members.is_empty() {
        return Err(input_err!("a cooperative subgraph needs at least one vertex"));
    }
    g.check_subset(members)?;
    let boundary = boundary(g, members);
    if g.is_clique(members) {
        return Ok(Some(CooperativeSubgraph { members: members.clone(), boundary, certificate: Certificate::Clique }));
    }
    let interior: VertexSet = members.difference(&boundary).copied().collect();
    if interior.is_empty() || !g.is_connected_set(&interior) {
        return Ok(None);
    }
    let touched: VertexSet = g
        .neighborhood_unchecked(&interior, false)
        .intersection(members)
        .copied()
        .collect();
    if touched != boundary {
        return Ok(None);
    }
    Ok(Some(CooperativeSubgraph {
        members: members.clone(),
        boundary,
        certificate: Certificate::InteriorConnected,
    }))
}

fn require_cooperative(g: &Graph, members: &VertexSet, what: &str) -> Result<CooperativeSubgraph> {
    make_cooperative(g, members)?
        .ok_or_else(|| invariant_err!("{what} ({} vertices) is not cooperative", members.len()))
}

/// `N[H]`, re-verified as a cooperative subgraph of `g`.
pub fn grow_cooperative(g: &Graph, h: &CooperativeSubgraph) -> Result<CooperativeSubgraph> {
    g.check_subset(&h.members)?;
    let grown = g.neighborhood_unchecked(&h.members, true);
    require_cooperative(g, &grown, "closed neighborhood of a cooperative subgraph")
}

fn check_apart(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    g.check_subset(a)?;
    g.check_subset(b)?;
    if !a.is_disjoint(b) {
        return Err(input_err!("the two sides intersect"));
    }
    if !g.anticomplete(a, b) {
        return Err(input_err!("the two sides are adjacent"));
    }
    Ok(())
}

fn common_neighbors(g: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
    let na = g.neighborhood_unchecked(a, false);
    let nb = g.neighborhood_unchecked(b, false);
    na.intersection(&nb).copied().collect()
}

/// `α(N(H1) ∩ N(H2))`.
pub fn common_neighbor_stability(g: &Graph, h1: &CooperativeSubgraph, h2: &CooperativeSubgraph) -> Result<usize> {
    check_apart(g, &h1.members, &h2.members)?;
    stability_number(g, &common_neighbors(g, &h1.members, &h2.members))
}

/// `((N(s1) ∪ N(s2)) \ W) ∪ N(v)` for a long sector with ends `s1, s2` of
/// the wheel `(W, v)`.
pub fn wheel_separator(g: &Graph, wheel: &UsefulWheel, sector: &Sector) -> Result<VertexSet> {
    if !wheel.sectors.contains(sector) {
        return Err(input_err!("{:?} is not a sector of the wheel", sector.path));
    }
    if !sector.is_long() {
        return Err(input_err!("sector {:?} is not long", sector.path));
    }
    let (s1, s2) = sector.ends();
    let hole: VertexSet = wheel.hole.iter().copied().collect();
    let mut x: VertexSet = g
        .neighbors(s1)
        .union(g.neighbors(s2))
        .filter(|u| !hole.contains(u))
        .copied()
        .collect();
    x.extend(g.neighbors(wheel.hub));
    Ok(x)
}

/// The two sides a wheel separator is meant to split: the sector interior
/// and the rest of the hole outside the sector.
pub fn wheel_sides(wheel: &UsefulWheel, sector: &Sector) -> (VertexSet, VertexSet) {
    let inner: VertexSet = sector.interior().iter().copied().collect();
    let on_sector: VertexSet = sector.path.iter().copied().collect();
    let outer = wheel.hole.iter().copied().filter(|v| !on_sector.contains(v)).collect();
    (inner, outer)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    /// `n - |H1| - |H2|` on entry to the step
    pub measure: usize,
    pub n1: VertexSet,
    pub n2: VertexSet,
    pub z: VertexSet,
    pub f1_size: usize,
    pub f2_size: usize,
    /// whether the roles of the sides were exchanged for the next step
    pub swapped: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparatorResult {
    pub cut: VertexSet,
    pub alpha: usize,
    /// `32 log2(n + 1 - |H1| - |H2|)`
    pub bound: f64,
    pub depth: usize,
    pub log: Vec<StepRecord>,
}

pub fn separator_bound(measure: usize) -> f64 {
    2.0 * COMMON_NEIGHBOR_ALPHA as f64 * ((measure + 1) as f64).log2()
}

/// A set disjoint from `H1 ∪ H2` separating them, built by peeling common
/// neighborhoods and recursing into the smaller half.
pub fn separate_cooperative_pair(
    g: &Graph,
    h1: &CooperativeSubgraph,
    h2: &CooperativeSubgraph,
) -> Result<SeparatorResult> {
    check_apart(g, &h1.members, &h2.members)?;
    let initial = g.len() - h1.members.len() - h2.members.len();
    let bound = separator_bound(initial);
    let mut cut = VertexSet::new();
    let mut log = Vec::new();
    let mut cur = g.clone();
    let mut a = h1.members.clone();
    let mut b = h2.members.clone();
    loop {
        let measure = cur.len() - a.len() - b.len();
        if measure == 0 {
            break;
        }
        require_cooperative(&cur, &a, "first side")?;
        require_cooperative(&cur, &b, "second side")?;
        let n1 = common_neighbors(&cur, &a, &b);
        let g2 = cur.without(&n1);
        let b_grown = g2.neighborhood_unchecked(&b, true);
        let n2 = common_neighbors(&g2, &a, &b_grown);
        for (name, set) in [("N1", &n1), ("N2", &n2)] {
            let alpha = stability_number(&cur, set)?;
            if alpha > COMMON_NEIGHBOR_ALPHA {
                return Err(invariant_err!(
                    "alpha({name}) = {alpha} exceeds {COMMON_NEIGHBOR_ALPHA}; the graph is not 3PC-free"
                ));
            }
        }
        cut.extend(&n1);
        cut.extend(&n2);
        let g3 = g2.without(&n2);
        let start = *a.first().expect("nonempty side");
        let f = g3.component_of(start, &VertexSet::new()).expect("side survives");
        if f.is_disjoint(&b) {
            log.push(StepRecord { measure, n1, n2, z: VertexSet::new(), f1_size: 0, f2_size: 0, swapped: false });
            break;
        }
        let fg = g3.induced(&f);
        if let Some(dist) = fg.bfs_distance(&a, &b) {
            if dist <= 3 {
                return Err(invariant_err!("sides at distance {dist} after peeling; the graph is not 3PC-free"));
            }
        }
        let x = fg.ball_shell(&a, 2);
        let d2 = fg
            .component_of(*b.first().expect("nonempty side"), &x)
            .ok_or_else(|| invariant_err!("second side meets the second neighborhood of the first"))?;
        let z = fg.neighborhood_unchecked(&d2, false);
        if z.is_empty() {
            log.push(StepRecord { measure, n1, n2, z, f1_size: 0, f2_size: 0, swapped: false });
            break;
        }
        let f1 = fg.component_of(start, &z).expect("first side avoids Z");
        let f2 = d2;
        if fg.neighborhood_unchecked(&f1, false) != z || !f1.is_disjoint(&b) {
            return Err(invariant_err!("the component of the first side is not full for Z"));
        }
        let rest1 = f1.len() - a.len();
        let rest2 = f2.len() - b.len();
        let swapped = rest1 > rest2;
        log.push(StepRecord {
            measure,
            n1,
            n2,
            z: z.clone(),
            f1_size: f1.len(),
            f2_size: f2.len(),
            swapped,
        });
        let mut fprime: VertexSet = f1.union(&f2).copied().collect();
        fprime.extend(&z);
        cur = fg.induced(&fprime);
        if swapped {
            a = f1.union(&z).copied().collect();
        } else {
            b = f2.union(&z).copied().collect();
        }
    }
    let depth = log.len();
    let alpha = stability_number(g, &cut)?;
    if !cut.is_disjoint(&h1.members) || !cut.is_disjoint(&h2.members) {
        return Err(invariant_err!("cut meets one of the sides"));
    }
    if !g.separates_unchecked(&cut, &h1.members, &h2.members) {
        return Err(invariant_err!("cut does not separate the sides"));
    }
    if alpha as f64 > bound + 1e-9 {
        return Err(invariant_err!("alpha(cut) = {alpha} exceeds the bound {bound:.3}"));
    }
    if initial > 0 && depth as f64 > 1.0 + ((initial + 1) as f64).log2() + 1e-9 {
        return Err(invariant_err!("recursion depth {depth} exceeds 1 + log2({})", initial + 1));
    }
    Ok(SeparatorResult { cut, alpha, bound, depth, log })
}

/// [`separate_cooperative_pair`] on two nonadjacent vertices.
pub fn separate_vertex_pair(g: &Graph, a: Vertex, b: Vertex) -> Result<SeparatorResult> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(input_err!("cannot separate vertex {a} from itself"));
    }
    if g.adjacent(a, b) {
        return Err(input_err!("vertices {a} and {b} are adjacent"));
    }
    let single = |v: Vertex| CooperativeSubgraph {
        members: VertexSet::from([v]),
        boundary: boundary(g, &VertexSet::from([v])),
        certificate: Certificate::Clique,
    };
    separate_cooperative_pair(g, &single(a), &single(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::wheel::sectors;
    use crate::graph::vset;

    fn cycle(n: u32) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn cooperative_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c = make_cooperative(&g, &vset([0, 1, 2])).unwrap().unwrap();
        assert_eq!(c.certificate, Certificate::Clique);
        assert_eq!(c.boundary, vset([2]));

        // P5 0..4 with outside neighbors only at its ends
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (4, 6)]).unwrap();
        let c = make_cooperative(&g, &vset([0, 1, 2, 3, 4])).unwrap().unwrap();
        assert_eq!(c.certificate, Certificate::InteriorConnected);
        assert_eq!(c.boundary, vset([0, 4]));

        assert_eq!(make_cooperative(&g, &vset([0, 4])).unwrap(), None);
        assert!(make_cooperative(&g, &VertexSet::new()).is_err());
    }

    #[test]
    fn growing() {
        let g = cycle(6);
        let v = make_cooperative(&g, &vset([0])).unwrap().unwrap();
        let n = grow_cooperative(&g, &v).unwrap();
        assert_eq!(n.members, vset([5, 0, 1]));
        assert_eq!(n.certificate, Certificate::InteriorConnected);
        assert_eq!(n.interior(), vset([0]));

        let whole = make_cooperative(&g, &g.vertex_set()).unwrap().unwrap();
        assert!(whole.boundary.is_empty());
        assert_eq!(grow_cooperative(&g, &whole).unwrap().members, g.vertex_set());
    }

    #[test]
    fn common_neighbors_of_far_sides() {
        let g = cycle(12);
        let a = make_cooperative(&g, &vset([0])).unwrap().unwrap();
        let b = make_cooperative(&g, &vset([6])).unwrap().unwrap();
        assert_eq!(common_neighbor_stability(&g, &a, &b).unwrap(), 0);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let a = make_cooperative(&star, &vset([1])).unwrap().unwrap();
        let b = make_cooperative(&star, &vset([2])).unwrap().unwrap();
        assert_eq!(common_neighbor_stability(&star, &a, &b).unwrap(), 1);
        let c = make_cooperative(&star, &vset([0])).unwrap().unwrap();
        assert!(common_neighbor_stability(&star, &a, &c).is_err());
    }

    #[test]
    fn wheel_cut_in_bare_wheel() {
        let mut g = cycle(8);
        g.add_vertex(8);
        g.add_edge(8, 0).unwrap();
        g.add_edge(8, 4).unwrap();
        let hole: Vec<Vertex> = (0..8).collect();
        let secs = sectors(&g, &hole, 8).unwrap();
        let wheel = UsefulWheel { hole, hub: 8, sectors: secs.clone() };
        let x = wheel_separator(&g, &wheel, &secs[0]).unwrap();
        assert_eq!(x, vset([0, 4, 8]));
        assert!(g.separates(&x, &vset([1, 2, 3]), &vset([5, 6, 7])).unwrap());
        let (inner, outer) = wheel_sides(&wheel, &secs[0]);
        assert_eq!((inner, outer), (vset([1, 2, 3]), vset([5, 6, 7])));
        let short = Sector { path: vec![0, 1] };
        assert!(wheel_separator(&g, &wheel, &short).is_err());
    }

    #[test]
    fn pair_separation() {
        let g = cycle(20);
        let r = separate_vertex_pair(&g, 0, 10).unwrap();
        assert!(g.separates(&r.cut, &vset([0]), &vset([10])).unwrap());
        assert!(r.alpha as f64 <= 32.0 * 19f64.log2());
        assert!(separate_vertex_pair(&g, 0, 1).is_err());

        // sides that already cover the graph
        let g = Graph::from_edges(2, &[]).unwrap();
        let r = separate_vertex_pair(&g, 0, 1).unwrap();
        assert!(r.cut.is_empty() && r.bound == 0.0);

        // different components
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(separate_vertex_pair(&g, 0, 3).unwrap().cut.is_empty());

        let g = cycle(6);
        let r = separate_vertex_pair(&g, 0, 3).unwrap();
        assert!(g.separates(&r.cut, &vset([0]), &vset([3])).unwrap());
    }

    #[test]
    fn long_path_recurses() {
        let n = 40;
        let g = Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let r = separate_vertex_pair(&g, 0, n - 1).unwrap();
        assert!(g.separates(&r.cut, &vset([0]), &vset([n - 1])).unwrap());
        assert!(r.depth >= 1);
    }
}
