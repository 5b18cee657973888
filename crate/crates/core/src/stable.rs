//! Stability numbers by branch and bound, and the brute-force MWIS oracle.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use num_traits::Zero;

use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::weight::{Rational, WeightFunction};

pub const WORK_LIMIT_ENV: &str = "TREEALPHA_WORK_LIMIT";
const DEFAULT_WORK_LIMIT: u64 = 200_000_000;

/// Default vertex cap for [`mwis_bruteforce`].
pub const MWIS_ORACLE_LIMIT: usize = 22;

/// Node-expansion cap, from `TREEALPHA_WORK_LIMIT` when set.
pub fn default_work_limit() -> u64 {
    static LIMIT: OnceLock<u64> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(WORK_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_WORK_LIMIT)
    })
}

/// Exact maximum stable set search.
///
/// Branches on a maximum-degree vertex (exclude it, or take it and drop its
/// closed neighborhood). Simplicial vertices are taken without branching,
/// components are solved independently and a greedy clique cover bounds
/// each branch.
#[derive(Debug, Clone, Copy)]
pub struct StabilitySolver {
    limit: u64,
}

impl Default for StabilitySolver {
    fn default() -> Self {
        StabilitySolver { limit: default_work_limit() }
    }
}

impl StabilitySolver {
    pub fn with_limit(limit: u64) -> Self {
        StabilitySolver { limit }
    }

    pub fn max_stable_set(&self, g: &Graph, x: &VertexSet) -> Result<VertexSet> {
        g.check_subset(x)?;
        if x.is_empty() {
            return Ok(VertexSet::new());
        }
        let d = Dense::of_subset(g, x);
        let mut run = Run { d: &d, nodes: 0, limit: self.limit };
        let found = run.solve(d.full(), -1)?.unwrap_or_default();
        Ok(found.into_iter().map(|i| d.ids[i]).collect())
    }

    pub fn stability_number(&self, g: &Graph, x: &VertexSet) -> Result<usize> {
        self.max_stable_set(g, x).map(|s| s.len())
    }
}

pub fn stability_number(g: &Graph, x: &VertexSet) -> Result<usize> {
    StabilitySolver::default().stability_number(g, x)
}

pub fn max_stable_set(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    StabilitySolver::default().max_stable_set(g, x)
}

/// `α(G)`.
pub fn graph_stability(g: &Graph) -> Result<usize> {
    stability_number(g, &g.vertex_set())
}

struct Run<'a> {
    d: &'a Dense,
    nodes: u64,
    limit: u64,
}

impl Run<'_> {
    /// A maximum stable set of `G[p]` if its size exceeds `lb`, else `None`.
    fn solve(&mut self, mut p: FixedBitSet, lb: isize) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Resource(format!(
                "stability search exceeded {} nodes (set {WORK_LIMIT_ENV} to raise)",
                self.limit
            )));
        }
        let taken = self.reduce(&mut p);
        let k = taken.len() as isize;
        let finish = |rest: Option<Vec<usize>>, taken: Vec<usize>| {
            rest.map(|mut r| {
                r.extend(taken);
                r
            })
        };
        if p.is_clear() {
            return Ok(if k > lb { Some(taken) } else { None });
        }
        if k + self.cover_bound(&p) as isize <= lb {
            return Ok(None);
        }
        let comps = self.components(&p);
        if comps.len() > 1 {
            let mut all = taken;
            for c in comps {
                all.extend(self.solve(c, -1)?.unwrap_or_default());
            }
            return Ok(if all.len() as isize > lb { Some(all) } else { None });
        }
        let v = p
            .ones()
            .max_by_key(|&i| (self.d.rows[i].intersection(&p).count(), std::cmp::Reverse(i)))
            .expect("nonempty");
        let mut best = None;
        let mut cur = lb - k;
        let mut with_v = p.clone();
        with_v.difference_with(&self.d.closed(v));
        if let Some(mut s) = self.solve(with_v, cur - 1)? {
            s.push(v);
            cur = s.len() as isize;
            best = Some(s);
        }
        let mut without_v = p;
        without_v.set(v, false);
        if let Some(s) = self.solve(without_v, cur)? {
            best = Some(s);
        }
        Ok(finish(best, taken))
    }

    /// Repeatedly takes simplicial vertices of `G[p]`.
    fn reduce(&self, p: &mut FixedBitSet) -> Vec<usize> {
        let mut taken = Vec::new();
        loop {
            let found = p.ones().find(|&v| {
                let nb = self.d.rows[v].intersection(p).collect::<Vec<_>>();
                nb.iter().all(|&u| {
                    nb.iter().all(|&x| x == u || self.d.adjacent(u, x))
                })
            });
            match found {
                Some(v) => {
                    taken.push(v);
                    p.difference_with(&self.d.closed(v));
                }
                None => return taken,
            }
        }
    }

    fn cover_bound(&self, p: &FixedBitSet) -> usize {
        // common neighborhoods of the cliques built so far
        let mut cliques: Vec<FixedBitSet> = Vec::new();
        for v in p.ones() {
            match cliques.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(&self.d.rows[v]),
                None => {
                    let mut c = self.d.rows[v].clone();
                    c.intersect_with(p);
                    cliques.push(c);
                }
            }
        }
        cliques.len()
    }

    fn components(&self, p: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut left = p.clone();
        let mut out = Vec::new();
        while let Some(s) = left.minimum() {
            let mut comp = self.d.empty();
            let mut frontier = vec![s];
            comp.insert(s);
            left.set(s, false);
            while let Some(u) = frontier.pop() {
                for w in self.d.rows[u].intersection(&left).collect::<Vec<_>>() {
                    left.set(w, false);
                    comp.insert(w);
                    frontier.push(w);
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Maximum-weight stable set by exhaustive enumeration of stable sets.
/// Ties go to the set containing the smallest vertex of the symmetric
/// difference (see [`crate::weight::tie_prefers`]).
pub fn mwis_bruteforce(g: &Graph, w: &WeightFunction) -> Result<(VertexSet, Rational)> {
    mwis_bruteforce_with_limit(g, w, MWIS_ORACLE_LIMIT)
}

pub fn mwis_bruteforce_with_limit(
    g: &Graph,
    w: &WeightFunction,
    limit: usize,
) -> Result<(VertexSet, Rational)> {
    if g.len() > limit {
        return Err(Error::Resource(format!(
            "brute-force MWIS oracle is limited to {limit} vertices, got {}",
            g.len()
        )));
    }
    let d = Dense::new(g);
    let weights: Vec<Rational> = d.ids.iter().map(|&v| w.get(v)).collect();
    let mut best: Option<(Vec<usize>, Rational)> = None;
    let mut cur = Vec::new();
    enumerate(&d, &weights, 0, &mut d.empty(), &mut cur, &Rational::zero(), &mut best);
    let (set, weight) = best.expect("the empty set is always stable");
    Ok((set.iter().map(|&i| d.ids[i]).collect(), weight))
}

// Include-before-exclude in id order visits sets in the tie order, so only
// strict improvements replace the first leaf reached.
fn enumerate(
    d: &Dense,
    weights: &[Rational],
    i: usize,
    blocked: &mut FixedBitSet,
    cur: &mut Vec<usize>,
    acc: &Rational,
    best: &mut Option<(Vec<usize>, Rational)>,
) {
    if i == d.n() {
        if best.as_ref().is_none_or(|b| *acc > b.1) {
            *best = Some((cur.clone(), acc.clone()));
        }
        return;
    }
    if !blocked.contains(i) {
        let saved = blocked.clone();
        blocked.union_with(&d.rows[i]);
        cur.push(i);
        enumerate(d, weights, i + 1, blocked, cur, &(acc + &weights[i]), best);
        cur.pop();
        *blocked = saved;
    }
    enumerate(d, weights, i + 1, blocked, cur, acc, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::weight::rational;

    fn cycle(n: u32) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    pub(crate) fn petersen() -> Graph {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    fn brute_alpha(g: &Graph, x: &VertexSet) -> usize {
        let xs: Vec<_> = x.iter().copied().collect();
        (0u32..1 << xs.len())
            .filter_map(|m| {
                let s: VertexSet = (0..xs.len()).filter(|i| m >> i & 1 == 1).map(|i| xs[i]).collect();
                g.is_stable(&s).then_some(s.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_values() {
        let c5 = cycle(5);
        assert_eq!(graph_stability(&c5).unwrap(), 2);
        let mut e = vec![];
        for a in 0..2 {
            for x in 2..5 {
                e.push((a, x));
            }
        }
        assert_eq!(graph_stability(&Graph::from_edges(5, &e).unwrap()).unwrap(), 3);
        assert_eq!(stability_number(&c5, &vset([])).unwrap(), 0);
    }

    #[test]
    fn petersen_matches_enumeration() {
        let p = petersen();
        let all = p.vertex_set();
        assert_eq!(brute_alpha(&p, &all), 4);
        assert_eq!(graph_stability(&p).unwrap(), 4);
        let s = max_stable_set(&p, &all).unwrap();
        assert!(p.is_stable(&s));
    }

    #[test]
    fn work_limit_is_enforced() {
        let p = petersen();
        let err = StabilitySolver::with_limit(1).stability_number(&p, &p.vertex_set());
        assert!(matches!(err, Err(Error::Resource(_))));
    }

    #[test]
    fn mwis_examples() {
        let c5 = cycle(5);
        assert_eq!(mwis_bruteforce(&c5, &WeightFunction::unit(&c5)).unwrap().1, rational(2, 1));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let w = WeightFunction::new(
            [(0, rational(1, 1)), (1, rational(5, 1)), (2, rational(1, 1))].into(),
        )
        .unwrap();
        assert_eq!(mwis_bruteforce(&p3, &w).unwrap(), (vset([1]), rational(5, 1)));
        let p = petersen();
        assert_eq!(mwis_bruteforce(&p, &WeightFunction::unit(&p)).unwrap().1, rational(4, 1));
        // ties: {0,2} and {0,3} and {1,3} in C5; the preferred one has 0 and 2
        assert_eq!(mwis_bruteforce(&c5, &WeightFunction::unit(&c5)).unwrap().0, vset([0, 2]));
        let big = cycle(30);
        assert!(matches!(mwis_bruteforce(&big, &WeightFunction::unit(&big)), Err(Error::Resource(_))));
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_subset_enumeration(n in 1u32..14, bits in proptest::collection::vec(any::<bool>(), 91), pick in proptest::collection::vec(any::<bool>(), 14)) {
            let mut g = Graph::with_vertices(0..n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k % bits.len()] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let x: VertexSet = (0..n).filter(|i| pick[*i as usize]).collect();
            prop_assert_eq!(stability_number(&g, &x).unwrap(), brute_alpha(&g, &x));
        }
    }
}
