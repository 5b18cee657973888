//! Balanced separators: dominated separators by bounded search, the
//! clique-dominated separator, the high-degree stable filter and the loop
//! turning domination into small stability.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{input_err, invariant_err, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separate::{make_cooperative, separate_cooperative_pair};
use crate::stable::{max_stable_set, stability_number};
use crate::weight::{rational, Rational, WeightFunction};

/// `(L, d, r)`: stability budget for clique-pair cuts, domination budget,
/// clique-size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BreakabilityConfig {
    pub l: usize,
    pub d: usize,
    pub r: usize,
}

pub const DEFAULT_D: usize = 8;

impl BreakabilityConfig {
    pub fn new(l: usize, d: usize, r: usize) -> Result<Self> {
        if l == 0 || d == 0 || r == 0 {
            return Err(input_err!("L, d and r must all be at least 1 (got {l}, {d}, {r})"));
        }
        Ok(BreakabilityConfig { l, d, r })
    }

    /// `L = ⌈32 log2 n⌉` and `r = ⌈d (2 + log2 n)⌉`, each at least 1.
    pub fn for_graph(n: usize, d: usize) -> Result<Self> {
        let log = log2(n);
        let l = ((32.0 * log).ceil() as usize).max(1);
        let r = ((d as f64 * (2.0 + log)).ceil() as usize).max(1);
        BreakabilityConfig::new(l, d, r)
    }

    /// `C(d) = 100 d²`.
    pub fn c_d(&self) -> f64 {
        100.0 * (self.d * self.d) as f64
    }

    /// Stability allowance for `Z_i` after step `i`.
    pub fn step_bound(&self, i: usize) -> f64 {
        self.c_d() * self.l as f64 * (self.d * i).div_ceil(self.r) as f64 * i as f64 / 2.0
    }

    /// `C(d) ⌈d (2 + log2 n) / r⌉ (2 + log2 n) L`.
    pub fn separator_bound(&self, n: usize) -> f64 {
        let t = 2.0 + log2(n);
        self.c_d() * (self.d as f64 * t / self.r as f64).ceil() * t * self.l as f64
    }
}

pub(crate) fn log2(n: usize) -> f64 {
    if n <= 1 {
        0.0
    } else {
        (n as f64).log2()
    }
}

/// Separates two disjoint, anticomplete cliques in the given graph.
pub type CliqueSeparator<'a> = dyn Fn(&Graph, &VertexSet, &VertexSet) -> Result<VertexSet> + Sync + 'a;

/// The default clique separator: the recursive cooperative-pair separator.
pub fn cooperative_clique_separator(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
    let wrap = |x: &VertexSet| -> Result<_> {
        if !g.is_clique(x) {
            return Err(input_err!("clique separator called on a non-clique"));
        }
        Ok(make_cooperative(g, x)?.expect("cliques are cooperative"))
    };
    Ok(separate_cooperative_pair(g, &wrap(a)?, &wrap(b)?)?.cut)
}

fn check_normal(g: &Graph, w: &WeightFunction) -> Result<()> {
    if !w.is_normal_on(g) {
        return Err(input_err!("weight function is not normal on the graph"));
    }
    Ok(())
}

/// First component of `G \ cut` heavier than `c`.
pub fn heavy_component(g: &Graph, w: &WeightFunction, cut: &VertexSet, c: &Rational) -> Option<VertexSet> {
    g.components_unchecked(cut).into_iter().find(|comp| w.total(comp) > *c)
}

pub fn is_balanced_separator(g: &Graph, w: &WeightFunction, cut: &VertexSet, c: &Rational) -> Result<bool> {
    check_normal(g, w)?;
    if *c < Rational::zero() || *c >= Rational::one() {
        return Err(input_err!("balance parameter must lie in [0, 1)"));
    }
    g.check_subset(cut)?;
    Ok(heavy_component(g, w, cut, c).is_none())
}

fn half() -> Rational {
    rational(1, 2)
}

/// Knobs for the bounded dominated-separator search.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Largest subset size tried exhaustively after the greedy pass fails.
    pub exhaustive_cap: usize,
    /// Number of candidate sets the exhaustive pass may evaluate.
    pub eval_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { exhaustive_cap: 4, eval_budget: 200_000 }
    }
}

/// A set `Y` of at most `d_max` vertices with `N[Y]` a `(w, 1/2)`-balanced
/// separator, by a greedy pass and then bounded exhaustive search.
pub fn dominated_balanced_separator(
    g: &Graph,
    w: &WeightFunction,
    d_max: usize,
    opts: &SearchOptions,
) -> Result<Option<VertexSet>> {
    check_normal(g, w)?;
    let half = half();
    let closed = |y: &VertexSet| g.neighborhood_unchecked(y, true);
    let mut y = VertexSet::new();
    loop {
        let Some(heavy) = heavy_component(g, w, &closed(&y), &half) else {
            return Ok(Some(y));
        };
        if y.len() >= d_max {
            break;
        }
        let candidates = g.neighborhood_unchecked(&heavy, true);
        let mut best: Option<(Rational, Rational, Vertex)> = None;
        for &v in &candidates {
            let removed: VertexSet = g.closed_neighbors(v).intersection(&heavy).copied().collect();
            let rest: VertexSet = heavy.difference(&removed).copied().collect();
            let sub = g.induced(&rest);
            let worst = sub
                .components_unchecked(&VertexSet::new())
                .iter()
                .map(|c| w.total(c))
                .max()
                .unwrap_or_else(Rational::zero);
            let gain = w.total(&removed);
            let better = match &best {
                None => true,
                Some((bw, bg, _)) => worst < *bw || (worst == *bw && gain > *bg),
            };
            if better {
                best = Some((worst, gain, v));
            }
        }
        match best {
            Some((_, _, v)) => {
                y.insert(v);
            }
            None => break,
        }
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut evals = 0u64;
    for size in 1..=d_max.min(opts.exhaustive_cap).min(verts.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            evals += 1;
            if evals > opts.eval_budget {
                return Ok(None);
            }
            let cand: VertexSet = idx.iter().map(|&i| verts[i]).collect();
            if heavy_component(g, w, &closed(&cand), &half).is_none() {
                return Ok(Some(cand));
            }
            if !next_combination(&mut idx, verts.len()) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDominated {
    /// the dominating set found by the search
    pub x: VertexSet,
    /// a clique of at most `d` vertices
    pub k: VertexSet,
    /// `Y(K)`, disjoint from `K`
    pub y_k: VertexSet,
}

/// A clique `K` and a set `Y(K)` with `N[K] ∪ Y(K)` balanced.
pub fn clique_dominated_separator(
    g: &Graph,
    w: &WeightFunction,
    cfg: &BreakabilityConfig,
    sep: &CliqueSeparator<'_>,
    opts: &SearchOptions,
) -> Result<CliqueDominated> {
    check_normal(g, w)?;
    let half = half();
    let x = dominated_balanced_separator(g, w, cfg.d, opts)?.ok_or_else(|| {
        Error::Resource(format!(
            "no balanced separator dominated by at most {} vertices was found ({} vertices)",
            cfg.d,
            g.len()
        ))
    })?;
    let xs: Vec<Vertex> = x.iter().copied().collect();
    let mut y = x.clone();
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            if !g.adjacent(a, b) {
                y.extend(sep(g, &VertexSet::from([a]), &VertexSet::from([b]))?);
            }
        }
    }
    let k = match heavy_component(g, w, &y, &half) {
        None => VertexSet::new(),
        Some(heavy) => {
            let k: VertexSet = x
                .iter()
                .copied()
                .filter(|&v| g.neighbors(v).iter().any(|u| heavy.contains(u)))
                .collect();
            if !g.is_clique(&k) {
                return Err(invariant_err!("the dominating vertices next to the heavy component are not a clique"));
            }
            k
        }
    };
    let y_k: VertexSet = y.difference(&k).copied().collect();
    if k.len() > cfg.d {
        return Err(invariant_err!("clique of size {} exceeds d = {}", k.len(), cfg.d));
    }
    let alpha = stability_number(g, &y_k)?;
    if alpha > cfg.d * cfg.d * cfg.l {
        return Err(invariant_err!("alpha(Y(K)) = {alpha} exceeds d^2 L = {}", cfg.d * cfg.d * cfg.l));
    }
    let mut cut = g.neighborhood_unchecked(&k, true);
    cut.extend(&y_k);
    if heavy_component(g, w, &cut, &half).is_some() {
        return Err(invariant_err!("N[K] ∪ Y(K) is not balanced"));
    }
    Ok(CliqueDominated { x, k, y_k })
}

/// All vertices `z` with `c · α(N(z) ∩ Y) ≥ α(Y)`.
pub fn high_degree_stable_filter(g: &Graph, y: &VertexSet, c: usize) -> Result<VertexSet> {
    if c < 2 {
        return Err(input_err!("the filter parameter must be at least 2, got {c}"));
    }
    g.check_subset(y)?;
    let total = stability_number(g, y)?;
    let verts: Vec<Vertex> = g.vertices().collect();
    let hits: Vec<Result<bool>> = verts
        .par_iter()
        .map(|&z| {
            let local: VertexSet = g.neighbors(z).intersection(y).copied().collect();
            Ok(c * stability_number(g, &local)? >= total)
        })
        .collect();
    let mut out = VertexSet::new();
    for (&z, hit) in verts.iter().zip(hits) {
        if hit? {
            out.insert(z);
        }
    }
    Ok(out)
}

/// Splits a clique into chunks of at most `r` vertices in ascending order.
pub fn clique_partition(g: &Graph, members: &VertexSet, r: usize) -> Result<Vec<VertexSet>> {
    if r == 0 {
        return Err(input_err!("chunk size must be at least 1"));
    }
    g.check_subset(members)?;
    if !g.is_clique(members) {
        return Err(input_err!("clique_partition needs a clique"));
    }
    let v: Vec<Vertex> = members.iter().copied().collect();
    Ok(v.chunks(r).map(|c| c.iter().copied().collect()).collect())
}

#[derive(Debug, Clone, Default)]
pub struct LoopOptions {
    /// Apply the high-degree filter whenever `Bad` is nonempty instead of
    /// only above the `96 d²` threshold.
    pub eager_filter: bool,
    pub trace: bool,
    pub search: SearchOptions,
}

impl LoopOptions {
    pub fn eager() -> Self {
        LoopOptions { eager_filter: true, ..Default::default() }
    }
}

/// State after step `i` of the domination-to-stability loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IterationState {
    pub step: usize,
    pub z: VertexSet,
    pub l: VertexSet,
    pub k_list: Vec<VertexSet>,
    pub bad: VertexSet,
    pub alpha_z: usize,
    pub alpha_bad: usize,
    /// whether the high-degree filter (rather than all of `Bad`) was removed
    pub filtered: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalancedSeparatorResult {
    pub cut: VertexSet,
    pub alpha: usize,
    #[serde(serialize_with = "crate::weight::serialize_rational")]
    pub balance_c: Rational,
    pub bound: f64,
    pub steps: usize,
    pub trace: Vec<IterationState>,
}

/// Upper bound on the loop index.
pub fn max_steps(n: usize) -> usize {
    2 + log2(n).ceil() as usize
}

/// A `(w, 1/2)`-balanced separator with small stability number, built from
/// dominated separators and clique-pair cuts.
pub fn domination_to_stability(
    g: &Graph,
    w: &WeightFunction,
    cfg: &BreakabilityConfig,
    sep: &CliqueSeparator<'_>,
    opts: &LoopOptions,
) -> Result<BalancedSeparatorResult> {
    check_normal(g, w)?;
    let n = g.len();
    let half = half();
    let d = cfg.d;
    let threshold = if opts.eager_filter { 0 } else { 96 * d * d };
    let mut z_prev = VertexSet::new();
    let mut l_prev = VertexSet::new();
    let mut ks: Vec<VertexSet> = Vec::new();
    let mut bad = g.vertex_set();
    let mut trace = Vec::new();
    let mut i = 0;
    while heavy_component(g, w, &z_prev, &half).is_some() {
        i += 1;
        if i > max_steps(n) {
            return Err(invariant_err!("loop reached step {i} beyond 2 + ceil(log2 {n})"));
        }
        let alpha_bad = stability_number(g, &bad)?;
        let filtered = alpha_bad > threshold;
        let z = if filtered { high_degree_stable_filter(g, &bad, 2 * d)? } else { bad.clone() };
        let removed: VertexSet = z_prev.union(&z).copied().collect();
        let gp = g.without(&removed);
        let total = w.total_on(&gp);
        let (k_i, y_i) = if total.is_zero() {
            (VertexSet::new(), VertexSet::new())
        } else {
            let scaled = w.normalized_on(&gp.vertex_set()).expect("positive total");
            let cd = clique_dominated_separator(&gp, &scaled, cfg, sep, &opts.search)
                .map_err(|e| step_error(e, i))?;
            (cd.k, cd.y_k)
        };
        let parts: Vec<Result<VertexSet>> = k_i
            .iter()
            .copied()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&v| {
                let far: VertexSet = l_prev.iter().copied().filter(|&u| !g.adjacent(u, v)).collect();
                let mut zv = VertexSet::new();
                for chunk in clique_partition(g, &far, cfg.r)? {
                    zv.extend(sep(g, &VertexSet::from([v]), &chunk)?);
                }
                Ok(zv)
            })
            .collect();
        let mut z_i = z_prev.clone();
        for p in parts {
            z_i.extend(p.map_err(|e| step_error(e, i))?);
        }
        z_i.extend(&z);
        z_i.extend(&k_i);
        z_i.extend(&y_i);
        let open_k = gp.neighborhood_unchecked(&k_i, false);
        let bad_i: VertexSet = bad
            .iter()
            .copied()
            .filter(|v| open_k.contains(v) && !z_i.contains(v))
            .collect();
        let l_i = match heavy_component(g, w, &z_i, &half) {
            None => l_prev.clone(),
            Some(dp) => {
                let nd = g.neighborhood_unchecked(&dp, false);
                l_prev.iter().chain(k_i.iter()).copied().filter(|v| nd.contains(v)).collect()
            }
        };
        if !k_i.is_disjoint(&z_prev) {
            return Err(invariant_err!("step {i}: K_i meets Z_(i-1)"));
        }
        ks.push(k_i);
        let alpha_z = stability_number(g, &z_i)?;
        let alpha_bad_i = stability_number(g, &bad_i)?;
        let state = IterationState {
            step: i,
            z: z_i.clone(),
            l: l_i.clone(),
            k_list: ks.clone(),
            bad: bad_i.clone(),
            alpha_z,
            alpha_bad: alpha_bad_i,
            filtered,
        };
        check_state(g, w, cfg, &state).map_err(|e| match e {
            Error::Invariant(msg) => invariant_err!("{msg}; trace: {:?}", trace_summary(&trace, &state)),
            other => other,
        })?;
        if opts.trace {
            trace.push(state);
        }
        z_prev = z_i;
        l_prev = l_i;
        bad = bad_i;
    }
    let alpha = stability_number(g, &z_prev)?;
    let bound = cfg.separator_bound(n);
    if alpha as f64 > bound {
        return Err(invariant_err!("alpha of the separator {alpha} exceeds the bound {bound}"));
    }
    Ok(BalancedSeparatorResult { cut: z_prev, alpha, balance_c: half, bound, steps: i, trace })
}

fn step_error(e: Error, step: usize) -> Error {
    match e {
        Error::Resource(msg) => Error::Resource(format!("step {step}: {msg}")),
        Error::Invariant(msg) => Error::Invariant(format!("step {step}: {msg}")),
        other => other,
    }
}

fn trace_summary(trace: &[IterationState], last: &IterationState) -> Vec<(usize, usize, usize, usize)> {
    trace
        .iter()
        .chain(std::iter::once(last))
        .map(|s| (s.step, s.z.len(), s.alpha_z, s.alpha_bad))
        .collect()
}

/// Properties (I)-(VII) of the loop state after step `i`, except (I)
/// which needs `Z_(i-1)` and is checked by the caller.
fn check_state(g: &Graph, w: &WeightFunction, cfg: &BreakabilityConfig, s: &IterationState) -> Result<()> {
    let i = s.step;
    let n = g.len();
    let half = half();
    if s.alpha_z as f64 > cfg.step_bound(i) {
        return Err(invariant_err!("step {i}: alpha(Z_i) = {} exceeds {}", s.alpha_z, cfg.step_bound(i)));
    }
    if !s.bad.is_disjoint(&s.z) {
        return Err(invariant_err!("step {i}: Bad_i meets Z_i"));
    }
    for v in g.vertices().filter(|v| !s.z.contains(v)) {
        let sees_all = s.k_list.iter().all(|k| g.neighbors(v).iter().any(|u| k.contains(u)));
        if sees_all && !s.bad.contains(&v) {
            return Err(invariant_err!("step {i}: vertex {v} sees every K_j but is not in Bad_i"));
        }
    }
    if (s.alpha_bad as u128) << i.min(100) > n as u128 {
        return Err(invariant_err!("step {i}: alpha(Bad_i) = {} exceeds n / 2^i", s.alpha_bad));
    }
    if !g.is_clique(&s.l) || s.l.len() > cfg.d * i {
        return Err(invariant_err!("step {i}: L_i is not a clique of at most d*i vertices"));
    }
    for (j, k) in s.k_list.iter().enumerate() {
        let meet: VertexSet = k.intersection(&s.l).copied().collect();
        let mut cut = g.neighborhood_unchecked(&meet, false);
        cut.extend(&s.z);
        if heavy_component(g, w, &cut, &half).is_some() {
            return Err(invariant_err!("step {i}: Z_i ∪ N(K_{} ∩ L_i) is not balanced", j + 1));
        }
    }
    Ok(())
}

/// A maximum stable subset of `x`, uniformly weighted.
pub fn stable_weight(g: &Graph, x: &VertexSet) -> Result<(VertexSet, WeightFunction)> {
    let i = max_stable_set(g, x)?;
    let w = WeightFunction::uniform_on(&i)?;
    Ok((i, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    fn cycle(n: u32) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn balance_examples() {
        let g = cycle(6);
        let w = WeightFunction::unit(&g).normalized_on(&g.vertex_set()).unwrap();
        assert!(is_balanced_separator(&g, &w, &g.vertex_set(), &half()).unwrap());
        assert!(is_balanced_separator(&g, &w, &vset([0, 3]), &half()).unwrap());
        assert!(!is_balanced_separator(&g, &w, &vset([0]), &half()).unwrap());
        assert!(is_balanced_separator(&g, &WeightFunction::unit(&g), &vset([0]), &half()).is_err());
        assert!(is_balanced_separator(&g, &w, &vset([0]), &rational(1, 1)).is_err());
    }

    #[test]
    fn dominated_examples() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let w = WeightFunction::uniform_on(&star.vertex_set()).unwrap();
        let y = dominated_balanced_separator(&star, &w, 1, &SearchOptions::default()).unwrap().unwrap();
        assert_eq!(y, vset([0]));

        let g = cycle(6);
        let w = WeightFunction::uniform_on(&g.vertex_set()).unwrap();
        let y = dominated_balanced_separator(&g, &w, 1, &SearchOptions::default()).unwrap().unwrap();
        assert_eq!(y.len(), 1);

        let g = cycle(30);
        let w = WeightFunction::uniform_on(&g.vertex_set()).unwrap();
        assert_eq!(dominated_balanced_separator(&g, &w, 1, &SearchOptions::default()).unwrap(), None);
        let y = dominated_balanced_separator(&g, &w, 2, &SearchOptions::default()).unwrap().unwrap();
        assert!(is_balanced_separator(&g, &w, &g.neighborhood(&y, true).unwrap(), &half()).unwrap());
    }

    #[test]
    fn clique_dominated_on_cycle() {
        let g = cycle(20);
        let w = WeightFunction::uniform_on(&g.vertex_set()).unwrap();
        let cfg = BreakabilityConfig::for_graph(20, 2).unwrap();
        let r = clique_dominated_separator(&g, &w, &cfg, &cooperative_clique_separator, &SearchOptions::default())
            .unwrap();
        assert_eq!(r.x.len(), 2);
        assert!(g.is_clique(&r.k) && r.k.len() <= 2);
        let mut cut = g.neighborhood(&r.k, true).unwrap();
        cut.extend(&r.y_k);
        assert!(is_balanced_separator(&g, &w, &cut, &half()).unwrap());
    }

    #[test]
    fn clique_dominated_with_clique_x() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let w = WeightFunction::uniform_on(&star.vertex_set()).unwrap();
        let cfg = BreakabilityConfig::new(1, 1, 1).unwrap();
        let r = clique_dominated_separator(&star, &w, &cfg, &cooperative_clique_separator, &SearchOptions::default())
            .unwrap();
        assert_eq!(r.x, vset([0]));
        assert!(r.k.is_empty());
        assert_eq!(r.y_k, vset([0]));
    }

    #[test]
    fn filter_examples() {
        let g = Graph::with_vertices(0..5);
        assert!(high_degree_stable_filter(&g, &vset([0, 1, 2]), 2).unwrap().is_empty());
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let leaves = vset([1, 2, 3, 4, 5]);
        for c in 2..=5 {
            assert_eq!(high_degree_stable_filter(&star, &leaves, c).unwrap(), vset([0]));
        }
        assert!(high_degree_stable_filter(&star, &leaves, 1).is_err());
        let z2 = high_degree_stable_filter(&star, &vset([0, 1, 2]), 2).unwrap();
        let z3 = high_degree_stable_filter(&star, &vset([0, 1, 2]), 3).unwrap();
        assert!(z2.is_subset(&z3));
    }

    #[test]
    fn partition_examples() {
        let mut e = vec![];
        for u in 0..7 {
            for v in u + 1..7 {
                e.push((u, v));
            }
        }
        let k7 = Graph::from_edges(7, &e).unwrap();
        let p = clique_partition(&k7, &k7.vertex_set(), 3).unwrap();
        assert_eq!(p.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![3, 3, 1]);
        assert_eq!(p[0], vset([0, 1, 2]));
        assert_eq!(clique_partition(&k7, &k7.vertex_set(), 7).unwrap().len(), 1);
        assert!(clique_partition(&k7, &VertexSet::new(), 2).unwrap().is_empty());
        assert!(clique_partition(&cycle(5), &vset([0, 2]), 2).is_err());
    }

    #[test]
    fn loop_on_light_components() {
        // weight spread over four isolated vertices: nothing to remove
        let g = Graph::with_vertices(0..4);
        let w = WeightFunction::uniform_on(&g.vertex_set()).unwrap();
        let cfg = BreakabilityConfig::for_graph(4, 1).unwrap();
        let r = domination_to_stability(&g, &w, &cfg, &cooperative_clique_separator, &LoopOptions::default()).unwrap();
        assert!(r.cut.is_empty());
        assert_eq!(r.steps, 0);
    }

    #[test]
    fn loop_on_cycles() {
        for n in [5u32, 12, 31] {
            let g = cycle(n);
            let w = WeightFunction::uniform_on(&g.vertex_set()).unwrap();
            let cfg = BreakabilityConfig::for_graph(n as usize, 2).unwrap();
            for opts in [LoopOptions { trace: true, ..Default::default() }, LoopOptions { trace: true, ..LoopOptions::eager() }] {
                let r = domination_to_stability(&g, &w, &cfg, &cooperative_clique_separator, &opts).unwrap();
                assert!(is_balanced_separator(&g, &w, &r.cut, &half()).unwrap());
                assert!(r.steps <= max_steps(n as usize));
                assert_eq!(r.trace.len(), r.steps);
            }
        }
    }
}
