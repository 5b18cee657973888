use num_traits::One;
use serde::Serialize;

use crate::balance::{
    cooperative_clique_separator, domination_to_stability, heavy_component, log2, BreakabilityConfig, LoopOptions,
};
use crate::decompose::td::{bag_stability, validate_tree_decomposition, TdNode, TreeDecomposition};
use crate::detect::{is_3pc_free_with, DetectOptions};
use crate::error::{input_err, invariant_err, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::stable::{max_stable_set, stability_number};
use crate::weight::{format_rational, rational, Rational, WeightFunction};

/// Returns a cut of the given graph that is balanced for the given normal
/// weights.
pub type SeparatorOracle<'a> = dyn Fn(&Graph, &WeightFunction) -> Result<VertexSet> + Sync + 'a;

pub const DEFAULT_NODE_LIMIT: usize = 200_000;

#[derive(Debug, Clone, Serialize)]
pub struct BuildOutcome {
    pub td: TreeDecomposition,
    /// largest stability number among the cuts the oracle returned
    pub max_cut_alpha: usize,
    pub oracle_calls: usize,
    /// times a seed had to be enlarged because a cut made no progress
    pub seed_pads: usize,
    /// stability number of each bag, in node order
    pub bag_alpha: Vec<usize>,
}

struct Subtree {
    bag: VertexSet,
    children: Vec<Subtree>,
}

struct Builder<'a> {
    g: &'a Graph,
    oracle: &'a SeparatorOracle<'a>,
    c: Rational,
    d_cap: usize,
    node_limit: usize,
    nodes: usize,
    calls: usize,
    pads: usize,
    max_cut: usize,
}

impl Builder<'_> {
    /// `α · (1 - c) ≤ factor · d`
    fn within(&self, alpha: usize, factor: i64, d: usize) -> bool {
        rational(alpha as i64, 1) * (Rational::one() - &self.c) <= rational(factor * d as i64, 1)
    }

    fn build(&mut self, sub: VertexSet, mut z: VertexSet, mut d_path: usize) -> Result<Subtree> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::Resource(format!("decomposition exceeded {} nodes", self.node_limit)));
        }
        if sub.is_empty() {
            return Ok(Subtree { bag: sub, children: vec![] });
        }
        let gs = self.g.induced(&sub);
        if !self.within(stability_number(&gs, &z)?, 2, self.d_cap) {
            return Err(invariant_err!("seed of a {}-vertex subgraph exceeds its stability budget", sub.len()));
        }
        loop {
            let i = max_stable_set(&gs, &z)?;
            let w = if i.is_empty() { WeightFunction::uniform_on(&sub)? } else { WeightFunction::uniform_on(&i)? };
            let x = (self.oracle)(&gs, &w)?;
            self.calls += 1;
            if !x.is_subset(&sub) {
                return Err(invariant_err!("oracle cut leaves the {}-vertex subgraph", sub.len()));
            }
            if heavy_component(&gs, &w, &x, &self.c).is_some() {
                return Err(invariant_err!(
                    "oracle cut is not {}-balanced on a {}-vertex subgraph",
                    format_rational(&self.c),
                    sub.len()
                ));
            }
            let ax = stability_number(&gs, &x)?;
            if ax > self.d_cap {
                return Err(invariant_err!("oracle cut has alpha {ax} above the cap {}", self.d_cap));
            }
            self.max_cut = self.max_cut.max(ax);
            d_path = d_path.max(ax);
            let comps = gs.components_unchecked(&x);
            if comps.iter().all(|v| v.len() + x.len() < sub.len()) {
                let mut children = Vec::with_capacity(comps.len());
                for v in comps {
                    let mut zi: VertexSet = z.intersection(&v).copied().collect();
                    zi.extend(&x);
                    let mut child = v;
                    child.extend(&x);
                    children.push(self.build(child, zi, d_path)?);
                }
                let mut bag = z;
                bag.extend(&x);
                return Ok(Subtree { bag, children });
            }
            // the cut left one component spanning everything outside it
            if self.within(stability_number(&gs, &sub)?, 2, d_path) {
                return Ok(Subtree { bag: sub, children: vec![] });
            }
            let target = i.len() + 1;
            for v in max_stable_set(&gs, &sub)? {
                if z.insert(v) && stability_number(&gs, &z)? >= target {
                    break;
                }
            }
            self.pads += 1;
        }
    }
}

fn flatten(tree: Subtree, nodes: &mut Vec<TdNode>, edges: &mut Vec<(usize, usize)>) -> usize {
    let id = nodes.len();
    nodes.push(TdNode { id, bag: tree.bag });
    for child in tree.children {
        let cid = flatten(child, nodes, edges);
        edges.push((id, cid));
    }
    id
}

/// Tree decomposition from a balanced-separator oracle by recursive
/// splitting around a seed set whose stability stays within
/// `2 d_cap / (1 - c)`. Every bag has stability at most `(3 - c) / (1 - c)`
/// times the largest cut stability the oracle realized.
pub fn build_tree_decomposition(
    g: &Graph,
    oracle: &SeparatorOracle<'_>,
    c: &Rational,
    d_cap: usize,
) -> Result<BuildOutcome> {
    build_tree_decomposition_with_limit(g, oracle, c, d_cap, DEFAULT_NODE_LIMIT)
}

pub fn build_tree_decomposition_with_limit(
    g: &Graph,
    oracle: &SeparatorOracle<'_>,
    c: &Rational,
    d_cap: usize,
    node_limit: usize,
) -> Result<BuildOutcome> {
    if *c < rational(1, 2) || *c >= Rational::one() {
        return Err(input_err!("balance parameter must lie in [1/2, 1)"));
    }
    let mut b = Builder {
        g,
        oracle,
        c: c.clone(),
        d_cap,
        node_limit,
        nodes: 0,
        calls: 0,
        pads: 0,
        max_cut: 0,
    };
    let tree = b.build(g.vertex_set(), VertexSet::new(), 0)?;
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    flatten(tree, &mut nodes, &mut edges);
    let td = TreeDecomposition { nodes, edges };
    let report = validate_tree_decomposition(g, &td);
    if !report.is_valid() {
        return Err(invariant_err!("built decomposition is invalid: {}", report.summary()));
    }
    let bag_alpha = bag_stability(g, &td)?;
    let factor = (rational(3, 1) - c) / (Rational::one() - c);
    for (node, &a) in td.nodes.iter().zip(&bag_alpha) {
        if rational(a as i64, 1) > &factor * rational(b.max_cut as i64, 1) {
            return Err(invariant_err!(
                "bag {} has alpha {a}, above {} times the largest cut alpha {}",
                node.id,
                format_rational(&factor),
                b.max_cut
            ));
        }
    }
    Ok(BuildOutcome { td, max_cut_alpha: b.max_cut, oracle_calls: b.calls, seed_pads: b.pads, bag_alpha })
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionStats {
    pub width: usize,
    pub independence_number: usize,
    pub bag_count: usize,
    /// `165 C(d) (log2 n)²`
    pub bound: u64,
    pub max_cut_alpha: usize,
    pub oracle_calls: usize,
    pub seed_pads: usize,
}

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub d: usize,
    pub c: Rational,
    pub loop_opts: LoopOptions,
    pub detect: DetectOptions,
    /// skip the 3PC-freeness check (the caller vouches for the input)
    pub assume_free: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            d: crate::balance::DEFAULT_D,
            c: rational(1, 2),
            loop_opts: LoopOptions::default(),
            detect: DetectOptions::default(),
            assume_free: false,
        }
    }
}

pub fn pipeline_bound(n: usize, d: usize) -> u64 {
    let log = log2(n);
    (165.0 * 100.0 * (d * d) as f64 * log * log).ceil() as u64
}

/// Checks 3PC-freeness, then decomposes with the domination-to-stability
/// loop as oracle, using `L = ⌈32 log2 n⌉` and `r = ⌈d (2 + log2 n)⌉`.
pub fn tree_alpha_pipeline(g: &Graph, opts: &PipelineOptions) -> Result<(TreeDecomposition, DecompositionStats)> {
    if !opts.assume_free && !is_3pc_free_with(g, &opts.detect)? {
        return Err(input_err!("the graph contains a theta, pyramid or prism"));
    }
    let n = g.len();
    let cfg = BreakabilityConfig::for_graph(n.max(2), opts.d)?;
    let d_cap = cfg.separator_bound(n.max(2)).floor() as usize;
    let oracle = |sub: &Graph, w: &WeightFunction| -> Result<VertexSet> {
        Ok(domination_to_stability(sub, w, &cfg, &cooperative_clique_separator, &opts.loop_opts)?.cut)
    };
    let out = build_tree_decomposition(g, &oracle, &opts.c, d_cap)?;
    let stats = DecompositionStats {
        width: out.td.width(),
        independence_number: out.bag_alpha.iter().copied().max().unwrap_or(0),
        bag_count: out.td.nodes.len(),
        bound: pipeline_bound(n, opts.d),
        max_cut_alpha: out.max_cut_alpha,
        oracle_calls: out.oracle_calls,
        seed_pads: out.seed_pads,
    };
    Ok((out.td, stats))
}
