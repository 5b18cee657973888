//! Enumeration of induced paths and holes over a [`Dense`] view.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::dense::Dense;

/// Counts search steps; once the limit is hit every search unwinds and the
/// caller reports an inexact answer.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    steps: u64,
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { steps: 0, limit }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn tick(&mut self) -> bool {
        self.steps += 1;
        self.steps <= self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.steps > self.limit
    }
}

pub(crate) type Flow = ControlFlow<()>;

/// Visits every induced path `s = p0 - p1 - ... - pk = t` with `k >= min_len`
/// and all interior vertices in `interior`, in lexicographic order of the
/// index sequence. `visit` may stop the enumeration.
pub(crate) fn induced_paths(
    d: &Dense,
    s: usize,
    t: usize,
    interior: &FixedBitSet,
    min_len: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> Flow,
) -> Flow {
    if s == t {
        return Flow::Continue(());
    }
    if d.adjacent(s, t) {
        return if min_len <= 1 { visit(&[s, t]) } else { Flow::Continue(()) };
    }
    let mut path = vec![s];
    let blocked = d.empty();
    extend(d, t, interior, min_len, budget, &mut path, &blocked, visit)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d: &Dense,
    t: usize,
    interior: &FixedBitSet,
    min_len: usize,
    budget: &mut Budget,
    path: &mut Vec<usize>,
    blocked: &FixedBitSet,
    visit: &mut dyn FnMut(&[usize]) -> Flow,
) -> Flow {
    if !budget.tick() {
        return Flow::Break(());
    }
    let last = *path.last().expect("path starts nonempty");
    if d.adjacent(last, t) {
        if path.len() >= min_len {
            path.push(t);
            let r = visit(path);
            path.pop();
            return r;
        }
        return Flow::Continue(());
    }
    let mut next_blocked = blocked.clone();
    next_blocked.union_with(&d.rows[last]);
    next_blocked.insert(last);
    if next_blocked.contains(t) {
        return Flow::Continue(());
    }
    let mut cand = d.rows[last].clone();
    cand.intersect_with(interior);
    cand.difference_with(blocked);
    for y in cand.ones() {
        if path.contains(&y) {
            continue;
        }
        path.push(y);
        let r = extend(d, t, interior, min_len, budget, path, &next_blocked, visit);
        path.pop();
        r?;
    }
    Flow::Continue(())
}

/// Is `t` reachable from `s` through `interior`?
pub(crate) fn reachable(d: &Dense, s: usize, t: usize, interior: &FixedBitSet) -> bool {
    let mut seen = d.empty();
    seen.insert(s);
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        if d.adjacent(u, t) {
            return true;
        }
        let mut nb = d.rows[u].clone();
        nb.intersect_with(interior);
        nb.difference_with(&seen);
        for w in nb.ones() {
            seen.insert(w);
            stack.push(w);
        }
    }
    false
}

/// Visits every hole of length at least `min_len`, once each, as the cyclic
/// sequence starting at its minimum vertex and continuing towards the
/// smaller of that vertex's two hole neighbors.
pub(crate) fn holes(
    d: &Dense,
    min_len: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> Flow,
) -> Flow {
    let n = d.n();
    for s in 0..n {
        let mut region = d.empty();
        region.insert_range(s + 1..n);
        region.difference_with(&d.closed(s));
        let nbs: Vec<usize> = d.rows[s].ones().filter(|&x| x > s).collect();
        for (i, &x1) in nbs.iter().enumerate() {
            for &xk in &nbs[i + 1..] {
                if d.adjacent(x1, xk) {
                    continue;
                }
                let min_path = min_len.saturating_sub(2).max(2);
                induced_paths(d, x1, xk, &region, min_path, budget, &mut |p| {
                    let mut cyc = Vec::with_capacity(p.len() + 1);
                    cyc.push(s);
                    cyc.extend_from_slice(p);
                    visit(&cyc)
                })?;
                if budget.exhausted() {
                    return Flow::Break(());
                }
            }
        }
    }
    Flow::Continue(())
}
