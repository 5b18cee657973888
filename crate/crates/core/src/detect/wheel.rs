//! Holes, sectors and useful wheels.

use serde::Serialize;

use crate::dense::Dense;
use crate::detect::paths::{holes, Budget, Flow};
use crate::error::{input_err, invariant_err, Error, Result};
use crate::graph::{Graph, Vertex};

/// Hole length below which a wheel is never useful.
pub const USEFUL_HOLE_LEN: usize = 7;

const HOLE_STEP_LIMIT: u64 = 50_000_000;

/// A hole of length at least `min_len`, as a cyclic sequence starting at its
/// minimum vertex.
pub fn find_hole(g: &Graph, min_len: usize) -> Result<Option<Vec<Vertex>>> {
    if min_len < 4 {
        return Err(input_err!("holes have length at least 4, got min_len {min_len}"));
    }
    let d = Dense::new(g);
    let mut budget = Budget::new(HOLE_STEP_LIMIT);
    let mut found = None;
    let _ = holes(&d, min_len, &mut budget, &mut |h| {
        found = Some(h.iter().map(|&i| d.ids[i]).collect());
        Flow::Break(())
    });
    if found.is_none() && budget.exhausted() {
        return Err(Error::Resource("hole search budget exhausted".into()));
    }
    Ok(found)
}

/// Every hole of length at least `min_len`, each once.
pub fn all_holes(g: &Graph, min_len: usize) -> Result<Vec<Vec<Vertex>>> {
    let d = Dense::new(g);
    let mut budget = Budget::new(HOLE_STEP_LIMIT);
    let mut out = Vec::new();
    let _ = holes(&d, min_len.max(4), &mut budget, &mut |h| {
        out.push(h.iter().map(|&i| d.ids[i]).collect());
        Flow::Continue(())
    });
    if budget.exhausted() {
        return Err(Error::Resource("hole search budget exhausted".into()));
    }
    Ok(out)
}

/// A subpath of a hole whose ends are hub-neighbors and whose interior is
/// anticomplete to the hub.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sector {
    pub path: Vec<Vertex>,
}

impl Sector {
    pub fn is_long(&self) -> bool {
        self.path.len() > 2
    }

    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.path[0], self.path[self.path.len() - 1])
    }

    pub fn interior(&self) -> &[Vertex] {
        &self.path[1..self.path.len() - 1]
    }
}

/// Splits `hole` at the neighbors of `hub`, starting from the first
/// hub-neighbor in hole order.
pub fn sectors(g: &Graph, hole: &[Vertex], hub: Vertex) -> Result<Vec<Sector>> {
    g.check_vertex(hub)?;
    if !g.is_hole(hole) {
        return Err(input_err!("the sequence is not a hole"));
    }
    if hole.contains(&hub) {
        return Err(input_err!("hub {hub} lies on the hole"));
    }
    let marks: Vec<usize> = (0..hole.len()).filter(|&i| g.adjacent(hub, hole[i])).collect();
    if marks.len() < 2 {
        return Err(input_err!("hub {hub} has {} neighbors on the hole, need at least 2", marks.len()));
    }
    let n = hole.len();
    let mut out = Vec::with_capacity(marks.len());
    for (k, &start) in marks.iter().enumerate() {
        let end = marks[(k + 1) % marks.len()];
        let steps = (end + n - start) % n;
        let path = (0..=steps).map(|s| hole[(start + s) % n]).collect();
        out.push(Sector { path });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UsefulWheel {
    pub hole: Vec<Vertex>,
    pub hub: Vertex,
    pub sectors: Vec<Sector>,
}

impl UsefulWheel {
    pub fn long_sectors(&self) -> impl Iterator<Item = &Sector> {
        self.sectors.iter().filter(|s| s.is_long())
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.hole.len() < USEFUL_HOLE_LEN {
            return Err(invariant_err!("wheel hole has length {}", self.hole.len()));
        }
        let expect = sectors(g, &self.hole, self.hub)?;
        if expect != self.sectors {
            return Err(invariant_err!("stored sectors do not match the hole and hub"));
        }
        for s in &self.sectors {
            let (a, b) = s.ends();
            if !g.adjacent(self.hub, a) || !g.adjacent(self.hub, b) || s.interior().iter().any(|&x| g.adjacent(self.hub, x)) {
                return Err(invariant_err!("sector {:?} is not bounded by hub neighbors", s.path));
            }
        }
        if self.long_sectors().count() < 2 {
            return Err(invariant_err!("wheel has fewer than two long sectors"));
        }
        Ok(())
    }
}

/// The first useful wheel: holes of length at least seven in enumeration
/// order, hubs in ascending order.
pub fn find_useful_wheel(g: &Graph) -> Result<Option<UsefulWheel>> {
    let d = Dense::new(g);
    let mut budget = Budget::new(HOLE_STEP_LIMIT);
    let mut found = None;
    let _ = holes(&d, USEFUL_HOLE_LEN, &mut budget, &mut |h| {
        let hole: Vec<Vertex> = h.iter().map(|&i| d.ids[i]).collect();
        let mut on_hole = d.empty();
        for &i in h {
            on_hole.insert(i);
        }
        for hub in 0..d.n() {
            if on_hole.contains(hub) || d.rows[hub].intersection(&on_hole).count() < 2 {
                continue;
            }
            let secs = sectors(g, &hole, d.ids[hub]).expect("hub has two hole neighbors");
            if secs.iter().filter(|s| s.is_long()).count() >= 2 {
                found = Some(UsefulWheel { hole: hole.clone(), hub: d.ids[hub], sectors: secs });
                return Flow::Break(());
            }
        }
        Flow::Continue(())
    });
    if found.is_none() && budget.exhausted() {
        return Err(Error::Resource("useful wheel search budget exhausted".into()));
    }
    Ok(found)
}
