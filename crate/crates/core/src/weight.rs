//! Exact rational vertex weights.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{input_err, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| input_err!("bad rational {s:?}"))?;
    let q: BigInt = q.parse().map_err(|_| input_err!("bad rational {s:?}"))?;
    if q.is_zero() {
        return Err(input_err!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// Nonnegative weights; missing vertices weigh zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightFunction {
    weights: BTreeMap<Vertex, Rational>,
}

impl WeightFunction {
    pub fn new(weights: BTreeMap<Vertex, Rational>) -> Result<Self> {
        if let Some((v, _)) = weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(input_err!("negative weight on vertex {v}"));
        }
        Ok(WeightFunction { weights })
    }

    /// Weight 1 on every vertex of `g`.
    pub fn unit(g: &Graph) -> Self {
        WeightFunction {
            weights: g.vertices().map(|v| (v, Rational::one())).collect(),
        }
    }

    /// The normal weight function putting `1/|x|` on each member of `x`.
    pub fn uniform_on(x: &VertexSet) -> Result<Self> {
        if x.is_empty() {
            return Err(input_err!("uniform weight on an empty set"));
        }
        let each = rational(1, x.len() as i64);
        Ok(WeightFunction {
            weights: x.iter().map(|&v| (v, each.clone())).collect(),
        })
    }

    pub fn get(&self, v: Vertex) -> Rational {
        self.weights.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total<'a, I: IntoIterator<Item = &'a Vertex>>(&self, x: I) -> Rational {
        x.into_iter()
            .filter_map(|v| self.weights.get(v))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn total_on(&self, g: &Graph) -> Rational {
        self.total(g.vertex_set().iter())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &Rational)> {
        self.weights.iter().map(|(v, w)| (*v, w))
    }

    /// Total weight over the vertices of `g` is exactly one.
    pub fn is_normal_on(&self, g: &Graph) -> bool {
        self.total_on(g).is_one()
    }

    /// `w / w(x)` restricted to `x`; `None` when `w(x) = 0`.
    pub fn normalized_on(&self, x: &VertexSet) -> Option<WeightFunction> {
        let total = self.total(x.iter());
        if total.is_zero() {
            return None;
        }
        Some(WeightFunction {
            weights: x
                .iter()
                .filter_map(|v| self.weights.get(v).map(|w| (*v, w / &total)))
                .collect(),
        })
    }
}

/// Deterministic preference between two vertex sets of equal weight: the set
/// containing the smallest vertex of the symmetric difference wins. This
/// order is stable under taking disjoint unions, which the tree DP relies on.
pub fn tie_prefers(a: &VertexSet, b: &VertexSet) -> bool {
    match a.symmetric_difference(b).next() {
        Some(v) => a.contains(v),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("3").unwrap(), rational(3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rational(6, 3)), "2");
        assert_eq!(format_rational(&rational(1, 3)), "1/3");
    }

    #[test]
    fn uniform_is_normal() {
        let g = Graph::from_edges(6, &[]).unwrap();
        let w = WeightFunction::uniform_on(&g.vertex_set()).unwrap();
        assert!(w.is_normal_on(&g));
        assert_eq!(w.total(vset([0, 1]).iter()), rational(1, 3));
    }

    #[test]
    fn tie_order() {
        assert!(tie_prefers(&vset([1, 5]), &vset([2, 3])));
        assert!(tie_prefers(&vset([1, 3]), &vset([1])));
        assert!(!tie_prefers(&vset([2]), &vset([2])));
    }
}
