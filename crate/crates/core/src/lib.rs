//! Three-path configurations, balanced separators of small stability
//! number, and tree decompositions of poly-logarithmic independence number.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`], [`stable`], [`weight`]: graphs with stable ids, exact
//!   stability numbers, exact rational weights and the brute-force oracles.
//! * [`detect`]: holes, thetas, pyramids, generalized prisms, useful wheels
//!   and the connector subgraphs used by the separation arguments.
//! * [`separate`]: the wheel cutset, cooperative subgraphs and the
//!   recursive separator for a pair of cooperative subgraphs.
//! * [`balance`]: dominated balanced separators and the loop turning them
//!   into balanced separators of small stability number.
//! * [`decompose`]: tree decompositions built from a separator oracle, and
//!   maximum weight independent set by dynamic programming over them.
//! * [`io`], [`generate`], [`cli`]: file formats, graph families and the
//!   command-line surface.

pub mod balance;
pub mod chordal;
pub mod cli;
pub mod decompose;
mod dense;
pub mod detect;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod separate;
pub mod stable;
pub mod weight;

pub use error::{Error, Result};
pub use graph::{vset, Graph, Vertex, VertexSet};
pub use weight::{Rational, WeightFunction};
