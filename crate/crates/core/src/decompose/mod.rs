//! Tree decompositions: validation, construction from a separator oracle,
//! and maximum weight stable sets over them.

pub mod build;
pub mod mwis;
pub mod td;

pub use build::{
    build_tree_decomposition, build_tree_decomposition_with_limit, pipeline_bound, tree_alpha_pipeline, BuildOutcome,
    DecompositionStats, PipelineOptions, SeparatorOracle,
};
pub use mwis::{mwis_td, mwis_td_with_limit};
pub use td::{bag_stability, td_independence_number, validate_tree_decomposition, TdNode, TreeDecomposition, ValidationReport};
