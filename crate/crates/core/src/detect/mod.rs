//! Structure detection: three-path configurations, holes, useful wheels and
//! connectors of three vertices.

pub mod connector;
pub(crate) mod paths;
pub mod three_path;
pub mod wheel;

pub use three_path::{
    find_3pc, find_3pc_exact, is_3pc_free, is_3pc_free_with, is_theta_free, Anchors, DetectOptions,
    Detection, ThreePathConfig, ThreePathKind,
};
pub use wheel::{find_hole, find_useful_wheel, sectors, Sector, UsefulWheel};
pub use connector::{extract_claw_connector, minimal_connected_connector, ClawConnector, ClawShape, ConnectorShape, ConnectorWitness};
