//! Constructive polynomial-time colorers, one per graph class, each
//! realizing a proved upper bound. Every colorer's output passes the
//! verifier for its declared mode.

pub mod block;
pub mod dh;
pub mod geom;
pub mod interval;
pub mod kneser;
pub mod split;

pub use block::{color_block_cfon, is_block_graph};
pub use dh::{check_dh_invariants, color_cograph_cfon, color_dh_cfcn, color_dh_restricted};
pub use geom::{
    color_unit_disk_cfon, color_unit_square_cfon, interval_graph, stripe_cfcn_2color,
    unit_disk_graph, unit_square_graph, IntervalScene, PointScene, SceneKind,
};
pub use interval::{
    color_interval_cfon, color_proper_interval_cfon, decide_interval_cfcn, pid_interval_dp,
};
pub use kneser::{color_kneser_cfcn, color_kneser_cfon, kneser_graph, KneserParams};
pub use split::{color_split_cfcn, split_partition, validate_split_partition};
