//! Zero forcing toolkit.
//!
//! Computes zero forcing numbers, enumerates every minimum zero forcing set,
//! builds the zero forcing graph (the token-jumping reconfiguration graph on
//! minimum zero forcing sets), runs the polynomial-time tree machinery for
//! path covers, and checks the known structural laws over generated corpora.
//!
//! Vertices are always dense indices `0..n`.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod iso;
pub mod laws;
pub mod limits;
pub mod reconfig;
pub mod trees;

pub use error::{Error, Result};
pub use forcing::{
    closure, enumerate_min_zfs, is_zero_forcing_set, neighbor_trade, reverse_trace, trace, Force,
    ForcingTrace, ZfsCatalog,
};
pub use graph::{Graph, ShapePredicates, VertexSet};
pub use iso::is_isomorphic;
pub use limits::Limits;
pub use reconfig::{build_zfg, ReconfigGraph, ZfgStats};
pub use trees::{GStarKind, GStarReport, PathCover};
