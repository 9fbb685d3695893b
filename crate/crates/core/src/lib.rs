//! Edge-disjoint packing and covering of long paths with checkable certificates.

pub mod bounds;
pub mod certificate;
pub mod certify;
pub mod cli;
pub mod engine;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod io;
pub mod menger;
pub mod oracle;
pub mod reductions;
pub mod spec;
