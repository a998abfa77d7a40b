//! Maximum stable sets of trees: stability number, core, pendant structure,
//! matchings and vertex bonding, together with a harness that checks a fixed
//! registry of statements about them over exhaustive and random tree corpora.

pub mod bonding;
pub mod cli;
pub mod error;
pub mod graph;
pub mod harness;
pub mod independence;

pub use error::{Error, Result};
pub use graph::{Tree, VertexId, VertexSet};
