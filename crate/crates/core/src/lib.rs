//! Co-connected complexes of graphs and the decision procedures around them:
//! vertex decomposability, shellability, Cohen-Macaulayness, and chordality of
//! connected clutters.

pub mod error;
pub mod fixtures;
pub mod cert;
pub mod clutter;
pub mod complex;
pub mod decomp;
pub mod graph;
pub mod homology;
pub mod verify;
mod limits;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use vertex_set::{binomial, VertexSet};
