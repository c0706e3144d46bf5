//! Coloring complexes and cyclic coloring complexes of hypergraphs: chain
//! complexes, homology, shellings and symmetric-group characters.

pub mod battery;
pub mod chromatic;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod homology;
pub mod hypercore;
pub mod linalg;
pub mod repn;
pub mod shelling;

pub use error::{Error, Result};
pub use hypercore::{CyclicClass, Hypergraph, OrderedPartition, VertexSet};
