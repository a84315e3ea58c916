mod bits;
pub mod contraction;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod iso;
pub mod perm;
pub mod recognition;
pub mod roots;

pub use contraction::{contract, CliquePartition, ContractedGraph, Multigraph};
pub use error::{Error, Result};
pub use graph::{BichromaticGraph, Color, CombineMode, Diameter, Restrict, VertexSet};
