//! Minimum membership dominating set: exact solvers, checkers and reduction
//! generators.

pub mod checker;
pub mod criteria;
pub mod error;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod random;
pub mod reductions;
pub mod registry;
pub mod twdp;
pub mod vcfpt;

pub use error::{Error, Result};
pub use graph::{Graph, Instance, Solution, Vertex};
