//! Certified decisions for P4-free graphs: exact toughness, spanning SBEP
//! subgraphs, prism-hamiltonian cycles and spanning k-walks, each with a
//! machine-checkable witness and an independent brute-force oracle.

pub mod catalog;
pub mod cli;
pub mod cograph;
pub mod graph;
pub mod oracle;
pub mod prism_walks;
pub mod rational;
pub mod sbep;
pub mod toughness;

pub use graph::{Graph, VertexSet};
pub use rational::Rational;
