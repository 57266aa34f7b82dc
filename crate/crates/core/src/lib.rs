//! Single-source shortest paths on directed graphs with negative integer
//! weights, with negative-cycle detection.

pub mod context;
pub mod error;
pub mod gadget;
pub mod graph;
pub mod io;
pub mod ldd;
pub mod price;
pub mod rng;
pub mod scaledown;
pub mod scc;
pub mod solver;
pub mod sssp;
pub mod verify;

pub use error::{Error, Exhaustion, Result};
pub use graph::{build_graph, Edge, EdgeId, Graph, VertexId, Weight};
pub use price::PriceFunction;
pub use solver::{solve, SolveConfig, SsspOutcome, SsspResult};
pub use sssp::{NegativeCycle, ShortestPathTree};
