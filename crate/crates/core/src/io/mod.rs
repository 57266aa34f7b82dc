//! Text formats, instance generators and the benchmark harness.

pub mod bench;
pub mod dimacs;
pub mod generate;

pub use bench::{bench, format_report, BenchConfig, BenchFamily, BenchRow};
pub use dimacs::{lightest_cycle_edges, parse_dimacs, parse_result, write_dimacs, write_dimacs_with_source, write_outcome, write_result, DimacsInstance, ParsedResult};
pub use generate::{generate, GeneratorMode, GeneratorSpec};
pub use crate::verify::{verify_negative_cycle, verify_tree, Violation};
