//! Exact maximum weight independent set on long-hole-free graphs.
//!
//! The pipeline enumerates minimal separators and potential maximal cliques
//! and runs a dynamic program over blocks. Recognizers, domination witnesses,
//! balanced separators, branching solvers and seeded generators sit around it.

pub mod engine;
pub mod error;
pub mod generate;
pub mod graph;
pub mod pmc;
pub mod recognition;
pub mod separators;
pub mod solvers;

pub use engine::{brute_force_mwis, solve_bt, solve_mwis, verify_solution, SolveConfig, SolveResult, SolveStats};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet, Weight};
pub use solvers::{solve, solve_mwc_complement, SolverConfig, Strategy};

/// Environment variable overriding every oracle size limit.
pub const ORACLE_LIMIT_ENV: &str = "HOLEFREE_ORACLE_LIMIT";

/// `default`, unless `HOLEFREE_ORACLE_LIMIT` holds a number.
pub fn oracle_limit(default: usize) -> usize {
    std::env::var(ORACLE_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}
