//! Top-level MWIS algorithms and the strategy dispatcher.

mod balanced;
mod branching;
mod treedecomp;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use balanced::{balanced_separator, BalancedSeparatorResult};
pub use branching::{solve_subexp1, solve_subexp2, subexp2_threshold};
pub use treedecomp::{
    build_separator_decomposition, build_tree_decomposition, running_intersection_holds, solve_treewidth_dp,
    TreeDecomposition, TREEWIDTH_BAG_LIMIT,
};

use crate::engine::{brute_force_mwis, solve_mwis, SolveConfig, SolveResult, MWIS_ORACLE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Knobs shared by every strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub caps: SolveConfig,
    /// Residual graphs below this size go straight to brute force in `subexp1`.
    pub subexp1_floor: usize,
    pub bag_limit: usize,
    pub oracle_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            caps: SolveConfig::default(),
            subexp1_floor: 25,
            bag_limit: TREEWIDTH_BAG_LIMIT,
            oracle_limit: MWIS_ORACLE_LIMIT,
        }
    }
}

/// Separators → PMCs → dynamic program. Prism-freeness is never consulted;
/// the caps bound the work instead.
pub fn solve_kprism_alg(g: &Graph, caps: SolveConfig) -> Result<SolveResult> {
    solve_mwis(g, caps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Bt,
    Subexp1,
    Subexp2,
    Brute,
    /// `bt`, then `subexp1` if a cap is hit.
    Auto,
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute, Strategy::Auto];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Bt => "bt",
            Strategy::Subexp1 => "subexp1",
            Strategy::Subexp2 => "subexp2",
            Strategy::Brute => "brute",
            Strategy::Auto => "auto",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| format!("unknown strategy '{s}' (expected bt, subexp1, subexp2, brute or auto)"))
    }
}

/// Runs `strategy`; returns the result and the strategy that produced it
/// (differs from the request only for `auto`).
pub fn solve(g: &Graph, strategy: Strategy, config: &SolverConfig) -> Result<(SolveResult, Strategy)> {
    let res = match strategy {
        Strategy::Bt => solve_kprism_alg(g, config.caps)?,
        Strategy::Subexp1 => solve_subexp1(g, config)?,
        Strategy::Subexp2 => solve_subexp2(g, config)?,
        Strategy::Brute => brute_force_mwis(g, config.oracle_limit)?,
        Strategy::Auto => {
            return match solve_kprism_alg(g, config.caps) {
                Ok(r) => Ok((r, Strategy::Bt)),
                Err(Error::CapacityExceeded { .. }) => Ok((solve_subexp1(g, config)?, Strategy::Subexp1)),
                Err(e) => Err(e),
            }
        }
    };
    Ok((res, strategy))
}

/// Maximum-weight clique of `g` as the MWIS of its complement. The returned
/// set is a clique of `g`.
pub fn solve_mwc_complement(g: &Graph, strategy: Strategy, config: &SolverConfig) -> Result<(SolveResult, Strategy)> {
    let start = Instant::now();
    let (mut res, used) = solve(&g.complement(), strategy, config)?;
    if !g.is_clique(&res.set) || g.set_weight(&res.set) != res.weight {
        return Err(Error::Internal(format!("complement witness {:?} is not a clique of matching weight", res.set)));
    }
    res.stats.elapsed = start.elapsed();
    Ok((res, used))
}
