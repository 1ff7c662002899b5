use std::collections::BTreeMap;

use serde::Serialize;

use holefree_core::engine::SolveStats;
use holefree_core::Weight;

/// One JSON document per invocation. Every key is always present; sections a
/// command does not produce are `null`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub version: &'static str,
    pub command: &'static str,
    pub input: String,
    pub result: Option<SolvePayload>,
    pub verdicts: Option<Verdicts>,
    pub analysis: Option<Analysis>,
    pub stats: Stats,
}

impl RunReport {
    pub fn new(command: &'static str, input: &str) -> Self {
        RunReport {
            version: env!("CARGO_PKG_VERSION"),
            command,
            input: input.to_string(),
            result: None,
            verdicts: None,
            analysis: None,
            stats: Stats::default(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SolvePayload {
    pub weight: Weight,
    /// 1-indexed, ascending.
    pub vertices: Vec<usize>,
    pub strategy: &'static str,
    /// `independent-set`, or `clique` for `--clique`.
    pub objective: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Verdicts {
    pub long_hole_free: bool,
    /// Induced cycle of length at least 5, 1-indexed.
    pub long_hole: Option<Vec<usize>>,
    pub largest_prism: usize,
    pub max_k: usize,
    pub prism: Option<PrismPayload>,
    pub chordal: bool,
}

#[derive(Debug, Serialize)]
pub struct PrismPayload {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub largest_prism: usize,
    /// Smallest `k` with no induced `k`-prism (at least 2).
    pub k: usize,
    pub minseps: usize,
    /// `n^(k+2)` as a decimal string.
    pub minseps_bound: String,
    pub minseps_bound_ok: bool,
    pub pmcs: usize,
    pub dom_histogram: BTreeMap<&'static str, usize>,
    pub max_dom_size: usize,
    pub balanced_separator: Option<BalancedPayload>,
}

#[derive(Debug, Serialize)]
pub struct BalancedPayload {
    pub component_size: usize,
    pub bag_size: usize,
    pub z_size: usize,
    pub sep_size: usize,
    /// `3(Δ + 1)`.
    pub bound: usize,
    pub bound_ok: bool,
    pub max_component_weight: Weight,
    pub balanced: bool,
    pub degraded: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct Stats {
    /// Only with `--timing`, so that default output is reproducible.
    pub time_ms: Option<f64>,
    pub table_entries: usize,
    pub minseps: usize,
    pub pmcs: usize,
    pub blocks: usize,
    pub branches: usize,
}

impl Stats {
    pub fn from_solve(s: &SolveStats) -> Self {
        Stats {
            time_ms: None,
            table_entries: s.table_entries,
            minseps: s.minseps,
            pmcs: s.pmcs,
            blocks: s.blocks,
            branches: s.branches,
        }
    }
}

pub fn one_indexed(vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    vs.into_iter().map(|v| v + 1).collect()
}
