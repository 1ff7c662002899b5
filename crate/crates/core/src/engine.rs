//! Exact maximum weight independent set over a complete PMC family.
//!
//! A block is a pair `(S, D)` with `D` connected and `S = N(D)`. For each
//! block and each *trace* `u ∈ S ∪ {none}` the table stores the best weight of
//! an independent set inside `D` compatible with `u` being the only chosen
//! vertex of `S`. Caps of a block are PMCs `Ω` with `S ⊆ Ω ⊆ S ∪ D`; picking a
//! cap fixes at most one chosen vertex `t` of `Ω` and splits `D \ Ω` into
//! smaller blocks. Any optimum `I` has a minimal completion in which `I` stays
//! independent, so every bag of it meets `I` at most once and the recurrence
//! reaches the optimum.
//!
//! Every independent set avoiding zero-weight vertices is reachable, and ties
//! are broken toward the lexicographically smaller witness at every entry.
//! Since entries combine disjoint parts, the result is the lexicographically
//! smallest optimum without zero-weight vertices, the same set the brute-force
//! oracle returns.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{lift_set, Graph, Vertex, VertexSet, Weight};
use crate::pmc::{block_family, enumerate_pmcs, Pmc, PmcConfig};
use crate::separators::enumerate_minimal_separators;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub id: usize,
    pub d: VertexSet,
    /// `N(D)`.
    pub s: VertexSet,
}

/// Blocks for every member of the component family, sorted by `|D|` then canonically.
pub fn make_blocks(g: &Graph, family: &[VertexSet]) -> Vec<Block> {
    let mut ds: Vec<&VertexSet> = family.iter().collect();
    ds.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    ds.into_iter()
        .enumerate()
        .map(|(id, d)| Block { id, d: d.clone(), s: g.open_neighborhood(d) })
        .collect()
}

/// For each block, indices of the PMCs `Ω` with `S ⊆ Ω ⊆ S ∪ D`.
pub fn index_caps(pmcs: &[Pmc], blocks: &[Block]) -> Vec<Vec<usize>> {
    blocks
        .iter()
        .map(|b| {
            let outer = b.s.union(&b.d);
            pmcs.iter()
                .enumerate()
                .filter(|(_, p)| b.s.is_subset(&p.set) && p.set.is_subset(&outer) && p.set.intersects(&b.d))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// Table value; `NegInf` marks blocks without any cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Value {
    NegInf,
    Finite(Weight),
}

impl Value {
    fn plus(self, other: Value) -> Value {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::NegInf,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub minseps: usize,
    pub pmcs: usize,
    pub blocks: usize,
    pub table_entries: usize,
    /// Branches explored by the branching solvers.
    pub branches: usize,
    pub elapsed: Duration,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.minseps += other.minseps;
        self.pmcs += other.pmcs;
        self.blocks += other.blocks;
        self.table_entries += other.table_entries;
        self.branches += other.branches;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub weight: Weight,
    pub set: VertexSet,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn empty(n: usize) -> Self {
        SolveResult { weight: Weight::ZERO, set: VertexSet::new(n), stats: SolveStats::default() }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.set.to_vec()
    }
}

/// Independence and weight of a claimed solution, checked on every return.
pub fn verify_solution(g: &Graph, res: &SolveResult) -> Result<()> {
    if !g.is_independent(&res.set) {
        return Err(Error::Internal(format!("witness {:?} is not independent", res.set)));
    }
    if g.set_weight(&res.set) != res.weight {
        return Err(Error::Internal(format!(
            "witness weight {} differs from reported {}",
            g.set_weight(&res.set),
            res.weight
        )));
    }
    Ok(())
}

struct CapSplit {
    pmc: usize,
    /// Child blocks: components of `D \ Ω`.
    children: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Choice {
    split: usize,
    t: Option<Vertex>,
}

struct Table<'a> {
    g: &'a Graph,
    blocks: &'a [Block],
    pmc_sets: Vec<VertexSet>,
    /// Sorted members of each block's `S`; trace index 0 is `none`, `i + 1` is `seps[b][i]`.
    seps: Vec<Vec<Vertex>>,
    splits: Vec<Vec<CapSplit>>,
    values: Vec<Vec<Value>>,
    choices: Vec<Vec<Option<Choice>>>,
    /// Witness per entry, kept to break ties toward the lexicographically
    /// smallest set.
    witness: Vec<Vec<Option<VertexSet>>>,
}

impl Table<'_> {
    fn trace_index(&self, block: usize, t: Option<Vertex>) -> usize {
        match t {
            Some(v) if self.blocks[block].s.contains(v) => {
                1 + self.seps[block].binary_search(&v).expect("trace vertex in S")
            }
            _ => 0,
        }
    }

    fn children_value(&self, children: &[usize], t: Option<Vertex>) -> Value {
        children.iter().fold(Value::Finite(Weight::ZERO), |acc, &c| {
            acc.plus(self.values[c][self.trace_index(c, t)])
        })
    }

    fn children_witness(&self, children: &[usize], t: Option<Vertex>) -> VertexSet {
        let mut set = self.g.empty_set();
        for &c in children {
            if let Some(w) = &self.witness[c][self.trace_index(c, t)] {
                set.union_with(w);
            }
        }
        set
    }

    fn fill(&mut self, b: usize) {
        let traces = self.seps[b].len() + 1;
        let mut vals = vec![Value::NegInf; traces];
        let mut choice = vec![None; traces];
        let mut wit: Vec<Option<VertexSet>> = vec![None; traces];
        for (si, split) in self.splits[b].iter().enumerate() {
            // ties go to the lexicographically smaller witness
            let mut consider = |slot: usize, val: Value, t: Option<Vertex>| {
                if val == Value::NegInf || val < vals[slot] {
                    return;
                }
                let mut set = self.children_witness(&split.children, t);
                if let Some(v) = t.filter(|&v| self.blocks[b].d.contains(v)) {
                    set.insert(v);
                }
                if val > vals[slot] || wit[slot].as_ref().is_none_or(|w| set < *w) {
                    vals[slot] = val;
                    choice[slot] = Some(Choice { split: si, t });
                    wit[slot] = Some(set);
                }
            };
            // u = none: t is none or a vertex of Ω ∩ D
            consider(0, self.children_value(&split.children, None), None);
            let omega = &self.pmc_sets[split.pmc];
            for t in omega.intersection(&self.blocks[b].d).iter() {
                let w = self.g.weight(t);
                if w.is_zero() {
                    continue;
                }
                let v = Value::Finite(w).plus(self.children_value(&split.children, Some(t)));
                consider(0, v, Some(t));
            }
            for (i, &u) in self.seps[b].iter().enumerate() {
                consider(i + 1, self.children_value(&split.children, Some(u)), Some(u));
            }
        }
        self.values[b] = vals;
        self.choices[b] = choice;
        self.witness[b] = wit;
    }
}

/// Runs the block dynamic program on a connected graph with a complete PMC
/// family and its block list.
pub fn solve_bt(g: &Graph, pmcs: &[Pmc], blocks: &[Block]) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    if n == 0 {
        return Ok(SolveResult::empty(0));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let by_set: HashMap<&VertexSet, usize> = blocks.iter().map(|b| (&b.d, b.id)).collect();
    let caps = index_caps(pmcs, blocks);
    let child_blocks = |outside: &VertexSet| -> Result<Vec<usize>> {
        g.components(outside)
            .iter()
            .map(|c| {
                by_set
                    .get(c)
                    .copied()
                    .ok_or_else(|| Error::Precondition(format!("component {:?} is not a block", c)))
            })
            .collect()
    };
    let mut splits = Vec::with_capacity(blocks.len());
    for b in blocks {
        let mut list = Vec::new();
        for &p in &caps[b.id] {
            list.push(CapSplit { pmc: p, children: child_blocks(&b.d.difference(&pmcs[p].set))? });
        }
        splits.push(list);
    }
    let seps: Vec<Vec<Vertex>> = blocks.iter().map(|b| b.s.to_vec()).collect();
    let table_entries = seps.iter().map(|s| s.len() + 1).sum();
    let mut table = Table {
        g,
        blocks,
        pmc_sets: pmcs.iter().map(|p| p.set.clone()).collect(),
        seps,
        splits,
        values: vec![Vec::new(); blocks.len()],
        choices: vec![Vec::new(); blocks.len()],
        witness: vec![Vec::new(); blocks.len()],
    };
    for b in 0..blocks.len() {
        table.fill(b);
    }

    // top level: a PMC Ω and at most one chosen vertex of Ω
    let mut best: Option<(Value, VertexSet, Option<Vertex>, Vec<usize>)> = None;
    for p in pmcs {
        let children = child_blocks(&p.set.complement())?;
        let mut offer = |val: Value, t: Option<Vertex>| {
            if val == Value::NegInf || best.as_ref().is_some_and(|(b, ..)| val < *b) {
                return;
            }
            let mut set = table.children_witness(&children, t);
            if let Some(v) = t {
                set.insert(v);
            }
            if best.as_ref().is_none_or(|(b, w, ..)| val > *b || set < *w) {
                best = Some((val, set, t, children.clone()));
            }
        };
        offer(table.children_value(&children, None), None);
        for t in p.set.iter() {
            let w = g.weight(t);
            if !w.is_zero() {
                offer(Value::Finite(w).plus(table.children_value(&children, Some(t))), Some(t));
            }
        }
    }
    let (value, top_witness, top_t, top_children) =
        best.ok_or_else(|| Error::Precondition("empty PMC family".into()))?;
    let weight = match value {
        Value::Finite(w) => w,
        Value::NegInf => return Err(Error::Precondition("PMC family is incomplete: no finite solution".into())),
    };

    let mut set = g.empty_set();
    let mut stack: Vec<(usize, Option<Vertex>)> = Vec::new();
    if let Some(t) = top_t {
        set.insert(t);
    }
    stack.extend(top_children.iter().map(|&c| (c, top_t)));
    while let Some((b, t)) = stack.pop() {
        let slot = table.trace_index(b, t);
        let ch = table.choices[b][slot].ok_or_else(|| Error::Internal("missing choice record".into()))?;
        if let Some(v) = ch.t {
            if blocks[b].d.contains(v) {
                set.insert(v);
            }
        }
        for &c in &table.splits[b][ch.split].children {
            stack.push((c, ch.t));
        }
    }

    if set != top_witness {
        return Err(Error::Internal("reconstruction differs from the recorded witness".into()));
    }
    let res = SolveResult {
        weight,
        set,
        stats: SolveStats {
            minseps: 0,
            pmcs: pmcs.len(),
            blocks: blocks.len(),
            table_entries,
            branches: 0,
            elapsed: start.elapsed(),
        },
    };
    verify_solution(g, &res)?;
    Ok(res)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveConfig {
    /// 0 = unlimited.
    pub separator_cap: usize,
    /// 0 = unlimited.
    pub pmc_cap: usize,
}

/// Full pipeline per connected component: separators → component family →
/// PMCs → dynamic program.
pub fn solve_mwis(g: &Graph, config: SolveConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    let mut total = SolveResult::empty(n);
    for comp in g.components(&g.vertex_set()) {
        let (h, map) = g.induced_subgraph(&comp);
        let seps = enumerate_minimal_separators(&h, config.separator_cap)?;
        let family = block_family(&seps);
        let pmc_cfg = PmcConfig { cap: config.pmc_cap, separator_cap: config.separator_cap, ..PmcConfig::default() };
        let pmcs = enumerate_pmcs(&h, &seps, pmc_cfg)?;
        let blocks = make_blocks(&h, &family);
        let mut part = solve_bt(&h, &pmcs, &blocks)?;
        part.stats.minseps = seps.len();
        total.weight += part.weight;
        total.set.union_with(&lift_set(n, &map, &part.set));
        total.stats.absorb(&part.stats);
    }
    total.stats.elapsed = start.elapsed();
    verify_solution(g, &total)?;
    Ok(total)
}

/// Default vertex limit for the brute-force MWIS oracle.
pub const MWIS_ORACLE_LIMIT: usize = 20;

/// Branch and bound over vertices in index order, including before
/// excluding. Returns the lexicographically smallest optimum that avoids
/// zero-weight vertices.
pub fn brute_force_mwis(g: &Graph, limit: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    if n > limit || n > 64 {
        return Err(Error::OracleLimit { n, limit });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect();
    let w: Vec<u128> = (0..n).map(|v| g.weight(v).raw()).collect();
    let positive: u64 = (0..n).filter(|&v| w[v] > 0).fold(0, |m, v| m | 1 << v);

    struct Search<'a> {
        adj: &'a [u64],
        w: &'a [u128],
        best: u128,
        best_set: u64,
        found: bool,
    }
    impl Search<'_> {
        fn bound(&self, cand: u64) -> u128 {
            let mut s = 0;
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                s += self.w[v];
            }
            s
        }
        fn go(&mut self, cand: u64, cur: u128, chosen: u64) {
            if cand == 0 {
                if !self.found || cur > self.best {
                    self.best = cur;
                    self.best_set = chosen;
                    self.found = true;
                }
                return;
            }
            if self.found && cur + self.bound(cand) <= self.best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            let rest = cand & !(1u64 << v);
            self.go(rest & !self.adj[v], cur + self.w[v], chosen | 1 << v);
            self.go(rest, cur, chosen);
        }
    }
    let mut s = Search { adj: &adj, w: &w, best: 0, best_set: 0, found: false };
    s.go(positive, 0, 0);
    let set = VertexSet::from_iter_with(n, (0..n).filter(|&v| s.best_set >> v & 1 == 1));
    let res = SolveResult {
        weight: Weight::from_raw(s.best),
        set,
        stats: SolveStats { elapsed: start.elapsed(), ..SolveStats::default() },
    };
    verify_solution(g, &res)?;
    Ok(res)
}
