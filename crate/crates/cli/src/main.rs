mod report;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use holefree_core::engine::{SolveConfig, MWIS_ORACLE_LIMIT};
use holefree_core::generate::{self, LHF_FILTER_RETRIES};
use holefree_core::graph::{emit_graph_with_comments, parse_graph, Graph};
use holefree_core::pmc::{dominate_pmc, enumerate_pmcs, PmcConfig};
use holefree_core::recognition::{find_k_prism, find_long_hole, is_chordal, largest_prism};
use holefree_core::separators::enumerate_minimal_separators;
use holefree_core::solvers::{balanced_separator, solve, solve_mwc_complement, BalancedSeparatorResult, SolverConfig, Strategy};
use holefree_core::{oracle_limit, Error};

use report::{one_indexed, Analysis, BalancedPayload, PrismPayload, RunReport, SolvePayload, Stats, Verdicts};

const EXIT_PARSE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "holefree", version, about = "Maximum weight independent set on long-hole-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve maximum weight independent set (or clique with --clique).
    Solve(SolveArgs),
    /// Report long-hole-freeness, largest induced prism and chordality.
    Verify(VerifyArgs),
    /// Separator and PMC counts, domination methods, balanced separator size.
    Analyze(AnalyzeArgs),
    /// Write a generated instance.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
struct Caps {
    /// Stop after this many minimal separators (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    cap_seps: usize,
    /// Stop after this many PMCs per prefix graph (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    cap_pmcs: usize,
}

#[derive(Args)]
struct Output {
    /// Print one JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// bt, subexp1, subexp2, brute or auto.
    #[arg(long, default_value = "auto")]
    strategy: Strategy,
    /// Maximum weight clique via the complement.
    #[arg(long)]
    clique: bool,
    #[command(flatten)]
    caps: Caps,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Largest prism size searched for.
    #[arg(long, default_value_t = 5)]
    max_k: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Largest prism size searched for (default n/2, i.e. exhaustive).
    #[arg(long)]
    max_k: Option<usize>,
    #[command(flatten)]
    caps: Caps,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GenOut {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout if absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// The k-prism: two k-cliques joined by a perfect matching.
    Prism {
        k: usize,
        #[command(flatten)]
        gen: GenOut,
    },
    /// Random chordal graph with about m edges.
    Chordal {
        n: usize,
        m: usize,
        #[command(flatten)]
        gen: GenOut,
    },
    /// G(n, p) resampled until it has no long hole.
    LhfFilter {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = LHF_FILTER_RETRIES)]
        retries: usize,
        #[command(flatten)]
        gen: GenOut,
    },
    /// G(n, p) with long holes chorded away.
    LhfChord {
        n: usize,
        p: f64,
        #[command(flatten)]
        gen: GenOut,
    },
    /// Complement of an existing instance, weights kept.
    ComplementOf {
        file: PathBuf,
        #[command(flatten)]
        gen: GenOut,
    },
}

/// Exit status plus message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapacityExceeded { .. } | Error::OracleLimit { .. } | Error::WidthTooLarge { .. } => EXIT_CAPACITY,
            _ => EXIT_INTERNAL,
        };
        Failure(code, e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn load(path: &Path) -> Result<Graph, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    parse_graph(&bytes).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn render(report: &mut RunReport, output: &Output, start: Instant, text: String) -> String {
    if output.timing {
        report.stats.time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    if output.json {
        let mut s = serde_json::to_string_pretty(report).expect("report serializes");
        s.push('\n');
        s
    } else if output.timing {
        format!("{text}time_ms {:.3}\n", report.stats.time_ms.unwrap_or_default())
    } else {
        text
    }
}

fn cmd_solve(args: &SolveArgs) -> CmdResult {
    let start = Instant::now();
    let g = load(&args.file)?;
    let config = SolverConfig {
        caps: SolveConfig { separator_cap: args.caps.cap_seps, pmc_cap: args.caps.cap_pmcs },
        oracle_limit: oracle_limit(MWIS_ORACLE_LIMIT),
        ..SolverConfig::default()
    };
    let (res, used) = if args.clique {
        solve_mwc_complement(&g, args.strategy, &config)?
    } else {
        solve(&g, args.strategy, &config)?
    };
    let vertices = one_indexed(res.set.iter());
    let mut report = RunReport::new("solve", &args.file.display().to_string());
    report.stats = Stats::from_solve(&res.stats);
    let mut text = String::new();
    writeln!(text, "weight {}", res.weight).unwrap();
    writeln!(text, "vertices {}", vertices.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).unwrap();
    writeln!(text, "strategy {used}").unwrap();
    let s = &report.stats;
    writeln!(
        text,
        "minseps {} pmcs {} blocks {} table_entries {} branches {}",
        s.minseps, s.pmcs, s.blocks, s.table_entries, s.branches
    )
    .unwrap();
    report.result = Some(SolvePayload {
        weight: res.weight,
        vertices,
        strategy: used.as_str(),
        objective: if args.clique { "clique" } else { "independent-set" },
    });
    Ok(render(&mut report, &args.output, start, text))
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let start = Instant::now();
    let g = load(&args.file)?;
    let hole = find_long_hole(&g);
    let largest = largest_prism(&g, args.max_k);
    let prism = (largest > 0).then(|| find_k_prism(&g, largest)).flatten();
    let chordal = is_chordal(&g).is_chordal();
    let mut text = String::new();
    match &hole {
        None => writeln!(text, "long-hole-free true").unwrap(),
        Some(c) => writeln!(
            text,
            "long-hole-free false (hole {})",
            one_indexed(c.iter().copied()).iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        )
        .unwrap(),
    }
    writeln!(text, "largest-prism {largest} (searched up to {})", args.max_k).unwrap();
    writeln!(text, "chordal {chordal}").unwrap();
    let mut report = RunReport::new("verify", &args.file.display().to_string());
    report.verdicts = Some(Verdicts {
        long_hole_free: hole.is_none(),
        long_hole: hole.map(one_indexed),
        largest_prism: largest,
        max_k: args.max_k,
        prism: prism.map(|p| PrismPayload { a: one_indexed(p.a), b: one_indexed(p.b) }),
        chordal,
    });
    Ok(render(&mut report, &args.output, start, text))
}

fn cmd_analyze(args: &AnalyzeArgs) -> CmdResult {
    let start = Instant::now();
    let g = load(&args.file)?;
    let n = g.n();
    let max_k = args.max_k.unwrap_or(n / 2).max(1);
    let largest = largest_prism(&g, max_k);
    let k = (largest + 1).max(2);
    let seps = enumerate_minimal_separators(&g, args.caps.cap_seps)?;
    let pmc_cfg = PmcConfig { cap: args.caps.cap_pmcs, separator_cap: args.caps.cap_seps, ..PmcConfig::default() };
    let pmcs = enumerate_pmcs(&g, &seps, pmc_cfg)?;
    let bound = (n as u128).checked_pow(k as u32 + 2);
    let bound_ok = bound.is_none_or(|b| seps.len() as u128 <= b);

    let mut hist: BTreeMap<&'static str, usize> =
        ["single-vertex", "lemma-chain", "brute-fallback", "none"].into_iter().map(|m| (m, 0)).collect();
    let mut max_dom = 0;
    for p in &pmcs {
        match dominate_pmc(&g, p) {
            Ok(d) => {
                *hist.get_mut(d.method.as_str()).unwrap() += 1;
                max_dom = max_dom.max(d.z.len());
            }
            Err(Error::NoDomination) => *hist.get_mut("none").unwrap() += 1,
            Err(e) => return Err(e.into()),
        }
    }

    // balanced separator on the heaviest component
    let balanced = g
        .components(&g.vertex_set())
        .into_iter()
        .max_by(|a, b| g.set_weight(a).cmp(&g.set_weight(b)).then(b.cmp(a)))
        .and_then(|c| {
            let (h, _) = g.induced_subgraph(&c);
            balanced_separator(&h).ok().map(|r| (h, r))
        })
        .map(|(h, r)| {
            let bound = BalancedSeparatorResult::size_bound(&h);
            BalancedPayload {
                component_size: h.n(),
                bag_size: r.bag.len(),
                z_size: r.z.len(),
                sep_size: r.separator.len(),
                bound,
                bound_ok: r.separator.len() <= bound,
                max_component_weight: r.max_component_weight,
                balanced: r.max_component_weight.at_most_half_of(h.total_weight()),
                degraded: r.degraded,
            }
        });

    let bound_str = bound.map_or_else(|| format!("{n}^{}", k + 2), |b| b.to_string());
    let pass = |ok: bool| if ok { "pass" } else { "FAIL" };
    let mut text = String::new();
    writeln!(text, "{:<22}{n}", "n").unwrap();
    writeln!(text, "{:<22}{}", "m", g.m()).unwrap();
    writeln!(text, "{:<22}{}", "max_degree", g.max_degree()).unwrap();
    writeln!(text, "{:<22}{largest}", "largest_prism").unwrap();
    writeln!(text, "{:<22}{} <= {n}^{} = {bound_str} {}", "minseps", seps.len(), k + 2, pass(bound_ok)).unwrap();
    writeln!(text, "{:<22}{}", "pmcs", pmcs.len()).unwrap();
    for (m, c) in &hist {
        writeln!(text, "{:<22}{c}", format!("dom {m}")).unwrap();
    }
    writeln!(text, "{:<22}{max_dom}", "max_dom_size").unwrap();
    match &balanced {
        Some(b) => writeln!(
            text,
            "{:<22}|N[Z]| {} <= 3(D+1) = {} {}, |Z| {}, bag {}, balanced {}",
            "balanced_separator",
            b.sep_size,
            b.bound,
            pass(b.bound_ok),
            b.z_size,
            b.bag_size,
            b.balanced
        )
        .unwrap(),
        None => writeln!(text, "{:<22}none", "balanced_separator").unwrap(),
    }

    let mut report = RunReport::new("analyze", &args.file.display().to_string());
    report.stats.minseps = seps.len();
    report.stats.pmcs = pmcs.len();
    report.analysis = Some(Analysis {
        n,
        m: g.m(),
        max_degree: g.max_degree(),
        largest_prism: largest,
        k,
        minseps: seps.len(),
        minseps_bound: bound_str,
        minseps_bound_ok: bound_ok,
        pmcs: pmcs.len(),
        dom_histogram: hist,
        max_dom_size: max_dom,
        balanced_separator: balanced,
    });
    Ok(render(&mut report, &args.output, start, text))
}

fn check_p(p: f64) -> Result<(), Failure> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Failure(EXIT_PARSE, format!("p = {p} is not in [0, 1]")))
    }
}

fn cmd_generate(family: &Family) -> CmdResult {
    let (g, what, gen) = match family {
        Family::Prism { k, gen } => {
            if *k == 0 {
                return Err(Failure(EXIT_PARSE, "k must be positive".into()));
            }
            (generate::prism(*k), format!("prism {k}"), gen)
        }
        Family::Chordal { n, m, gen } => {
            (generate::chordal(*n, *m, &mut generate::rng(gen.seed)), format!("chordal {n} {m}"), gen)
        }
        Family::LhfFilter { n, p, retries, gen } => {
            check_p(*p)?;
            let g = generate::lhf_filter(*n, *p, *retries, &mut generate::rng(gen.seed))?;
            (g, format!("lhf-filter {n} {p} --retries {retries}"), gen)
        }
        Family::LhfChord { n, p, gen } => {
            check_p(*p)?;
            (generate::lhf_chord(*n, *p, &mut generate::rng(gen.seed)), format!("lhf-chord {n} {p}"), gen)
        }
        Family::ComplementOf { file, gen } => {
            (load(file)?.complement(), format!("complement-of {}", file.display()), gen)
        }
    };
    let comments = vec![
        format!("holefree generate {what} --seed {}", gen.seed),
        format!("seed {}", gen.seed),
        format!("n {} m {}", g.n(), g.m()),
    ];
    let text = emit_graph_with_comments(&g, &comments);
    match &gen.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure(EXIT_INTERNAL, format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Generate { family } => cmd_generate(family),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
