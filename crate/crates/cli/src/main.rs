//! `dpcol`: plane-graph DP-coloring toolkit.
//!
//! Exit codes: 0 = success / verdict pass, 1 = verdict fail (configuration
//! found, no extension, negative charge), 2 = usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dpcol::campaign::{CampaignSpec, SearchRecord};
use dpcol::cover::{self, Color, ListAssignment, MatchingAssignment};
use dpcol::discharge::{self, RuleSet};
use dpcol::exec;
use dpcol::gen::{self, GenProfile};
use dpcol::patterns;
use dpcol::plane_graph::{parse_pg, PlaneGraph};
use dpcol::solver::{self, PrecoloredSet};
use dpcol::TheoremId;

#[derive(Parser)]
#[command(name = "dpcol", version, about = "DP-coloring of plane graphs: covers, extension search, and exact discharging")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a plane graph and write it in the .pg format.
    Gen {
        /// named:<name> | triangulation:<n>[,<deletions>] | outer-cycle:<k>,<n>[,<theorem>]
        #[arg(long)]
        profile: String,
        #[arg(long, env = "DPCOL_SEED", default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a theorem's forbidden-configuration filter on a graph.
    Detect {
        #[arg(long)]
        theorem: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Search for an M-coloring of a graph under a cover.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        /// Optional precoloring `v=c,v=c,...` in file labels.
        #[arg(long)]
        precolor: Option<String>,
        #[arg(long, env = "DPCOL_BUDGET", default_value_t = solver::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Extend a precoloring on a single vertex or short cycle, as in the
    /// extension theorems.
    Extend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        theorem: String,
        /// Vertices of S (file labels, comma-separated); one vertex or a cycle.
        #[arg(long)]
        s: String,
        /// Colors for S, aligned with --s.
        #[arg(long)]
        phi: String,
        #[arg(long, env = "DPCOL_BUDGET", default_value_t = solver::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Rename colors so that a subgraph becomes straight.
    Straighten {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        /// Subgraph edges `u-v,u-v,...` (file labels), or `all`.
        #[arg(long)]
        sub: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a discharging rule system and report the ledger and verdict.
    Discharge {
        #[arg(long)]
        theorem: String,
        #[arg(long = "in")]
        input: PathBuf,
        /// Also print the transfer log.
        #[arg(long)]
        full: bool,
    },
    /// Run a stress campaign of extension searches plus discharging.
    Stress {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        /// Vertex-count range `lo..hi`.
        #[arg(long, default_value = "10..20")]
        size: String,
        #[arg(long, env = "DPCOL_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        assignments: usize,
        #[arg(long, default_value_t = 8)]
        precolorings: usize,
        #[arg(long, env = "DPCOL_BUDGET", default_value_t = solver::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, env = "DPCOL_WORKERS")]
        workers: Option<usize>,
        /// Named negative-control instances, comma-separated.
        #[arg(long)]
        controls: Option<String>,
    },
    /// Pattern library utilities.
    Patterns {
        #[command(subcommand)]
        cmd: PatternsCmd,
    },
    /// Evaluate the symbolic final-charge arithmetic of the rule systems.
    LemmaSuite,
}

#[derive(Subcommand)]
enum PatternsCmd {
    /// Print each pattern's id, vertex count, and edge list.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen { profile, seed, out } => cmd_gen(&profile, seed, out),
        Command::Detect { theorem, input } => cmd_detect(&theorem, &input),
        Command::Solve { input, cover, precolor, budget } => {
            cmd_solve(&input, &cover, precolor.as_deref(), budget)
        }
        Command::Extend { input, cover, theorem, s, phi, budget } => {
            cmd_extend(&input, &cover, &theorem, &s, &phi, budget)
        }
        Command::Straighten { input, cover, sub, out } => {
            cmd_straighten(&input, &cover, &sub, out)
        }
        Command::Discharge { theorem, input, full } => cmd_discharge(&theorem, &input, full),
        Command::Stress {
            theorem,
            instances,
            size,
            seed,
            assignments,
            precolorings,
            budget,
            workers,
            controls,
        } => cmd_stress(
            &theorem,
            instances,
            &size,
            seed,
            assignments,
            precolorings,
            budget,
            workers,
            controls.as_deref(),
        ),
        Command::Patterns { cmd: PatternsCmd::List } => {
            print!("{}", patterns::dump());
            Ok(ExitCode::SUCCESS)
        }
        Command::LemmaSuite => {
            print!("{}", discharge::lemma_suite_report());
            let all_pass = discharge::lemma_arithmetic_suite().iter().all(|c| c.pass);
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).ok_or_else(|| format!("unknown theorem `{s}` (MRTHREE|MRA|MRB|MRC|LL)"))
}

fn load_graph(path: &PathBuf) -> Result<PlaneGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_pg(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_cover(
    path: &PathBuf,
    pg: &PlaneGraph,
) -> Result<(ListAssignment, MatchingAssignment), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let cov = cover::parse_cov(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    cov.resolve(pg.labels()).map_err(|e| format!("{}: {e}", path.display()))
}

fn label_to_index(pg: &PlaneGraph, label: u32) -> Result<usize, String> {
    pg.labels()
        .iter()
        .position(|&l| l == label)
        .ok_or_else(|| format!("unknown vertex label {label}"))
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(profile: &str, seed: u64, out: Option<PathBuf>) -> Result<ExitCode, String> {
    let profile = parse_profile(profile)?;
    let pg = gen::generate(&profile, seed).map_err(|e| e.to_string())?;
    emit(out, &pg.to_pg_string())?;
    Ok(ExitCode::SUCCESS)
}

fn parse_profile(spec: &str) -> Result<GenProfile, String> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| format!("bad profile `{spec}`; expected kind:args"))?;
    let parts: Vec<&str> = rest.split(',').collect();
    let num = |s: &str| -> Result<usize, String> {
        s.trim().parse().map_err(|_| format!("bad number `{s}` in profile"))
    };
    match kind {
        "named" => Ok(GenProfile::Named(rest.to_string())),
        "triangulation" => {
            let n = num(parts[0])?;
            let deletions = if parts.len() > 1 { num(parts[1])? } else { 0 };
            Ok(GenProfile::Triangulation { n, deletions })
        }
        "outer-cycle" => {
            if parts.len() < 2 {
                return Err("outer-cycle needs <k>,<n>[,<theorem>]".into());
            }
            let outer_len = num(parts[0])?;
            let target_n = num(parts[1])?;
            let theorem = if parts.len() > 2 {
                Some(parse_theorem(parts[2].trim())?)
            } else {
                None
            };
            Ok(GenProfile::OuterCycle { outer_len, target_n, theorem })
        }
        other => Err(format!("unknown profile kind `{other}`")),
    }
}

fn cmd_detect(theorem: &str, input: &PathBuf) -> Result<ExitCode, String> {
    let theorem = parse_theorem(theorem)?;
    let pg = load_graph(input)?;
    let report = patterns::hypothesis_filter(pg.graph(), theorem).map_err(|e| e.to_string())?;
    if report.pass {
        println!("detect {theorem} pass");
        return Ok(ExitCode::SUCCESS);
    }
    for w in &report.witnesses {
        let mapped: Vec<String> = w
            .mapping
            .iter()
            .map(|&v| pg.labels()[v].to_string())
            .collect();
        println!("detect {theorem} fail {} at [{}]", w.pattern.name(), mapped.join(" "));
    }
    if let Some(ll) = &report.ll_witness {
        println!(
            "detect {theorem} fail 4-cycle {:?} adjacent to triangles {:?} and {:?}",
            ll.four_cycle, ll.triangles.0, ll.triangles.1
        );
    }
    Ok(ExitCode::from(1))
}

fn parse_precolor(pg: &PlaneGraph, spec: &str) -> Result<Vec<(usize, Color)>, String> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (v, c) = part
            .split_once('=')
            .ok_or_else(|| format!("bad precolor entry `{part}`; expected v=c"))?;
        let label: u32 = v.trim().parse().map_err(|_| format!("bad vertex `{v}`"))?;
        let color: Color = c.trim().parse().map_err(|_| format!("bad color `{c}`"))?;
        out.push((label_to_index(pg, label)?, color));
    }
    Ok(out)
}

fn print_outcome(pg: &PlaneGraph, id: &str, outcome: &solver::SearchOutcome) -> ExitCode {
    println!("{}", solver::outcome_record(id, outcome));
    match &outcome.status {
        solver::SearchStatus::Extended(coloring) => {
            for v in 0..pg.n() {
                println!("color {} {}", pg.labels()[v], coloring.colors[v]);
            }
            ExitCode::SUCCESS
        }
        _ => ExitCode::from(1),
    }
}

fn instance_id(path: &PathBuf) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into())
}

fn cmd_solve(
    input: &PathBuf,
    cover_path: &PathBuf,
    precolor: Option<&str>,
    budget: u64,
) -> Result<ExitCode, String> {
    let pg = load_graph(input)?;
    let (lists, m) = load_cover(cover_path, &pg)?;
    let precolored = match precolor {
        Some(spec) => parse_precolor(&pg, spec)?,
        None => Vec::new(),
    };
    let problem = solver::SearchProblem::new(pg.graph(), &lists, &m)
        .with_precolored(precolored)
        .with_budget(budget);
    let outcome = solver::find_mcoloring(&problem);
    Ok(print_outcome(&pg, &instance_id(input), &outcome))
}

fn cmd_extend(
    input: &PathBuf,
    cover_path: &PathBuf,
    theorem: &str,
    s: &str,
    phi: &str,
    budget: u64,
) -> Result<ExitCode, String> {
    let theorem = parse_theorem(theorem)?;
    let pg = load_graph(input)?;
    let (lists, m) = load_cover(cover_path, &pg)?;
    let s_vertices: Vec<usize> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let label: u32 = t.trim().parse().map_err(|_| format!("bad vertex `{t}`"))?;
            label_to_index(&pg, label)
        })
        .collect::<Result<_, _>>()?;
    let colors: Vec<Color> = phi
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| format!("bad color `{t}`")))
        .collect::<Result<_, _>>()?;
    if colors.len() != s_vertices.len() {
        return Err(format!(
            "--phi has {} colors for {} vertices",
            colors.len(),
            s_vertices.len()
        ));
    }
    let set = if s_vertices.len() == 1 {
        PrecoloredSet::SingleVertex(s_vertices[0])
    } else {
        PrecoloredSet::Cycle(s_vertices.clone())
    };
    let phi: Vec<(usize, Color)> = s_vertices.into_iter().zip(colors).collect();
    let outcome = solver::extend_precolored(pg.graph(), &lists, &m, &set, &phi, theorem, budget)
        .map_err(|e| e.to_string())?;
    println!("extend {theorem}");
    Ok(print_outcome(&pg, &instance_id(input), &outcome))
}

fn cmd_straighten(
    input: &PathBuf,
    cover_path: &PathBuf,
    sub: &str,
    out: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let pg = load_graph(input)?;
    let (lists, m) = load_cover(cover_path, &pg)?;
    let h_edges: Vec<(usize, usize)> = if sub.trim() == "all" {
        pg.graph().edges().to_vec()
    } else {
        sub.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let (a, b) = t
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| format!("bad edge `{t}`; expected u-v"))?;
                let la: u32 = a.trim().parse().map_err(|_| format!("bad vertex `{a}`"))?;
                let lb: u32 = b.trim().parse().map_err(|_| format!("bad vertex `{b}`"))?;
                Ok((label_to_index(&pg, la)?, label_to_index(&pg, lb)?))
            })
            .collect::<Result<_, String>>()?
    };
    match cover::straighten(pg.graph(), &lists, &m, &h_edges) {
        Ok(result) => {
            let k = lists.uniform_k().expect("straighten requires uniform lists");
            for (v, perm) in result.renaming.iter().enumerate() {
                let mapping: Vec<String> = perm
                    .iter()
                    .enumerate()
                    .map(|(old, &new)| format!("{}->{}", old + 1, new))
                    .collect();
                println!("rename {} : {}", pg.labels()[v], mapping.join(" "));
            }
            emit(out, &cover::write_cov(&result.matching, pg.labels(), k))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(cover::StraightenError::PreconditionViolated { cycle, defect }) => {
            let labels: Vec<String> =
                cycle.iter().map(|&v| pg.labels()[v].to_string()).collect();
            println!("straighten violated cycle [{}]: {defect:?}", labels.join(" "));
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_discharge(theorem: &str, input: &PathBuf, full: bool) -> Result<ExitCode, String> {
    let theorem = parse_theorem(theorem)?;
    let rules = RuleSet::from_theorem(theorem)
        .ok_or_else(|| format!("{theorem} has no discharging rule system"))?;
    let pg = load_graph(input)?;
    let cls = pg.classify();
    let pre = discharge::check_preconditions(&pg, &cls, theorem);
    for c in &pre.checks {
        match &c.witness {
            None => println!("precondition {} pass", c.name),
            Some(w) => println!("precondition {} fail: {w}", c.name),
        }
    }
    let ledger = discharge::apply_rules(&pg, &cls, rules).map_err(|e| e.to_string())?;
    if full {
        print!("{}", ledger.report(&pg));
    } else {
        for (e, &init) in &ledger.initial {
            let fin = ledger.final_of(*e);
            println!("charge {} init={init}/4 final={fin}/4", e.render(pg.outer_face()));
        }
    }
    for violation in discharge::remark_fidelity(&pg, &cls, &ledger) {
        println!("remark violation: {violation}");
    }
    let v = discharge::verdict(&pg, &cls, &ledger);
    let witness = v
        .positive_witness
        .map(|e| e.render(pg.outer_face()))
        .unwrap_or_else(|| "-".into());
    println!(
        "verdict {} all-nonnegative={} positive-witness={} violations={}",
        rules.name(),
        v.all_nonnegative,
        witness,
        v.violations.len()
    );
    if let Some((mu_star, p)) = v.mrc_outer {
        println!("verdict-outer mu*={mu_star}/4 p={p}/4");
    }
    Ok(if v.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[allow(clippy::too_many_arguments)]
fn cmd_stress(
    theorem: &str,
    instances: usize,
    size: &str,
    seed: u64,
    assignments: usize,
    precolorings: usize,
    budget: u64,
    workers: Option<usize>,
    controls: Option<&str>,
) -> Result<ExitCode, String> {
    let theorem = parse_theorem(theorem)?;
    let (lo, hi) = size
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| format!("bad size range `{size}`; expected lo..hi"))?;
    let mut spec = CampaignSpec::new(theorem, instances, seed);
    spec.size_range = (lo, hi);
    spec.assignments = assignments;
    spec.precolorings = precolorings;
    spec.budget = budget;
    if let Some(names) = controls {
        spec.named_controls = names
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
    }
    let result = exec::with_workers(workers, move || dpcol::campaign::run_campaign(&spec));
    print!("{}", result.log());
    let c = result.counters;
    let slow: Vec<&SearchRecord> = result
        .records
        .iter()
        .flat_map(|r| r.searches.iter())
        .filter(|s| s.elapsed_micros > 1_000_000)
        .collect();
    if !slow.is_empty() {
        eprintln!("warning: {} searches exceeded 1s", slow.len());
    }
    let clean = c.no_extension == 0 && c.budget_exhausted == 0 && c.verdict_violations == 0;
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
