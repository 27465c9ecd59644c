//! Stress campaigns: generate filter-clean instances, sample assignments and
//! precolorings, run extension searches, and put every instance through the
//! discharging pipeline. Instances evaluate independently (and in parallel
//! with the `parallel` feature); logs are byte-identical across runs of the
//! same spec.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{
    random_assignment, AssignmentProfile, Color, ListAssignment, MatchingAssignment,
};
use crate::discharge::{self, RuleSet};
use crate::exec;
use crate::gen::{self, GenProfile};
use crate::patterns;
use crate::plane_graph::PlaneGraph;
use crate::solver::{self, PrecoloredSet};
use crate::TheoremId;

#[derive(Debug, Clone)]
pub struct CampaignSpec {
    pub theorem: TheoremId,
    pub instances: usize,
    /// Vertex-count range (inclusive) for generated instances.
    pub size_range: (usize, usize),
    pub seed: u64,
    pub profile: AssignmentProfile,
    /// Matching assignments per instance.
    pub assignments: usize,
    /// Valid precolorings sampled per assignment.
    pub precolorings: usize,
    /// Single-vertex S searches per assignment (theorems that allow it).
    pub single_vertex_cases: usize,
    pub budget: u64,
    /// Extra named instances run as negative controls (filter failures).
    pub named_controls: Vec<String>,
}

impl CampaignSpec {
    pub fn new(theorem: TheoremId, instances: usize, seed: u64) -> CampaignSpec {
        CampaignSpec {
            theorem,
            instances,
            size_range: (10, 20),
            seed,
            profile: AssignmentProfile::FullRandomPerfect,
            assignments: 4,
            precolorings: 8,
            single_vertex_cases: if theorem.allows_single_vertex() { 2 } else { 0 },
            budget: solver::DEFAULT_BUDGET,
            named_controls: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchRecord {
    pub id: String,
    pub status: &'static str,
    pub nodes: u64,
    pub depth: usize,
    pub elapsed_micros: u128,
}

#[derive(Debug, Clone)]
pub struct InstanceRecord {
    pub index: usize,
    pub name: Option<String>,
    pub hash: u64,
    pub n: usize,
    pub edges: usize,
    pub filter_pass: bool,
    pub filter_witnesses: Vec<String>,
    pub preconditions_pass: Option<bool>,
    pub precondition_failures: Vec<String>,
    pub ledger_error: Option<String>,
    pub conservation_ok: Option<bool>,
    pub remark_violations: Vec<String>,
    pub verdict_pass: Option<bool>,
    pub searches: Vec<SearchRecord>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub instances: usize,
    pub filter_failures: usize,
    pub searches: usize,
    pub extended: usize,
    pub no_extension: usize,
    pub budget_exhausted: usize,
    /// Instances passing filter + all preconditions (expected: none; the
    /// rule systems make such graphs contradict conservation).
    pub fully_clean: usize,
    pub verdict_violations: usize,
}

#[derive(Debug, Clone)]
pub struct CampaignResult {
    pub theorem: TheoremId,
    pub seed: u64,
    pub records: Vec<InstanceRecord>,
    pub counters: Counters,
}

impl CampaignResult {
    /// Line-delimited, reproducible log (no timestamps).
    pub fn log(&self) -> String {
        let mut out = format!(
            "campaign {} instances={} seed={}\n",
            self.theorem,
            self.records.len(),
            self.seed
        );
        for r in &self.records {
            let name = r.name.as_deref().unwrap_or("-");
            out.push_str(&format!(
                "instance {} name={} hash={:016x} n={} e={} filter={} pre={} ledger={} verdict={}\n",
                r.index,
                name,
                r.hash,
                r.n,
                r.edges,
                if r.filter_pass { "pass" } else { "fail" },
                match r.preconditions_pass {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "skip",
                },
                match (&r.ledger_error, r.conservation_ok) {
                    (Some(_), _) => "error",
                    (None, Some(true)) => "ok",
                    _ => "skip",
                },
                match r.verdict_pass {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "skip",
                },
            ));
            for s in &r.searches {
                out.push_str(&format!(
                    "result {} {} nodes={} depth={}\n",
                    s.id, s.status, s.nodes, s.depth
                ));
            }
        }
        let c = &self.counters;
        out.push_str(&format!(
            "counters searches={} extended={} no-extension={} budget-exhausted={} filter-failures={} fully-clean={} verdict-violations={}\n",
            c.searches,
            c.extended,
            c.no_extension,
            c.budget_exhausted,
            c.filter_failures,
            c.fully_clean,
            c.verdict_violations
        ));
        out
    }
}

/// Runs the campaign, instances in parallel with the `parallel` feature.
pub fn run_campaign(spec: &CampaignSpec) -> CampaignResult {
    run_campaign_impl(spec, false)
}

/// Sequential twin of [`run_campaign`] for benchmarking.
pub fn run_campaign_seq(spec: &CampaignSpec) -> CampaignResult {
    run_campaign_impl(spec, true)
}

fn run_campaign_impl(spec: &CampaignSpec, force_seq: bool) -> CampaignResult {
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut jobs: Vec<(usize, Option<String>, u64)> = Vec::new();
    for i in 0..spec.instances {
        jobs.push((i, None, master.gen()));
    }
    for (j, name) in spec.named_controls.iter().enumerate() {
        jobs.push((spec.instances + j, Some(name.clone()), master.gen()));
    }

    let spec_clone = spec.clone();
    let worker = move |job: (usize, Option<String>, u64)| -> InstanceRecord {
        let (index, name, seed) = job;
        run_instance(&spec_clone, index, name, seed)
    };
    let records = if force_seq {
        exec::map_collect_seq(jobs, worker)
    } else {
        exec::map_collect(jobs, worker)
    };

    let mut counters = Counters { instances: records.len(), ..Counters::default() };
    for r in &records {
        if !r.filter_pass {
            counters.filter_failures += 1;
        }
        if r.filter_pass && r.preconditions_pass == Some(true) {
            counters.fully_clean += 1;
            if r.verdict_pass != Some(true) {
                counters.verdict_violations += 1;
            }
        }
        for s in &r.searches {
            counters.searches += 1;
            match s.status {
                "extended" => counters.extended += 1,
                "no-extension" => counters.no_extension += 1,
                "budget-exhausted" => counters.budget_exhausted += 1,
                _ => {}
            }
        }
    }
    CampaignResult { theorem: spec.theorem, seed: spec.seed, records, counters }
}

fn run_instance(
    spec: &CampaignSpec,
    index: usize,
    name: Option<String>,
    seed: u64,
) -> InstanceRecord {
    let mut record = InstanceRecord {
        index,
        name: name.clone(),
        hash: 0,
        n: 0,
        edges: 0,
        filter_pass: false,
        filter_witnesses: Vec::new(),
        preconditions_pass: None,
        precondition_failures: Vec::new(),
        ledger_error: None,
        conservation_ok: None,
        remark_violations: Vec::new(),
        verdict_pass: None,
        searches: Vec::new(),
        error: None,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pg = match &name {
        Some(n) => gen::named(n),
        None => {
            let max_outer = spec.theorem.cycle_bound().unwrap_or(6);
            let outer_len = rng.gen_range(4..=max_outer);
            let lo = spec.size_range.0.max(outer_len + 2);
            let hi = spec.size_range.1.max(lo);
            let target_n = rng.gen_range(lo..=hi);
            gen::generate(
                &GenProfile::OuterCycle { outer_len, target_n, theorem: Some(spec.theorem) },
                rng.gen(),
            )
        }
    };
    let pg = match pg {
        Ok(pg) => pg,
        Err(e) => {
            record.error = Some(format!("generation: {e}"));
            return record;
        }
    };
    record.hash = pg.instance_hash();
    record.n = pg.n();
    record.edges = pg.num_edges();

    match patterns::hypothesis_filter(pg.graph(), spec.theorem) {
        Ok(report) => {
            record.filter_pass = report.pass;
            record.filter_witnesses = report
                .witnesses
                .iter()
                .map(|w| format!("{}@{:?}", w.pattern.name(), w.mapping))
                .collect();
            if report.ll_witness.is_some() {
                record.filter_witnesses.push("LL-4cycle-2triangles".into());
            }
        }
        Err(e) => {
            record.error = Some(format!("filter: {e}"));
            return record;
        }
    }

    if record.filter_pass {
        run_searches(spec, &pg, &mut rng, &mut record);
    }

    run_discharging(spec.theorem, &pg, &mut record);
    record
}

fn run_searches(
    spec: &CampaignSpec,
    pg: &PlaneGraph,
    rng: &mut ChaCha8Rng,
    record: &mut InstanceRecord,
) {
    let g = pg.graph();
    let lists = ListAssignment::uniform(g.n(), 4);
    let outer_cycle = pg.face(pg.outer_face()).walk.clone();
    for a_idx in 0..spec.assignments {
        let m = random_assignment(g, 4, rng.gen(), spec.profile);
        let phis = sample_precolorings(g, &lists, &m, &outer_cycle, spec.precolorings, rng.gen());
        for (p_idx, phi) in phis.iter().enumerate() {
            let id = format!("{:016x}/m{a_idx}/p{p_idx}", record.hash);
            let s = PrecoloredSet::Cycle(outer_cycle.clone());
            run_one_search(spec, g, &lists, &m, &s, phi, &id, record);
        }
        for s_idx in 0..spec.single_vertex_cases {
            let v = rng.gen_range(0..g.n());
            let list = lists.list(v);
            let c = list[rng.gen_range(0..list.len())];
            let id = format!("{:016x}/m{a_idx}/s{s_idx}", record.hash);
            let s = PrecoloredSet::SingleVertex(v);
            run_one_search(spec, g, &lists, &m, &s, &[(v, c)], &id, record);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_one_search(
    spec: &CampaignSpec,
    g: &crate::graph::SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    s: &PrecoloredSet,
    phi: &[(usize, Color)],
    id: &str,
    record: &mut InstanceRecord,
) {
    match solver::extend_precolored(g, lists, m, s, phi, spec.theorem, spec.budget) {
        Ok(outcome) => record.searches.push(SearchRecord {
            id: id.to_string(),
            status: outcome.status.label(),
            nodes: outcome.stats.nodes,
            depth: outcome.stats.max_depth,
            elapsed_micros: outcome.stats.elapsed.as_micros(),
        }),
        Err(e) => {
            record.error = Some(format!("search {id}: {e}"));
        }
    }
}

fn run_discharging(theorem: TheoremId, pg: &PlaneGraph, record: &mut InstanceRecord) {
    let rules = match RuleSet::from_theorem(theorem) {
        Some(r) => r,
        None => return,
    };
    let cls = pg.classify();
    let pre = discharge::check_preconditions(pg, &cls, theorem);
    record.preconditions_pass = Some(pre.all_pass());
    record.precondition_failures = pre
        .failures()
        .iter()
        .map(|c| c.name.to_string())
        .collect();
    match discharge::apply_rules(pg, &cls, rules) {
        Ok(ledger) => {
            record.conservation_ok = Some(
                ledger.total_final() == 0
                    && ledger.conservation_checkpoints.iter().all(|&(_, s)| s == 0),
            );
            record.remark_violations = discharge::remark_fidelity(pg, &cls, &ledger);
            let v = discharge::verdict(pg, &cls, &ledger);
            record.verdict_pass = Some(v.pass());
        }
        Err(e) => {
            record.ledger_error = Some(e.to_string());
        }
    }
}

/// Samples distinct valid M-colorings of `G[S]` by rejection, falling back
/// to exhaustive enumeration when the valid set is small.
pub fn sample_precolorings(
    g: &crate::graph::SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    s_vertices: &[usize],
    count: usize,
    seed: u64,
) -> Vec<Vec<(usize, Color)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s_edges: Vec<(usize, usize)> = {
        let mut out = Vec::new();
        for (i, &u) in s_vertices.iter().enumerate() {
            for &v in &s_vertices[i + 1..] {
                if g.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    };
    let valid = |phi: &[(usize, Color)]| -> bool {
        let color_of = |x: usize| phi.iter().find(|&&(v, _)| v == x).map(|&(_, c)| c).unwrap();
        s_edges
            .iter()
            .all(|&(u, v)| !m.is_matched(u, color_of(u), v, color_of(v)))
    };

    let mut found: Vec<Vec<(usize, Color)>> = Vec::new();
    let max_attempts = 200 * count.max(1);
    for _ in 0..max_attempts {
        if found.len() >= count {
            break;
        }
        let phi: Vec<(usize, Color)> = s_vertices
            .iter()
            .map(|&v| {
                let list = lists.list(v);
                (v, list[rng.gen_range(0..list.len())])
            })
            .collect();
        if valid(&phi) && !found.contains(&phi) {
            found.push(phi);
        }
    }
    if found.len() < count {
        // Exhaustive fallback for tiny valid sets.
        let mut all: Vec<Vec<(usize, Color)>> = Vec::new();
        enumerate_precolorings(lists, s_vertices, 0, &mut Vec::new(), &valid, &mut all);
        for phi in all {
            if found.len() >= count {
                break;
            }
            if !found.contains(&phi) {
                found.push(phi);
            }
        }
    }
    found
}

fn enumerate_precolorings(
    lists: &ListAssignment,
    s_vertices: &[usize],
    idx: usize,
    partial: &mut Vec<(usize, Color)>,
    valid: &dyn Fn(&[(usize, Color)]) -> bool,
    out: &mut Vec<Vec<(usize, Color)>>,
) {
    if out.len() > 4096 {
        return;
    }
    if idx == s_vertices.len() {
        if valid(partial) {
            out.push(partial.clone());
        }
        return;
    }
    let v = s_vertices[idx];
    for &c in lists.list(v) {
        partial.push((v, c));
        enumerate_precolorings(lists, s_vertices, idx + 1, partial, valid, out);
        partial.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaign_extends_everything() {
        let mut spec = CampaignSpec::new(TheoremId::Mra, 4, 7);
        spec.size_range = (9, 13);
        spec.assignments = 2;
        spec.precolorings = 3;
        let result = run_campaign(&spec);
        assert_eq!(result.counters.instances, 4);
        assert!(result.counters.searches > 0);
        assert_eq!(result.counters.no_extension, 0);
        assert_eq!(result.counters.budget_exhausted, 0);
        assert_eq!(result.counters.verdict_violations, 0);
    }

    #[test]
    fn campaign_logs_are_reproducible() {
        let mut spec = CampaignSpec::new(TheoremId::Mrb, 3, 21);
        spec.size_range = (9, 12);
        spec.assignments = 1;
        spec.precolorings = 2;
        let a = run_campaign(&spec);
        let b = run_campaign(&spec);
        assert_eq!(a.log(), b.log());
        let c = run_campaign_seq(&spec);
        assert_eq!(a.log(), c.log());
    }

    #[test]
    fn named_controls_fail_filter_without_searches() {
        let mut spec = CampaignSpec::new(TheoremId::Mrc, 0, 3);
        spec.named_controls = vec!["house".into()];
        let result = run_campaign(&spec);
        assert_eq!(result.counters.instances, 1);
        assert_eq!(result.counters.filter_failures, 1);
        assert!(result.records[0].searches.is_empty());
    }

    #[test]
    fn empty_campaign_is_empty() {
        let spec = CampaignSpec::new(TheoremId::Mra, 0, 1);
        let result = run_campaign(&spec);
        assert_eq!(result.counters, Counters { instances: 0, ..Counters::default() });
    }

    #[test]
    fn precoloring_sampler_respects_matchings() {
        let g = crate::graph::SimpleGraph::from_edges(
            4,
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
        );
        let lists = ListAssignment::uniform(4, 4);
        let m = crate::cover::encode_list_coloring(&g, &lists);
        let phis = sample_precolorings(&g, &lists, &m, &[0, 1, 2, 3], 8, 5);
        assert_eq!(phis.len(), 8);
        for phi in &phis {
            for w in [(0usize, 1usize), (1, 2), (2, 3), (3, 0)] {
                let cu = phi.iter().find(|&&(v, _)| v == w.0).unwrap().1;
                let cv = phi.iter().find(|&&(v, _)| v == w.1).unwrap().1;
                assert_ne!(cu, cv);
            }
        }
    }
}
