//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Criteria cover the Euler charge identity, exact reproduction of the
//! final-charge case analyses, conservation, remark fidelity, extension
//! stress for the three theorems, verdicts on clean instances, solver and
//! matcher oracle equivalence, DP-chromatic ground truths, straightening,
//! and identification lifts.

mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dpcol::campaign::{run_campaign, CampaignResult, CampaignSpec};
use dpcol::cover::{
    self, encode_proper_coloring, random_assignment, straighten, AssignmentProfile,
    ListAssignment, MatchingAssignment,
};
use dpcol::discharge::{
    apply_rules, check_preconditions, initial_charges, remark_fidelity, verdict, Element, RuleSet,
};
use dpcol::gen::{self, GenProfile, Grower};
use dpcol::graph::SimpleGraph;
use dpcol::oracle;
use dpcol::patterns;
use dpcol::plane_graph::PlaneGraph;
use dpcol::solver::{
    adversarial_chi_dp, find_mcoloring, SearchProblem, SearchStatus, DEFAULT_BUDGET,
};
use dpcol::TheoremId;

fn outgoing(ledger: &dpcol::discharge::ChargeLedger, from: Element) -> Vec<i64> {
    let mut qu: Vec<i64> = ledger
        .transfers
        .iter()
        .filter(|t| t.from == from)
        .map(|t| t.amount_qu)
        .collect();
    qu.sort_unstable();
    qu
}

fn incoming(ledger: &dpcol::discharge::ChargeLedger, to: Element) -> Vec<i64> {
    let mut qu: Vec<i64> = ledger
        .transfers
        .iter()
        .filter(|t| t.to == to)
        .map(|t| t.amount_qu)
        .collect();
    qu.sort_unstable();
    qu
}

/// A deterministic 1000-graph corpus of plane graphs on 4..=24 vertices.
fn euler_corpus() -> Vec<PlaneGraph> {
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < 1000 {
        let n = 4 + (i as usize % 21);
        let profile = match i % 3 {
            0 => GenProfile::Triangulation { n, deletions: (i as usize / 3) % 4 },
            1 => GenProfile::OuterCycle {
                outer_len: 4 + (i as usize % 3),
                target_n: n.max(8),
                theorem: None,
            },
            _ => GenProfile::Triangulation { n, deletions: 0 },
        };
        if let Ok(pg) = gen::generate(&profile, i) {
            out.push(pg);
        }
        i += 1;
    }
    out
}

#[test]
fn acceptance_01_euler_charge_identity() {
    let start = Instant::now();
    let corpus = euler_corpus();
    assert_eq!(corpus.len(), 1000);
    for pg in &corpus {
        assert!(pg.n() >= 4 && pg.n() <= 24);
        let cls = pg.classify();
        let ledger = initial_charges(pg, &cls).expect("Euler identity");
        assert_eq!(ledger.total_initial(), 0);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("PASS criterion 1: initial charges sum to 0 on 1000 graphs in {elapsed:?}");
}

#[test]
fn acceptance_02_paper_arithmetic_verbatim_cases() {
    // Internal 4_2-vertex: 2 - 2x1 = 0.
    let (pg, v) = common::patch_4_2_vertex();
    let cls = pg.classify();
    assert!(cls.vertex(v).is_internal && pg.degree(v) == 4);
    assert_eq!(cls.vertex(v).incident_triangle_count, 2);
    let ledger = apply_rules(&pg, &cls, RuleSet::Mra).unwrap();
    assert_eq!(ledger.final_of(Element::Vertex(v)), 0);
    assert_eq!(outgoing(&ledger, Element::Vertex(v)), vec![4, 4]);
    assert_eq!(ledger.final_of(Element::Face(pg.outer_face())), 0); // 6 - deg(D)
    println!("PASS criterion 2a: internal 4_2-vertex ends at 2 - 2x1 = 0");

    // Internal 4_1-vertex with a T_2-face: 2 - 1 - 1/2 - 2x(1/4) = 0.
    let (pg, v) = common::patch_4_1_t2_vertex();
    let cls = pg.classify();
    assert!(cls.vertex(v).is_internal && pg.degree(v) == 4);
    assert_eq!(cls.vertex(v).incident_triangle_count, 1);
    let tri = common::inner_face_with_vertices(&pg, &[0, 1, v]);
    assert_eq!(cls.face(tri).common_outer_vertices, 2, "the triangle is a T_2-face");
    let ledger = apply_rules(&pg, &cls, RuleSet::Mra).unwrap();
    assert_eq!(ledger.final_of(Element::Vertex(v)), 0);
    assert_eq!(outgoing(&ledger, Element::Vertex(v)), vec![1, 1, 2, 4]);
    println!("PASS criterion 2b: 4_1-vertex with T_2-face ends at 2 - 1 - 1/2 - 2/4 = 0");

    // Special face: -3 + 1/2 + 2x(5/4) = 0.
    let (pg, tri) = common::patch_special_face();
    let cls = pg.classify();
    let f = common::inner_face_with_vertices(&pg, &tri);
    assert!(cls.face(f).is_special);
    let mut degs: Vec<usize> = tri.iter().map(|&x| pg.degree(x)).collect();
    degs.sort_unstable();
    assert_eq!(degs, vec![4, 5, 5]);
    let ledger = apply_rules(&pg, &cls, RuleSet::Mra).unwrap();
    assert_eq!(ledger.final_of(Element::Face(f)), 0);
    assert_eq!(incoming(&ledger, Element::Face(f)), vec![2, 5, 5]);
    assert_eq!(ledger.final_of(Element::Face(pg.outer_face())), 0);
    println!("PASS criterion 2c: special face ends at -3 + 1/2 + 2x(5/4) = 0");

    // Sink: -1 + 4x(1/4) = 0.
    let (pg, pentagon) = common::patch_sink_exact();
    let cls = pg.classify();
    let sinks = pg.sinks_and_sources();
    assert_eq!(sinks.len(), 1);
    let f = common::inner_face_with_vertices(&pg, &pentagon);
    assert_eq!(sinks[0].face, f);
    assert_eq!(sinks[0].sources.len(), 5);
    let ledger = apply_rules(&pg, &cls, RuleSet::Mra).unwrap();
    assert_eq!(ledger.final_of(Element::Face(f)), 0);
    assert_eq!(incoming(&ledger, Element::Face(f)), vec![1, 1, 1, 1]);
    // Outer face: 6 - deg(D) with a decagonal boundary.
    assert_eq!(ledger.final_of(Element::Face(pg.outer_face())), 4 * (6 - 10));
    println!("PASS criterion 2d: sink ends at -1 + 4x(1/4) = 0; outer face at 6 - deg(D)");

    // MRB internal 5-face with two 4_2-vertices: -1 + 3x(1/2) = 1/2 > 0.
    let (pg, pentagon) = common::patch_internal_five_face();
    let cls = pg.classify();
    let f = common::inner_face_with_vertices(&pg, &pentagon);
    assert!(cls.face(f).is_internal);
    let four_twos: Vec<usize> = pentagon
        .iter()
        .copied()
        .filter(|&x| pg.degree(x) == 4 && cls.vertex(x).incident_triangle_count == 2)
        .collect();
    assert_eq!(four_twos.len(), 2);
    let ledger = apply_rules(&pg, &cls, RuleSet::Mrb).unwrap();
    assert_eq!(ledger.final_of(Element::Face(f)), 2);
    assert_eq!(incoming(&ledger, Element::Face(f)), vec![2, 2, 2]);
    println!("PASS criterion 2e: MRB internal 5-face ends at -1 + 3x(1/2) > 0");

    // MRB internal 5-vertex: 2deg-6 - 2x(5/4) - (deg-2)x(1/2) = 3/2 (deg-5) = 0.
    let (pg, v) = common::patch_internal_five_vertex();
    let cls = pg.classify();
    assert!(cls.vertex(v).is_internal && pg.degree(v) == 5);
    assert_eq!(cls.vertex(v).incident_triangle_count, 2);
    let ledger = apply_rules(&pg, &cls, RuleSet::Mrb).unwrap();
    assert_eq!(ledger.final_of(Element::Vertex(v)), 0);
    assert_eq!(outgoing(&ledger, Element::Vertex(v)), vec![2, 2, 2, 5, 5]);
    println!("PASS criterion 2f: MRB 5-vertex equality 3/2 (deg - 5) = 0");

    // MRC 4_1-vertex: 2 - 1 - 1/2 - 2x(1/4) = 0 (no T_2 condition).
    let (pg, v) = common::patch_4_1_t2_vertex();
    let cls = pg.classify();
    let ledger = apply_rules(&pg, &cls, RuleSet::Mrc).unwrap();
    assert_eq!(ledger.final_of(Element::Vertex(v)), 0);
    assert_eq!(outgoing(&ledger, Element::Vertex(v)), vec![1, 1, 2, 4]);

    // MRC outer-face identity mu*(D) = 6 - deg(D) + p, and Lemma 4Plus:
    // every inner 4+-face in N forwards at least 1 to D.
    let outer_final = ledger.final_of(Element::Face(pg.outer_face()));
    assert_eq!(outer_final, 4 * (6 - 6) + ledger.surplus_to_outer_qu);
    assert!(outer_final > 0);
    let mut checked = 0;
    for f in 0..pg.num_faces() {
        if f == pg.outer_face() || pg.face_degree(f) < 4 || !cls.face(f).in_n {
            continue;
        }
        let sent: i64 = ledger
            .transfers
            .iter()
            .filter(|t| t.rule == "TOD" && t.from == Element::Face(f))
            .map(|t| t.amount_qu)
            .sum();
        assert!(sent >= 4, "face f{f} sent {sent}/4 to D");
        checked += 1;
    }
    assert!(checked >= 3);
    println!("PASS criterion 2g: MRC 4_1-vertex, mu*(D) = 6 - deg(D) + p, and Lemma 4Plus");
}

/// Shared stress campaigns for criteria 5 and 6.
fn stress_results() -> &'static Vec<CampaignResult> {
    static RESULTS: OnceLock<Vec<CampaignResult>> = OnceLock::new();
    RESULTS.get_or_init(|| {
        [TheoremId::Mra, TheoremId::Mrb, TheoremId::Mrc]
            .into_iter()
            .map(|theorem| {
                let mut spec = CampaignSpec::new(theorem, 300, 0xD15C_0C0D ^ theorem as u64);
                spec.size_range = (10, 20);
                spec.assignments = 4;
                spec.precolorings = 8;
                run_campaign(&spec)
            })
            .collect()
    })
}

#[test]
fn acceptance_03_conservation_on_corpus() {
    // Crafted instances: every checkpoint exactly zero under each applicable
    // rule system.
    let crafted: Vec<PlaneGraph> = vec![
        common::patch_4_2_vertex().0,
        common::patch_4_1_t2_vertex().0,
        common::patch_special_face().0,
        common::patch_sink_exact().0,
        common::patch_internal_five_face().0,
        common::patch_internal_five_vertex().0,
    ];
    for pg in &crafted {
        let cls = pg.classify();
        for rules in [RuleSet::Mra, RuleSet::Mrb, RuleSet::Mrc] {
            let ledger = apply_rules(pg, &cls, rules).unwrap();
            assert_eq!(ledger.total_final(), 0);
            for (rule, sum) in &ledger.conservation_checkpoints {
                assert_eq!(*sum, 0, "rule {rule}");
            }
        }
    }
    // Stress corpus: the campaign validates checkpoints per instance.
    let mut instances = 0;
    for result in stress_results() {
        for r in &result.records {
            assert!(r.error.is_none(), "instance {}: {:?}", r.index, r.error);
            assert!(r.ledger_error.is_none(), "instance {}: {:?}", r.index, r.ledger_error);
            assert_eq!(r.conservation_ok, Some(true), "instance {}", r.index);
            instances += 1;
        }
    }
    println!("PASS criterion 3: conservation exact on {instances} stress + 6 crafted instances");
}

#[test]
fn acceptance_04_remark_fidelity() {
    let mut faces_checked = 0;
    for result in stress_results() {
        for r in &result.records {
            assert!(
                r.remark_violations.is_empty(),
                "instance {} hash {:016x}: {:?}",
                r.index,
                r.hash,
                r.remark_violations
            );
            faces_checked += 1;
        }
    }
    println!("PASS criterion 4: special edges net 0 and N-faces receive >= 2 on {faces_checked} instances");
}

#[test]
fn acceptance_05_extension_stress() {
    for result in stress_results() {
        let c = &result.counters;
        assert_eq!(c.instances, 300, "{}", result.theorem);
        let passing = result.records.iter().filter(|r| r.filter_pass).count();
        assert_eq!(passing, 300, "{}: every generated instance passes its filter", result.theorem);
        for r in &result.records {
            assert!(r.n <= 24, "instance sizes stay at desk scale");
            let min_searches = 4 * 8;
            assert!(
                r.searches.len() >= min_searches,
                "{}: instance {} ran only {} searches",
                result.theorem,
                r.index,
                r.searches.len()
            );
            for s in &r.searches {
                assert_eq!(s.status, "extended", "{}: search {}", result.theorem, s.id);
                assert!(s.elapsed_micros < 1_000_000, "search {} took {}us", s.id, s.elapsed_micros);
            }
        }
        assert_eq!(c.no_extension, 0, "{}", result.theorem);
        assert_eq!(c.budget_exhausted, 0, "{}", result.theorem);
        println!(
            "PASS criterion 5 ({}): {} searches on 300 instances, zero no-extension, zero budget-exhausted",
            result.theorem, c.searches
        );
    }
}

#[test]
fn acceptance_06_discharging_verdict_on_clean_instances() {
    for result in stress_results() {
        let c = &result.counters;
        assert_eq!(
            c.verdict_violations, 0,
            "{}: instances passing filter + preconditions must verdict positive",
            result.theorem
        );
        println!(
            "PASS criterion 6 ({}): {} filter+precondition-clean instances, zero verdict violations",
            result.theorem, c.fully_clean
        );
    }
}

#[test]
fn acceptance_07_solver_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(700);
    let mut agreements = 0;
    for i in 0..200u64 {
        let n = 4 + (i as usize % 6); // 4..=9
        let p = 0.25 + 0.4 * (i as f64 % 7.0) / 7.0;
        let g = gen::random_abstract_graph(n, p, 7000 + i);
        let k = 2 + (i % 2) as u32; // k in {2, 3}
        let lists = ListAssignment::uniform(n, k);
        let profile = match i % 3 {
            0 => AssignmentProfile::FullRandomPerfect,
            1 => AssignmentProfile::IdentityWithTwists(0.5),
            _ => AssignmentProfile::Sparse(0.7),
        };
        let m = random_assignment(&g, k, rng.gen(), profile);
        let out = find_mcoloring(&SearchProblem::new(&g, &lists, &m));
        let oracle_has = oracle::has_mcoloring(&g, &lists, &m);
        match out.status {
            SearchStatus::Extended(_) => assert!(oracle_has, "instance {i}: oracle disagrees"),
            SearchStatus::NoExtension => assert!(!oracle_has, "instance {i}: oracle disagrees"),
            SearchStatus::BudgetExhausted => panic!("instance {i}: budget exhausted"),
        }
        agreements += 1;
    }
    assert_eq!(agreements, 200);
    println!("PASS criterion 7: search status matches exhaustive enumeration on 200 instances");
}

#[test]
fn acceptance_08_dp_chromatic_ground_truths() {
    for n in 3..=8usize {
        let start = Instant::now();
        let g = gen::named(&format!("c{n}")).unwrap();
        let r = adversarial_chi_dp(g.graph(), 4, true).unwrap();
        assert_eq!(r.chi, 3, "chi_DP(C{n})");
        assert!(r.hard_assignment.is_some());
        assert!(start.elapsed() < Duration::from_secs(5));
    }

    let start = Instant::now();
    let k4 = gen::named("k4").unwrap();
    let r = adversarial_chi_dp(k4.graph(), 4, true).unwrap();
    assert_eq!(r.chi, 4, "chi_DP(K4)");
    assert!(start.elapsed() < Duration::from_secs(5));

    for (name, edges) in [
        ("path", vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
        ("star", vec![(0, 1), (0, 2), (0, 3)]),
        ("broom", vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]),
    ] {
        let start = Instant::now();
        let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
        let g = SimpleGraph::from_edges(n, &edges);
        let r = adversarial_chi_dp(&g, 4, true).unwrap();
        assert_eq!(r.chi, 2, "chi_DP({name})");
        assert!(start.elapsed() < Duration::from_secs(5));
    }
    println!("PASS criterion 8: chi_DP(C3..C8) = 3, chi_DP(K4) = 4, chi_DP(trees) = 2");
}

#[test]
fn acceptance_09_straightening() {
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    let mut holding = 0;
    let mut attempts = 0u64;
    while holding < 500 {
        attempts += 1;
        let n = 4 + (attempts as usize % 5); // 4..=8
        let g = gen::random_abstract_graph(n, 0.5, 9000 + attempts);
        if g.num_edges() == 0 {
            continue;
        }
        let k = 2 + (attempts % 2) as u32; // k in {2, 3}
        let lists = ListAssignment::uniform(n, k);
        let h_edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.7))
            .collect();
        if h_edges.is_empty() {
            continue;
        }
        // Straight-by-construction on h, then scrambled by per-vertex
        // renamings: the precondition holds by invariance.
        let mut m0 = MatchingAssignment::new();
        for &(u, v) in g.edges() {
            if h_edges.contains(&(u, v)) {
                m0.set_pairs(u, v, (1..=k).map(|c| (c, c)).collect());
            } else {
                m0 = scramble_edge(m0, u, v, k, &mut rng);
            }
        }
        let rho: Vec<Vec<u32>> = (0..n).map(|_| random_permutation(k, &mut rng)).collect();
        let m = m0.rename(&rho);

        let before = oracle::count_mcolorings(&g, &lists, &m);
        let result = straighten(&g, &lists, &m, &h_edges).expect("precondition holds");
        for &(u, v) in &h_edges {
            let flags = cover::edge_predicates(&g, &lists, &result.matching, u, v).unwrap();
            assert!(flags.is_straight, "edge {u}-{v} not straight");
        }
        let after = oracle::count_mcolorings(&g, &lists, &result.matching);
        assert_eq!(before, after, "coloring count changed");
        holding += 1;
    }

    // Violating triples: a planted twist on a cycle edge of h is reported
    // with a genuinely inconsistent (or non-full) cycle.
    let mut violated = 0;
    let mut seed = 0u64;
    while violated < 100 {
        seed += 1;
        let n = 5 + (seed as usize % 4);
        let g = gen::random_abstract_graph(n, 0.55, 99_000 + seed);
        let h_edges: Vec<(usize, usize)> = g.edges().to_vec();
        let bridges = g.bridges();
        let cycle_edge = h_edges.iter().copied().find(|e| !bridges.contains(e));
        let (u, v) = match cycle_edge {
            Some(e) => e,
            None => continue,
        };
        let k = 3;
        let lists = ListAssignment::uniform(n, k);
        let mut m = MatchingAssignment::new();
        for &(a, b) in g.edges() {
            m.set_pairs(a, b, (1..=k).map(|c| (c, c)).collect());
        }
        // Swap two colors on one side of a non-bridge edge.
        m.set_pairs(u, v, vec![(1, 2), (2, 1), (3, 3)]);
        match straighten(&g, &lists, &m, &h_edges) {
            Err(cover::StraightenError::PreconditionViolated { cycle, defect }) => {
                match defect {
                    cover::CycleDefect::Inconsistent { .. } => {
                        let walk = cover::ClosedWalk::new(&g, cycle).unwrap();
                        assert!(!cover::consistency_on_walk(&lists, &m, &walk).is_consistent());
                    }
                    cover::CycleDefect::NonFullEdge { .. } => panic!("all edges are full"),
                }
                violated += 1;
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }
    println!("PASS criterion 9: 500 straightenings preserved counts; 100 violations reported with certified cycles");
}

fn random_permutation(k: u32, rng: &mut ChaCha8Rng) -> Vec<u32> {
    use rand::seq::SliceRandom;
    let mut p: Vec<u32> = (1..=k).collect();
    p.shuffle(rng);
    p
}

fn scramble_edge(
    mut m: MatchingAssignment,
    u: usize,
    v: usize,
    k: u32,
    rng: &mut ChaCha8Rng,
) -> MatchingAssignment {
    let image = random_permutation(k, rng);
    m.set_pairs(u, v, (1..=k).zip(image).collect());
    m
}

#[test]
fn acceptance_10_pattern_matcher_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut hosts: Vec<(String, SimpleGraph)> = Vec::new();

    // Planted positives: a pattern plus noise vertices and edges.
    let plant = |base: &SimpleGraph, extra: usize, seed: u64| -> SimpleGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = base.n() + extra;
        let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
        for v in base.n()..n {
            // Attach each noise vertex somewhere.
            edges.push((rng.gen_range(0..v), v));
        }
        for u in 0..n {
            for v in u + 1..n {
                if !edges.contains(&(u, v)) && rng.gen_bool(0.1) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(n, &edges)
    };
    let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let bowtie = SimpleGraph::from_edges(5, &[(0, 1), (1, 4), (4, 0), (4, 3), (3, 2), (2, 4)]);
    let house = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]);
    for i in 0..10u64 {
        hosts.push((format!("k4+{i}"), plant(&k4, 3 + (i as usize % 4), 100 + i)));
        hosts.push((format!("bowtie+{i}"), plant(&bowtie, 2 + (i as usize % 4), 200 + i)));
        hosts.push((format!("house+{i}"), plant(&house, 2 + (i as usize % 4), 300 + i)));
    }
    // Guaranteed negatives: random bipartite graphs (triangle-free).
    for i in 0..35u64 {
        let left = 3 + (i as usize % 3);
        let right = 3 + (i as usize % 4);
        let mut edges = Vec::new();
        let mut r2 = ChaCha8Rng::seed_from_u64(400 + i);
        for u in 0..left {
            for v in 0..right {
                if r2.gen_bool(0.5) {
                    edges.push((u, left + v));
                }
            }
        }
        hosts.push((format!("bip{i}"), SimpleGraph::from_edges(left + right, &edges)));
    }
    // Random hosts.
    for i in 0..35u64 {
        let n = 5 + (i as usize % 6);
        hosts.push((format!("rand{i}"), gen::random_abstract_graph(n, rng.gen_range(0.2..0.6), 500 + i)));
    }
    assert_eq!(hosts.len(), 100);
    assert!(hosts.iter().all(|(_, h)| h.n() <= 10));

    let mut pairs = 0;
    for pat in patterns::library() {
        for (name, host) in &hosts {
            let fast = patterns::contains(host, &pat);
            let slow = oracle::contains_by_injections(host, &pat.graph);
            assert_eq!(fast.is_some(), slow, "{} on {}", pat.id.name(), name);
            if let Some(w) = fast {
                for &(a, b) in pat.graph.edges() {
                    assert!(host.has_edge(w.mapping[a], w.mapping[b]));
                }
                let distinct: BTreeSet<usize> = w.mapping.iter().copied().collect();
                assert_eq!(distinct.len(), w.mapping.len());
            }
            pairs += 1;
        }
    }
    // Planted positives are found; bipartite hosts contain nothing.
    for (name, host) in &hosts {
        if name.starts_with("k4") {
            assert!(patterns::contains(host, &patterns::pattern(patterns::PatternId::Fig2A)).is_some());
        }
        if name.starts_with("bowtie") {
            assert!(patterns::contains(host, &patterns::pattern(patterns::PatternId::Fig3A)).is_some());
        }
        if name.starts_with("house") {
            assert!(patterns::contains(host, &patterns::pattern(patterns::PatternId::Fig4A)).is_some());
        }
        if name.starts_with("bip") {
            for pat in patterns::library() {
                assert!(patterns::contains(host, &pat).is_none());
            }
        }
    }
    println!("PASS criterion 10: matcher agrees with the all-injections oracle on {pairs} pairs");
}

/// Ring of length `m` with hub `w`; FOUR1 removes {w, w1, w3} and identifies
/// w2 and w4, FOUR2 adds the triangle edge w1-w2, removes {w, w1}.
struct FourShape {
    g: SimpleGraph,
    w: usize,
    spokes: [usize; 4],
    four2: bool,
}

fn four_shape(m: usize, four2: bool) -> FourShape {
    let w = m;
    let q = m / 4;
    let spokes = [0, q, 2 * q, 3 * q];
    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    for &s in &spokes {
        edges.push((s, w));
    }
    if four2 {
        // Triangle on w-w1-w2 requires w1 adjacent to w2.
        edges.push((spokes[0], spokes[1]));
    }
    FourShape { g: SimpleGraph::from_edges(m + 1, &edges), w, spokes, four2 }
}

#[test]
fn acceptance_11_identification_lift() {
    let k = 4u32;
    let mut checked_colorings = 0u64;
    for t in 0..50 {
        let four2 = t % 2 == 1;
        let m = 8 + (t % 3) * 2; // 8, 10, 12
        let shape = four_shape(m, four2);
        let g = &shape.g;
        let lists = ListAssignment::uniform(g.n(), k);
        let m_random = random_assignment(g, k, 1100 + t as u64, AssignmentProfile::FullRandomPerfect);
        // Straighten the hub star, as the lemma proofs assume.
        let star: Vec<(usize, usize)> = shape
            .spokes
            .iter()
            .map(|&s| (s.min(shape.w), s.max(shape.w)))
            .collect();
        let straightened = straighten(g, &lists, &m_random, &star).unwrap();
        let mm = straightened.matching;
        let [w1, w2, w3, w4] = shape.spokes;

        let removed: BTreeSet<usize> = if shape.four2 {
            [shape.w, w1].into_iter().collect()
        } else {
            [shape.w, w1, w3].into_iter().collect()
        };
        let identified = cover::identify(g, &mm, &removed, w2, w4).unwrap();
        let lists2 = ListAssignment::uniform(identified.graph.n(), k);

        let colorings = oracle::all_mcolorings(&identified.graph, &lists2, &identified.matching);
        assert!(!colorings.is_empty());
        for phi in &colorings {
            // Lift to g - removed: both identified vertices get the merged color.
            let mut colors = vec![0u32; g.n()];
            for old in 0..g.n() {
                if let Some(new) = identified.old_to_new[old] {
                    colors[old] = phi[new];
                }
            }
            // No surviving constraint is violated.
            for &(a, b) in g.edges() {
                if removed.contains(&a) || removed.contains(&b) {
                    continue;
                }
                assert!(
                    !mm.is_matched(a, colors[a], b, colors[b]),
                    "lift violates edge {a}-{b}"
                );
            }
            // Greedy extension to removed vertices, exactly as in the proofs:
            // w1 (and w3) see at most 3 colored neighbors, then w sees at most
            // 3 distinct forbidden colors because w2 and w4 share a color and
            // the hub star is straight.
            let mut order: Vec<usize> = if shape.four2 { vec![w1] } else { vec![w1, w3] };
            order.push(shape.w);
            for &x in &order {
                let chosen = (1..=k)
                    .find(|&c| {
                        g.neighbors(x).iter().all(|&nb| {
                            colors[nb] == 0 || !mm.is_matched(x, c, nb, colors[nb])
                        })
                    })
                    .unwrap_or_else(|| panic!("no free color for vertex {x}"));
                colors[x] = chosen;
            }
            cover::validate_mcoloring(g, &lists, &mm, &cover::MColoring { colors })
                .expect("lifted extension is a valid M-coloring");
            checked_colorings += 1;
        }
    }
    println!("PASS criterion 11: {checked_colorings} identified colorings lifted and extended on 50 instances");
}
