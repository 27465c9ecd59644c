//! Parallel vs sequential benchmarks for the two data-parallel inner loops:
//! adversarial assignment enumeration and campaign execution.
//!
//! Built with the default `parallel` feature, `adversarial_chi_dp` and
//! `run_campaign` fan out over rayon while the `_seq` twins stay on one
//! thread; without the feature both sides run sequentially and should match.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dpcol::campaign::{run_campaign, run_campaign_seq, CampaignSpec};
use dpcol::gen;
use dpcol::solver::{adversarial_chi_dp, adversarial_chi_dp_seq};
use dpcol::TheoremId;

fn bench_chi_dp(c: &mut Criterion) {
    let prism = gen::named("prism4").unwrap();
    let g = prism.graph().clone();
    let mut group = c.benchmark_group("chi_dp_prism4_k3");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("parallel", "prism4"), &g, |b, g| {
        b.iter(|| adversarial_chi_dp(g, 3, true).unwrap())
    });
    group.bench_with_input(BenchmarkId::new("sequential", "prism4"), &g, |b, g| {
        b.iter(|| adversarial_chi_dp_seq(g, 3, true).unwrap())
    });
    group.finish();
}

fn bench_campaign(c: &mut Criterion) {
    let mut spec = CampaignSpec::new(TheoremId::Mra, 12, 42);
    spec.size_range = (9, 14);
    spec.assignments = 2;
    spec.precolorings = 4;
    let mut group = c.benchmark_group("campaign_mra_12_instances");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| run_campaign(&spec)));
    group.bench_function("sequential", |b| b.iter(|| run_campaign_seq(&spec)));
    group.finish();
}

criterion_group!(benches, bench_chi_dp, bench_campaign);
criterion_main!(benches);
