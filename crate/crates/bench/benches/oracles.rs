use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use paraspace::harness::{solve, verify_reduction, VerifyOptions};
use paraspace_bench::fixtures;

const BUDGET: u64 = 1_000_000;

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve");
    for (problem, kind) in [
        ("lcs", "lcs"),
        ("lcs-injective", "lcs-injective"),
        ("layered-reach", "layered-reach"),
        ("agen", "agen"),
        ("tm-bounded", "tm-bounded"),
        ("ca", "ca"),
        ("seqca", "seqca"),
        ("family-union", "family-union:bf"),
    ] {
        let insts = fixtures(kind, 16);
        g.bench_with_input(BenchmarkId::from_parameter(problem), &insts, |b, insts| {
            b.iter(|| {
                for i in insts {
                    let _ = black_box(solve(problem, i, None, BUDGET));
                }
            })
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for name in ["family_to_subset_bf", "layeredreach_to_lcs_injective", "dagca_to_tpg", "seqca_to_lcs"] {
        g.bench_function(name, |b| b.iter(|| verify_reduction(name, &VerifyOptions::new(10, 0)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, oracles, suites);
criterion_main!(benches);
