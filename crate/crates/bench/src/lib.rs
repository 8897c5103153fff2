//! Fixed instances for the benchmarks.

use paraspace::harness::{gen_instance, ProblemInstance, Profile};

/// The profile every benchmark instance is drawn from.
pub fn bench_profile() -> Profile {
    Profile { size: 5, k: 3, states: 3, cells: 4, steps: 6, layers: 5, deterministic: None }
}

/// `count` instances of `kind` from seeds 0, 1, ...
pub fn fixtures(kind: &str, count: u64) -> Vec<ProblemInstance> {
    (0..count).map(|s| gen_instance(kind, &bench_profile(), s).expect("bench profile is feasible")).collect()
}
