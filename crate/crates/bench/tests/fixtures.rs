use paraspace_bench::{bench_profile, fixtures};

#[test]
fn fixtures_are_stable() {
    bench_profile().check().unwrap();
    for kind in ["lcs", "agen", "ca", "seqca", "family-union:bf"] {
        let a: Vec<String> = fixtures(kind, 4).iter().map(|i| i.serialize()).collect();
        let b: Vec<String> = fixtures(kind, 4).iter().map(|i| i.serialize()).collect();
        assert_eq!(a, b, "{kind}");
    }
}
