use paraspace::harness::*;
use paraspace::*;

fn opts(cases: usize, seed: u64) -> VerifyOptions {
    let mut o = VerifyOptions::new(cases, seed);
    o.budget = 1_000_000;
    o
}

#[test]
fn generation_is_a_function_of_the_seed() {
    for kind in ["bf", "layered-reach", "agen", "family-union:cycle", "tm-run", "ca-dag", "seqca", "lcs-injective"] {
        let p = Profile::default();
        let a = gen_instance(kind, &p, 42).unwrap().serialize();
        assert_eq!(a, gen_instance(kind, &p, 42).unwrap().serialize(), "{kind}");
    }
}

#[test]
fn empty_graphs_are_allowed() {
    let p = Profile { size: 0, ..Profile::default() };
    for seed in 0..10 {
        let ProblemInstance::Graph(g) = gen_instance("graph", &p, seed).unwrap() else { unreachable!() };
        assert_eq!(g.n(), 0);
    }
}

#[test]
fn generated_tables_are_associative() {
    let p = Profile { size: 6, k: 2, ..Profile::default() };
    for seed in 0..100 {
        let ProblemInstance::Agen(g) = gen_instance("agen", &p, seed).unwrap() else { unreachable!() };
        let n = g.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)), "seed {seed}");
                }
            }
        }
    }
}

#[test]
fn profiles_past_the_caps_are_rejected() {
    let p = Profile { cells: PROFILE_CAPS.cells + 1, ..Profile::default() };
    assert!(matches!(gen_instance("ca", &p, 0), Err(Error::Invalid(_))));
    let mut o = opts(1, 0);
    o.profile = Some(p);
    assert!(verify_reduction("tm_to_ca", &o).is_err());
    assert!(gen_instance("no-such-kind", &Profile::default(), 0).is_err());
}

#[test]
fn unknown_reductions_are_named() {
    assert_eq!(lookup("nope").unwrap_err(), Error::UnknownReduction("nope".into()));
    assert!(matches!(verify_reduction("nope", &opts(1, 0)), Err(Error::UnknownReduction(_))));
}

#[test]
fn mismatched_pipelines_are_rejected() {
    assert!(Pipeline::parse("tm_to_ca+seqca_to_lcs").is_err());
    let p = Pipeline::parse("tm_to_ca+ca_to_tpg_cyclic").unwrap();
    assert_eq!((p.source(), p.target()), ("tm-space", "tpg"));
}

#[test]
fn identical_seeds_give_identical_reports() {
    for name in ["family_to_subset_bf", "tm_space_compress", "seqca_to_lcs"] {
        let a = verify_reduction(name, &opts(20, 9)).unwrap();
        let b = verify_reduction(name, &opts(20, 9)).unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.same_outcome(y)), "{name}");
        assert!(a.iter().enumerate().all(|(i, r)| r.case_id == i));
    }
}

#[test]
fn exhausted_budgets_skip() {
    let mut o = opts(10, 0);
    o.budget = 1;
    let reports = verify_reduction("seqca_to_lcs", &o).unwrap();
    let s = Summary::of(&reports);
    // Some cases are decided by their first node.
    assert!(s.skipped >= 5, "{s:?}");
    assert_eq!(s.skipped + s.agree, 10);
    assert!(s.passed());
}

#[test]
fn reports_roundtrip_through_json() {
    let reports = verify_reduction("family_to_subset_bf+subset_to_weighted_bf", &opts(10, 3)).unwrap();
    assert_eq!(parse_json_lines(&json_lines(&reports)).unwrap(), reports);
    assert!(reports.iter().all(|r| r.intermediate.len() == 1));
}

#[test]
fn identity_always_agrees() {
    let s = Summary::of(&verify_reduction("identity", &opts(100, 0)).unwrap());
    assert_eq!(s.agree, 100);
    assert_eq!(s.agreement_rate(), 100.0);
}

#[test]
fn layered_graphs_agree() {
    let reports = verify_reduction("layeredreach_to_lcs_injective", &opts(200, 1)).unwrap();
    let s = Summary::of(&reports);
    assert_eq!(s.agree, 200, "{s:?}");
    assert!(s.yes > 0 && s.yes < 200);
    assert!(reports.iter().all(|r| r.kappa2 <= r.g_kappa1));
}

#[test]
fn worked_family_example_agrees_on_both_hops() {
    let phi = BooleanFormula::new(parse_formula("v1 & v2 | v3").unwrap(), 3).unwrap();
    let t = model::union::bf_template(&phi);
    let w = |b: [bool; 3]| t.instantiate(&b).unwrap();
    let fam = FamilyUnionInstance::new(UnionBase::Bf, t.clone(), vec![
        vec![w([false, false, false]), w([false, false, true])],
        vec![w([false, false, true])],
    ])
    .unwrap();
    let r = verify_instances("family_to_subset_bf+subset_to_weighted_bf", &[fam.into()], &opts(1, 0)).unwrap();
    assert_eq!(r[0].status, Status::Agree);
    assert_eq!(r[0].source_answer, Some(true));
    assert_eq!(r[0].intermediate, vec![true]);
}

#[test]
fn parameters_follow_the_recorded_bound() {
    let reports = verify_reduction("subset_to_weighted_agen", &opts(20, 5)).unwrap();
    for r in reports.iter().filter(|r| r.status == Status::Agree) {
        assert_eq!(r.kappa2, r.kappa1 + 3);
    }
}
