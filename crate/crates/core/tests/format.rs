use paraspace::harness::{gen_instance, ProblemInstance, Profile};
use paraspace::*;
use proptest::prelude::*;

const KINDS: &[&str] = &[
    "bf",
    "graph",
    "reach",
    "dag-reach",
    "layered-reach",
    "cycle",
    "undirected-reach",
    "tree",
    "forest",
    "undirected-cycle",
    "agen",
    "family-union:bf",
    "family-union:reach",
    "family-union:agen",
    "subset-union:bf",
    "subset-union:forest",
    "subset-union:agen",
    "weighted-union:bf",
    "weighted-union:undirected-cycle",
    "weighted-union:agen",
    "tm-bounded",
    "tm-run",
    "ca",
    "ca-bounded",
    "ca-dag",
    "seqca",
    "seqca-raw",
    "lcs",
    "lcs-injective",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_inverts_serialize(kind in prop::sample::select(KINDS), seed in any::<u64>(), size in 2usize..6, k in 1usize..4) {
        let p = Profile { size, k, ..Profile::default() };
        let inst = gen_instance(kind, &p, seed).unwrap();
        let text = inst.serialize();
        let back = ProblemInstance::parse_any(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn templates_roundtrip_through_instantiation(bits in prop::collection::vec(any::<bool>(), 0..10)) {
        let t = TemplateWord::new((0..bits.len()).map(|i| if i % 3 == 0 { "x".to_string() } else { "?".to_string() })).unwrap();
        let ones: Vec<bool> = bits[..t.hole_count()].to_vec();
        let w = t.instantiate(&ones).unwrap();
        prop_assert_eq!(w.template(), t.clone());
        prop_assert!(is_instantiation_of(w.symbols(), &t));
        prop_assert_eq!(w.bits(), ones.clone());
        prop_assert_eq!(weight(&w), ones.iter().filter(|&&b| b).count());
    }
}

#[test]
fn reserved_symbols_are_rejected_in_alphabets() {
    let rs = ReplacementSystem { alphabet: vec!["a".into(), "b".into()], rules: vec![(vec![0, 1], vec![1])] };
    let text = rs.serialize();
    assert_eq!(ProblemInstance::parse_any(&text).unwrap(), ProblemInstance::Rs(rs));
    for reserved in ["?", "0", "1"] {
        let bad = text.replacen(" b", &format!(" {reserved}"), 1);
        assert_ne!(bad, text);
        assert!(ProblemInstance::parse_any(&bad).is_err(), "{bad}");
    }
}

#[test]
fn unknown_kind_is_a_parse_error() {
    assert!(matches!(ProblemInstance::parse_any("frobnicate 3\n"), Err(Error::Parse(_))));
}
