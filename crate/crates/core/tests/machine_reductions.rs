mod common;

use paraspace::harness::{gen_instance, lookup, ProblemInstance, Profile};
use paraspace::oracles::tpg::max_trace;
use paraspace::oracles::*;
use paraspace::reductions::machine::sequential::real_strings;
use paraspace::reductions::machine::*;
use paraspace::*;
use proptest::prelude::*;

const B: u64 = 1_000_000;

fn profile_of(name: &str) -> Profile {
    (lookup(name).unwrap().profile)()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tm_reductions_preserve_answers(seed in any::<u64>()) {
        for name in ["tm_hardwire_input", "tm_space_compress", "dtsc_from_parameterized_run", "tm_to_ca", "tm_to_nca"] {
            common::one_case(name, None, seed)?;
        }
    }

    #[test]
    fn automaton_reductions_preserve_answers(seed in any::<u64>()) {
        for name in ["ca_to_dag_ca", "dagca_to_tpg", "ca_to_tpg_cyclic", "nca_to_sequential", "normalize_sequential", "seqca_to_lcs"] {
            common::one_case(name, None, seed)?;
        }
    }

    #[test]
    fn layered_reach_preserves_answers(seed in any::<u64>()) {
        common::one_case("layeredreach_to_lcs_injective", None, seed)?;
    }

    #[test]
    fn compression_preserves_answers_for_every_block(seed in 0u64..1000, b in 1usize..=4) {
        let ProblemInstance::TmBounded(inst) = gen_instance("tm-bounded", &profile_of("tm_space_compress"), seed).unwrap() else {
            unreachable!()
        };
        let c = tm_space_compress(&inst.machine, b, inst.s).unwrap();
        prop_assert_eq!(c.cells, inst.s.div_ceil(b));
        let out = BoundedTMInstance::new(c.machine.clone(), c.steps(inst.t), c.cells).unwrap();
        prop_assert_eq!(run_tm_bounded(&inst, B).unwrap(), run_tm_bounded(&out, B).unwrap());
    }

    #[test]
    fn dag_layering_is_monotone(seed in 0u64..1000, t in 1usize..4) {
        let ProblemInstance::Ca(c) = gen_instance("ca", &profile_of("ca_to_dag_ca"), seed).unwrap() else { unreachable!() };
        let d = ca_to_dag_ca(&c, t).unwrap();
        prop_assert!(d.automaton.dag && d.automaton.is_monotone());
        let mode = if c.automaton.deterministic { CaMode::Det } else { CaMode::Nondet };
        prop_assert_eq!(run_ca_bounded(&c, mode, t, B).unwrap(), run_ca(&d, mode, B).unwrap());
    }

    #[test]
    fn tm_to_ca_tracks_the_machine(seed in 0u64..1000) {
        let ProblemInstance::TmBounded(inst) = gen_instance("tm-bounded", &profile_of("tm_to_ca"), seed).unwrap() else {
            unreachable!()
        };
        let (m, s) = (&inst.machine, inst.s);
        let ca = tm_to_ca(m, s).unwrap();
        let idx = m.transition_index();
        let mut head = Some((m.initial, 0usize));
        let mut tape = vec![0usize; s];
        let mut config = ca.initial.clone();
        for _ in 0..20 {
            prop_assert_eq!(decode_tm_config(m, &config), (head, tape.clone()));
            if let Some((q, p)) = head {
                if let Some(tr) = idx.get(&(q, tape[p])).and_then(|v| v.first()) {
                    tape[p] = tr.write;
                    let np = p as isize + tr.mv.delta();
                    head = (0..s as isize).contains(&np).then_some((tr.to, np as usize));
                }
            }
            let next = ca_step(&ca.automaton, &config);
            prop_assert_eq!(next.len(), 1);
            config = next.into_iter().next().unwrap();
        }
    }

    /// A tag two major steps later never precedes an earlier one.
    #[test]
    fn sequential_tags_respect_step_order(seed in 0u64..300) {
        let ProblemInstance::SeqCa(s) = gen_instance("seqca", &profile_of("seqca_to_lcs"), seed).unwrap() else { unreachable!() };
        for string in real_strings(&s).unwrap() {
            for (p, x) in string.iter().enumerate() {
                for y in &string[p + 1..] {
                    prop_assert!(x.step < y.step + 2, "{x:?} before {y:?}");
                }
            }
        }
    }

    #[test]
    fn sequential_witness_embeds(seed in 0u64..300) {
        let ProblemInstance::SeqCa(s) = gen_instance("seqca", &profile_of("seqca_to_lcs"), seed).unwrap() else { unreachable!() };
        let lcs = seqca_to_lcs(&s).unwrap();
        prop_assert_eq!(lcs.strings.len(), 4 * s.cells());
        match lcs_decide(&lcs, B) {
            Err(e) if e.is_budget() => {}
            got => prop_assert_eq!(run_sequential(&s, B).unwrap(), got.unwrap()),
        }
    }

    /// Two edges leaving one layer appear in opposite orders in the two
    /// strings of a pair.
    #[test]
    fn layered_strings_are_anti_parallel(seed in 0u64..500) {
        let ProblemInstance::Graph(g) = gen_instance("layered-reach", &profile_of("layeredreach_to_lcs_injective"), seed).unwrap() else {
            unreachable!()
        };
        let lcs = layeredreach_to_lcs_injective(&g).unwrap();
        let layers = g.layers.clone().unwrap();
        let arcs = g.arcs();
        let pos = |s: usize, e: usize| lcs.strings[s].iter().position(|&x| x == e);
        for e in 0..arcs.len() {
            for f in e + 1..arcs.len() {
                if layers[arcs[e].0] != layers[arcs[f].0] {
                    continue;
                }
                for pair in [0, 2] {
                    if let (Some(a), Some(b), Some(c), Some(d)) = (pos(pair, e), pos(pair, f), pos(pair + 1, e), pos(pair + 1, f)) {
                        prop_assert_eq!(a < b, d < c);
                    }
                }
            }
        }
    }

    #[test]
    fn max_pebbling_is_deterministic(seed in 0u64..300) {
        let ProblemInstance::Ca(c) = gen_instance("ca-dag", &profile_of("dagca_to_tpg"), seed).unwrap() else { unreachable!() };
        let game = dagca_to_tpg_normalized(&c).unwrap();
        prop_assert_eq!(max_trace(&game, 64), max_trace(&game, 64));
    }

    #[test]
    fn mfa_layering(a in mfa(), t in 1usize..6) {
        let d = mfa_to_dag(&a, t).unwrap();
        d.validate().unwrap();
        let layered = run_mfa(&d, B).unwrap();
        prop_assert!(!layered || run_mfa(&a, B).unwrap());
        // Enough steps to visit every configuration.
        let all = a.states * (a.input.len() + 2).pow(a.heads as u32);
        prop_assert_eq!(run_mfa(&mfa_to_dag(&a, all).unwrap(), B).unwrap(), run_mfa(&a, B).unwrap());
    }
}

prop_compose! {
    fn mfa()(states in 2usize..4, heads in 1usize..3, input in prop::collection::vec(0usize..2, 0..4))
        (raw in prop::collection::vec((0..states, prop::collection::vec(0usize..4, heads), 0..states, prop::collection::vec(-1i8..=1, heads)), 0..10),
         states in Just(states), heads in Just(heads), input in Just(input))
        -> MultiHeadAutomaton
    {
        MultiHeadAutomaton {
            states,
            heads,
            alphabet: vec!["a".into(), "b".into()],
            transitions: raw.into_iter().map(|(from, read, to, moves)| MfaTransition { from, read, to, moves }).collect(),
            initial: 0,
            accepting: vec![states - 1],
            deterministic: false,
            dag: false,
            input,
        }
    }
}
