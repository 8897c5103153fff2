//! Reference solvers on hand-computed instances.

use paraspace::oracles::*;
use paraspace::*;

const B: u64 = 1_000_000;

fn graph(n: usize, directed: bool, edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::new(n, directed);
    for &(a, b) in edges {
        g.add_edge(a, b);
    }
    g
}

fn with_st(mut g: Graph, s: usize, t: usize) -> Graph {
    g.s = Some(s);
    g.t = Some(t);
    g
}

#[test]
fn bf_evaluates_connectives() {
    let f = BooleanFormula::new(parse_formula("v1 & (v2 -> v1) & v3").unwrap(), 3).unwrap();
    assert!(eval_bf(&f, &[true, false, true]).unwrap());
    assert!(eval_bf(&f, &[true, true, true]).unwrap());
    assert!(!eval_bf(&f, &[false, false, true]).unwrap());
    assert!(!eval_bf(&f, &[true, true, false]).unwrap());
    let g = BooleanFormula::new(parse_formula("~v1 | F").unwrap(), 1).unwrap();
    assert!(eval_bf(&g, &[false]).unwrap());
    assert!(eval_bf(&f, &[true]).is_err());
}

#[test]
fn reachability_kinds() {
    use GraphPropertyKind::*;
    let path = with_st(graph(3, true, &[(0, 1), (1, 2)]), 0, 2);
    assert!(graph_property(Reach, &path).unwrap());
    assert!(graph_property(DagReach, &path).unwrap());
    let back = with_st(graph(3, true, &[(1, 0), (2, 1)]), 0, 2);
    assert!(!graph_property(Reach, &back).unwrap());
    let cyclic = with_st(graph(3, true, &[(0, 1), (1, 0), (1, 2)]), 0, 2);
    assert!(graph_property(Reach, &cyclic).unwrap());
    assert!(!graph_property(DagReach, &cyclic).unwrap());
    let und = with_st(graph(3, false, &[(2, 1), (1, 0)]), 0, 2);
    assert!(graph_property(UndirectedReach, &und).unwrap());
}

#[test]
fn layered_reach_needs_a_layered_graph() {
    let mut g = with_st(graph(4, true, &[(0, 1), (0, 2), (2, 3)]), 0, 3);
    g.layers = Some(vec![0, 1, 1, 2]);
    assert!(graph_property(GraphPropertyKind::LayeredReach, &g).unwrap());
    let mut h = with_st(graph(4, true, &[(0, 1), (0, 2)]), 0, 3);
    h.layers = Some(vec![0, 1, 1, 2]);
    assert!(!graph_property(GraphPropertyKind::LayeredReach, &h).unwrap());
}

#[test]
fn cycles_trees_forests() {
    use GraphPropertyKind::*;
    assert!(graph_property(Cycle, &graph(3, true, &[(0, 1), (1, 2), (2, 0)])).unwrap());
    assert!(!graph_property(Cycle, &graph(3, true, &[(0, 1), (1, 2), (0, 2)])).unwrap());
    assert!(graph_property(Cycle, &graph(1, true, &[(0, 0)])).unwrap());
    let tri = graph(3, false, &[(0, 1), (1, 2), (2, 0)]);
    assert!(graph_property(UndirectedCycle, &tri).unwrap());
    assert!(!graph_property(Forest, &tri).unwrap());
    let star = graph(4, false, &[(0, 1), (0, 2), (0, 3)]);
    assert!(graph_property(Tree, &star).unwrap());
    assert!(!graph_property(UndirectedCycle, &star).unwrap());
    let two = graph(4, false, &[(0, 1), (2, 3)]);
    assert!(graph_property(Forest, &two).unwrap());
    assert!(!graph_property(Tree, &two).unwrap());
}

fn z4(k: usize, target: usize, candidates: Vec<usize>) -> GeneratorInstance {
    GeneratorInstance {
        names: (0..4).map(|i| format!("z{i}")).collect(),
        table: (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect(),
        target,
        candidates,
        k,
        associative: true,
    }
}

#[test]
fn generator_closure_in_cyclic_group() {
    // z2 alone generates {0, 2}; z1 generates everything.
    assert!(agen_decide(&z4(1, 3, vec![2, 3]), B).unwrap());
    assert!(agen_decide(&z4(1, 3, vec![1]), B).unwrap());
    assert!(!agen_decide(&z4(1, 3, vec![2]), B).unwrap());
    assert!(agen_decide(&z4(1, 0, vec![2]), B).unwrap());
    let closure = generator_closure(&z4(1, 0, vec![]).table, &[2]);
    assert_eq!(closure, vec![true, false, true, false]);
    assert!(!agen_decide(&z4(0, 1, vec![1]), B).unwrap());
}

fn tm(transitions: Vec<TmTransition>, deterministic: bool) -> SingleTapeTM {
    SingleTapeTM {
        states: vec!["a".into(), "b".into(), "acc".into()],
        alphabet: vec!["_".into(), "1".into()],
        transitions,
        initial: 0,
        accepting: vec![2],
        deterministic,
    }
}

fn tr(from: usize, read: usize, to: usize, write: usize, mv: Move) -> TmTransition {
    TmTransition { from, read, to, write, mv }
}

#[test]
fn bounded_machine_needs_time_and_space() {
    // Walks right writing 1s and accepts on the third cell.
    let m = tm(vec![tr(0, 0, 1, 1, Move::R), tr(1, 0, 2, 1, Move::R)], true);
    assert!(run_tm_bounded(&BoundedTMInstance::new(m.clone(), 2, 3).unwrap(), B).unwrap());
    assert!(!run_tm_bounded(&BoundedTMInstance::new(m.clone(), 1, 3).unwrap(), B).unwrap());
    assert!(!run_tm_bounded(&BoundedTMInstance::new(m.clone(), 2, 2).unwrap(), B).unwrap());
    assert!(run_tm_space(&m, 3, B).unwrap());
    assert!(!run_tm_space(&m, 2, B).unwrap());
}

#[test]
fn nondeterministic_machine_takes_any_branch() {
    let m = tm(vec![tr(0, 0, 0, 0, Move::S), tr(0, 0, 2, 0, Move::S)], false);
    assert!(run_tm_bounded(&BoundedTMInstance::new(m.clone(), 1, 1).unwrap(), B).unwrap());
    let loops = tm(vec![tr(0, 0, 0, 0, Move::S)], true);
    assert!(!run_tm_space(&loops, 1, B).unwrap());
}

fn counter_ca() -> CellularInstance {
    // Each cell counts 0 -> 1 -> 2; 2 accepts.
    let mut a = CellularAutomaton::new(vec!["0".into(), "1".into(), "2".into()]);
    let sides = [None, Some(0), Some(1), Some(2)];
    for &l in &sides {
        for &r in &sides {
            for c in 0..3 {
                a.add(l, c, r, (c + 1).min(2));
            }
        }
    }
    a.accepting = vec![2];
    CellularInstance::new(a, vec![0, 0]).unwrap()
}

#[test]
fn cellular_automaton_runs() {
    let inst = counter_ca();
    assert!(run_ca(&inst, CaMode::Det, B).unwrap());
    assert!(run_ca_bounded(&inst, CaMode::Det, 2, B).unwrap());
    assert!(!run_ca_bounded(&inst, CaMode::Det, 1, B).unwrap());
    assert_eq!(ca_step(&inst.automaton, &[0, 1]), vec![vec![1, 2]]);
}

#[test]
fn sequential_automaton_updates_one_cell_at_a_time() {
    let inst = counter_ca();
    let seq = SequentialCellularInstance { automaton: inst.automaton.clone(), initial: vec![0, 0], steps: None, horizon: None };
    assert!(run_sequential(&seq, B).unwrap());
    let first = sequential_configs(&seq, 1);
    assert_eq!(first, vec![vec![1, 0]]);
}

#[test]
fn pebble_game_modes() {
    // 0,1 -> 2 (threshold 2); 2 -> 3.
    let g = graph(4, true, &[(0, 2), (1, 2), (2, 3)]);
    let mut game = ThresholdPebbleGame {
        graph: g,
        threshold: vec![1, 1, 2, 1],
        start: vec![0, 1],
        target: vec![3],
        dag: true,
        cap: None,
    };
    assert!(run_tpg(&game, TpgMode::Max, B).unwrap());
    assert!(run_tpg(&game, TpgMode::Nondet, B).unwrap());
    game.start = vec![0];
    assert!(!run_tpg(&game, TpgMode::Max, B).unwrap());
    assert!(!run_tpg(&game, TpgMode::Nondet, B).unwrap());
}

#[test]
fn max_mode_cannot_drop_pebbles() {
    // From {0}: max moves to {1, 2}, never to {2} alone.
    let g = graph(3, true, &[(0, 1), (0, 2)]);
    let game = ThresholdPebbleGame { graph: g, threshold: vec![1, 1, 1], start: vec![0], target: vec![2], dag: true, cap: None };
    assert!(!run_tpg(&game, TpgMode::Max, B).unwrap());
    assert!(run_tpg(&game, TpgMode::Nondet, B).unwrap());
}

#[test]
fn lcs_lengths() {
    let l = LcsInstance::from_tokens(&[vec!["a", "b", "c", "b", "d"], vec!["b", "d", "c", "a", "b"]], 3);
    assert_eq!(lcs_length(&l, B).unwrap(), 3);
    assert!(lcs_decide(&l, B).unwrap());
    let l4 = LcsInstance { l: 4, ..l };
    assert!(!lcs_decide(&l4, B).unwrap());
    let inj = LcsInstance::from_tokens(&[vec!["a", "b", "c"], vec!["c", "a", "b"], vec!["a", "c", "b"]], 2);
    assert!(lcs_injective_decide(&inj, B).unwrap());
    assert_eq!(lcs_length(&inj, B).unwrap(), 2);
}

#[test]
fn budget_exhaustion_is_an_error_not_a_no() {
    let l = LcsInstance::from_tokens(&[vec!["a", "b", "c", "d"], vec!["d", "c", "b", "a"]], 2);
    assert!(lcs_decide(&l, 0).unwrap_err().is_budget());
}

#[test]
fn rewriting_normal_forms() {
    // ab -> c, cc -> a
    let rs = ReplacementSystem { alphabet: vec!["a".into(), "b".into(), "c".into()], rules: vec![(vec![0, 1], vec![2]), (vec![2, 2], vec![0])] };
    assert_eq!(rs_normalize(&rs, &[0, 1, 0, 1], B).unwrap(), vec![0]);
    assert_eq!(rs_normalize(&rs, &[1, 0], B).unwrap(), vec![1, 0]);
    let looping = ReplacementSystem { alphabet: vec!["a".into()], rules: vec![(vec![0], vec![0])] };
    assert!(rs_normalize(&looping, &[0], 1000).is_err());
}

#[test]
fn union_solvers_match_their_definitions() {
    let phi = BooleanFormula::new(parse_formula("v1 & v2").unwrap(), 2).unwrap();
    let t = model::union::bf_template(&phi);
    let w = |b: &[bool]| t.instantiate(b).unwrap();
    let base = |x: &InstantiationWord| base_accepts(UnionBase::Bf, x);
    let fam = FamilyUnionInstance::new(UnionBase::Bf, t.clone(), vec![vec![w(&[true, false])], vec![w(&[false, true])]]).unwrap();
    assert!(solve_family(&fam, &base, B).unwrap());
    let sub = SubsetUnionInstance::new(UnionBase::Bf, t.clone(), vec![w(&[true, false]), w(&[false, false])], 2).unwrap();
    assert!(!solve_subset(&sub, &base, B).unwrap());
    let wt = WeightedUnionInstance { base: UnionBase::Bf, template: t.clone(), k: 2 };
    assert!(solve_weighted(&wt, &base, B).unwrap());
    let wt1 = WeightedUnionInstance { k: 1, ..wt };
    assert!(!solve_weighted(&wt1, &base, B).unwrap());
}

fn first_equals_last(input: Vec<usize>) -> MultiHeadAutomaton {
    // Head 2 runs to the right end and steps back; then both heads compare.
    let end = 3;
    let mut transitions = Vec::new();
    for x in 0..2 {
        for y in 0..2 {
            transitions.push(MfaTransition { from: 0, read: vec![x, y], to: 0, moves: vec![0, 1] });
        }
        transitions.push(MfaTransition { from: 0, read: vec![x, end], to: 1, moves: vec![0, -1] });
        transitions.push(MfaTransition { from: 1, read: vec![x, x], to: 2, moves: vec![0, 0] });
    }
    let a = MultiHeadAutomaton {
        states: 3,
        heads: 2,
        alphabet: vec!["a".into(), "b".into()],
        transitions,
        initial: 0,
        accepting: vec![2],
        deterministic: true,
        dag: false,
        input,
    };
    a.validate().unwrap();
    a
}

#[test]
fn multi_head_automaton_compares_ends() {
    assert!(run_mfa(&first_equals_last(vec![0, 1, 1, 0]), B).unwrap());
    assert!(run_mfa(&first_equals_last(vec![1]), B).unwrap());
    assert!(!run_mfa(&first_equals_last(vec![0, 1]), B).unwrap());
    assert!(!run_mfa(&first_equals_last(vec![]), B).unwrap());
}
