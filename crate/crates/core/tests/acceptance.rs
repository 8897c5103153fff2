//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Pinned tolerances: round-trip suites need 100% agreement among decided
//! cases, at most 10% skipped cases and under 300 s wall time each.
//! Structural and cross-oracle checks allow no violations.

use std::collections::BTreeSet;
use std::time::Instant;

use paraspace::harness::{gen_instance, verify_reduction, Profile, ProblemInstance, Status, Summary, VerifyOptions};
use paraspace::model::union::agen_template;
use paraspace::oracles::{ca_step, lcs_decide, lcs_injective_decide, rs_normalize, rs_normalize_random};
use paraspace::reductions::machine::{dagca_to_tpg, layeredreach_to_lcs_injective, seqca_to_lcs};
use paraspace::reductions::union::agen::{family_system, subset_system};
use paraspace::reductions::union::{
    doubling_projection, family_to_subset_agen, family_to_subset_bf, projection_to_family_union, subset_to_weighted_bf,
};
use paraspace::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_SKIPPED: f64 = 0.10;
const MAX_SECONDS: f64 = 300.0;
const BUDGET: u64 = 1_000_000;

struct Line {
    id: String,
    pass: bool,
    detail: String,
}

fn line(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Line {
    Line { id: id.into(), pass, detail: detail.into() }
}

fn word(w: &InstantiationWord) -> String {
    w.symbols().concat()
}

fn set(words: &[InstantiationWord]) -> BTreeSet<String> {
    words.iter().map(word).collect()
}

fn strs(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn bits_of(w: &str) -> Vec<bool> {
    w.chars().map(|c| c == '1').collect()
}

// the doubling projection on αβγα with two blocks.
fn projection_example() -> Line {
    let x: Vec<String> = ["α", "β", "γ", "α"].iter().map(|s| s.to_string()).collect();
    let p = doubling_projection(&x, 2, 2);
    let fam = projection_to_family_union(&p, &x, &p.advice, 2, UnionBase::Bf).unwrap();
    let s1 = strs(&["αβγα0000αβγα0000", "αβγα0100αβγα0100", "αβγα1000αβγα1000", "αβγα1100αβγα1100"]);
    let s2 = strs(&["αβγα0000αβγα0000", "αβγα0001αβγα0001", "αβγα0010αβγα0010", "αβγα0011αβγα0011"]);
    let ok = fam.families.len() == 2
        && fam.families.iter().map(Vec::len).sum::<usize>() == 8
        && set(&fam.families[0]) == s1
        && set(&fam.families[1]) == s2;
    line("example projection-families", ok, format!("S1 = {:?}, S2 = {:?}", set(&fam.families[0]), set(&fam.families[1])))
}

fn bf_family(formula: &str, vars: usize, families: &[&[&str]]) -> FamilyUnionInstance {
    let phi = BooleanFormula::new(parse_formula(formula).unwrap(), vars).unwrap();
    let t = model::union::bf_template(&phi);
    let fams = families.iter().map(|f| f.iter().map(|b| t.instantiate(&bits_of(b)).unwrap()).collect()).collect();
    FamilyUnionInstance::new(UnionBase::Bf, t, fams).unwrap()
}

fn bits_part(w: &InstantiationWord, n: usize) -> String {
    let s = w.symbols();
    s[s.len() - n..].concat()
}

// S = {φ′000 100, φ′001 010, φ′001 001}.
fn family_subset_example() -> Line {
    let fam = bf_family("v1 & v2 | v3", 3, &[&["000", "001"], &["001"]]);
    let sub = family_to_subset_bf(&fam).unwrap();
    let got: BTreeSet<String> = sub.set.iter().map(|w| bits_part(w, 6)).collect();
    let ok = got == strs(&["000100", "001010", "001001"]) && sub.k == 2;
    line("example family-to-subset-bf", ok, format!("S bits = {got:?}"))
}

fn weighted_example() -> (WeightedUnionInstance, BooleanFormula) {
    let phi = BooleanFormula::new(parse_formula("v1 & (v2 -> v1) & v3").unwrap(), 3).unwrap();
    let t = model::union::bf_template(&phi);
    let s = ["000", "101", "010", "111"].iter().map(|b| t.instantiate(&bits_of(b)).unwrap()).collect();
    let sub = SubsetUnionInstance::new(UnionBase::Bf, t, s, 2).unwrap();
    let w = subset_to_weighted_bf(&sub).unwrap();
    let f = reductions::union::bf::formula_of(&w.template).unwrap();
    (w, f)
}

// S′ is every weight-one instantiation of φ′ over v1..v4.
fn weighted_example_words() -> Line {
    let (w, f) = weighted_example();
    let holes = w.template.hole_count();
    let s: BTreeSet<String> =
        (0..holes).map(|i| bits_part(&w.template.instantiate_ones(&[i]).unwrap(), holes)).collect();
    let ok = f.vars == 4 && s == strs(&["0001", "0010", "0100", "1000"]);
    line("example subset-to-weighted-bf-words", ok, format!("vars = {}, S' = {s:?}", f.vars))
}

/// The example's reference formula φ′ = v₂∧((v₃∨v₄)→v₂)∧(v₂∨v₄). The
/// substitution rule gives (v₂∨v₄) for x, so this line is expected to fail.
fn weighted_example_formula() -> Line {
    let (_, f) = weighted_example();
    let reference = parse_formula("v2 & ((v3 | v4) -> v2) & (v2 | v4)").unwrap();
    let by_rule = parse_formula("(v2 | v4) & ((v3 | v4) -> (v2 | v4)) & (v2 | v4)").unwrap();
    let detail = format!(
        "reference formula {}; output equals the substitution-rule formula: {}",
        if f.root == reference { "matches" } else { "differs" },
        f.root == by_rule
    );
    line("example subset-to-weighted-bf-formula (known conflict)", f.root == reference, detail)
}

/// The layered graph of the worked example: v1..v9 in three layers.
pub fn layered_example_graph() -> Graph {
    let mut g = Graph::new(9, true);
    for (a, b) in [(1, 4), (2, 4), (2, 5), (2, 6), (3, 6), (4, 7), (4, 8), (5, 9), (6, 8), (6, 9)] {
        g.add_edge(a - 1, b - 1);
    }
    g.layers = Some(vec![0, 0, 0, 1, 1, 1, 2, 2, 2]);
    g
}

// the four strings of the worked example.
fn layered_example() -> Line {
    let lcs = layeredreach_to_lcs_injective(&layered_example_graph()).unwrap();
    let got: Vec<String> = (0..lcs.strings.len()).map(|i| lcs.render_string(i).concat()).collect();
    let want = ["abcdefgihj", "edcbajhigf", "abfgchdeij", "edjichbagf"];
    let decided = lcs_injective_decide(&lcs, BUDGET).unwrap();
    let ok = got == want && lcs.l == 2 && decided;
    line("example layered-lcs-strings", ok, format!("strings = {got:?}, l = {}, decide = {decided}", lcs.l))
}

// per layer pair 16 auxiliary vertices with thresholds 2/3/2.
fn pebble_gadget_structure() -> Line {
    let mut a = CellularAutomaton::new(vec!["q1".into(), "q2".into()]);
    for l in [None, Some(0)] {
        for r in [None, Some(0)] {
            a.add(l, 0, r, 1);
        }
    }
    a.accepting = vec![1];
    a.dag = true;
    let inst = CellularInstance::new(a, vec![0, 0, 0]).unwrap();
    let game = dagca_to_tpg(&inst, 3).unwrap();
    let layers = game.graph.layers.clone().unwrap();
    let mut ok = true;
    let mut detail = String::new();
    for layer in 0..layers.iter().max().unwrap() + 1 {
        let th: Vec<u32> = (0..game.n()).filter(|&v| layers[v] == layer).map(|v| game.threshold[v]).collect();
        if layer % 2 == 1 {
            let want: Vec<u32> = [vec![2; 4], vec![3; 8], vec![2; 4]].concat();
            ok &= th == want;
            detail = format!("auxiliary layer: {} vertices, thresholds {:?}", th.len(), th);
        } else {
            ok &= th.len() == 6 && th.iter().all(|&t| t == 1);
        }
    }
    line("example pebble-gadget-layers", ok, detail)
}

fn suite(id: &str, reduction: &str, kind: Option<&str>, cases: usize, seed: u64, profile: Profile) -> (Line, Vec<paraspace::harness::VerificationReport>) {
    let start = Instant::now();
    let mut opts = VerifyOptions::new(cases, seed);
    opts.budget = BUDGET;
    opts.kind = kind.map(String::from);
    opts.profile = Some(profile);
    let reports = verify_reduction(reduction, &opts).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let s = Summary::of(&reports);
    let ok = s.passed() && (s.skipped as f64) <= MAX_SKIPPED * cases as f64 && secs < MAX_SECONDS;
    let detail = format!(
        "{} cases: {} agree, {} disagree, {} skipped, {} errors, {} yes; {:.1}s",
        s.cases, s.agree, s.disagree, s.skipped, s.errors, s.yes, secs
    );
    (line(id, ok, detail), reports)
}

fn p(size: usize, k: usize, states: usize, cells: usize, steps: usize, layers: usize, det: Option<bool>) -> Profile {
    Profile { size, k, states, cells, steps, layers, deterministic: det }
}

fn round_trips() -> Vec<Line> {
    let d = Profile::default();
    let mut out = Vec::new();
    out.push(suite("round-trip bf-chain", "family_to_subset_bf+subset_to_weighted_bf", None, 200, 1, p(4, 3, 3, 3, 3, 5, None)).0);
    for kind in ["reach", "dag-reach", "cycle", "undirected-reach", "tree", "forest", "undirected-cycle"] {
        let k = format!("family-union:{kind}");
        out.push(suite(&format!("round-trip graph-{kind}"), "family_to_subset_graph", Some(&k), 200, 2, p(4, 3, 3, 3, 3, 5, None)).0);
    }
    let agen = p(4, 2, 3, 3, 3, 5, None);
    out.push(suite("round-trip agen-family-to-subset", "family_to_subset_agen", None, 100, 3, agen.clone()).0);
    let (mut l, reports) = suite("round-trip agen-subset-to-weighted", "subset_to_weighted_agen", None, 100, 3, agen);
    let bumped = reports.iter().filter(|r| r.status == Status::Agree).all(|r| r.kappa2 == r.kappa1 + 3);
    l.pass &= bumped;
    l.detail += &format!("; k' = k + 3 on every case: {bumped}");
    out.push(l);
    for (tag, det) in [("det", true), ("nondet", false)] {
        let prof = p(4, d.k, 4, 6, 30, 5, Some(det));
        out.push(suite(&format!("round-trip dtsc-{tag}"), "dtsc_from_parameterized_run", None, 50, 4, prof).0);
    }
    out.push(suite("round-trip tm-to-ca", "tm_to_ca", None, 50, 5, p(4, 3, 3, 4, 0, 5, Some(true))).0);
    out.push(suite("round-trip tm-to-nca", "tm_to_nca", None, 50, 5, p(4, 3, 3, 4, 0, 5, Some(false))).0);
    out.push(suite("round-trip ca-to-dag-ca", "ca_to_dag_ca", None, 50, 6, p(4, 3, 3, 4, 3, 5, None)).0);
    for (tag, det) in [("max", true), ("nondet", false)] {
        out.push(suite(&format!("round-trip tpg-dag-{tag}"), "dagca_to_tpg", None, 50, 7, p(4, 3, 2, 3, 2, 5, Some(det))).0);
        out.push(suite(&format!("round-trip tpg-cyclic-{tag}"), "ca_to_tpg_cyclic", None, 50, 7, p(4, 3, 2, 3, 3, 5, Some(det))).0);
    }
    out.push(suite("round-trip layered-lcs", "layeredreach_to_lcs_injective", None, 200, 8, p(4, 3, 3, 3, 3, 5, None)).0);
    out.push(
        suite("round-trip seq-pipeline", "nca_to_sequential+normalize_sequential+seqca_to_lcs", None, 100, 9, p(4, 3, 3, 3, 3, 5, None)).0,
    );
    out
}

// DAG automata stop within |Q| steps.
fn dag_halting() -> Line {
    let prof = p(4, 3, 3, 4, 3, 5, None);
    let mut worst = 0;
    let mut ok = true;
    for seed in 0..200 {
        let ProblemInstance::Ca(inst) = gen_instance("ca-dag", &prof, seed).unwrap() else { unreachable!() };
        let q = inst.automaton.states.len();
        let mut frontier = vec![inst.initial.clone()];
        let mut depth = 0;
        while !frontier.is_empty() {
            frontier = frontier.iter().flat_map(|c| ca_step(&inst.automaton, c)).collect::<BTreeSet<_>>().into_iter().collect();
            if !frontier.is_empty() {
                depth += 1;
            }
        }
        worst = worst.max(depth);
        ok &= depth <= q && inst.automaton.is_monotone();
    }
    line("structure dag-halting", ok, format!("200 automata, longest run {worst} steps"))
}

fn semigroup_family(r: &mut ChaCha8Rng) -> (FamilyUnionInstance, usize, usize) {
    let table = paraspace::harness::gen::semigroup(r, 4).unwrap();
    let n = table.len();
    let candidates: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.7)).collect();
    let g = GeneratorInstance {
        names: (0..n).map(|i| format!("u{i}")).collect(),
        table,
        target: r.gen_range(0..n),
        candidates,
        k: 0,
        associative: true,
    };
    let t = agen_template(&g);
    let k = r.gen_range(1..=2);
    let holes = t.hole_count();
    let fams = (0..k)
        .map(|_| (0..r.gen_range(1..=3)).map(|_| t.instantiate(&(0..holes).map(|_| r.gen_bool(0.4)).collect::<Vec<_>>()).unwrap()).collect())
        .collect();
    (FamilyUnionInstance::new(UnionBase::Agen, t, fams).unwrap(), n, k)
}

// at most 1 + |U′|(k²+1) classes, U′ = U ∪ {e_1..e_k, x′, error}.
fn agen_class_bound() -> Line {
    let mut r = ChaCha8Rng::seed_from_u64(10);
    let mut ok = true;
    let mut worst = (0, 0);
    for _ in 0..100 {
        let (fam, n, k) = semigroup_family(&mut r);
        let red = family_to_subset_agen(&fam).unwrap();
        let bound = 1 + (n + k + 2) * (k * k + 1);
        ok &= red.generator.size() <= bound;
        if red.generator.size() > worst.0 {
            worst = (red.generator.size(), bound);
        }
    }
    line("structure agen-class-bound", ok, format!("100 instances, largest {} classes (bound {})", worst.0, worst.1))
}

// four injective strings per layered graph.
fn layered_p_sequences() -> Line {
    let prof = p(4, 3, 3, 3, 3, 5, None);
    let mut ok = true;
    for seed in 0..200 {
        let ProblemInstance::Graph(g) = gen_instance("layered-reach", &prof, seed).unwrap() else { unreachable!() };
        let lcs = layeredreach_to_lcs_injective(&g).unwrap();
        ok &= lcs.strings.len() == 4 && lcs.is_injective() && lcs.l + 1 == g.layer_count().max(1);
    }
    line("structure layered-p-sequences", ok, "200 layered graphs")
}

// 4k strings with target t·k.
fn seqca_shape() -> Line {
    let prof = p(4, 3, 3, 3, 3, 5, None);
    let mut ok = true;
    for seed in 0..100 {
        let ProblemInstance::SeqCa(s) = gen_instance("seqca", &prof, seed).unwrap() else { unreachable!() };
        let lcs = seqca_to_lcs(&s).unwrap();
        let (k, t) = (s.cells(), s.horizon.unwrap());
        ok &= lcs.strings.len() == 4 * k && lcs.l == t * k;
    }
    line("structure seqca-shape", ok, "100 normalized sequential automata")
}

// commutativity, associativity and idempotence of the union.
fn union_laws() -> Line {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    let mut ok = true;
    for _ in 0..1000 {
        let len = r.gen_range(1..=8);
        let t = TemplateWord::new((0..len).map(|i| if r.gen_bool(0.6) { "?".to_string() } else { format!("a{i}") })).unwrap();
        let h = t.hole_count();
        let mut inst = || t.instantiate(&(0..h).map(|_| r.gen_bool(0.5)).collect::<Vec<_>>()).unwrap();
        let (a, b, c) = (inst(), inst(), inst());
        let u = |xs: &[&InstantiationWord]| union_instantiations(&xs.iter().map(|x| (*x).clone()).collect::<Vec<_>>()).unwrap();
        ok &= u(&[&a, &b]) == u(&[&b, &a]);
        ok &= u(&[&u(&[&a, &b]), &c]) == u(&[&a, &u(&[&b, &c])]);
        ok &= u(&[&a, &a]) == a;
    }
    line("structure union-laws", ok, "1000 triples")
}

// both LCS procedures agree on injective instances.
fn lcs_cross() -> Line {
    let prof = p(4, 3, 3, 3, 3, 5, None);
    let mut ok = true;
    let mut yes = 0;
    for seed in 0..500 {
        let ProblemInstance::Lcs(l) = gen_instance("lcs-injective", &prof, seed).unwrap() else { unreachable!() };
        let a = lcs_injective_decide(&l, BUDGET).unwrap();
        ok &= a == lcs_decide(&l, BUDGET).unwrap();
        yes += a as usize;
    }
    line("cross-check lcs-cross-check", ok, format!("500 instances, {yes} yes"))
}

// leftmost-first and random rule orders reach the same normal form.
fn rs_order_independence() -> Line {
    let mut r = ChaCha8Rng::seed_from_u64(12);
    let mut ok = true;
    let mut words = 0;
    while words < 200 {
        let table = paraspace::harness::gen::semigroup(&mut r, 4).unwrap();
        let n = table.len();
        let rs = if r.gen_bool(0.5) {
            family_system(&table, r.gen_range(0..n), r.gen_range(1..=2)).0
        } else {
            let sel: Vec<Vec<usize>> =
                (0..r.gen_range(1..=3)).map(|_| (0..r.gen_range(1..=2)).map(|_| r.gen_range(0..n)).collect()).collect();
            subset_system(&table, &sel).0
        };
        for _ in 0..10 {
            let w: Vec<usize> = (0..r.gen_range(1..=6)).map(|_| r.gen_range(0..rs.alphabet.len())).collect();
            let nf = rs_normalize(&rs, &w, BUDGET).unwrap();
            for _ in 0..3 {
                ok &= rs_normalize_random(&rs, &w, &mut r, BUDGET).unwrap() == nf;
            }
            words += 1;
        }
    }
    line("cross-check rs-order-independence", ok, format!("{words} words, 3 random orders each"))
}

fn main() {
    let mut lines = vec![
        projection_example(),
        family_subset_example(),
        weighted_example_words(),
        weighted_example_formula(),
        layered_example(),
        pebble_gadget_structure(),
    ];
    lines.extend(round_trips());
    lines.extend([dag_halting(), agen_class_bound(), layered_p_sequences(), seqca_shape(), union_laws()]);
    lines.extend([lcs_cross(), rs_order_independence()]);
    for l in &lines {
        println!("{} {:<56} {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.detail);
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass && !l.id.contains("known conflict")).map(|l| l.id.as_str()).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
