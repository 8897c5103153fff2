use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ProblemInstance;
use crate::error::{Error, Result};
use crate::model::union::{agen_template, bf_template, encode_graph, graph_template};
use crate::model::*;
use crate::reductions::machine::{bounded_nca_to_sequential, ca_to_dag_ca, normalize_sequential};
use crate::word::{InstantiationWord, TemplateWord};

/// Upper bounds for generated instances. Each generator draws its sizes
/// uniformly below these.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    /// Vertices, variables, universe elements or input length.
    pub size: usize,
    pub k: usize,
    pub states: usize,
    pub cells: usize,
    pub steps: usize,
    pub layers: usize,
    /// `None` mixes deterministic and nondeterministic machines.
    pub deterministic: Option<bool>,
}

impl Default for Profile {
    fn default() -> Self {
        Profile { size: 4, k: 3, states: 3, cells: 3, steps: 3, layers: 5, deterministic: None }
    }
}

/// Desk-scale caps on every profile field.
pub const PROFILE_CAPS: Profile =
    Profile { size: 8, k: 6, states: 6, cells: 8, steps: 64, layers: 8, deterministic: None };

impl Profile {
    pub fn check(&self) -> Result<()> {
        let c = &PROFILE_CAPS;
        if self.size > c.size
            || self.k > c.k
            || self.states > c.states
            || self.cells > c.cells
            || self.steps > c.steps
            || self.layers > c.layers
        {
            return Err(Error::invalid("profile exceeds the desk-scale caps"));
        }
        Ok(())
    }
}

/// Generator kinds. Union kinds take the base after a colon, e.g.
/// `family-union:reach`.
pub const GEN_KINDS: &[&str] = &[
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
    "family-union:<base>",
    "subset-union:<base>",
    "weighted-union:<base>",
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

const RETRIES: usize = 200;

/// A pseudo-random instance of `kind`, a pure function of (kind, profile,
/// seed).
pub fn gen_instance(kind: &str, profile: &Profile, seed: u64) -> Result<ProblemInstance> {
    profile.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = &mut rng;
    let p = profile;
    if let Some((variant, base)) = kind.split_once(':') {
        let base: UnionBase = base.parse()?;
        return union_instance(r, p, variant, base);
    }
    Ok(match kind {
        "bf" => {
            let vars = r.gen_range(1..=p.size.max(1));
            let formula = BooleanFormula::new(formula(r, vars, 3), vars)?;
            let assignment = (0..vars).map(|_| r.gen_bool(0.5)).collect();
            BfInstance { formula, assignment }.into()
        }
        "graph" => {
            let n = r.gen_range(0..=p.size);
            let directed = r.gen_bool(0.5);
            random_graph(r, n, directed, 0.35).into()
        }
        "agen" => generator(r, p.size.max(1), p.k.max(1))?.into(),
        "tm-bounded" => {
            let det = p.deterministic.unwrap_or_else(|| r.gen_bool(0.5));
            let m = single_tape(r, p.states.max(1), det);
            let s = r.gen_range(1..=p.cells.max(1));
            let t = r.gen_range(0..=p.steps);
            BoundedTMInstance::new(m, t, s)?.into()
        }
        "tm-run" => {
            let det = p.deterministic.unwrap_or_else(|| r.gen_bool(0.5));
            two_tape_run(r, p, det).into()
        }
        "ca" => {
            let det = p.deterministic.unwrap_or_else(|| r.gen_bool(0.5));
            total_ca(r, p, det)?.into()
        }
        "ca-bounded" => {
            let det = p.deterministic.unwrap_or_else(|| r.gen_bool(0.5));
            let instance = total_ca(r, p, det)?;
            BoundedCellularInstance { instance, t: r.gen_range(1..=p.steps.max(1)) }.into()
        }
        "ca-dag" => {
            let det = p.deterministic.unwrap_or_else(|| r.gen_bool(0.5));
            let base = total_ca(r, p, det)?;
            ca_to_dag_ca(&base, r.gen_range(1..=p.steps.max(1)))?.into()
        }
        "seqca" => {
            let instance = total_ca(r, p, false)?;
            let bounded = BoundedCellularInstance { instance, t: r.gen_range(1..=p.steps.max(1)) };
            normalize_sequential(&bounded_nca_to_sequential(&bounded))?.into()
        }
        "seqca-raw" => {
            let instance = total_ca(r, p, false)?;
            bounded_nca_to_sequential(&BoundedCellularInstance { instance, t: r.gen_range(1..=p.steps.max(1)) }).into()
        }
        "lcs" => lcs(r, p, false).into(),
        "lcs-injective" => lcs(r, p, true).into(),
        "layered-reach" => layered_graph(r, p).into(),
        other => {
            let kind: GraphPropertyKind =
                other.parse().map_err(|_| Error::parse(format!("unknown generator kind `{other}`")))?;
            property_graph(r, p, kind)?.into()
        }
    })
}

fn formula(r: &mut ChaCha8Rng, vars: usize, depth: usize) -> Formula {
    if depth == 0 || r.gen_bool(0.3) {
        return if r.gen_bool(0.1) { Formula::Const(r.gen_bool(0.5)) } else { Formula::Var(r.gen_range(0..vars)) };
    }
    match r.gen_range(0..4) {
        0 => Formula::and(formula(r, vars, depth - 1), formula(r, vars, depth - 1)),
        1 => Formula::or(formula(r, vars, depth - 1), formula(r, vars, depth - 1)),
        2 => Formula::not(formula(r, vars, depth - 1)),
        _ => Formula::implies(formula(r, vars, depth - 1), formula(r, vars, depth - 1)),
    }
}

fn random_graph(r: &mut ChaCha8Rng, n: usize, directed: bool, p: f64) -> Graph {
    let mut g = Graph::new(n, directed);
    for a in 0..n {
        for b in 0..n {
            let loop_ok = a != b || r.gen_bool(0.1);
            if (directed || a <= b) && loop_ok && r.gen_bool(p) {
                g.add_edge(a, b);
                if !directed {
                    g.add_edge(b, a);
                }
            }
        }
    }
    g
}

/// Acyclic graphs and forests are planted half of the time so that both
/// answers occur.
fn property_graph(r: &mut ChaCha8Rng, p: &Profile, kind: GraphPropertyKind) -> Result<Graph> {
    use GraphPropertyKind::*;
    let lo = if kind.needs_endpoints() { 2 } else { 1 };
    if p.size < lo {
        return Err(Error::invalid(format!("{kind} needs at least {lo} vertices")));
    }
    let n = r.gen_range(lo..=p.size);
    let mut g = match kind {
        DagReach | Cycle if r.gen_bool(0.5) => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(r);
            let mut g = Graph::new(n, true);
            for i in 0..n {
                for j in i + 1..n {
                    if r.gen_bool(0.45) {
                        g.add_edge(order[i], order[j]);
                    }
                }
            }
            g
        }
        Tree | Forest if r.gen_bool(0.6) => {
            let mut g = Graph::new(n, false);
            for v in 1..n {
                if kind == Tree || r.gen_bool(0.7) {
                    let u = r.gen_range(0..v);
                    g.add_edge(u, v);
                    g.add_edge(v, u);
                }
            }
            g
        }
        _ => random_graph(r, n, kind.is_directed(), 0.35),
    };
    if kind.needs_endpoints() {
        let s = r.gen_range(0..n);
        let t = (s + r.gen_range(1..n)) % n;
        g.s = Some(s);
        g.t = Some(t);
    }
    g.validate()?;
    Ok(g)
}

/// s alone on layer 0, t alone on the last layer, up to `size` vertices on
/// each layer in between, edges between consecutive layers.
fn layered_graph(r: &mut ChaCha8Rng, p: &Profile) -> Graph {
    let m = r.gen_range(1..=p.layers.max(1));
    let mut layer_of = vec![0];
    for l in 1..m {
        let width = if l + 1 == m { 1 } else { r.gen_range(1..=p.size.max(1)) };
        layer_of.extend(std::iter::repeat_n(l, width));
    }
    let n = layer_of.len();
    let mut g = Graph::new(n, true);
    for a in 0..n {
        for b in 0..n {
            if layer_of[b] == layer_of[a] + 1 && r.gen_bool(0.5) {
                g.add_edge(a, b);
            }
        }
    }
    g.layers = Some(layer_of);
    g.s = Some(0);
    g.t = Some(n - 1);
    g
}

/// A transformation semigroup: the closure of one or two random maps on
/// {0,…,m−1}, m ≤ 3, under composition, with the identity added half of the
/// time to make it a monoid. Retried until its size lies between a drawn
/// lower bound and `max`.
pub fn semigroup(r: &mut ChaCha8Rng, max: usize) -> Result<Vec<Vec<usize>>> {
    let want = r.gen_range(1..=max.max(1));
    for _ in 0..RETRIES {
        let m = r.gen_range(1..=3);
        let mut elems: Vec<Vec<usize>> =
            (0..r.gen_range(1..=2)).map(|_| (0..m).map(|_| r.gen_range(0..m)).collect()).collect();
        if r.gen_bool(0.5) {
            elems.push((0..m).collect());
        }
        elems.sort();
        elems.dedup();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..a.len()).map(|x| b[a[x]]).collect() };
        let mut i = 0;
        while i < elems.len() && elems.len() <= max {
            for j in 0..=i {
                for (a, b) in [(i, j), (j, i)] {
                    let c = compose(&elems[a], &elems[b]);
                    if !elems.contains(&c) {
                        elems.push(c);
                    }
                }
            }
            i += 1;
        }
        if elems.len() > max || elems.len() < want {
            continue;
        }
        let n = elems.len();
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let c = compose(&elems[a], &elems[b]);
                        elems.iter().position(|e| *e == c).expect("closed under composition")
                    })
                    .collect()
            })
            .collect();
        return Ok(table);
    }
    Err(Error::invalid(format!("no semigroup with at most {max} elements found")))
}

fn generator(r: &mut ChaCha8Rng, size: usize, k: usize) -> Result<GeneratorInstance> {
    let table = semigroup(r, size)?;
    let n = table.len();
    let candidates: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.7)).collect();
    let g = GeneratorInstance {
        names: (0..n).map(|i| format!("u{i}")).collect(),
        table,
        target: r.gen_range(0..n),
        k: r.gen_range(0..=k.min(candidates.len())),
        candidates,
        associative: true,
    };
    g.validate()?;
    Ok(g)
}

fn union_instance(r: &mut ChaCha8Rng, p: &Profile, variant: &str, base: UnionBase) -> Result<ProblemInstance> {
    let (template, member): (TemplateWord, Box<dyn Fn(&mut ChaCha8Rng) -> Result<InstantiationWord>>) = match base {
        UnionBase::Bf => {
            let vars = r.gen_range(1..=p.size.max(1));
            let t = bf_template(&BooleanFormula::new(formula(r, vars, 3), vars)?);
            let t2 = t.clone();
            (t, Box::new(move |r| t2.instantiate(&(0..vars).map(|_| r.gen_bool(0.35)).collect::<Vec<_>>())))
        }
        UnionBase::Graph(kind) => {
            if kind == GraphPropertyKind::LayeredReach {
                return Err(Error::Unsupported("layered-reach union instances".into()));
            }
            let shape = property_graph(r, p, kind)?;
            let n = shape.n();
            let t = graph_template(n, shape.s, shape.t, None);
            let t2 = t.clone();
            (
                t,
                Box::new(move |r| {
                    let mut g = random_graph(r, n, kind.is_directed(), 0.25);
                    g.s = shape.s;
                    g.t = shape.t;
                    encode_graph(&t2, &g)
                }),
            )
        }
        UnionBase::Agen => {
            let g = generator(r, p.size.max(1), 1)?;
            let t = agen_template(&g);
            let holes = t.hole_count();
            let t2 = t.clone();
            (t, Box::new(move |r| t2.instantiate(&(0..holes).map(|_| r.gen_bool(0.4)).collect::<Vec<_>>())))
        }
    };
    let k = r.gen_range(1..=p.k.max(1));
    Ok(match variant {
        "family-union" => {
            let families = (0..k)
                .map(|_| (0..r.gen_range(1..=3)).map(|_| member(r)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            FamilyUnionInstance::new(base, template, families)?.into()
        }
        "subset-union" => {
            let set = (0..r.gen_range(1..=4)).map(|_| member(r)).collect::<Result<Vec<_>>>()?;
            SubsetUnionInstance::new(base, template, set, k)?.into()
        }
        "weighted-union" => WeightedUnionInstance { base, template, k }.into(),
        other => return Err(Error::parse(format!("unknown union variant `{other}`"))),
    })
}

fn moves(r: &mut ChaCha8Rng) -> Move {
    [Move::L, Move::S, Move::R][r.gen_range(0..3)]
}

/// States q0..q{n-1} over {_, 1}; the last state accepts. Deterministic
/// machines have at most one transition per pair, others up to three.
fn single_tape(r: &mut ChaCha8Rng, max_states: usize, det: bool) -> SingleTapeTM {
    let q = r.gen_range(2..=max_states.max(2));
    let accept = q - 1;
    let mut transitions = Vec::new();
    for from in 0..accept {
        for read in 0..2 {
            let count = if det { usize::from(r.gen_bool(0.85)) } else { r.gen_range(0..=3) };
            for _ in 0..count {
                transitions.push(TmTransition {
                    from,
                    read,
                    to: r.gen_range(0..q),
                    write: r.gen_range(0..2),
                    mv: moves(r),
                });
            }
        }
    }
    transitions.sort();
    transitions.dedup();
    SingleTapeTM {
        states: (0..q).map(|i| format!("q{i}")).collect(),
        alphabet: vec!["_".into(), "1".into()],
        transitions,
        initial: 0,
        accepting: vec![accept],
        deterministic: det,
    }
}

fn two_tape_run(r: &mut ChaCha8Rng, p: &Profile, det: bool) -> ParameterizedRun {
    let q = r.gen_range(2..=p.states.max(2));
    let accept = q - 1;
    let mut transitions = Vec::new();
    for from in 0..accept {
        for input_read in 0..2 {
            for work_read in 0..2 {
                let count = if det { usize::from(r.gen_bool(0.85)) } else { r.gen_range(0..=2) };
                for _ in 0..count {
                    transitions.push(TwoTapeTransition {
                        from,
                        input_read,
                        work_read,
                        to: r.gen_range(0..q),
                        work_write: r.gen_range(0..2),
                        input_move: moves(r),
                        work_move: moves(r),
                    });
                }
            }
        }
    }
    transitions.sort();
    transitions.dedup();
    let machine = TwoTapeTM {
        states: (0..q).map(|i| format!("q{i}")).collect(),
        alphabet: vec!["_".into(), "1".into()],
        transitions,
        initial: 0,
        accepting: vec![accept],
        deterministic: det,
    };
    ParameterizedRun {
        machine,
        input: (0..r.gen_range(0..=p.size)).map(|_| r.gen_range(0..2)).collect(),
        t: r.gen_range(0..=p.steps),
        s: r.gen_range(1..=p.cells.max(1)),
        block: r.gen_range(1..=3),
    }
}

/// Every triple has a successor; nondeterministic automata get one or two.
fn total_ca(r: &mut ChaCha8Rng, p: &Profile, det: bool) -> Result<CellularInstance> {
    let q = r.gen_range(1..=p.states.max(1));
    let k = r.gen_range(1..=p.cells.max(1));
    let mut a = CellularAutomaton::new((0..q).map(|i| format!("q{i}")).collect());
    let sides: Vec<Neighbour> = std::iter::once(None).chain((0..q).map(Some)).collect();
    for &l in &sides {
        for c in 0..q {
            for &rt in &sides {
                let count = if det { 1 } else { r.gen_range(1..=2) };
                for _ in 0..count {
                    a.add(l, c, rt, r.gen_range(0..q));
                }
            }
        }
    }
    a.deterministic = det;
    a.accepting = (0..q).filter(|_| r.gen_bool(0.3)).collect();
    let initial = (0..k).map(|_| r.gen_range(0..q)).collect();
    CellularInstance::new(a, initial)
}

/// Strings over `2·size` letters; injective strings are shuffled subsets of
/// one base order with a few swaps, so long common subsequences occur.
fn lcs(r: &mut ChaCha8Rng, p: &Profile, injective: bool) -> LcsInstance {
    let sigma = (2 * p.size).max(1);
    let names: Vec<String> = (0..sigma).map(|i| ((b'a' + (i % 26) as u8) as char).to_string()).collect();
    let count = r.gen_range(2..=p.k.max(1) + 1);
    let mut base: Vec<usize> = (0..sigma).collect();
    base.shuffle(r);
    let strings: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            if injective {
                let mut s: Vec<usize> = base.iter().copied().filter(|_| r.gen_bool(0.8)).collect();
                for _ in 0..r.gen_range(0..=2) {
                    if s.len() >= 2 {
                        let i = r.gen_range(0..s.len() - 1);
                        s.swap(i, i + 1);
                    }
                }
                s
            } else {
                (0..r.gen_range(0..=2 * sigma)).map(|_| r.gen_range(0..sigma)).collect()
            }
        })
        .collect();
    LcsInstance { alphabet: names, strings, l: r.gen_range(1..=sigma.div_ceil(2) + 1) }
}
