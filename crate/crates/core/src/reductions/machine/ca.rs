//! Turing machines as cellular automata, and layering into dag automata.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{
    BoundedCellularInstance, CellularAutomaton, CellularInstance, MfaTransition, Move, MultiHeadAutomaton,
    Neighbour, SingleTapeTM, TmTransition,
};

/// Cell contents of the simulation: an optional head with its state (and,
/// in the tagged construction, its chosen branch) over a tape symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Blank(usize),
    Head(usize, usize),
    Tagged(usize, usize, usize),
}

struct Encoding {
    g: usize,
    q: usize,
    tagged: bool,
}

impl Encoding {
    fn count(&self) -> usize {
        self.g * (1 + self.q + if self.tagged { 2 * self.q } else { 0 })
    }

    fn index(&self, c: Cell) -> usize {
        match c {
            Cell::Blank(a) => a,
            Cell::Head(q, a) => self.g * (1 + q) + a,
            Cell::Tagged(q, j, a) => self.g * (1 + self.q + 2 * q + j) + a,
        }
    }

    fn cell(&self, x: usize) -> Cell {
        let (block, a) = (x / self.g, x % self.g);
        if block == 0 {
            Cell::Blank(a)
        } else if block <= self.q {
            Cell::Head(block - 1, a)
        } else {
            let t = block - 1 - self.q;
            Cell::Tagged(t / 2, t % 2, a)
        }
    }

    fn names(&self, m: &SingleTapeTM) -> Vec<String> {
        (0..self.count())
            .map(|x| match self.cell(x) {
                Cell::Blank(a) => format!("_/{}", m.alphabet[a]),
                Cell::Head(q, a) => format!("{}/{}", m.states[q], m.alphabet[a]),
                Cell::Tagged(q, j, a) => format!("{}:{j}/{}", m.states[q], m.alphabet[a]),
            })
            .collect()
    }
}

fn is_head(c: Cell) -> bool {
    !matches!(c, Cell::Blank(_))
}

/// Builds the automaton over every triple with at most one head in view.
fn build(
    m: &SingleTapeTM,
    enc: &Encoding,
    next: impl Fn(Option<Cell>, Cell, Option<Cell>) -> Vec<Cell>,
) -> CellularAutomaton {
    let mut a = CellularAutomaton::new(enc.names(m));
    let n = enc.count();
    let opts: Vec<Neighbour> = std::iter::once(None).chain((0..n).map(Some)).collect();
    for &l in &opts {
        for c in 0..n {
            for &r in &opts {
                let (lc, cc, rc) = (l.map(|x| enc.cell(x)), enc.cell(c), r.map(|x| enc.cell(x)));
                let heads = [lc, Some(cc), rc].into_iter().flatten().filter(|&x| is_head(x)).count();
                if heads > 1 {
                    continue;
                }
                for nx in next(lc, cc, rc) {
                    a.add(l, c, r, enc.index(nx));
                }
            }
        }
    }
    a.accepting = (0..n)
        .filter(|&x| match enc.cell(x) {
            Cell::Head(q, _) | Cell::Tagged(q, _, _) => m.is_accepting(q),
            Cell::Blank(_) => false,
        })
        .collect();
    a.deterministic = a.is_functional();
    a
}

fn initial(m: &SingleTapeTM, enc: &Encoding, s: usize) -> Vec<usize> {
    let mut init = vec![enc.index(Cell::Blank(0)); s];
    init[0] = enc.index(Cell::Head(m.initial, 0));
    init
}

/// One cell per tape cell with state set (Q ∪ {⊥}) × Γ; global steps
/// mirror machine steps. A halted head or a head that fell off the tape
/// leaves a configuration that repeats.
pub fn tm_to_ca(m: &SingleTapeTM, s: usize) -> Result<CellularInstance> {
    m.validate()?;
    if !m.deterministic {
        return Err(Error::Precondition("tm_to_ca needs a deterministic machine".into()));
    }
    if s == 0 {
        return Err(Error::invalid("at least one cell"));
    }
    let idx = m.transition_index();
    let step = |q: usize, a: usize| idx.get(&(q, a)).and_then(|v| v.first()).copied();
    let enc = Encoding { g: m.alphabet.len(), q: m.states.len(), tagged: false };
    let a = build(m, &enc, |l, c, r| {
        vec![match c {
            Cell::Head(q, a) => match step(q, a) {
                None => c,
                Some(tr) if tr.mv == Move::S => Cell::Head(tr.to, tr.write),
                Some(tr) => Cell::Blank(tr.write),
            },
            Cell::Blank(d) => {
                let from_left = match l {
                    Some(Cell::Head(q, a)) => step(q, a).filter(|tr| tr.mv == Move::R),
                    _ => None,
                };
                let from_right = match r {
                    Some(Cell::Head(q, a)) => step(q, a).filter(|tr| tr.mv == Move::L),
                    _ => None,
                };
                match from_left.or(from_right) {
                    Some(tr) => Cell::Head(tr.to, d),
                    None => c,
                }
            }
            Cell::Tagged(..) => unreachable!("no tags in the deterministic construction"),
        }]
    });
    CellularInstance::new(a, initial(m, &enc, s))
}

/// Splits every choice among three or more transitions into a chain of
/// binary choices through fresh states that rewrite the symbol they read.
pub fn binarize_branching(m: &SingleTapeTM) -> SingleTapeTM {
    let mut groups: BTreeMap<(usize, usize), Vec<TmTransition>> = BTreeMap::new();
    for t in &m.transitions {
        groups.entry((t.from, t.read)).or_default().push(*t);
    }
    let mut out = m.clone();
    out.transitions.clear();
    for ((q, a), choices) in groups {
        if choices.len() <= 2 {
            out.transitions.extend(choices);
            continue;
        }
        let mut from = q;
        for (j, c) in choices.iter().enumerate() {
            if j + 2 == choices.len() {
                out.transitions.push(TmTransition { from, ..*c });
                out.transitions.push(TmTransition { from, ..choices[j + 1] });
                break;
            }
            let aux = out.states.len();
            out.states.push(format!("{}~{}~{}", m.states[q], m.alphabet[a], j + 1));
            out.transitions.push(TmTransition { from, ..*c });
            out.transitions.push(TmTransition { from, read: a, to: aux, write: a, mv: Move::S });
            from = aux;
        }
    }
    out.transitions.sort();
    out
}

/// The tagged construction: a head first picks its branch by tagging
/// itself, then the head and its neighbours carry the branch out. Untagged
/// heads leave their neighbours unchanged, so two global steps make one
/// machine step.
pub fn tm_to_nca(m: &SingleTapeTM, s: usize) -> Result<CellularInstance> {
    m.validate()?;
    if s == 0 {
        return Err(Error::invalid("at least one cell"));
    }
    let m = binarize_branching(m);
    let idx = m.transition_index();
    let choice = |q: usize, a: usize, j: usize| idx.get(&(q, a)).and_then(|v| v.get(j)).copied();
    let enc = Encoding { g: m.alphabet.len(), q: m.states.len(), tagged: true };
    let a = build(&m, &enc, |l, c, r| match c {
        Cell::Head(q, a) => {
            let n = idx.get(&(q, a)).map_or(0, Vec::len);
            if n == 0 {
                vec![c]
            } else {
                (0..n).map(|j| Cell::Tagged(q, j, a)).collect()
            }
        }
        // Tags of missing branches are never produced and get no successor.
        Cell::Tagged(q, j, a) => choice(q, a, j)
            .map(|tr| if tr.mv == Move::S { Cell::Head(tr.to, tr.write) } else { Cell::Blank(tr.write) })
            .into_iter()
            .collect(),
        Cell::Blank(d) => {
            let from_left = match l {
                Some(Cell::Tagged(q, j, a)) => choice(q, a, j).filter(|tr| tr.mv == Move::R),
                _ => None,
            };
            let from_right = match r {
                Some(Cell::Tagged(q, j, a)) => choice(q, a, j).filter(|tr| tr.mv == Move::L),
                _ => None,
            };
            vec![match from_left.or(from_right) {
                Some(tr) => Cell::Head(tr.to, d),
                None => c,
            }]
        }
    });
    CellularInstance::new(a, initial(&m, &enc, s))
}

/// Decodes a configuration of [`tm_to_ca`] into (state, head, tape); `None`
/// for the state when no head is present.
pub fn decode_tm_config(m: &SingleTapeTM, config: &[usize]) -> (Option<(usize, usize)>, Vec<usize>) {
    let enc = Encoding { g: m.alphabet.len(), q: m.states.len(), tagged: false };
    let mut head = None;
    let tape = config
        .iter()
        .enumerate()
        .map(|(i, &x)| match enc.cell(x) {
            Cell::Blank(a) => a,
            Cell::Head(q, a) | Cell::Tagged(q, _, a) => {
                head = Some((q, i));
                a
            }
        })
        .collect();
    (head, tape)
}

/// t + 1 copies of the state set; transitions lead from copy i to copy i+1.
/// State (q, i) gets number (i-1)|Q| + q, so the result is a dag automaton.
pub fn ca_to_dag_ca(inst: &CellularInstance, t: usize) -> Result<CellularInstance> {
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let a = &inst.automaton;
    let q = a.states.len();
    let id = |x: usize, i: usize| (i - 1) * q + x;
    let mut out = CellularAutomaton::new(
        (1..=t + 1).flat_map(|i| a.states.iter().map(move |s| format!("{s}^{i}"))).collect(),
    );
    for (&(l, c, r), next) in &a.transitions {
        for i in 1..=t {
            for &n in next {
                out.add(l.map(|x| id(x, i)), id(c, i), r.map(|x| id(x, i)), id(n, i + 1));
            }
        }
    }
    out.accepting = (1..=t + 1).flat_map(|i| a.accepting.iter().map(move |&f| id(f, i))).collect();
    out.accepting.sort_unstable();
    out.deterministic = a.deterministic;
    out.dag = true;
    CellularInstance::new(out, inst.initial.iter().map(|&x| id(x, 1)).collect())
}

pub fn bounded_ca_to_dag_ca(inst: &BoundedCellularInstance) -> Result<CellularInstance> {
    ca_to_dag_ca(&inst.instance, inst.t)
}

/// The same layering for multi-head automata: acceptance within `t` steps.
pub fn mfa_to_dag(a: &MultiHeadAutomaton, t: usize) -> Result<MultiHeadAutomaton> {
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    a.validate()?;
    let q = a.states;
    let id = |x: usize, i: usize| (i - 1) * q + x;
    let transitions = (1..=t)
        .flat_map(|i| {
            a.transitions.iter().map(move |tr| MfaTransition {
                from: id(tr.from, i),
                read: tr.read.clone(),
                to: id(tr.to, i + 1),
                moves: tr.moves.clone(),
            })
        })
        .collect();
    let out = MultiHeadAutomaton {
        states: q * (t + 1),
        heads: a.heads,
        alphabet: a.alphabet.clone(),
        transitions,
        initial: id(a.initial, 1),
        accepting: (1..=t + 1).flat_map(|i| a.accepting.iter().map(move |&f| id(f, i))).collect(),
        deterministic: a.deterministic,
        dag: true,
        input: a.input.clone(),
    };
    out.validate()?;
    Ok(out)
}
