//! Cellular automata as threshold pebble games.

use crate::error::{Error, Result};
use crate::model::{CellularAutomaton, CellularInstance, Graph, Neighbour, ThresholdPebbleGame};

/// Adds an absorbing accepting state A, entered by every cell that sees an
/// accepting state or A, and an absorbing state H for triples without a
/// move. The only accepting configuration left is A in every cell, reached
/// within k steps of the first acceptance. H hides the original stalls, so
/// this is exact when stalls are global (layered automata) or absent
/// (total automata).
pub fn normalize_accepting(inst: &CellularInstance) -> Result<CellularInstance> {
    let a = &inst.automaton;
    let q = a.states.len();
    let (acc, halt) = (q, q + 1);
    let mut names = a.states.clone();
    names.push(fresh(&a.states, "A"));
    names.push(fresh(&a.states, "H"));
    let mut out = CellularAutomaton::new(names);
    let opts: Vec<Neighbour> = std::iter::once(None).chain((0..q + 2).map(Some)).collect();
    let hot = |x: usize| x == acc || (x < q && a.is_accepting(x));
    for &l in &opts {
        for c in 0..q + 2 {
            for &r in &opts {
                let seen = [l, Some(c), r];
                if seen.iter().flatten().any(|&x| hot(x)) {
                    out.add(l, c, r, acc);
                } else if seen.iter().flatten().any(|&x| x == halt) {
                    out.add(l, c, r, halt);
                } else {
                    let next = a.successors(l, c, r);
                    if next.is_empty() {
                        out.add(l, c, r, halt);
                    }
                    for &n in next {
                        out.add(l, c, r, n);
                    }
                }
            }
        }
    }
    out.accepting = vec![acc];
    out.deterministic = a.deterministic;
    CellularInstance::new(out, inst.initial.clone())
}

fn fresh(names: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while names.contains(&name) {
        name.push('\'');
    }
    name
}

fn unique_accepting(a: &CellularAutomaton) -> Result<usize> {
    match a.accepting.as_slice() {
        [f] => Ok(*f),
        _ => Err(Error::Precondition("the automaton needs exactly one accepting state".into())),
    }
}

/// The observed triples of one cell, leftmost component fastest, with the
/// threshold of the auxiliary vertices.
fn cell_triples(q: usize, cell: usize, s: usize) -> (Vec<(Neighbour, usize, Neighbour)>, u32) {
    let left: Vec<Neighbour> = if cell == 0 { vec![None] } else { (0..q).map(Some).collect() };
    let right: Vec<Neighbour> = if cell + 1 == s { vec![None] } else { (0..q).map(Some).collect() };
    let mut out = Vec::new();
    for &r in &right {
        for c in 0..q {
            for &l in &left {
                out.push((l, c, r));
            }
        }
    }
    let threshold = 1 + u32::from(cell > 0) + u32::from(cell + 1 < s);
    (out, threshold)
}

struct Builder {
    graph: Graph,
    threshold: Vec<u32>,
    layers: Vec<usize>,
}

impl Builder {
    fn vertex(&mut self, threshold: u32, layer: usize) -> usize {
        self.threshold.push(threshold);
        self.layers.push(layer);
        self.graph.add_vertex()
    }

    fn main_layer(&mut self, s: usize, q: usize, layer: usize) -> usize {
        let base = self.graph.n();
        for _ in 0..s * q {
            self.vertex(1, layer);
        }
        base
    }

    /// Auxiliary vertices reading main layer `from` and feeding main layer
    /// `to`.
    fn aux_layer(&mut self, a: &CellularAutomaton, s: usize, from: usize, to: usize, layer: usize) {
        let q = a.states.len();
        for cell in 0..s {
            let (triples, th) = cell_triples(q, cell, s);
            for (l, c, r) in triples {
                let v = self.vertex(th, layer);
                if let Some(x) = l {
                    self.graph.add_edge(from + (cell - 1) * q + x, v);
                }
                self.graph.add_edge(from + cell * q + c, v);
                if let Some(x) = r {
                    self.graph.add_edge(from + (cell + 1) * q + x, v);
                }
                for &n in a.successors(l, c, r) {
                    self.graph.add_edge(v, to + cell * q + n);
                }
            }
        }
    }
}

/// `t` main layers of s·|Q| vertices (threshold 1) with an auxiliary layer
/// between consecutive ones: |Q|³ vertices of threshold 3 per inner cell,
/// |Q|² of threshold 2 per border cell. The game starts on the initial
/// string in layer 1 and targets the accepting state in every cell of
/// layer t. The pebble cap is s.
pub fn dagca_to_tpg(inst: &CellularInstance, t: usize) -> Result<ThresholdPebbleGame> {
    let a = &inst.automaton;
    let f = unique_accepting(a)?;
    if t == 0 {
        return Err(Error::invalid("at least one layer"));
    }
    let (s, q) = (inst.cells(), a.states.len());
    let mut b = Builder { graph: Graph::new(0, true), threshold: Vec::new(), layers: Vec::new() };
    let mut mains = vec![b.main_layer(s, q, 0)];
    for i in 1..t {
        let to_layer = 2 * i;
        // Main layer first so the auxiliary edges can point at it; the
        // auxiliary vertices sit on the layer in between.
        let next = b.main_layer(s, q, to_layer);
        b.aux_layer(a, s, mains[i - 1], next, to_layer - 1);
        mains.push(next);
    }
    let start = inst.initial.iter().enumerate().map(|(c, &x)| mains[0] + c * q + x).collect();
    let target = (0..s).map(|c| mains[t - 1] + c * q + f).collect();
    let mut graph = b.graph;
    graph.layers = Some(b.layers);
    let game = ThresholdPebbleGame { graph, threshold: b.threshold, start, target, dag: true, cap: Some(s) };
    game.validate()?;
    Ok(game)
}

/// One main layer and one auxiliary layer wired back into it; after every
/// two game steps the main layer holds the next configuration.
pub fn ca_to_tpg_cyclic(inst: &CellularInstance) -> Result<ThresholdPebbleGame> {
    let a = &inst.automaton;
    let f = unique_accepting(a)?;
    let (s, q) = (inst.cells(), a.states.len());
    let mut b = Builder { graph: Graph::new(0, true), threshold: Vec::new(), layers: Vec::new() };
    let main = b.main_layer(s, q, 0);
    b.aux_layer(a, s, main, main, 1);
    let start = inst.initial.iter().enumerate().map(|(c, &x)| main + c * q + x).collect();
    let target = (0..s).map(|c| main + c * q + f).collect();
    let game = ThresholdPebbleGame { graph: b.graph, threshold: b.threshold, start, target, dag: false, cap: Some(s) };
    game.validate()?;
    Ok(game)
}

/// Main layers needed after [`normalize_accepting`] of a dag automaton: its
/// runs end within |Q| steps and acceptance fills all cells within s more.
pub fn dag_layer_count(inst: &CellularInstance) -> usize {
    inst.automaton.states.len() + inst.cells() + 1
}

/// Normalizes a dag automaton and unrolls it.
pub fn dagca_to_tpg_normalized(inst: &CellularInstance) -> Result<ThresholdPebbleGame> {
    if !inst.automaton.dag {
        return Err(Error::Precondition("dagca_to_tpg needs a dag automaton".into()));
    }
    let t = dag_layer_count(inst);
    dagca_to_tpg(&normalize_accepting(inst)?, t)
}

/// Normalizes an automaton and builds the single-layer game.
pub fn ca_to_tpg_cyclic_normalized(inst: &CellularInstance) -> Result<ThresholdPebbleGame> {
    ca_to_tpg_cyclic(&normalize_accepting(inst)?)
}
