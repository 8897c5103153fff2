//! Input hardwiring and space compression for Turing machines.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{BoundedTMInstance, Move, ParameterizedRun, SingleTapeTM, TmTransition, TwoTapeTM};

/// One copy of the state set per input head position. The input head ranges
/// over `0..max(|x|, 1)` with clamped moves; an empty input reads blanks.
pub fn tm_hardwire_input(m: &TwoTapeTM, x: &[usize]) -> Result<SingleTapeTM> {
    m.validate()?;
    if x.iter().any(|&a| a >= m.alphabet.len()) {
        return Err(Error::invalid("input symbol outside the alphabet"));
    }
    let n = x.len().max(1);
    let read = |i: usize| x.get(i).copied().unwrap_or(0);
    let state = |q: usize, pos: usize| q * n + pos;
    let mut states = Vec::with_capacity(m.states.len() * n);
    for q in &m.states {
        for pos in 0..n {
            states.push(format!("{q}@{pos}"));
        }
    }
    let mut transitions = Vec::new();
    for tr in &m.transitions {
        for pos in (0..n).filter(|&p| read(p) == tr.input_read) {
            let next = (pos as isize + tr.input_move.delta()).clamp(0, n as isize - 1) as usize;
            transitions.push(TmTransition {
                from: state(tr.from, pos),
                read: tr.work_read,
                to: state(tr.to, next),
                write: tr.work_write,
                mv: tr.work_move,
            });
        }
    }
    transitions.sort();
    transitions.dedup();
    let out = SingleTapeTM {
        states,
        alphabet: m.alphabet.clone(),
        transitions,
        initial: state(m.initial, 0),
        accepting: m.accepting.iter().flat_map(|&f| (0..n).map(move |p| state(f, p))).collect(),
        deterministic: m.deterministic,
    };
    out.validate()?;
    Ok(out)
}

/// A compressed machine and its bounds. Steps map one to one.
#[derive(Clone, Debug)]
pub struct Compressed {
    pub machine: SingleTapeTM,
    pub cells: usize,
    pub block: usize,
    /// Wall cells in front of the first real cell.
    pub padding: usize,
}

impl Compressed {
    pub fn steps(&self, t: usize) -> usize {
        t
    }
}

/// Packs `b` cells into one block symbol and folds the in-block offset into
/// the state. When `b` does not divide `s` the first block starts with
/// `b - s mod b` wall cells; the first move marks block 0 by writing a marked
/// copy of its symbol, and stepping onto a wall inside a marked block
/// rejects, as falling off the left end does in the original.
pub fn tm_space_compress(m: &SingleTapeTM, b: usize, s: usize) -> Result<Compressed> {
    if b == 0 {
        return Err(Error::invalid("block size must be at least 1"));
    }
    if s == 0 {
        return Err(Error::invalid("cell bound must be at least 1"));
    }
    m.validate()?;
    let g = m.alphabet.len();
    let cells = s.div_ceil(b);
    let padding = cells * b - s;
    let blocks: Vec<Vec<usize>> = (0..b).map(|_| 0..g).multi_cartesian_product().collect();
    let plain = blocks.len();
    let marks = padding > 0;
    let code = |blk: &[usize]| blk.iter().fold(0, |acc, &a| acc * g + a);
    let mut alphabet: Vec<String> =
        blocks.iter().map(|blk| blk.iter().map(|&a| m.alphabet[a].as_str()).join(".")).collect();
    if marks {
        let marked: Vec<String> = alphabet.iter().map(|a| format!("^{a}")).collect();
        alphabet.extend(marked);
    }
    let q = m.states.len();
    let state = |p: usize, o: usize| p * b + o;
    let mut states: Vec<String> = Vec::new();
    for p in &m.states {
        for o in 0..b {
            states.push(format!("{p}.{o}"));
        }
    }
    let start = if marks {
        states.push("start".into());
        q * b
    } else {
        state(m.initial, 0)
    };
    let idx = m.transition_index();
    let mut transitions = Vec::new();
    // (state, offset, from-start) triples; the start state acts as the
    // initial state at offset `padding` and writes marked blocks.
    let mut sources: Vec<(usize, usize, usize, bool)> =
        (0..q).flat_map(|p| (0..b).map(move |o| (state(p, o), p, o, false))).collect();
    if marks {
        sources.push((start, m.initial, padding, true));
    }
    for (from, p, o, first) in sources {
        for (sym, blk) in blocks.iter().enumerate() {
            for marked in [false, true] {
                if marked && !marks {
                    continue;
                }
                if first && marked {
                    continue;
                }
                let read = if marked { sym + plain } else { sym };
                for tr in idx.get(&(p, blk[o])).into_iter().flatten() {
                    let mut nb = blk.clone();
                    nb[o] = tr.write;
                    let out_marked = marked || first;
                    let write = code(&nb) + if out_marked { plain } else { 0 };
                    let target = o as isize + tr.mv.delta();
                    if out_marked && target >= 0 && (target as usize) < padding {
                        continue;
                    }
                    let (no, mv) = if target < 0 {
                        (b - 1, Move::L)
                    } else if target as usize >= b {
                        (0, Move::R)
                    } else {
                        (target as usize, Move::S)
                    };
                    transitions.push(TmTransition { from, read, to: state(tr.to, no), write, mv });
                }
            }
        }
    }
    transitions.sort();
    let mut accepting: Vec<usize> = m.accepting.iter().flat_map(|&f| (0..b).map(move |o| state(f, o))).collect();
    if marks && m.is_accepting(m.initial) {
        accepting.push(start);
    }
    let machine = SingleTapeTM { states, alphabet, transitions, initial: start, accepting, deterministic: m.deterministic };
    machine.validate()?;
    Ok(Compressed { machine, cells, block: b, padding })
}

/// Hardwires the input, then compresses the work tape into blocks of
/// `run.block` cells.
pub fn dtsc_from_parameterized_run(run: &ParameterizedRun) -> Result<BoundedTMInstance> {
    let single = tm_hardwire_input(&run.machine, &run.input)?;
    let c = tm_space_compress(&single, run.block, run.s)?;
    let t = c.steps(run.t);
    BoundedTMInstance::new(c.machine, t, c.cells)
}
