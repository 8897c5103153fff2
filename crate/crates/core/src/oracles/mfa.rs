use std::collections::{HashMap, HashSet, VecDeque};

use super::Meter;
use crate::error::{Error, Result};
use crate::model::MultiHeadAutomaton;

/// Heads start on the first input symbol of `<w>`; moves past either end
/// marker leave the head where it is.
pub fn run_mfa(a: &MultiHeadAutomaton, budget: u64) -> Result<bool> {
    let tape = a.tape();
    let last = tape.len() - 1;
    let mut idx: HashMap<(usize, &[usize]), Vec<usize>> = HashMap::new();
    for (i, t) in a.transitions.iter().enumerate() {
        idx.entry((t.from, t.read.as_slice())).or_default().push(i);
    }
    let mut meter = Meter::new(budget);
    let start = (a.initial, vec![1usize; a.heads]);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some(((q, heads), depth)) = queue.pop_front() {
        meter.tick()?;
        if a.dag && depth > a.states {
            return Err(Error::Internal("dag automaton ran longer than |Q| steps".into()));
        }
        if a.accepting.contains(&q) {
            return Ok(true);
        }
        let read: Vec<usize> = heads.iter().map(|&p| tape[p]).collect();
        for &i in idx.get(&(q, read.as_slice())).into_iter().flatten() {
            let t = &a.transitions[i];
            let moved: Vec<usize> = heads
                .iter()
                .zip(&t.moves)
                .map(|(&p, &m)| {
                    let np = p as isize + m as isize;
                    if np < 0 || np > last as isize {
                        p
                    } else {
                        np as usize
                    }
                })
                .collect();
            let next = (t.to, moved);
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    Ok(false)
}
