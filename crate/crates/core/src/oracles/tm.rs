use std::collections::{HashSet, VecDeque};

use super::Meter;
use crate::error::{Error, Result};
use crate::model::{BoundedTMInstance, ParameterizedRun, SingleTapeTM};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Config {
    state: usize,
    head: usize,
    tape: Vec<usize>,
}

/// Acceptance on the blank tape within `t` steps and `s` cells. Entering an
/// accepting state accepts; moving off the tape or halting rejects.
pub fn run_tm_bounded(inst: &BoundedTMInstance, budget: u64) -> Result<bool> {
    search(&inst.machine, inst.t, inst.s, budget)
}

/// As [`run_tm_bounded`] with no step bound; repeats reject.
pub fn run_tm_space(m: &SingleTapeTM, s: usize, budget: u64) -> Result<bool> {
    search(m, usize::MAX, s, budget)
}

fn search(m: &SingleTapeTM, t: usize, s: usize, budget: u64) -> Result<bool> {
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let idx = m.transition_index();
    let mut meter = Meter::new(budget);
    let start = Config { state: m.initial, head: 0, tape: vec![0; s] };
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((c, depth)) = queue.pop_front() {
        meter.tick()?;
        if m.is_accepting(c.state) {
            return Ok(true);
        }
        if depth >= t {
            continue;
        }
        for tr in idx.get(&(c.state, c.tape[c.head])).into_iter().flatten() {
            let head = c.head as isize + tr.mv.delta();
            if head < 0 || head >= s as isize {
                continue;
            }
            let mut next = Config { state: tr.to, head: head as usize, tape: c.tape.clone() };
            next.tape[c.head] = tr.write;
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    Ok(false)
}

/// The two-tape machine on input `x`: the input head ranges over
/// `0..max(|x|, 1)` with moves clamped at both ends, the work tape has `s`
/// cells.
pub fn run_two_tape_bounded(run: &ParameterizedRun, budget: u64) -> Result<bool> {
    let m = &run.machine;
    let n = run.input.len().max(1);
    let read = |i: usize| run.input.get(i).copied().unwrap_or(0);
    let mut meter = Meter::new(budget);
    type C = (usize, usize, usize, Vec<usize>);
    let start: C = (m.initial, 0, 0, vec![0; run.s]);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some(((q, ih, wh, tape), depth)) = queue.pop_front() {
        meter.tick()?;
        if m.accepting.contains(&q) {
            return Ok(true);
        }
        if depth >= run.t {
            continue;
        }
        for tr in &m.transitions {
            if tr.from != q || tr.input_read != read(ih) || tr.work_read != tape[wh] {
                continue;
            }
            let w = wh as isize + tr.work_move.delta();
            if w < 0 || w >= run.s as isize {
                continue;
            }
            let i = (ih as isize + tr.input_move.delta()).clamp(0, n as isize - 1) as usize;
            let mut tape2 = tape.clone();
            tape2[wh] = tr.work_write;
            let next: C = (tr.to, i, w as usize, tape2);
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    Ok(false)
}
