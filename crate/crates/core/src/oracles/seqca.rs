use std::collections::{HashSet, VecDeque};

use super::Meter;
use crate::error::{Error, Result};
use crate::model::{CellularAutomaton, SequentialCellularInstance};

/// Successor states of cell `i`, which sees the current states of both
/// neighbours (the left one has already moved in this major step).
pub fn seq_cell_options<'a>(a: &'a CellularAutomaton, config: &[usize], i: usize) -> &'a [usize] {
    let l = if i == 0 { None } else { Some(config[i - 1]) };
    a.successors(l, config[i], config.get(i + 1).copied())
}

/// Some cell accepting after some minor step, within `steps` major steps
/// when that bound is set. A cell without a move ends the run.
pub fn run_sequential(inst: &SequentialCellularInstance, budget: u64) -> Result<bool> {
    let a = &inst.automaton;
    let k = inst.cells();
    if k == 0 {
        return Err(Error::invalid("sequential instance without cells"));
    }
    let limit = inst.steps.map_or(usize::MAX, |t| t.saturating_mul(k));
    let mut meter = Meter::new(budget);
    let start = (inst.initial.clone(), 0usize);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some(((c, i), depth)) = queue.pop_front() {
        meter.tick()?;
        if c.iter().any(|&q| a.is_accepting(q)) {
            return Ok(true);
        }
        if depth >= limit {
            continue;
        }
        for &q in seq_cell_options(a, &c, i) {
            let mut next = c.clone();
            next[i] = q;
            let key = (next, (i + 1) % k);
            if seen.insert(key.clone()) {
                queue.push_back((key, depth + 1));
            }
        }
    }
    Ok(false)
}

/// Every configuration reached after exactly `minor` sequential moves.
pub fn sequential_configs(inst: &SequentialCellularInstance, minor: usize) -> Vec<Vec<usize>> {
    let k = inst.cells();
    let mut layer: Vec<Vec<usize>> = vec![inst.initial.clone()];
    for step in 0..minor {
        let i = step % k;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for c in &layer {
            for &q in seq_cell_options(&inst.automaton, c, i) {
                let mut n = c.clone();
                n[i] = q;
                next.push(n);
            }
        }
        next.sort();
        next.dedup();
        layer = next;
    }
    layer
}
