use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::Meter;
use crate::error::{Error, Result};
use crate::model::{CellularAutomaton, CellularInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaMode {
    Det,
    Nondet,
}

/// All successor configurations of one global step. A cell without a
/// transition leaves none.
pub fn ca_step(a: &CellularAutomaton, config: &[usize]) -> Vec<Vec<usize>> {
    let k = config.len();
    let options: Vec<&[usize]> = (0..k)
        .map(|i| {
            let l = if i == 0 { None } else { Some(config[i - 1]) };
            let r = config.get(i + 1).copied();
            a.successors(l, config[i], r)
        })
        .collect();
    if options.iter().any(|o| o.is_empty()) {
        return Vec::new();
    }
    let mut out = vec![Vec::with_capacity(k)];
    for opt in options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opt.iter().map(move |&q| {
                    let mut p = prefix.clone();
                    p.push(q);
                    p
                })
            })
            .collect();
    }
    out
}

/// Some cell accepting at some time; repeats and stuck configurations reject.
pub fn run_ca(inst: &CellularInstance, mode: CaMode, budget: u64) -> Result<bool> {
    run(inst, mode, usize::MAX, budget)
}

/// Acceptance at one of the times `0..=t`.
pub fn run_ca_bounded(inst: &CellularInstance, mode: CaMode, t: usize, budget: u64) -> Result<bool> {
    run(inst, mode, t, budget)
}

fn run(inst: &CellularInstance, mode: CaMode, t: usize, budget: u64) -> Result<bool> {
    let a = &inst.automaton;
    if mode == CaMode::Det && !a.deterministic {
        return Err(Error::Precondition("deterministic run of a nondeterministic automaton".into()));
    }
    let q = a.states.len();
    let mut meter = Meter::new(budget);
    let mut seen = HashSet::from([inst.initial.clone()]);
    let mut queue = VecDeque::from([(inst.initial.clone(), 0usize)]);
    while let Some((c, depth)) = queue.pop_front() {
        meter.tick()?;
        if a.dag && depth > q {
            return Err(Error::Internal("dag automaton ran longer than |Q| steps".into()));
        }
        if c.iter().any(|&s| a.is_accepting(s)) {
            return Ok(true);
        }
        if depth >= t {
            continue;
        }
        for next in ca_step(a, &c) {
            meter.tick()?;
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    Ok(false)
}
