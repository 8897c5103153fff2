use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::Meter;
use crate::error::Result;
use crate::model::ThresholdPebbleGame;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TpgMode {
    Max,
    Nondet,
}

/// Vertices whose pebbled predecessors reach their threshold.
pub fn pebbleable(game: &ThresholdPebbleGame, arcs: &[(usize, usize)], x: &[bool]) -> Vec<usize> {
    let mut count = vec![0u32; game.n()];
    for &(a, b) in arcs {
        if x[a] {
            count[b] += 1;
        }
    }
    (0..game.n()).filter(|&v| count[v] >= game.threshold[v]).collect()
}

fn as_mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Max mode always moves to the full set of pebbleable vertices; nondet mode
/// may pick any subset of it within the pebble cap. Reaching T exactly wins.
pub fn run_tpg(game: &ThresholdPebbleGame, mode: TpgMode, budget: u64) -> Result<bool> {
    let n = game.n();
    let arcs = game.graph.arcs();
    let mut meter = Meter::new(budget);
    let start: Vec<usize> = game.start.clone();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        meter.tick()?;
        if x == game.target {
            return Ok(true);
        }
        let p = pebbleable(game, &arcs, &as_mask(n, &x));
        let mut push = |y: Vec<usize>, meter: &mut Meter| -> Result<()> {
            meter.tick()?;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
            Ok(())
        };
        match mode {
            TpgMode::Max => push(p, &mut meter)?,
            TpgMode::Nondet => {
                let cap = game.cap.unwrap_or(p.len()).min(p.len());
                for size in 0..=cap {
                    for y in p.iter().copied().combinations(size) {
                        push(y, &mut meter)?;
                    }
                }
            }
        }
    }
    Ok(false)
}

/// The sequence of pebblings visited by max mode, ending at T or at the
/// first repeat.
pub fn max_trace(game: &ThresholdPebbleGame, limit: usize) -> Vec<Vec<usize>> {
    let arcs = game.graph.arcs();
    let mut seen = HashSet::new();
    let mut x = game.start.clone();
    let mut out = Vec::new();
    while out.len() < limit && seen.insert(x.clone()) {
        out.push(x.clone());
        if x == game.target {
            break;
        }
        x = pebbleable(game, &arcs, &as_mask(game.n(), &x));
    }
    out
}
