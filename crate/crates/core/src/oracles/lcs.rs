use std::collections::HashSet;

use super::Meter;
use crate::error::{Error, Result};
use crate::model::LcsInstance;

/// `next[i][p][a]`: first position ≥ p of symbol a in string i, or the
/// string length.
fn next_tables(inst: &LcsInstance) -> Vec<Vec<Vec<u32>>> {
    let sigma = inst.alphabet.len();
    inst.strings
        .iter()
        .map(|s| {
            let mut table = vec![vec![s.len() as u32; sigma]; s.len() + 1];
            for p in (0..s.len()).rev() {
                table[p] = table[p + 1].clone();
                table[p][s[p]] = p as u32;
            }
            table
        })
        .collect()
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Keeps only pointer tuples not dominated by another tuple of the layer.
fn pareto(mut layer: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    layer.sort();
    layer.dedup();
    let mut keep: Vec<Vec<u32>> = Vec::new();
    for t in layer {
        if !keep.iter().any(|k| dominates(k, &t)) {
            keep.retain(|k| !dominates(&t, k));
            keep.push(t);
        }
    }
    keep
}

/// Layer j holds the pointer tuples reachable after matching j symbols. A
/// tuple that is componentwise behind another can match everything the
/// other can, so dominated tuples are dropped.
fn layers(inst: &LcsInstance, stop_at: usize, budget: u64) -> Result<usize> {
    if inst.strings.is_empty() {
        return Err(Error::Precondition("an LCS instance needs at least one string".into()));
    }
    let next = next_tables(inst);
    let lens: Vec<u32> = inst.strings.iter().map(|s| s.len() as u32).collect();
    let mut meter = Meter::new(budget);
    let mut layer = vec![vec![0u32; inst.strings.len()]];
    let mut matched = 0;
    while matched < stop_at {
        let mut succ = Vec::new();
        for t in &layer {
            let first = inst.strings[0][t[0] as usize..].iter().copied().collect::<HashSet<_>>();
            for a in first {
                meter.tick()?;
                let mut nt = Vec::with_capacity(t.len());
                let ok = t.iter().enumerate().all(|(i, &p)| {
                    let q = next[i][p as usize][a];
                    nt.push(q + 1);
                    q < lens[i]
                });
                if ok {
                    succ.push(nt);
                }
            }
        }
        if succ.is_empty() {
            break;
        }
        layer = pareto(succ);
        meter.charge(layer.len() as u64)?;
        matched += 1;
    }
    Ok(matched)
}

/// Is there a common subsequence of length at least l?
pub fn lcs_decide(inst: &LcsInstance, budget: u64) -> Result<bool> {
    if inst.l == 0 {
        return Ok(true);
    }
    Ok(layers(inst, inst.l, budget)? >= inst.l)
}

pub fn lcs_length(inst: &LcsInstance, budget: u64) -> Result<usize> {
    layers(inst, usize::MAX, budget)
}

/// For p-sequences a common subsequence is a chain of symbols each of which
/// comes before the next in every string, so it suffices to remember the
/// last guessed symbol and a counter.
pub fn lcs_injective_decide(inst: &LcsInstance, budget: u64) -> Result<bool> {
    if !inst.is_injective() {
        return Err(Error::Precondition("strings must be p-sequences".into()));
    }
    if inst.l == 0 {
        return Ok(true);
    }
    let sigma = inst.alphabet.len();
    let mut pos = vec![vec![usize::MAX; sigma]; inst.strings.len()];
    for (i, s) in inst.strings.iter().enumerate() {
        for (p, &a) in s.iter().enumerate() {
            pos[i][a] = p;
        }
    }
    let everywhere = |a: usize| pos.iter().all(|p| p[a] != usize::MAX);
    let before = |a: usize, b: usize| pos.iter().all(|p| p[a] < p[b]);
    let mut meter = Meter::new(budget);
    let mut seen = HashSet::new();
    let mut stack: Vec<(usize, usize)> = (0..sigma).filter(|&a| everywhere(a)).map(|a| (a, 1)).collect();
    while let Some((cur, count)) = stack.pop() {
        meter.tick()?;
        if count >= inst.l {
            return Ok(true);
        }
        if !seen.insert((cur, count)) {
            continue;
        }
        for b in 0..sigma {
            if everywhere(b) && before(cur, b) {
                stack.push((b, count + 1));
            }
        }
    }
    Ok(false)
}
