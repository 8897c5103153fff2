use std::collections::HashMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::model::ReplacementSystem;

/// Rules indexed by first symbol, keeping their list order.
pub struct Rewriter<'a> {
    rs: &'a ReplacementSystem,
    by_first: HashMap<usize, Vec<usize>>,
}

impl<'a> Rewriter<'a> {
    pub fn new(rs: &'a ReplacementSystem) -> Self {
        let mut by_first: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, (l, _)) in rs.rules.iter().enumerate() {
            by_first.entry(l[0]).or_default().push(i);
        }
        Rewriter { rs, by_first }
    }

    fn matches(&self, w: &[usize], pos: usize, rule: usize) -> bool {
        let l = &self.rs.rules[rule].0;
        w.len() >= pos + l.len() && w[pos..pos + l.len()] == l[..]
    }

    /// First rule (in list order) applicable at the leftmost position.
    pub fn leftmost(&self, w: &[usize]) -> Option<(usize, usize)> {
        (0..w.len()).find_map(|pos| {
            self.by_first
                .get(&w[pos])?
                .iter()
                .find(|&&r| self.matches(w, pos, r))
                .map(|&r| (pos, r))
        })
    }

    pub fn applicable(&self, w: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for &r in self.by_first.get(&w[pos]).into_iter().flatten() {
                if self.matches(w, pos, r) {
                    out.push((pos, r));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &[usize]) -> bool {
        self.leftmost(w).is_none()
    }

    pub fn apply(&self, w: &[usize], pos: usize, rule: usize) -> Vec<usize> {
        let (l, r) = &self.rs.rules[rule];
        let mut out = Vec::with_capacity(w.len() + r.len());
        out.extend_from_slice(&w[..pos]);
        out.extend_from_slice(r);
        out.extend_from_slice(&w[pos + l.len()..]);
        out
    }

    pub fn normalize(&self, w: &[usize], budget: u64) -> Result<Vec<usize>> {
        let mut w = w.to_vec();
        let mut steps = 0u64;
        while let Some((pos, rule)) = self.leftmost(&w) {
            if steps >= budget {
                return Err(Error::Nontermination(steps));
            }
            steps += 1;
            w = self.apply(&w, pos, rule);
        }
        Ok(w)
    }

    /// Applies a uniformly chosen applicable rule occurrence each step.
    pub fn normalize_random<R: Rng>(&self, w: &[usize], rng: &mut R, budget: u64) -> Result<Vec<usize>> {
        let mut w = w.to_vec();
        let mut steps = 0u64;
        loop {
            let options = self.applicable(&w);
            if options.is_empty() {
                return Ok(w);
            }
            if steps >= budget {
                return Err(Error::Nontermination(steps));
            }
            steps += 1;
            let (pos, rule) = options[rng.gen_range(0..options.len())];
            w = self.apply(&w, pos, rule);
        }
    }
}

/// Leftmost-first normal form.
pub fn rs_normalize(rs: &ReplacementSystem, w: &[usize], budget: u64) -> Result<Vec<usize>> {
    Rewriter::new(rs).normalize(w, budget)
}

pub fn rs_normalize_random<R: Rng>(
    rs: &ReplacementSystem,
    w: &[usize],
    rng: &mut R,
    budget: u64,
) -> Result<Vec<usize>> {
    Rewriter::new(rs).normalize_random(w, rng, budget)
}
