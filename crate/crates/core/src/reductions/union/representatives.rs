//! Irreducible representative systems of replacement systems.
//!
//! The irreducible words are enumerated by extending irreducible prefixes.
//! Classes start as the leftmost normal forms and are merged until the
//! product on classes is a congruence, is associative (checked with the
//! letters as generators) and identifies both sides of every rule. Every
//! merge identifies words that are equivalent under the rules, and the
//! fixpoint is a semigroup in which the rules hold, so the classes are
//! exactly the equivalence classes of nonempty words.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::ReplacementSystem;
use crate::oracles::Rewriter;

pub const MAX_IRREDUCIBLE: usize = 200_000;
const NORMALIZE_BUDGET: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct RepresentativeSystem {
    /// Shortlex-least irreducible word of each class.
    pub reps: Vec<Vec<usize>>,
    /// Class of every irreducible word.
    pub class_of: HashMap<Vec<usize>, usize>,
    pub table: Vec<Vec<usize>>,
    /// Number of irreducible words before merging.
    pub irreducible_count: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

fn shortlex(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// All nonempty irreducible words, in shortlex order.
pub fn irreducible_words(rs: &ReplacementSystem, cap: usize) -> Result<Vec<Vec<usize>>> {
    let rw = Rewriter::new(rs);
    let letters = rs.alphabet.len();
    let ends_with_rule = |w: &[usize]| rs.rules.iter().any(|(l, _)| w.ends_with(l));
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..letters).map(|a| vec![a]).filter(|w| !ends_with_rule(w)).collect();
    while !frontier.is_empty() {
        out.extend(frontier.iter().cloned());
        if out.len() > cap {
            return Err(Error::Internal(format!("more than {cap} irreducible words")));
        }
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..letters {
                let mut v = w.clone();
                v.push(a);
                if !ends_with_rule(&v) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    debug_assert!(out.iter().all(|w| rw.is_irreducible(w)));
    Ok(out)
}

impl RepresentativeSystem {
    pub fn build(rs: &ReplacementSystem) -> Result<Self> {
        let rw = Rewriter::new(rs);
        let words = irreducible_words(rs, MAX_IRREDUCIBLE)?;
        for w in &words {
            if !rw.is_irreducible(w) {
                return Err(Error::Internal("enumerated word is reducible".into()));
            }
        }
        let index: HashMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let letter: Vec<usize> = (0..rs.alphabet.len())
            .map(|a| index.get(&vec![a]).copied().ok_or_else(|| Error::Internal("reducible letter".into())))
            .collect::<Result<_>>()?;
        let nw = words.len();
        let prod: Vec<Vec<usize>> = words
            .par_iter()
            .map(|u| {
                let mut buf = Vec::new();
                words
                    .iter()
                    .map(|v| {
                        buf.clear();
                        buf.extend_from_slice(u);
                        buf.extend_from_slice(v);
                        let nf = rw.normalize(&buf, NORMALIZE_BUDGET)?;
                        index
                            .get(&nf)
                            .copied()
                            .ok_or_else(|| Error::Internal("normal form outside the enumerated words".into()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        let mut uf = UnionFind((0..nw).collect());
        loop {
            let mut changed = false;
            // Congruence: members of one class multiply alike on both sides.
            for u in 0..nw {
                let r = uf.find(u);
                if r == u {
                    continue;
                }
                for v in 0..nw {
                    changed |= uf.union(prod[u][v], prod[r][v]);
                    changed |= uf.union(prod[v][u], prod[v][r]);
                }
            }
            if changed {
                continue;
            }
            let roots: Vec<usize> = (0..nw).filter(|&u| uf.find(u) == u).collect();
            let op = |uf: &mut UnionFind, a: usize, b: usize| uf.find(prod[a][b]);
            // Associativity with the letters in the middle.
            for &x in &roots {
                for &g in &letter {
                    let xg = op(&mut uf, x, g);
                    for &y in &roots {
                        let gy = op(&mut uf, g, y);
                        let left = op(&mut uf, xg, y);
                        let right = op(&mut uf, x, gy);
                        changed |= uf.union(left, right);
                    }
                }
            }
            // Both sides of every rule evaluate alike.
            for (l, r) in &rs.rules {
                let eval = |uf: &mut UnionFind, w: &[usize]| -> Option<usize> {
                    let mut it = w.iter();
                    let first = uf.find(letter[*it.next()?]);
                    Some(it.fold(first, |acc, &a| uf.find(prod[acc][letter[a]])))
                };
                let lc = eval(&mut uf, l).expect("rules have nonempty left sides");
                if let Some(rc) = eval(&mut uf, r) {
                    changed |= uf.union(lc, rc);
                }
            }
            if !changed {
                break;
            }
        }
        // Classes are numbered in shortlex order of their least words;
        // `words` is already shortlex sorted.
        let mut class_id = vec![usize::MAX; nw];
        let mut reps = Vec::new();
        for i in 0..nw {
            let r = uf.find(i);
            if class_id[r] == usize::MAX {
                class_id[r] = reps.len();
                reps.push(words[i].clone());
            }
            class_id[i] = class_id[r];
        }
        debug_assert!(reps.windows(2).all(|w| shortlex(&w[0], &w[1]).is_lt()));
        let rep_word: Vec<usize> = reps.iter().map(|w| index[w]).collect();
        let table = rep_word
            .iter()
            .map(|&a| rep_word.iter().map(|&b| class_id[prod[a][b]]).collect())
            .collect();
        let class_of = words.iter().enumerate().map(|(i, w)| (w.clone(), class_id[i])).collect();
        Ok(RepresentativeSystem { reps, class_of, table, irreducible_count: nw })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of an arbitrary nonempty word.
    pub fn class_of_word(&self, rs: &ReplacementSystem, w: &[usize]) -> Result<usize> {
        let nf = Rewriter::new(rs).normalize(w, NORMALIZE_BUDGET)?;
        self.class_of.get(&nf).copied().ok_or_else(|| Error::Internal("word without class".into()))
    }

    pub fn names(&self, rs: &ReplacementSystem) -> Vec<String> {
        self.reps.iter().map(|w| rs.render(w).join(".")).collect()
    }
}
