use itertools::Itertools;

use super::binomial;
use crate::error::{Error, Result};
use crate::model::GeneratorInstance;

/// Membership vector of the closure of `gens` under the table.
pub fn generator_closure(table: &[Vec<usize>], gens: &[usize]) -> Vec<bool> {
    let n = table.len();
    let mut member = vec![false; n];
    let mut list = Vec::new();
    for &g in gens {
        if !std::mem::replace(&mut member[g], true) {
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        let mut j = 0;
        while j <= i {
            let y = list[j];
            for z in [table[x][y], table[y][x]] {
                if !std::mem::replace(&mut member[z], true) {
                    list.push(z);
                }
            }
            j += 1;
        }
        i += 1;
    }
    member
}

pub fn agen_decide(inst: &GeneratorInstance, budget: u64) -> Result<bool> {
    if binomial(inst.candidates.len(), inst.k) > budget as u128 {
        return Err(Error::BudgetExceeded(budget));
    }
    for g in inst.candidates.iter().copied().combinations(inst.k) {
        if generator_closure(&inst.table, &g)[inst.target] {
            return Ok(true);
        }
    }
    Ok(false)
}
