//! Reference decision procedures. Every search is explicit and bounded by a
//! node budget; running out is reported as an error, never as a "no".

pub mod agen;
pub mod bf;
pub mod ca;
pub mod graph;
pub mod lcs;
pub mod mfa;
pub mod rewriting;
pub mod seqca;
pub mod tm;
pub mod tpg;
pub mod union;

pub use agen::{agen_decide, generator_closure};
pub use bf::eval_bf;
pub use ca::{ca_step, run_ca, run_ca_bounded, CaMode};
pub use graph::graph_property;
pub use lcs::{lcs_decide, lcs_injective_decide, lcs_length};
pub use mfa::run_mfa;
pub use rewriting::{rs_normalize, rs_normalize_random, Rewriter};
pub use seqca::{run_sequential, sequential_configs};
pub use tm::{run_tm_bounded, run_tm_space, run_two_tape_bounded};
pub use tpg::{run_tpg, TpgMode};
pub use union::{base_accepts, solve_family, solve_subset, solve_union, solve_weighted, UnionInstance};

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Counts explored nodes against a budget.
#[derive(Debug)]
pub struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    pub fn new(limit: u64) -> Self {
        Meter { used: 0, limit }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.charge(1)
    }

    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            return Err(Error::BudgetExceeded(self.limit));
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return r;
        }
    }
    r
}
