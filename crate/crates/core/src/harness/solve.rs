use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ProblemInstance;
use crate::error::{Error, Result};
use crate::model::{GraphPropertyKind, UnionBase};
use crate::oracles::{self, CaMode, TpgMode, UnionInstance};

/// Search mode for automata and pebble games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Det,
    Nondet,
    Max,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(Mode::Det),
            "nondet" => Ok(Mode::Nondet),
            "max" => Ok(Mode::Max),
            _ => Err(Error::parse(format!("unknown mode `{s}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Det => "det",
            Mode::Nondet => "nondet",
            Mode::Max => "max",
        })
    }
}

/// Decision problems `solve` understands, with the file kind each reads.
pub const PROBLEMS: &[(&str, &str)] = &[
    ("bf", "bf"),
    ("reach", "graph"),
    ("dag-reach", "graph"),
    ("layered-reach", "graph"),
    ("cycle", "graph"),
    ("undirected-reach", "graph"),
    ("tree", "graph"),
    ("forest", "graph"),
    ("undirected-cycle", "graph"),
    ("agen", "agen"),
    ("family-union", "family-union"),
    ("subset-union", "subset-union"),
    ("weighted-union", "weighted-union"),
    ("tm-bounded", "tm-bounded"),
    ("tm-space", "tm-bounded"),
    ("tm-run", "tm-run"),
    ("ca", "ca"),
    ("ca-bounded", "ca-bounded"),
    ("seqca", "seqca"),
    ("mfa", "mfa"),
    ("tpg", "tpg"),
    ("lcs", "lcs"),
    ("lcs-injective", "lcs"),
];

pub fn file_kind(problem: &str) -> Result<&'static str> {
    PROBLEMS
        .iter()
        .find(|(p, _)| *p == problem)
        .map(|(_, k)| *k)
        .ok_or_else(|| Error::parse(format!("unknown problem `{problem}`")))
}

fn ca_mode(mode: Option<Mode>, deterministic: bool) -> Result<CaMode> {
    match mode {
        None if deterministic => Ok(CaMode::Det),
        None | Some(Mode::Nondet) => Ok(CaMode::Nondet),
        Some(Mode::Det) => Ok(CaMode::Det),
        Some(Mode::Max) => Err(Error::parse("max mode applies to pebble games")),
    }
}

/// Runs the reference decision procedure of `problem` on `inst`. Without a
/// mode, automata run deterministically when they are deterministic and
/// pebble games run in nondet mode. `tm-space` ignores the step bound.
pub fn solve(problem: &str, inst: &ProblemInstance, mode: Option<Mode>, budget: u64) -> Result<bool> {
    let expected = file_kind(problem)?;
    if inst.kind() != expected {
        return Err(Error::parse(format!("problem `{problem}` reads `{expected}` files, not `{}`", inst.kind())));
    }
    match (problem, inst) {
        (_, ProblemInstance::Bf(b)) => oracles::eval_bf(&b.formula, &b.assignment),
        (p, ProblemInstance::Graph(g)) => oracles::graph_property(p.parse::<GraphPropertyKind>()?, g),
        (_, ProblemInstance::Agen(g)) => oracles::agen_decide(g, budget),
        (_, ProblemInstance::Family(i)) => union(UnionInstance::Family(i.clone()), i.base, budget),
        (_, ProblemInstance::Subset(i)) => union(UnionInstance::Subset(i.clone()), i.base, budget),
        (_, ProblemInstance::Weighted(i)) => union(UnionInstance::Weighted(i.clone()), i.base, budget),
        ("tm-space", ProblemInstance::TmBounded(i)) => oracles::run_tm_space(&i.machine, i.s, budget),
        (_, ProblemInstance::TmBounded(i)) => oracles::run_tm_bounded(i, budget),
        (_, ProblemInstance::TmRun(r)) => oracles::run_two_tape_bounded(r, budget),
        (_, ProblemInstance::Ca(i)) => oracles::run_ca(i, ca_mode(mode, i.automaton.deterministic)?, budget),
        (_, ProblemInstance::CaBounded(i)) => {
            oracles::run_ca_bounded(&i.instance, ca_mode(mode, i.instance.automaton.deterministic)?, i.t, budget)
        }
        (_, ProblemInstance::SeqCa(i)) => oracles::run_sequential(i, budget),
        (_, ProblemInstance::Mfa(a)) => oracles::run_mfa(a, budget),
        (_, ProblemInstance::Tpg(g)) => {
            let m = match mode {
                Some(Mode::Max) => TpgMode::Max,
                None | Some(Mode::Nondet) => TpgMode::Nondet,
                Some(Mode::Det) => return Err(Error::parse("pebble games run in max or nondet mode")),
            };
            oracles::run_tpg(g, m, budget)
        }
        ("lcs-injective", ProblemInstance::Lcs(l)) => oracles::lcs_injective_decide(l, budget),
        (_, ProblemInstance::Lcs(l)) => oracles::lcs_decide(l, budget),
        (p, _) => Err(Error::Unsupported(format!("no decision procedure for `{p}`"))),
    }
}

fn union(inst: UnionInstance, base: UnionBase, budget: u64) -> Result<bool> {
    oracles::solve_union(&inst, &|w| oracles::base_accepts(base, w), budget)
}

/// The parameter of an instance read as `problem`: k for union and
/// generator problems, the cell bound for machines, cells for automata,
/// start pebbles for games, heads for multi-head automata and the number of
/// strings for LCS. Unparameterized problems have parameter 0.
pub fn parameter(inst: &ProblemInstance) -> u64 {
    (match inst {
        ProblemInstance::Agen(g) => g.k,
        ProblemInstance::Family(i) => i.k(),
        ProblemInstance::Subset(i) => i.k,
        ProblemInstance::Weighted(i) => i.k,
        ProblemInstance::Projection(p) => p.projection.blocks,
        ProblemInstance::TmBounded(i) => i.s,
        ProblemInstance::TmRun(r) => r.s,
        ProblemInstance::Ca(i) => i.cells(),
        ProblemInstance::CaBounded(i) => i.instance.cells(),
        ProblemInstance::SeqCa(i) => i.cells(),
        ProblemInstance::Mfa(a) => a.heads,
        ProblemInstance::Tpg(g) => g.start.len(),
        ProblemInstance::Lcs(l) => l.strings.len(),
        ProblemInstance::Bf(_) | ProblemInstance::Graph(_) | ProblemInstance::Rs(_) | ProblemInstance::Tm(_) => 0,
    }) as u64
}
