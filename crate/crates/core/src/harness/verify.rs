use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gen::{gen_instance, Profile};
use super::registry::{Params, Pipeline};
use super::solve::{parameter, solve};
use super::ProblemInstance;
use crate::error::{Error, Result};
use crate::oracles::DEFAULT_BUDGET;

pub const BUDGET_ENV: &str = "PARASPACE_BUDGET";

/// The per-case node budget: `PARASPACE_BUDGET` when set and numeric,
/// otherwise 10⁶.
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Disagree,
    /// A budget ran out; the case says nothing either way.
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case_id: usize,
    pub seed: u64,
    pub reduction: String,
    pub source_answer: Option<bool>,
    pub target_answer: Option<bool>,
    /// Answers after each hop but the last, for pipelines.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub intermediate: Vec<bool>,
    pub kappa1: u64,
    pub kappa2: u64,
    pub g_kappa1: u64,
    pub agreement: bool,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub wall_ms: f64,
}

impl VerificationReport {
    /// Equal up to wall time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        let mut a = self.clone();
        a.wall_ms = other.wall_ms;
        a == *other
    }
}

/// Settings of one verification run.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub cases: usize,
    pub seed: u64,
    pub budget: u64,
    /// Generator kind overriding the reduction's default.
    pub kind: Option<String>,
    pub profile: Option<Profile>,
    pub params: Params,
}

impl VerifyOptions {
    pub fn new(cases: usize, seed: u64) -> Self {
        VerifyOptions { cases, seed, budget: default_budget(), kind: None, profile: None, params: Params::default() }
    }
}

/// The seeds of the cases, drawn in order from one stream.
pub fn case_seeds(seed: u64, cases: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases).map(|_| rng.gen()).collect()
}

/// Generates `cases` instances of the reduction's source, solves source and
/// target with the reference procedures and compares. Cases run in
/// parallel; the result is ordered by case id.
pub fn verify_reduction(name: &str, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let pipe = Pipeline::parse(name)?;
    let kind = match (&opts.kind, pipe.gen()) {
        (Some(k), _) => k.clone(),
        (None, Some(k)) => k.to_string(),
        (None, None) => return Err(Error::Unsupported(format!("{} has no instance generator", pipe.name()))),
    };
    let profile = opts.profile.clone().unwrap_or_else(|| pipe.profile());
    profile.check()?;
    let seeds = case_seeds(opts.seed, opts.cases);
    Ok(seeds
        .par_iter()
        .enumerate()
        .map(|(id, &seed)| run_case(&pipe, opts, id, seed, || gen_instance(&kind, &profile, seed)))
        .collect())
}

/// Verifies the reduction on given instances; their seeds are reported as 0.
pub fn verify_instances(name: &str, instances: &[ProblemInstance], opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let pipe = Pipeline::parse(name)?;
    Ok(instances
        .par_iter()
        .enumerate()
        .map(|(id, inst)| run_case(&pipe, opts, id, 0, || Ok(inst.clone())))
        .collect())
}

fn run_case(
    pipe: &Pipeline,
    opts: &VerifyOptions,
    id: usize,
    seed: u64,
    make: impl FnOnce() -> Result<ProblemInstance>,
) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport {
        case_id: id,
        seed,
        reduction: pipe.name(),
        source_answer: None,
        target_answer: None,
        intermediate: Vec::new(),
        kappa1: 0,
        kappa2: 0,
        g_kappa1: 0,
        agreement: false,
        status: Status::Error,
        message: None,
        wall_ms: 0.0,
    };
    let outcome = (|| -> Result<()> {
        let inst = make()?;
        rep.kappa1 = parameter(&inst);
        rep.g_kappa1 = pipe.g(rep.kappa1);
        let src = solve(pipe.source(), &inst, None, opts.budget)?;
        rep.source_answer = Some(src);
        let hops = pipe.apply(&inst, &opts.params)?;
        let last = hops.last().expect("pipelines are non-empty");
        rep.kappa2 = parameter(&last.instance);
        for (d, r) in pipe.steps.iter().zip(&hops).take(hops.len() - 1) {
            rep.intermediate.push(solve(d.target, &r.instance, r.mode, opts.budget)?);
        }
        let tgt = solve(pipe.target(), &last.instance, last.mode, opts.budget)?;
        rep.target_answer = Some(tgt);
        rep.agreement = src == tgt && rep.intermediate.iter().all(|&a| a == src) && rep.kappa2 <= rep.g_kappa1;
        rep.status = if rep.agreement { Status::Agree } else { Status::Disagree };
        Ok(())
    })();
    if let Err(e) = outcome {
        rep.status = if e.is_budget() { Status::Skipped } else { Status::Error };
        rep.message = Some(e.to_string());
    }
    rep.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    rep
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub agree: usize,
    pub disagree: usize,
    pub skipped: usize,
    pub errors: usize,
    pub yes: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary { cases: reports.len(), ..Summary::default() };
        for r in reports {
            match r.status {
                Status::Agree => s.agree += 1,
                Status::Disagree => s.disagree += 1,
                Status::Skipped => s.skipped += 1,
                Status::Error => s.errors += 1,
            }
            if r.source_answer == Some(true) {
                s.yes += 1;
            }
        }
        s
    }

    /// No disagreements and no errors; skipped cases do not count.
    pub fn passed(&self) -> bool {
        self.disagree == 0 && self.errors == 0
    }

    /// Agreeing cases among the decided ones, in percent.
    pub fn agreement_rate(&self) -> f64 {
        let decided = self.agree + self.disagree + self.errors;
        if decided == 0 {
            100.0
        } else {
            100.0 * self.agree as f64 / decided as f64
        }
    }
}

pub fn json_lines(reports: &[VerificationReport]) -> String {
    reports.iter().map(|r| serde_json::to_string(r).expect("reports serialize") + "\n").collect()
}

pub fn parse_json_lines(text: &str) -> Result<Vec<VerificationReport>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::parse(e.to_string())))
        .collect()
}

pub fn summary_table(name: &str, reports: &[VerificationReport]) -> String {
    let s = Summary::of(reports);
    let total_ms: f64 = reports.iter().map(|r| r.wall_ms).sum();
    let mut out = String::new();
    let _ = writeln!(out, "{:<44} {:>6} {:>6} {:>9} {:>8} {:>6} {:>5} {:>8} {:>10}",
        "reduction", "cases", "agree", "disagree", "skipped", "error", "yes", "rate%", "wall ms");
    let _ = writeln!(out, "{:<44} {:>6} {:>6} {:>9} {:>8} {:>6} {:>5} {:>8.1} {:>10.1}",
        name, s.cases, s.agree, s.disagree, s.skipped, s.errors, s.yes, s.agreement_rate(), total_ms);
    out
}
