//! Command-line front end: generate, solve, reduce, verify and normalize
//! instances.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use paraspace::harness::{
    self, default_budget, gen_instance, json_lines, summary_table, verify_instances, verify_reduction, Mode, Params,
    Pipeline, ProblemInstance, Profile, Summary, VerifyOptions,
};
use paraspace::oracles::rs_normalize;
use paraspace::reductions::machine::{normalize_accepting, normalize_sequential};
use paraspace::{Error, UnionBase};

const YES: u8 = 0;
const NO: u8 = 1;
const BUDGET: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "paraspace", version, about = "Instances, reference solvers and reductions for parameterized space complexity")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Decide an instance with the reference solver.
    Solve {
        /// Problem name, e.g. bf, reach, tm-space, tpg, lcs-injective.
        problem: String,
        file: PathBuf,
        #[arg(long)]
        mode: Option<Mode>,
        /// Node budget; defaults to PARASPACE_BUDGET or 1000000.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Apply a reduction, or a pipeline `a+b+c`, to an instance file.
    Reduce {
        /// Reduction name or pipeline.
        name: Option<String>,
        input: Option<PathBuf>,
        output: Option<PathBuf>,
        /// List the registered reductions.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check that a reduction preserves answers and parameter bounds.
    Verify {
        #[arg(long)]
        reduction: String,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instance files to verify instead of generated cases.
        #[arg(long = "input", num_args = 1..)]
        inputs: Vec<PathBuf>,
        /// Generator kind overriding the reduction's default.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
        /// Report file; defaults to next to the first input, or the working
        /// directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Normal forms: a word under a replacement system, an automaton with a
    /// unique accepting configuration, or a normalized sequential automaton.
    Normalize {
        file: PathBuf,
        /// Word to normalize, for replacement systems.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Generator kind; `family-union:<base>` style for union problems.
    kind: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    profile: ProfileArgs,
}

#[derive(Args, Default)]
struct ProfileArgs {
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    states: Option<usize>,
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long = "max-steps")]
    max_steps: Option<usize>,
    #[arg(long)]
    layers: Option<usize>,
    #[arg(long, conflicts_with = "nondet")]
    det: bool,
    #[arg(long)]
    nondet: bool,
}

impl ProfileArgs {
    fn is_set(&self) -> bool {
        self.size.is_some()
            || self.k.is_some()
            || self.states.is_some()
            || self.cells.is_some()
            || self.max_steps.is_some()
            || self.layers.is_some()
            || self.det
            || self.nondet
    }

    fn over(&self, mut p: Profile) -> Profile {
        p.size = self.size.unwrap_or(p.size);
        p.k = self.k.unwrap_or(p.k);
        p.states = self.states.unwrap_or(p.states);
        p.cells = self.cells.unwrap_or(p.cells);
        p.steps = self.max_steps.unwrap_or(p.steps);
        p.layers = self.layers.unwrap_or(p.layers);
        if self.det {
            p.deterministic = Some(true);
        } else if self.nondet {
            p.deterministic = Some(false);
        }
        p
    }
}

#[derive(Args, Default)]
struct ParamArgs {
    /// Block size for tm_space_compress and dtsc_from_parameterized_run.
    #[arg(long)]
    block: Option<usize>,
    /// Base language for projection_to_family_union.
    #[arg(long)]
    base: Option<String>,
    /// Step bound for mfa_to_dag.
    #[arg(long)]
    steps: Option<usize>,
}

impl ParamArgs {
    fn params(&self) -> Result<Params, Error> {
        Ok(Params {
            block: self.block,
            base: self.base.as_deref().map(str::parse::<UnionBase>).transpose()?,
            steps: self.steps,
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { YES });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { BUDGET } else { USAGE })
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| Error::parse(e.to_string())),
    }
}

fn load(path: &Path) -> Result<ProblemInstance, Error> {
    ProblemInstance::parse_any(&read(path)?)
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Gen(a) => {
            let inst = gen_instance(&a.kind, &a.profile.over(Profile::default()), a.seed)?;
            emit(a.out.as_deref(), &inst.serialize())?;
            Ok(YES)
        }
        Cmd::Solve { problem, file, mode, budget } => {
            let inst = load(&file)?;
            match harness::solve(&problem, &inst, mode, budget.unwrap_or_else(default_budget)) {
                Ok(true) => {
                    println!("yes");
                    Ok(YES)
                }
                Ok(false) => {
                    println!("no");
                    Ok(NO)
                }
                Err(e) if e.is_budget() => {
                    println!("budget-exceeded");
                    Ok(BUDGET)
                }
                Err(e) => Err(e),
            }
        }
        Cmd::Reduce { list: true, .. } => {
            let mut out = std::io::stdout().lock();
            for d in harness::list() {
                // A closed pipe (e.g. `| head`) ends the listing quietly.
                if writeln!(out, "{:<32} {:>14} -> {:<14} {}", d.name, d.source, d.target, d.summary).is_err() {
                    break;
                }
            }
            Ok(YES)
        }
        Cmd::Reduce { name, input, output, params, .. } => {
            let (Some(name), Some(input), Some(output)) = (name, input, output) else {
                return Err(Error::parse("usage: reduce <name> <in-file> <out-file> | reduce --list"));
            };
            let pipe = Pipeline::parse(&name)?;
            let inst = load(&input)?;
            let hops = pipe.apply(&inst, &params.params()?)?;
            let last = hops.last().expect("pipelines are non-empty");
            write(&output, &last.instance.serialize())?;
            match last.mode {
                Some(m) => eprintln!("wrote {} ({}, solve with --mode {m})", output.display(), pipe.target()),
                None => eprintln!("wrote {} ({})", output.display(), pipe.target()),
            }
            Ok(YES)
        }
        Cmd::Verify { reduction, cases, seed, inputs, kind, budget, out, profile, params } => {
            let pipe = Pipeline::parse(&reduction)?;
            let mut opts = VerifyOptions::new(cases, seed);
            opts.budget = budget.unwrap_or_else(default_budget);
            opts.kind = kind;
            opts.params = params.params()?;
            if profile.is_set() {
                opts.profile = Some(profile.over(pipe.profile()));
            }
            let reports = if inputs.is_empty() {
                verify_reduction(&reduction, &opts)?
            } else {
                let insts = inputs.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
                verify_instances(&reduction, &insts, &opts)?
            };
            let path = out.unwrap_or_else(|| {
                let file = format!("{}.seed{seed}.report.jsonl", pipe.name());
                match inputs.first() {
                    Some(p) => p.with_file_name(format!(
                        "{}.{}.report.jsonl",
                        p.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
                        pipe.name()
                    )),
                    None => PathBuf::from(file),
                }
            });
            write(&path, &json_lines(&reports))?;
            print!("{}", summary_table(&pipe.name(), &reports));
            eprintln!("report: {}", path.display());
            Ok(if Summary::of(&reports).passed() { YES } else { NO })
        }
        Cmd::Normalize { file, word, out, budget } => {
            let text = match load(&file)? {
                ProblemInstance::Rs(rs) => {
                    let word = word.ok_or_else(|| Error::parse("replacement systems need --word"))?;
                    let tokens: Vec<String> = word.split_whitespace().map(String::from).collect();
                    let w = rs.word(&tokens)?;
                    let nf = rs_normalize(&rs, &w, budget.unwrap_or_else(default_budget))?;
                    rs.render(&nf).join(" ") + "\n"
                }
                ProblemInstance::Ca(c) => ProblemInstance::from(normalize_accepting(&c)?).serialize(),
                ProblemInstance::SeqCa(s) => ProblemInstance::from(normalize_sequential(&s)?).serialize(),
                other => return Err(Error::parse(format!("nothing to normalize in a `{}` file", other.kind()))),
            };
            emit(out.as_deref(), &text)?;
            Ok(YES)
        }
    }
}
