use super::gen::Profile;
use super::solve::Mode;
use super::ProblemInstance;
use crate::error::{Error, Result};
use crate::model::{CellularInstance, UnionBase};
use crate::reductions::machine as m;
use crate::reductions::union as u;

/// Optional knobs a transform may read.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    /// Block size for space compression.
    pub block: Option<usize>,
    /// Base language for projections.
    pub base: Option<UnionBase>,
    /// Step bound for the multi-head DAG construction.
    pub steps: Option<usize>,
}

/// A transformed instance and the mode its target problem is solved in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub instance: ProblemInstance,
    pub mode: Option<Mode>,
}

impl From<ProblemInstance> for Reduced {
    fn from(instance: ProblemInstance) -> Self {
        Reduced { instance, mode: None }
    }
}

pub type Transform = fn(&ProblemInstance, &Params) -> Result<Reduced>;

/// One registered reduction. `source` and `target` are problem names as
/// understood by `solve`. Reductions without a generator cannot be
/// verified, only applied.
#[derive(Clone, Copy)]
pub struct ReductionDescriptor {
    pub name: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub g: fn(u64) -> u64,
    pub transform: Transform,
    pub gen: Option<&'static str>,
    pub profile: fn() -> Profile,
    pub summary: &'static str,
}

impl std::fmt::Debug for ReductionDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ReductionDescriptor")
            .field("name", &self.name)
            .field("source", &self.source)
            .field("target", &self.target)
            .finish()
    }
}

fn wrong(name: &str, inst: &ProblemInstance) -> Error {
    Error::parse(format!("{name} does not accept `{}` instances", inst.kind()))
}

fn same(k: u64) -> u64 {
    k
}

fn plus3(k: u64) -> u64 {
    k + 3
}

fn four(_: u64) -> u64 {
    4
}

fn times4(k: u64) -> u64 {
    4 * k
}

fn desk() -> Profile {
    Profile::default()
}

fn agen_profile() -> Profile {
    Profile { size: 4, k: 2, ..Profile::default() }
}

fn dtsc_profile() -> Profile {
    Profile { size: 4, states: 4, cells: 6, steps: 30, ..Profile::default() }
}

fn tm_profile() -> Profile {
    Profile { states: 3, cells: 4, steps: 0, ..Profile::default() }
}

fn dtm_profile() -> Profile {
    Profile { deterministic: Some(true), ..tm_profile() }
}

fn ca_profile() -> Profile {
    Profile { states: 3, cells: 4, steps: 3, ..Profile::default() }
}

fn tpg_profile() -> Profile {
    Profile { states: 2, cells: 3, steps: 2, ..Profile::default() }
}

fn tpg_cyclic_profile() -> Profile {
    Profile { states: 2, cells: 3, ..Profile::default() }
}

fn seq_profile() -> Profile {
    Profile { states: 3, cells: 3, steps: 3, ..Profile::default() }
}

/// Pebble games from deterministic automata run in max mode.
fn game_mode(ca: &CellularInstance) -> Option<Mode> {
    Some(if ca.automaton.deterministic { Mode::Max } else { Mode::Nondet })
}

fn identity(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    Ok(i.clone().into())
}

fn projection(i: &ProblemInstance, p: &Params) -> Result<Reduced> {
    let ProblemInstance::Projection(x) = i else { return Err(wrong("projection_to_family_union", i)) };
    let pr = &x.projection;
    let base = p.base.unwrap_or(UnionBase::Bf);
    Ok(ProblemInstance::from(u::projection_to_family_union(pr, &x.x, &pr.advice, pr.blocks, base)?).into())
}

fn f2s_bf(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Family(x) = i else { return Err(wrong("family_to_subset_bf", i)) };
    Ok(ProblemInstance::from(u::family_to_subset_bf(x)?).into())
}

fn s2w_bf(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Subset(x) = i else { return Err(wrong("subset_to_weighted_bf", i)) };
    Ok(ProblemInstance::from(u::subset_to_weighted_bf(x)?).into())
}

fn f2s_graph(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Family(x) = i else { return Err(wrong("family_to_subset_graph", i)) };
    Ok(ProblemInstance::from(u::family_to_subset_graph(x)?).into())
}

fn f2s_agen(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Family(x) = i else { return Err(wrong("family_to_subset_agen", i)) };
    Ok(ProblemInstance::from(u::family_to_subset_agen(x)?.output).into())
}

fn s2w_agen(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Subset(x) = i else { return Err(wrong("subset_to_weighted_agen", i)) };
    Ok(ProblemInstance::from(u::subset_to_weighted_agen(x)?.output).into())
}

fn hardwire(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::TmRun(r) = i else { return Err(wrong("tm_hardwire_input", i)) };
    let single = m::tm_hardwire_input(&r.machine, &r.input)?;
    Ok(ProblemInstance::from(crate::model::BoundedTMInstance::new(single, r.t, r.s)?).into())
}

fn compress(i: &ProblemInstance, p: &Params) -> Result<Reduced> {
    let ProblemInstance::TmBounded(b) = i else { return Err(wrong("tm_space_compress", i)) };
    let c = m::tm_space_compress(&b.machine, p.block.unwrap_or(2), b.s)?;
    let t = c.steps(b.t);
    Ok(ProblemInstance::from(crate::model::BoundedTMInstance::new(c.machine, t, c.cells)?).into())
}

fn dtsc(i: &ProblemInstance, p: &Params) -> Result<Reduced> {
    let ProblemInstance::TmRun(r) = i else { return Err(wrong("dtsc_from_parameterized_run", i)) };
    let mut r = r.clone();
    if let Some(b) = p.block {
        r.block = b;
    }
    Ok(ProblemInstance::from(m::dtsc_from_parameterized_run(&r)?).into())
}

fn to_ca(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::TmBounded(b) = i else { return Err(wrong("tm_to_ca", i)) };
    Ok(ProblemInstance::from(m::tm_to_ca(&b.machine, b.s)?).into())
}

fn to_nca(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::TmBounded(b) = i else { return Err(wrong("tm_to_nca", i)) };
    Ok(ProblemInstance::from(m::tm_to_nca(&b.machine, b.s)?).into())
}

fn to_dag(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::CaBounded(b) = i else { return Err(wrong("ca_to_dag_ca", i)) };
    Ok(ProblemInstance::from(m::bounded_ca_to_dag_ca(b)?).into())
}

fn dag_tpg(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Ca(c) = i else { return Err(wrong("dagca_to_tpg", i)) };
    Ok(Reduced { instance: m::dagca_to_tpg_normalized(c)?.into(), mode: game_mode(c) })
}

fn cyclic_tpg(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Ca(c) = i else { return Err(wrong("ca_to_tpg_cyclic", i)) };
    Ok(Reduced { instance: m::ca_to_tpg_cyclic_normalized(c)?.into(), mode: game_mode(c) })
}

fn layered_lcs(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::Graph(g) = i else { return Err(wrong("layeredreach_to_lcs_injective", i)) };
    Ok(ProblemInstance::from(m::layeredreach_to_lcs_injective(g)?).into())
}

fn to_seq(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::CaBounded(b) = i else { return Err(wrong("nca_to_sequential", i)) };
    Ok(ProblemInstance::from(m::bounded_nca_to_sequential(b)).into())
}

fn norm_seq(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::SeqCa(s) = i else { return Err(wrong("normalize_sequential", i)) };
    Ok(ProblemInstance::from(m::normalize_sequential(s)?).into())
}

fn seq_lcs(i: &ProblemInstance, _: &Params) -> Result<Reduced> {
    let ProblemInstance::SeqCa(s) = i else { return Err(wrong("seqca_to_lcs", i)) };
    Ok(ProblemInstance::from(m::seqca_to_lcs(s)?).into())
}

fn mfa_dag(i: &ProblemInstance, p: &Params) -> Result<Reduced> {
    let ProblemInstance::Mfa(a) = i else { return Err(wrong("mfa_to_dag", i)) };
    let t = p.steps.ok_or_else(|| Error::parse("mfa_to_dag needs a step bound (--steps)"))?;
    Ok(ProblemInstance::from(m::mfa_to_dag(a, t)?).into())
}

macro_rules! entry {
    ($name:literal, $src:literal -> $dst:literal, $g:expr, $f:expr, $gen:expr, $prof:expr, $sum:literal) => {
        ReductionDescriptor {
            name: $name,
            source: $src,
            target: $dst,
            g: $g,
            transform: $f,
            gen: $gen,
            profile: $prof,
            summary: $sum,
        }
    };
}

pub static REDUCTIONS: &[ReductionDescriptor] = &[
    entry!("identity", "bf" -> "bf", same, identity, Some("bf"), desk, "returns its input"),
    entry!("projection_to_family_union", "projection" -> "family-union", same, projection, None, desk,
        "compatible projection to family union (--base, default bf)"),
    entry!("family_to_subset_bf", "family-union" -> "subset-union", same, f2s_bf, Some("family-union:bf"), desk,
        "family union to subset union over formulas"),
    entry!("subset_to_weighted_bf", "subset-union" -> "weighted-union", same, s2w_bf, Some("subset-union:bf"), desk,
        "subset union to weighted union over formulas"),
    entry!("family_to_subset_graph", "family-union" -> "subset-union", same, f2s_graph, Some("family-union:reach"),
        desk, "family union to subset union over graph properties"),
    entry!("family_to_subset_agen", "family-union" -> "subset-union", same, f2s_agen, Some("family-union:agen"),
        agen_profile, "family union to subset union over generators"),
    entry!("subset_to_weighted_agen", "subset-union" -> "weighted-union", plus3, s2w_agen, Some("subset-union:agen"),
        agen_profile, "subset union to weighted union over generators, k' = k + 3"),
    entry!("tm_hardwire_input", "tm-run" -> "tm-bounded", same, hardwire, Some("tm-run"), dtsc_profile,
        "writes the input into the finite control"),
    entry!("tm_space_compress", "tm-bounded" -> "tm-bounded", same, compress, Some("tm-bounded"), dtsc_profile,
        "packs tape cells into blocks (--block, default 2)"),
    entry!("dtsc_from_parameterized_run", "tm-run" -> "tm-bounded", same, dtsc, Some("tm-run"), dtsc_profile,
        "hardwires the input, then compresses the work tape"),
    entry!("tm_to_ca", "tm-space" -> "ca", same, to_ca, Some("tm-bounded"), dtm_profile,
        "space-bounded machine to cellular automaton"),
    entry!("tm_to_nca", "tm-space" -> "ca", same, to_nca, Some("tm-bounded"), tm_profile,
        "space-bounded machine to binary-branching nondeterministic automaton"),
    entry!("ca_to_dag_ca", "ca-bounded" -> "ca", same, to_dag, Some("ca-bounded"), ca_profile,
        "step-bounded automaton to DAG automaton"),
    entry!("dagca_to_tpg", "ca" -> "tpg", same, dag_tpg, Some("ca-dag"), tpg_profile,
        "DAG automaton to acyclic threshold pebble game"),
    entry!("ca_to_tpg_cyclic", "ca" -> "tpg", same, cyclic_tpg, Some("ca"), tpg_cyclic_profile,
        "automaton to threshold pebble game with cycles"),
    entry!("layeredreach_to_lcs_injective", "layered-reach" -> "lcs-injective", four, layered_lcs,
        Some("layered-reach"), desk, "layered reachability to injective LCS with four strings"),
    entry!("nca_to_sequential", "ca-bounded" -> "seqca", same, to_seq, Some("ca-bounded"), seq_profile,
        "parallel automaton to sequential automaton"),
    entry!("normalize_sequential", "seqca" -> "seqca", same, norm_seq, Some("seqca-raw"), seq_profile,
        "adds step counters and an acceptance bit"),
    entry!("seqca_to_lcs", "seqca" -> "lcs", times4, seq_lcs, Some("seqca"), seq_profile,
        "normalized sequential automaton to LCS with 4k strings"),
    entry!("mfa_to_dag", "mfa" -> "mfa", same, mfa_dag, None, desk, "adds a step counter (--steps)"),
];

pub fn list() -> &'static [ReductionDescriptor] {
    REDUCTIONS
}

pub fn lookup(name: &str) -> Result<&'static ReductionDescriptor> {
    REDUCTIONS.iter().find(|d| d.name == name).ok_or_else(|| Error::UnknownReduction(name.to_string()))
}

/// A chain `a+b+c` of reductions, checked for matching problem names.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub steps: Vec<&'static ReductionDescriptor>,
}

impl Pipeline {
    pub fn parse(spec: &str) -> Result<Self> {
        let steps = spec.split('+').map(|s| lookup(s.trim())).collect::<Result<Vec<_>>>()?;
        for w in steps.windows(2) {
            if file_of(w[0].target) != file_of(w[1].source) {
                return Err(Error::parse(format!(
                    "{} produces {} but {} reads {}",
                    w[0].name, w[0].target, w[1].name, w[1].source
                )));
            }
        }
        Ok(Pipeline { steps })
    }

    pub fn name(&self) -> String {
        self.steps.iter().map(|d| d.name).collect::<Vec<_>>().join("+")
    }

    pub fn source(&self) -> &'static str {
        self.steps[0].source
    }

    pub fn target(&self) -> &'static str {
        self.steps[self.steps.len() - 1].target
    }

    pub fn gen(&self) -> Option<&'static str> {
        self.steps[0].gen
    }

    pub fn profile(&self) -> Profile {
        (self.steps[0].profile)()
    }

    pub fn g(&self, k: u64) -> u64 {
        self.steps.iter().fold(k, |k, d| (d.g)(k))
    }

    /// Every intermediate result, the last one being the final target.
    pub fn apply(&self, inst: &ProblemInstance, params: &Params) -> Result<Vec<Reduced>> {
        let mut out: Vec<Reduced> = Vec::with_capacity(self.steps.len());
        for d in &self.steps {
            let cur = out.last().map_or(inst, |r| &r.instance);
            out.push((d.transform)(cur, params)?);
        }
        Ok(out)
    }
}

fn file_of(problem: &str) -> &str {
    super::solve::file_kind(problem).unwrap_or(problem)
}
