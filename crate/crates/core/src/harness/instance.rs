use crate::error::{Error, Result};
use crate::format::{Doc, TextFormat};
use crate::model::*;

/// Any instance file, tagged by its header kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemInstance {
    Bf(BfInstance),
    Graph(Graph),
    Agen(GeneratorInstance),
    Family(FamilyUnionInstance),
    Subset(SubsetUnionInstance),
    Weighted(WeightedUnionInstance),
    Projection(ProjectionInput),
    Rs(ReplacementSystem),
    Tm(SingleTapeTM),
    TmBounded(BoundedTMInstance),
    TmRun(ParameterizedRun),
    Ca(CellularInstance),
    CaBounded(BoundedCellularInstance),
    SeqCa(SequentialCellularInstance),
    Mfa(MultiHeadAutomaton),
    Tpg(ThresholdPebbleGame),
    Lcs(LcsInstance),
}

macro_rules! each {
    ($self:expr, $x:ident => $e:expr) => {
        match $self {
            ProblemInstance::Bf($x) => $e,
            ProblemInstance::Graph($x) => $e,
            ProblemInstance::Agen($x) => $e,
            ProblemInstance::Family($x) => $e,
            ProblemInstance::Subset($x) => $e,
            ProblemInstance::Weighted($x) => $e,
            ProblemInstance::Projection($x) => $e,
            ProblemInstance::Rs($x) => $e,
            ProblemInstance::Tm($x) => $e,
            ProblemInstance::TmBounded($x) => $e,
            ProblemInstance::TmRun($x) => $e,
            ProblemInstance::Ca($x) => $e,
            ProblemInstance::CaBounded($x) => $e,
            ProblemInstance::SeqCa($x) => $e,
            ProblemInstance::Mfa($x) => $e,
            ProblemInstance::Tpg($x) => $e,
            ProblemInstance::Lcs($x) => $e,
        }
    };
}

fn kind_of<T: TextFormat>(_: &T) -> &'static str {
    T::KIND
}

impl ProblemInstance {
    /// The header kind of the text form.
    pub fn kind(&self) -> &'static str {
        each!(self, x => kind_of(x))
    }

    pub fn serialize(&self) -> String {
        each!(self, x => x.serialize())
    }

    pub fn parse_any(text: &str) -> Result<Self> {
        let doc = Doc::parse(text)?;
        Ok(match doc.kind.as_str() {
            BfInstance::KIND => ProblemInstance::Bf(BfInstance::from_doc(&doc)?),
            Graph::KIND => ProblemInstance::Graph(Graph::from_doc(&doc)?),
            GeneratorInstance::KIND => ProblemInstance::Agen(GeneratorInstance::from_doc(&doc)?),
            FamilyUnionInstance::KIND => ProblemInstance::Family(FamilyUnionInstance::from_doc(&doc)?),
            SubsetUnionInstance::KIND => ProblemInstance::Subset(SubsetUnionInstance::from_doc(&doc)?),
            WeightedUnionInstance::KIND => ProblemInstance::Weighted(WeightedUnionInstance::from_doc(&doc)?),
            ProjectionInput::KIND => ProblemInstance::Projection(ProjectionInput::from_doc(&doc)?),
            ReplacementSystem::KIND => ProblemInstance::Rs(ReplacementSystem::from_doc(&doc)?),
            SingleTapeTM::KIND => ProblemInstance::Tm(SingleTapeTM::from_doc(&doc)?),
            BoundedTMInstance::KIND => ProblemInstance::TmBounded(BoundedTMInstance::from_doc(&doc)?),
            ParameterizedRun::KIND => ProblemInstance::TmRun(ParameterizedRun::from_doc(&doc)?),
            CellularInstance::KIND => ProblemInstance::Ca(CellularInstance::from_doc(&doc)?),
            BoundedCellularInstance::KIND => ProblemInstance::CaBounded(BoundedCellularInstance::from_doc(&doc)?),
            SequentialCellularInstance::KIND => ProblemInstance::SeqCa(SequentialCellularInstance::from_doc(&doc)?),
            MultiHeadAutomaton::KIND => ProblemInstance::Mfa(MultiHeadAutomaton::from_doc(&doc)?),
            ThresholdPebbleGame::KIND => ProblemInstance::Tpg(ThresholdPebbleGame::from_doc(&doc)?),
            LcsInstance::KIND => ProblemInstance::Lcs(LcsInstance::from_doc(&doc)?),
            other => return Err(Error::parse(format!("unknown instance kind `{other}`"))),
        })
    }
}

macro_rules! from_impl {
    ($($t:ty => $v:ident),* $(,)?) => {
        $(impl From<$t> for ProblemInstance {
            fn from(x: $t) -> Self {
                ProblemInstance::$v(x)
            }
        })*
    };
}

from_impl! {
    BfInstance => Bf,
    Graph => Graph,
    GeneratorInstance => Agen,
    FamilyUnionInstance => Family,
    SubsetUnionInstance => Subset,
    WeightedUnionInstance => Weighted,
    ProjectionInput => Projection,
    ReplacementSystem => Rs,
    SingleTapeTM => Tm,
    BoundedTMInstance => TmBounded,
    ParameterizedRun => TmRun,
    CellularInstance => Ca,
    BoundedCellularInstance => CaBounded,
    SequentialCellularInstance => SeqCa,
    MultiHeadAutomaton => Mfa,
    ThresholdPebbleGame => Tpg,
    LcsInstance => Lcs,
}
