pub mod ca;
pub mod formula;
pub mod generator;
pub mod graph;
pub mod lcs;
pub mod mfa;
pub mod pebble;
pub mod projection;
pub mod rewriting;
pub mod tm;
pub mod union;

pub use ca::{BoundedCellularInstance, CellularAutomaton, CellularInstance, Neighbour, SequentialCellularInstance, Triple, BORDER};
pub use formula::{parse_formula, BfInstance, BooleanFormula, Formula};
pub use generator::GeneratorInstance;
pub use graph::{Graph, GraphPropertyKind};
pub use lcs::LcsInstance;
pub use mfa::{MfaTransition, MultiHeadAutomaton};
pub use pebble::ThresholdPebbleGame;
pub use projection::{CompatibleProjection, OutputSpec, ProjectionInput};
pub use rewriting::ReplacementSystem;
pub use tm::{BoundedTMInstance, Move, ParameterizedRun, SingleTapeTM, TmTransition, TwoTapeTM, TwoTapeTransition};
pub use union::{FamilyUnionInstance, SubsetUnionInstance, UnionBase, UnionVariant, WeightedUnionInstance};
