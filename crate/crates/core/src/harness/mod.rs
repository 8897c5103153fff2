//! Instance generation, reference solving and round-trip verification of
//! the registered reductions.

pub mod gen;
pub mod instance;
pub mod registry;
pub mod solve;
pub mod verify;

pub use gen::{gen_instance, Profile, GEN_KINDS, PROFILE_CAPS};
pub use instance::ProblemInstance;
pub use registry::{list, lookup, Params, Pipeline, Reduced, ReductionDescriptor, REDUCTIONS};
pub use solve::{file_kind, parameter, solve, Mode, PROBLEMS};
pub use verify::{
    case_seeds, default_budget, json_lines, parse_json_lines, summary_table, verify_instances, verify_reduction, Status, Summary,
    VerificationReport, VerifyOptions, BUDGET_ENV,
};
