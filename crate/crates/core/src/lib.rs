//! Problem instances, brute-force reference solvers and constructive
//! reductions for parameterized space complexity: union problems over
//! templates, bounded Turing machines, multi-head and cellular automata,
//! threshold pebble games and longest common subsequences.

pub mod error;
pub mod format;
pub mod harness;
pub mod model;
pub mod oracles;
pub mod reductions;
pub mod word;

pub use error::{Error, Result};
pub use format::{Doc, TextFormat};
pub use model::*;
pub use word::{is_instantiation_of, union_instantiations, weight, InstantiationWord, TemplateWord};
