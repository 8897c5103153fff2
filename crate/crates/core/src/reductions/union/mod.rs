pub mod agen;
pub mod bf;
pub mod graph;
pub mod projection;
pub mod representatives;

pub use agen::{family_to_subset_agen, subset_to_weighted_agen, AgenReduction};
pub use bf::{family_to_subset_bf, subset_to_weighted_bf};
pub use graph::family_to_subset_graph;
pub use projection::{doubling_projection, projection_to_family_union};
pub use representatives::RepresentativeSystem;
