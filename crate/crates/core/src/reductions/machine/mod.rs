pub mod ca;
pub mod lcs_injective;
pub mod sequential;
pub mod tm;
pub mod tpg;

pub use ca::{bounded_ca_to_dag_ca, ca_to_dag_ca, decode_tm_config, mfa_to_dag, tm_to_ca, tm_to_nca};
pub use lcs_injective::layeredreach_to_lcs_injective;
pub use sequential::{bounded_nca_to_sequential, nca_to_sequential, normalize_sequential, seqca_to_lcs};
pub use tm::{dtsc_from_parameterized_run, tm_hardwire_input, tm_space_compress, Compressed};
pub use tpg::{
    ca_to_tpg_cyclic, ca_to_tpg_cyclic_normalized, dag_layer_count, dagca_to_tpg, dagca_to_tpg_normalized,
    normalize_accepting,
};
