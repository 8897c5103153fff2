pub mod machine;
pub mod union;
