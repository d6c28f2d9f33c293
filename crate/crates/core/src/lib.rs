pub mod bits;
pub mod cache;
pub mod chains;
pub mod cli;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod speclang;
pub mod structure;
