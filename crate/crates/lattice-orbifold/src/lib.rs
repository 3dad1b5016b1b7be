//! Exact computations for lattices glued from a code over Klein's four-group
//! and a ternary code, the central extensions carrying their order-3
//! isometry, the twisted-sector modules, characters and fusion tables of the
//! fixed-point subalgebras, and brute-force checks of the combinatorial
//! identities that classify their modules.
//!
//! Every number is exact: rationals are arbitrary precision and roots of
//! unity live in the cyclotomic field of 24th roots of unity.

pub mod characters;
pub mod cli;
pub mod codes;
pub mod fock;
pub mod fusion;
pub mod groups;
pub mod lattice;
pub mod scalars;
pub mod twisted_rep;
pub mod verify;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Domain(String),
    #[error("truncation exceeded: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
