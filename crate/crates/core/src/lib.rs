//! Finite atomized semilattices and algebraic semantic embeddings.
//!
//! Models are sets of atoms over interned constants ([`algebra`]); problems are
//! stated as embeddings of positive and negative duples ([`embedding`]) and
//! solved by building freest models and selecting atoms ([`solver`]).

pub mod algebra;
pub mod embedding;
pub mod bitset;
pub mod cli;
pub mod constants;
pub mod dsl;
pub mod error;
pub mod problems;
pub mod solver;

pub use algebra::{Atom, AtomizedModel, Duple, Sign, Term};
pub use bitset::ConstSet;
pub use constants::ConstantTable;
pub use error::{Error, Result};
