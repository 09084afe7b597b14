//! Text format for embeddings and model dumps.
//!
//! An embedding document is a sequence of sections. A section starts with
//! `name:` as the first token of a line and runs until the next header.
//! `#` starts a comment that runs to the end of the line.
//!
//! ```text
//! document   := section*
//! section    := "problem:" RAW-LINE
//!             | "constants:" NAME+
//!             | "interp:" NAME+
//!             | "pos:" duples | "neg:" duples | "gamma:" duples
//!             | "scope:" or
//!             | "context:" entries
//! duples     := (comparison? sep)*                sep := ";" | NEWLINE
//! comparison := term ("<=" | "!<=" | "=") term
//! term       := NAME+                             (the join of the names)
//! or         := and ("|" and)*
//! and        := unary ("&" unary)*
//! unary      := "!" unary | "(" or ")" | "true" | "false" | comparison
//! entries    := (INDEX "->" term sep)*
//! NAME       := [A-Za-z_][A-Za-z0-9_']*           ("true"/"false" are reserved)
//! ```
//!
//! `constants` and `interp` are required. `pos` and `gamma` accept `<=` and
//! `=` (which adds both directions); `neg` accepts only `!<=`. Every comparison
//! in `scope` must name a `gamma` duple: `a <= b` is that leaf, `a !<= b` its
//! negation, `a = b` the conjunction of both directions. A missing `scope`
//! means `true`. `context` maps 0-based gamma indices to context constants.
//!
//! Diagnostics carry a code and a 1-based line and column:
//!
//! | code | meaning |
//! |------|---------|
//! | E001 | syntax error |
//! | E002 | unknown constant |
//! | E003 | malformed term |
//! | E004 | scope leaf not in gamma |
//! | E005 | duplicate section |
//! | E006 | unknown section |
//! | E007 | duplicate constant |
//! | E008 | bad context entry |
//! | E009 | duplicate gamma duple |
//! | E010 | missing required section |
//! | E011 | structurally invalid embedding |
//!
//! A model dump is a `constants:` header followed by one `{a,b,...}` atom per line.

mod lexer;
mod model;
mod parser;
mod writer;

use crate::algebra::{AtomizedModel, Duple};
use crate::embedding::{Embedding, ScopeFormula};
use crate::error::Result;

/// Reads an embedding document.
pub fn parse(text: &str) -> Result<Embedding> {
    parser::parse(text)
}

/// Canonical text of an embedding: sections in a fixed order, one duple per line.
pub fn serialize(e: &Embedding) -> String {
    writer::serialize(e)
}

/// Scope formula text over the given Γ.
pub fn scope_text(f: &ScopeFormula, gamma: &[Duple], table: &crate::ConstantTable) -> String {
    writer::scope_text(f, gamma, table)
}

/// Canonical model dump: the universe, then the atoms in canonical order.
pub fn serialize_model(m: &AtomizedModel) -> String {
    writer::serialize_model(m)
}

/// Reads a model dump. The resulting table holds exactly the listed constants.
pub fn parse_model(text: &str) -> Result<AtomizedModel> {
    model::parse_model(text)
}

/// `size<TAB>count` lines in ascending size.
pub fn spectrum_tsv(m: &AtomizedModel) -> String {
    writer::spectrum_tsv(m)
}
