//! Reader for model dumps.

use super::lexer::{tokenize, Tok};
use super::parser::{split_sections, Cursor};
use crate::algebra::{Atom, AtomizedModel};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::{Error, ParseCode, Result};
use std::collections::HashSet;

/// Reads a dump written by [`super::serialize_model`]. The atoms are
/// canonicalized, so a non-canonical but valid atom list is accepted.
pub(crate) fn parse_model(text: &str) -> Result<AtomizedModel> {
    let toks = tokenize(text)?;
    // Atom lines follow the header, so they land in the `constants` section body.
    let sections = split_sections(toks, &["constants"])?;
    let sec = sections
        .get("constants")
        .ok_or_else(|| Error::parse(ParseCode::MissingSection, 1, 1, "missing `constants:` header"))?;
    let mut cur = Cursor::new(sec);

    let mut names = Vec::new();
    let mut seen = HashSet::new();
    loop {
        let Some(t) = cur.peek() else { break };
        match &t.tok {
            Tok::Name(n) => {
                if !seen.insert(n.clone()) {
                    return Err(Error::parse(ParseCode::DuplicateConstant, t.line, t.col, format!("constant `{n}` declared twice")));
                }
                names.push(n.clone());
                cur.bump();
            }
            Tok::Newline => {
                cur.bump();
                break;
            }
            other => {
                return Err(Error::parse(
                    ParseCode::Syntax,
                    t.line,
                    t.col,
                    format!("expected a constant name, found {}", other.describe()),
                ))
            }
        }
    }
    let table = ConstantTable::new(names.iter().cloned())
        .map_err(|e| Error::parse(ParseCode::Syntax, sec.line, sec.col, e.to_string()))?;

    let mut atoms = Vec::new();
    loop {
        cur.skip_newlines();
        let Some(open) = cur.bump() else { break };
        if open.tok != Tok::LBrace {
            return Err(Error::parse(
                ParseCode::Syntax,
                open.line,
                open.col,
                format!("expected `{{` to start an atom, found {}", open.tok.describe()),
            ));
        }
        let mut set = ConstSet::new();
        loop {
            let t = cur
                .bump()
                .ok_or_else(|| Error::parse(ParseCode::Syntax, open.line, open.col, "unterminated atom"))?;
            match &t.tok {
                Tok::Name(n) => {
                    let id = table.id(n).ok_or_else(|| {
                        Error::parse(ParseCode::UnknownConstant, t.line, t.col, format!("unknown constant `{n}`"))
                    })?;
                    set.insert(id);
                }
                other => {
                    return Err(Error::parse(
                        ParseCode::MalformedTerm,
                        t.line,
                        t.col,
                        format!("expected a constant name, found {}", other.describe()),
                    ))
                }
            }
            let t = cur
                .bump()
                .ok_or_else(|| Error::parse(ParseCode::Syntax, open.line, open.col, "unterminated atom"))?;
            match t.tok {
                Tok::Comma => continue,
                Tok::RBrace => break,
                ref other => {
                    return Err(Error::parse(
                        ParseCode::Syntax,
                        t.line,
                        t.col,
                        format!("expected `,` or `}}`, found {}", other.describe()),
                    ))
                }
            }
        }
        cur.expect_separator()?;
        atoms.push(Atom::new(set)?);
    }
    let universe = table.all();
    AtomizedModel::canonicalize(table, universe, atoms)
}
