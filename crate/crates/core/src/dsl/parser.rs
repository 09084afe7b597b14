//! Recursive-descent reader for embedding documents.

use super::lexer::{tokenize, Spanned, Tok};
use crate::algebra::{Duple, Term};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::embedding::{Embedding, ScopeFormula};
use crate::error::{Error, ParseCode, Result};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

pub(crate) const SECTIONS: [&str; 8] = ["problem", "constants", "interp", "pos", "neg", "gamma", "scope", "context"];

pub(crate) struct Section {
    pub line: usize,
    pub col: usize,
    pub body: Vec<Spanned>,
}

/// Groups tokens under their headers, rejecting unknown and repeated sections.
pub(crate) fn split_sections(toks: Vec<Spanned>, known: &[&str]) -> Result<HashMap<String, Section>> {
    let mut out: HashMap<String, Section> = HashMap::new();
    let mut current: Option<String> = None;
    for t in toks {
        match &t.tok {
            Tok::Header(name) => {
                if !known.contains(&name.as_str()) {
                    return Err(Error::parse(
                        ParseCode::UnknownSection,
                        t.line,
                        t.col,
                        format!("unknown section `{name}`; expected one of {}", known.join(", ")),
                    ));
                }
                if let Some(prev) = out.get(name) {
                    return Err(Error::parse(
                        ParseCode::DuplicateSection,
                        t.line,
                        t.col,
                        format!("section `{name}` already appeared on line {}", prev.line),
                    ));
                }
                out.insert(name.clone(), Section { line: t.line, col: t.col, body: Vec::new() });
                current = Some(name.clone());
            }
            Tok::Newline => {
                if let Some(c) = &current {
                    out.get_mut(c).expect("current section exists").body.push(t);
                }
            }
            other => match &current {
                Some(c) => out.get_mut(c).expect("current section exists").body.push(t),
                None => {
                    return Err(Error::parse(
                        ParseCode::Syntax,
                        t.line,
                        t.col,
                        format!("expected a section header, found {}", other.describe()),
                    ))
                }
            },
        }
    }
    Ok(out)
}

pub(crate) struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    pub fn new(section: &'a Section) -> Self {
        let end = section.body.last().map(|t| (t.line, t.col)).unwrap_or((section.line, section.col));
        Cursor { toks: &section.body, pos: 0, end }
    }

    pub fn peek(&self) -> Option<&'a Spanned> {
        self.toks.get(self.pos)
    }

    pub fn bump(&mut self) -> Option<&'a Spanned> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    pub fn at(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    pub fn err(&self, code: ParseCode, msg: impl Into<String>) -> Error {
        let (l, c) = self.at();
        Error::parse(code, l, c, msg)
    }

    pub fn found(&self) -> String {
        self.peek().map(|t| t.tok.describe()).unwrap_or_else(|| "end of section".into())
    }

    pub fn skip_newlines(&mut self) {
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Newline)) {
            self.pos += 1;
        }
    }

    /// Skips `;` and line ends; true when the section is exhausted.
    pub fn skip_separators(&mut self) -> bool {
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Newline | Tok::Semi)) {
            self.pos += 1;
        }
        self.peek().is_none()
    }

    /// A duple must be followed by a separator or the end of the section.
    pub fn expect_separator(&self) -> Result<()> {
        match self.peek().map(|t| &t.tok) {
            None | Some(Tok::Newline | Tok::Semi) => Ok(()),
            _ => Err(self.err(ParseCode::Syntax, format!("expected `;` or a line break, found {}", self.found()))),
        }
    }
}

/// Reads a whitespace-separated list of fresh names.
fn parse_name_list(cur: &mut Cursor, what: &str) -> Result<Vec<(String, usize, usize)>> {
    let mut names = Vec::new();
    loop {
        cur.skip_newlines();
        let Some(t) = cur.bump() else { break };
        match &t.tok {
            Tok::Name(n) => names.push((n.clone(), t.line, t.col)),
            Tok::True | Tok::False => {
                return Err(Error::parse(ParseCode::Syntax, t.line, t.col, format!("{} is a reserved word", t.tok.describe())))
            }
            other => {
                return Err(Error::parse(
                    ParseCode::Syntax,
                    t.line,
                    t.col,
                    format!("expected {what}, found {}", other.describe()),
                ))
            }
        }
    }
    Ok(names)
}

/// `term := name+`
fn parse_term(cur: &mut Cursor, table: &ConstantTable) -> Result<Term> {
    let mut set = ConstSet::new();
    while let Some(t) = cur.peek() {
        match &t.tok {
            Tok::Name(n) => {
                let id = table.id(n).ok_or_else(|| {
                    Error::parse(ParseCode::UnknownConstant, t.line, t.col, format!("unknown constant `{n}`"))
                })?;
                set.insert(id);
                cur.bump();
            }
            _ => break,
        }
    }
    if set.is_empty() {
        let msg = match cur.peek().map(|t| &t.tok) {
            Some(Tok::True | Tok::False) => format!("{} is a reserved word, not a constant", cur.found()),
            _ => format!("expected a term (one or more constant names), found {}", cur.found()),
        };
        return Err(cur.err(ParseCode::MalformedTerm, msg));
    }
    Term::new(set)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Le,
    NotLe,
    Eq,
}

/// `comparison := term ('<=' | '!<=' | '=') term`
fn parse_comparison(cur: &mut Cursor, table: &ConstantTable) -> Result<(Term, Rel, Term)> {
    let lhs = parse_term(cur, table)?;
    let rel = match cur.peek().map(|t| &t.tok) {
        Some(Tok::Le) => Rel::Le,
        Some(Tok::NotLe) => Rel::NotLe,
        Some(Tok::Eq) => Rel::Eq,
        _ => return Err(cur.err(ParseCode::Syntax, format!("expected `<=`, `!<=` or `=`, found {}", cur.found()))),
    };
    cur.bump();
    let rhs = parse_term(cur, table)?;
    Ok((lhs, rel, rhs))
}

struct Located {
    duple: Duple,
    line: usize,
    col: usize,
}

/// `duples := (comparison? (';' | NL))*`, where `=` contributes both directions.
fn parse_duples(section: &Section, table: &ConstantTable, negative: bool) -> Result<Vec<Located>> {
    let mut cur = Cursor::new(section);
    let mut out = Vec::new();
    while !cur.skip_separators() {
        let (line, col) = cur.at();
        let (lhs, rel, rhs) = parse_comparison(&mut cur, table)?;
        match (rel, negative) {
            (Rel::Le, false) => out.push(Located { duple: Duple::positive(lhs, rhs), line, col }),
            (Rel::Eq, false) => {
                out.push(Located { duple: Duple::positive(lhs.clone(), rhs.clone()), line, col });
                out.push(Located { duple: Duple::positive(rhs, lhs), line, col });
            }
            (Rel::NotLe, true) => out.push(Located { duple: Duple::negative(lhs, rhs), line, col }),
            (Rel::NotLe, false) => {
                return Err(Error::parse(ParseCode::Syntax, line, col, "negative duple outside the `neg` section"))
            }
            (_, true) => {
                return Err(Error::parse(ParseCode::Syntax, line, col, "the `neg` section only accepts `!<=` duples"))
            }
        }
        cur.expect_separator()?;
    }
    Ok(out)
}

struct ScopeParser<'a, 'b> {
    cur: Cursor<'a>,
    table: &'b ConstantTable,
    gamma: &'b HashMap<Duple, usize>,
}

impl ScopeParser<'_, '_> {
    fn peek(&mut self) -> Option<&Tok> {
        self.cur.skip_newlines();
        self.cur.peek().map(|t| &t.tok)
    }

    /// `or := and ('|' and)*`
    fn or(&mut self) -> Result<ScopeFormula> {
        let mut items = vec![self.and()?];
        while self.peek() == Some(&Tok::Bar) {
            self.cur.bump();
            items.push(self.and()?);
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { ScopeFormula::Or(items) })
    }

    /// `and := unary ('&' unary)*`
    fn and(&mut self) -> Result<ScopeFormula> {
        let mut items = vec![self.unary()?];
        while self.peek() == Some(&Tok::Amp) {
            self.cur.bump();
            items.push(self.unary()?);
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { ScopeFormula::And(items) })
    }

    /// `unary := '!' unary | '(' or ')' | 'true' | 'false' | comparison`
    fn unary(&mut self) -> Result<ScopeFormula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.cur.bump();
                Ok(ScopeFormula::not(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.cur.bump();
                let inner = self.or()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.cur.err(ParseCode::Syntax, format!("expected `)`, found {}", self.cur.found())));
                }
                self.cur.bump();
                Ok(inner)
            }
            Some(Tok::True) => {
                self.cur.bump();
                Ok(ScopeFormula::True)
            }
            Some(Tok::False) => {
                self.cur.bump();
                Ok(ScopeFormula::False)
            }
            Some(Tok::Name(_)) => {
                let (line, col) = self.cur.at();
                let (lhs, rel, rhs) = parse_comparison(&mut self.cur, self.table)?;
                let leaf = |l: &Term, r: &Term| -> Result<usize> {
                    let d = Duple::positive(l.clone(), r.clone());
                    self.gamma.get(&d).copied().ok_or_else(|| {
                        Error::parse(
                            ParseCode::ScopeLeafNotInGamma,
                            line,
                            col,
                            format!("scope leaf `{}` is not listed in gamma", d.render(self.table)),
                        )
                    })
                };
                Ok(match rel {
                    Rel::Le => ScopeFormula::leaf(leaf(&lhs, &rhs)?),
                    Rel::NotLe => ScopeFormula::not(ScopeFormula::leaf(leaf(&lhs, &rhs)?)),
                    Rel::Eq => ScopeFormula::equality(leaf(&lhs, &rhs)?, leaf(&rhs, &lhs)?),
                })
            }
            _ => Err(self.cur.err(ParseCode::Syntax, format!("expected a scope formula, found {}", self.cur.found()))),
        }
    }
}

fn parse_context(
    section: &Section,
    table: &ConstantTable,
    gamma_len: usize,
) -> Result<BTreeMap<usize, ConstSet>> {
    let mut cur = Cursor::new(section);
    let mut out = BTreeMap::new();
    while !cur.skip_separators() {
        let t = cur.bump().expect("not at end");
        let Tok::Number(idx) = t.tok else {
            return Err(Error::parse(
                ParseCode::BadContext,
                t.line,
                t.col,
                format!("expected a gamma index, found {}", t.tok.describe()),
            ));
        };
        if idx >= gamma_len {
            return Err(Error::parse(
                ParseCode::BadContext,
                t.line,
                t.col,
                format!("gamma index {idx} out of range (gamma has {gamma_len} duples)"),
            ));
        }
        if out.contains_key(&idx) {
            return Err(Error::parse(ParseCode::BadContext, t.line, t.col, format!("gamma index {idx} given twice")));
        }
        if cur.peek().map(|t| &t.tok) != Some(&Tok::Arrow) {
            return Err(cur.err(ParseCode::BadContext, format!("expected `->`, found {}", cur.found())));
        }
        cur.bump();
        if !matches!(cur.peek().map(|t| &t.tok), Some(Tok::Name(_))) {
            return Err(cur.err(ParseCode::BadContext, format!("expected context constants, found {}", cur.found())));
        }
        let term = parse_term(&mut cur, table)?;
        cur.expect_separator()?;
        out.insert(idx, term.constants().clone());
    }
    Ok(out)
}

fn require<'s>(sections: &'s HashMap<String, Section>, name: &str) -> Result<&'s Section> {
    sections
        .get(name)
        .ok_or_else(|| Error::parse(ParseCode::MissingSection, 1, 1, format!("missing required section `{name}:`")))
}

fn invalid(section: &Section, e: Error) -> Error {
    let msg = match e {
        Error::Usage(m) | Error::Infeasible(m) | Error::Resource(m) => m,
        other => return other,
    };
    Error::parse(ParseCode::InvalidEmbedding, section.line, section.col, msg)
}

pub(crate) fn parse(text: &str) -> Result<Embedding> {
    let sections = split_sections(tokenize(text)?, &SECTIONS)?;

    let consts = require(&sections, "constants")?;
    let names = parse_name_list(&mut Cursor::new(consts), "a constant name")?;
    if names.is_empty() {
        return Err(Error::parse(ParseCode::Syntax, consts.line, consts.col, "no constants declared"));
    }
    let mut seen = HashSet::new();
    for (n, l, c) in &names {
        if !seen.insert(n.as_str()) {
            return Err(Error::parse(ParseCode::DuplicateConstant, *l, *c, format!("constant `{n}` declared twice")));
        }
    }
    let table: Arc<ConstantTable> = ConstantTable::new(names.iter().map(|n| n.0.clone())).map_err(|e| invalid(consts, e))?;

    let interp_sec = require(&sections, "interp")?;
    let mut interp = ConstSet::new();
    for (n, l, c) in parse_name_list(&mut Cursor::new(interp_sec), "a constant name")? {
        let id = table
            .id(&n)
            .ok_or_else(|| Error::parse(ParseCode::UnknownConstant, l, c, format!("unknown constant `{n}`")))?;
        if interp.contains(id) {
            return Err(Error::parse(ParseCode::DuplicateConstant, l, c, format!("constant `{n}` listed twice")));
        }
        interp.insert(id);
    }
    if interp.is_empty() {
        return Err(Error::parse(ParseCode::InvalidEmbedding, interp_sec.line, interp_sec.col, "empty interpretation set"));
    }

    let duples = |name: &str, negative: bool| -> Result<Vec<Located>> {
        match sections.get(name) {
            Some(s) => parse_duples(s, &table, negative),
            None => Ok(Vec::new()),
        }
    };
    let rpos = duples("pos", false)?;
    let rneg = duples("neg", true)?;
    let gamma = duples("gamma", false)?;

    let mut gamma_index = HashMap::new();
    for (i, g) in gamma.iter().enumerate() {
        if !g.duple.constants().is_subset(&interp) {
            return Err(Error::parse(
                ParseCode::InvalidEmbedding,
                g.line,
                g.col,
                format!("gamma duple `{}` uses constants outside interp", g.duple.render(&table)),
            ));
        }
        if gamma_index.insert(g.duple.clone(), i).is_some() {
            return Err(Error::parse(
                ParseCode::DuplicateGammaDuple,
                g.line,
                g.col,
                format!("gamma duple `{}` listed twice", g.duple.render(&table)),
            ));
        }
    }

    let scope = match sections.get("scope") {
        None => ScopeFormula::True,
        Some(s) => {
            let mut p = ScopeParser { cur: Cursor::new(s), table: &table, gamma: &gamma_index };
            let f = p.or()?;
            if p.peek().is_some() {
                return Err(p.cur.err(ParseCode::Syntax, format!("unexpected {} after scope formula", p.cur.found())));
            }
            f
        }
    };

    let context = match sections.get("context") {
        None => BTreeMap::new(),
        Some(s) => parse_context(s, &table, gamma.len())?,
    };

    let problem = match sections.get("problem") {
        None => None,
        Some(s) => {
            let mut cur = Cursor::new(s);
            cur.skip_newlines();
            match cur.bump().map(|t| &t.tok) {
                Some(Tok::Raw(r)) => {
                    cur.skip_newlines();
                    if cur.peek().is_some() {
                        return Err(cur.err(ParseCode::Syntax, "the `problem:` section is a single line"));
                    }
                    Some(r.clone())
                }
                _ => return Err(Error::parse(ParseCode::Syntax, s.line, s.col, "empty `problem:` line")),
            }
        }
    };

    let anchor = sections.get("pos").or(sections.get("gamma")).unwrap_or(interp_sec);
    let strip = |v: Vec<Located>| v.into_iter().map(|l| l.duple).collect::<Vec<_>>();
    let e = Embedding::new(table.clone(), interp, strip(rpos), strip(rneg), strip(gamma), scope)
        .map_err(|e| invalid(anchor, e))?;
    let e = match sections.get("context") {
        Some(s) => e.with_context(context).map_err(|err| invalid(s, err))?,
        None => e,
    };
    Ok(e.with_problem(problem))
}
