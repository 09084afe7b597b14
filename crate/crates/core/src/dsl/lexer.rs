//! Tokenizer shared by the embedding and model-dump readers.

use crate::error::{Error, ParseCode, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    /// `name:` at the start of a line.
    Header(String),
    /// Unparsed remainder of a `problem:` line.
    Raw(String),
    Name(String),
    Number(usize),
    Le,
    NotLe,
    Eq,
    Semi,
    Amp,
    Bar,
    Bang,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Arrow,
    True,
    False,
    Newline,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Header(h) => format!("section header `{h}:`"),
            Tok::Raw(_) => "text".into(),
            Tok::Name(n) => format!("`{n}`"),
            Tok::Number(n) => format!("`{n}`"),
            Tok::Le => "`<=`".into(),
            Tok::NotLe => "`!<=`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Bang => "`!`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Newline => "end of line".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `text` into tokens. Every source line ends with a `Newline` token.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        let line = li + 1;
        let content = match raw_line.find('#') {
            Some(k) => &raw_line[..k],
            None => raw_line,
        };
        let chars: Vec<char> = content.chars().collect();
        let mut i = 0;
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        // A header is an identifier immediately followed by `:` as the first token.
        if i < chars.len() && is_name_start(chars[i]) {
            let mut j = i;
            while j < chars.len() && is_name_char(chars[j]) {
                j += 1;
            }
            if j < chars.len() && chars[j] == ':' {
                let name: String = chars[i..j].iter().collect();
                out.push(Spanned { tok: Tok::Header(name.clone()), line, col: i + 1 });
                i = j + 1;
                if name == "problem" {
                    let rest: String = chars[i..].iter().collect();
                    let trimmed = rest.trim();
                    if !trimmed.is_empty() {
                        let lead = rest.len() - rest.trim_start().len();
                        out.push(Spanned { tok: Tok::Raw(trimmed.to_string()), line, col: i + lead + 1 });
                    }
                    out.push(Spanned { tok: Tok::Newline, line, col: chars.len() + 1 });
                    continue;
                }
            }
        }
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let next = chars.get(i + 1).copied();
            let (tok, width) = match c {
                '<' if next == Some('=') => (Tok::Le, 2),
                '!' if next == Some('<') && chars.get(i + 2) == Some(&'=') => (Tok::NotLe, 3),
                '!' => (Tok::Bang, 1),
                '-' if next == Some('>') => (Tok::Arrow, 2),
                '=' => (Tok::Eq, 1),
                ';' => (Tok::Semi, 1),
                '&' => (Tok::Amp, 1),
                '|' => (Tok::Bar, 1),
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                '{' => (Tok::LBrace, 1),
                '}' => (Tok::RBrace, 1),
                ',' => (Tok::Comma, 1),
                c if c.is_ascii_digit() => {
                    let mut j = i;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j < chars.len() && is_name_char(chars[j]) {
                        return Err(Error::parse(ParseCode::Syntax, line, col, "names must not start with a digit"));
                    }
                    let digits: String = chars[i..j].iter().collect();
                    let n = digits
                        .parse()
                        .map_err(|_| Error::parse(ParseCode::Syntax, line, col, "number out of range"))?;
                    (Tok::Number(n), j - i)
                }
                c if is_name_start(c) => {
                    let mut j = i;
                    while j < chars.len() && is_name_char(chars[j]) {
                        j += 1;
                    }
                    let name: String = chars[i..j].iter().collect();
                    let tok = match name.as_str() {
                        "true" => Tok::True,
                        "false" => Tok::False,
                        _ => Tok::Name(name),
                    };
                    (tok, j - i)
                }
                other => {
                    return Err(Error::parse(ParseCode::Syntax, line, col, format!("unexpected character `{other}`")));
                }
            };
            out.push(Spanned { tok, line, col });
            i += width;
        }
        out.push(Spanned { tok: Tok::Newline, line, col: chars.len() + 1 });
    }
    Ok(out)
}
