//! Encoders for the bundled problems, with independent oracles and decoders.

pub mod bars;
mod encode;
pub mod hamiltonian;
pub mod queens;
pub mod sudoku;
mod trivial;

pub use hamiltonian::Graph;

use crate::algebra::{CrossingOptions, Duple};
use crate::embedding::{Analysis, Embedding, Solution};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A problem instance together with the embedding variant to use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    Trivial { variant: u8 },
    VerticalBars { n: usize, variant: u8, distinct_q: bool },
    /// Fixed queens are 0-based `(row, column)`.
    NQueens { m: usize, variant: u8, fixed: Vec<(usize, usize)> },
    Sudoku { size: usize, hints: Vec<sudoku::Hint> },
    Hamiltonian { graph: Graph, variant: u8 },
}

/// A decoded solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub text: String,
    /// False when the Γ subset does not describe a well-formed instance answer.
    pub complete: bool,
}

impl Problem {
    pub fn kind(&self) -> &'static str {
        match self {
            Problem::Trivial { .. } => "trivial",
            Problem::VerticalBars { .. } => "vertical_bars",
            Problem::NQueens { .. } => "nqueens",
            Problem::Sudoku { .. } => "sudoku",
            Problem::Hamiltonian { .. } => "hamiltonian",
        }
    }

    pub fn build(&self) -> Result<Embedding> {
        let e = match self {
            Problem::Trivial { variant } => trivial::build(*variant)?,
            Problem::VerticalBars { n, variant, distinct_q } => bars::build(*n, *variant, *distinct_q)?,
            Problem::NQueens { m, variant, fixed } => queens::build(*m, *variant, fixed)?,
            Problem::Sudoku { size, hints } => sudoku::build(*size, hints)?,
            Problem::Hamiltonian { graph, variant } => hamiltonian::build(graph, *variant)?,
        };
        Ok(e.with_problem(Some(self.to_string())))
    }

    /// Recovers the instance recorded on an embedding, if any.
    pub fn of_embedding(e: &Embedding) -> Option<Result<Problem>> {
        e.problem().map(str::parse)
    }

    pub fn decode(&self, s: &Solution) -> Decoded {
        let (text, complete) = match self {
            Problem::Trivial { .. } => {
                let picked: Vec<&str> = [(0, "a"), (1, "b")].iter().filter(|(i, _)| s.contains(*i)).map(|p| p.1).collect();
                let complete = !picked.is_empty() && s.members().iter().all(|&i| i < 2);
                (format!("mapped to c: {}\n", if picked.is_empty() { "none".into() } else { picked.join(", ") }), complete)
            }
            Problem::VerticalBars { n, .. } => bars::render(*n, s),
            Problem::NQueens { m, .. } => queens::render(*m, s),
            Problem::Sudoku { size, .. } => sudoku::render(*size, s),
            Problem::Hamiltonian { graph, variant } => hamiltonian::render(graph, *variant, s),
        };
        Decoded { text, complete }
    }

    /// Every solution, from a search that does not use the algebra.
    pub fn oracle_solutions(&self) -> Result<Vec<Solution>> {
        let mut out: Vec<Solution> = match self {
            Problem::Trivial { .. } => trivial::solutions(),
            Problem::VerticalBars { n, .. } => bars::oracle(*n).iter().map(|g| bars::grid_solution(g)).collect(),
            Problem::NQueens { m, fixed, .. } => {
                queens::oracle(*m, fixed).iter().map(|c| queens::placement_solution(*m, c)).collect()
            }
            Problem::Sudoku { size, hints } => {
                sudoku::oracle(*size, hints)?.iter().map(|g| sudoku::grid_solution(*size, g)).collect()
            }
            Problem::Hamiltonian { graph, variant } => hamiltonian::oracle(graph)
                .iter()
                .map(|p| hamiltonian::path_solution(graph, *variant, p))
                .collect(),
        };
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Extra positive duples that make the embedding strongly complete.
    pub fn strengthening(&self, e: &Embedding, opts: &CrossingOptions) -> Result<Vec<Duple>> {
        match self {
            Problem::VerticalBars { n, variant: 2, .. } => bars::strengthening_sentences(e, *n),
            Problem::NQueens { m, variant, fixed } => queens::strengthening_sentences(e, *m, fixed, *variant),
            Problem::Sudoku { .. } => {
                let sols = self.oracle_solutions()?;
                let analysis = Analysis::new(e, sols, opts)?;
                sudoku::strengthening_sentences(e, analysis.free(), analysis.solution_models())
            }
            _ => Err(Error::usage(format!("no strengthening sentences are defined for {self}"))),
        }
    }

    /// Pairs of context constants whose joint grounding signals incompatible choices.
    pub fn conflict_pairs(&self, e: &Embedding) -> Vec<(usize, usize)> {
        match self {
            Problem::Trivial { .. } => Vec::new(),
            Problem::VerticalBars { n, .. } => bars::conflicts(e, *n),
            Problem::NQueens { m, .. } => queens::conflicts(e, *m),
            Problem::Sudoku { size, .. } => sudoku::conflicts(e, *size),
            Problem::Hamiltonian { graph, variant } => hamiltonian::conflicts(e, graph, *variant),
        }
    }
}

/// One line: the kind, then `key=value` parameters.
impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::Trivial { variant } => write!(f, "trivial variant={variant}"),
            Problem::VerticalBars { n, variant, distinct_q } => {
                write!(f, "vertical_bars n={n} variant={variant}")?;
                if *distinct_q {
                    write!(f, " distinct_q=true")?;
                }
                Ok(())
            }
            Problem::NQueens { m, variant, fixed } => {
                write!(f, "nqueens m={m} variant={variant}")?;
                if !fixed.is_empty() {
                    let cells: Vec<String> = fixed.iter().map(|(i, j)| format!("{}:{}", i + 1, j + 1)).collect();
                    write!(f, " fixed={}", cells.join(","))?;
                }
                Ok(())
            }
            Problem::Sudoku { size, hints } => {
                write!(f, "sudoku size={size}")?;
                if !hints.is_empty() {
                    let hs: Vec<String> = hints.iter().map(|(n, i, j)| format!("{n}:{i}:{j}")).collect();
                    write!(f, " hints={}", hs.join(","))?;
                }
                Ok(())
            }
            Problem::Hamiltonian { graph, variant } => {
                let es: Vec<String> = graph.edges().iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
                write!(f, "hamiltonian variant={variant} vertices={} edges={}", graph.vertices(), es.join(","))
            }
        }
    }
}

fn parse_list<T>(text: &str, sep: char, arity: usize, mk: impl Fn(&[usize]) -> T) -> Result<Vec<T>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let nums: Vec<usize> = item
                .split(sep)
                .map(|t| t.trim().parse().map_err(|_| Error::usage(format!("bad list item `{item}`"))))
                .collect::<Result<_>>()?;
            if nums.len() != arity || nums.contains(&0) {
                return Err(Error::usage(format!("bad list item `{item}`")));
            }
            Ok(mk(&nums))
        })
        .collect()
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(text: &str) -> Result<Problem> {
        let mut words = text.split_whitespace();
        let kind = words.next().ok_or_else(|| Error::usage("empty problem description"))?;
        let mut kv = BTreeMap::new();
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| Error::usage(format!("expected key=value, got `{w}`")))?;
            if kv.insert(k, v).is_some() {
                return Err(Error::usage(format!("parameter `{k}` given twice")));
            }
        }
        let num = |k: &str, default: Option<usize>| -> Result<usize> {
            match kv.get(k) {
                Some(v) => v.parse().map_err(|_| Error::usage(format!("parameter `{k}` must be a number"))),
                None => default.ok_or_else(|| Error::usage(format!("missing parameter `{k}`"))),
            }
        };
        let allowed: &[&str] = match kind {
            "trivial" => &["variant"],
            "vertical_bars" => &["n", "variant", "distinct_q"],
            "nqueens" => &["m", "variant", "fixed"],
            "sudoku" => &["size", "hints"],
            "hamiltonian" => &["variant", "vertices", "edges"],
            _ => return Err(Error::usage(format!("unknown problem kind `{kind}`"))),
        };
        if let Some(k) = kv.keys().find(|k| !allowed.contains(k)) {
            return Err(Error::usage(format!("unknown parameter `{k}` for {kind}")));
        }
        let variant = |d| -> Result<u8> {
            u8::try_from(num("variant", Some(d))?).map_err(|_| Error::usage("variant out of range"))
        };
        let p = match kind {
            "trivial" => Problem::Trivial { variant: variant(1)? },
            "vertical_bars" => Problem::VerticalBars {
                n: num("n", Some(2))?,
                variant: variant(1)?,
                distinct_q: match kv.get("distinct_q").copied() {
                    None | Some("false") => false,
                    Some("true") => true,
                    Some(v) => return Err(Error::usage(format!("distinct_q must be true or false, got `{v}`"))),
                },
            },
            "nqueens" => Problem::NQueens {
                m: num("m", None)?,
                variant: variant(2)?,
                fixed: parse_list(kv.get("fixed").copied().unwrap_or(""), ':', 2, |v| (v[0] - 1, v[1] - 1))?,
            },
            "sudoku" => Problem::Sudoku {
                size: num("size", Some(4))?,
                hints: parse_list(kv.get("hints").copied().unwrap_or(""), ':', 3, |v| (v[0], v[1], v[2]))?,
            },
            _ => Problem::Hamiltonian {
                variant: variant(3)?,
                graph: Graph::new(
                    num("vertices", None)?,
                    parse_list(kv.get("edges").copied().unwrap_or(""), '-', 2, |v| (v[0] - 1, v[1] - 1))?,
                )?,
            },
        };
        Ok(p)
    }
}
