//! Command-line front end.

use crate::algebra::{CrossingOptions, CrossingOrder};
use crate::dsl;
use crate::embedding::{make_explicit, Analysis, Embedding, Solution};
use crate::error::{Error, Result};
use crate::problems::{Graph, Problem};
use crate::solver::{self, SearchMode, SelectionStrategy, SolveOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::{Read, Write};

const AFTER_HELP: &str = "\
Exit codes: 0 success, 1 infeasible, 2 usage or parse error, 3 resource budget exceeded.
The default atom budget is 50000000; SEMLAT_ATOM_BUDGET overrides it and --budget overrides both.
FILE arguments accept `-` for standard input.";

#[derive(Debug, Parser)]
#[command(name = "semlat", version, about = "Freest models and solutions for algebraic semantic embeddings")]
#[command(after_help = AFTER_HELP)]
pub struct Cli {
    /// Maximum number of atoms held during one crossing.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    /// Cross duples in file order instead of cheapest first.
    #[arg(long, global = true)]
    pub given_order: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the embedding document of a bundled problem.
    Gen(GenArgs),
    /// Print the canonical atoms of the freest model of R⁺.
    Build {
        file: String,
        /// Restrict the model to the interpretation constants.
        #[arg(long)]
        restrict: bool,
    },
    /// Print the atom-size histogram as `size<TAB>count` lines.
    Spectrum {
        /// An embedding document or a model dump.
        file: String,
    },
    /// Report conciseness, completeness, tightness and explicitness.
    Classify(ClassifyArgs),
    /// Extract solutions from the freest model.
    Solve(SolveArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Trivial,
    #[value(alias = "bars")]
    VerticalBars,
    #[value(alias = "queens")]
    Nqueens,
    Sudoku,
    #[value(alias = "hampath")]
    Hamiltonian,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: Kind,
    #[arg(long)]
    pub variant: Option<u8>,
    /// Board side for nqueens.
    #[arg(long)]
    pub m: Option<usize>,
    /// Grid side for vertical bars.
    #[arg(long)]
    pub n: Option<usize>,
    /// Sudoku side.
    #[arg(long)]
    pub size: Option<usize>,
    /// Sudoku hints `n:row:col,...` (1-based).
    #[arg(long)]
    pub hints: Option<String>,
    /// Fixed queens `row:col,...` (1-based).
    #[arg(long)]
    pub fixed: Option<String>,
    /// Vertical bars with separate interpretation constants per cell.
    #[arg(long)]
    pub distinct_q: bool,
    /// Graph file: vertex count, then one `u v` edge per line (1-based).
    #[arg(long, conflicts_with_all = ["vertices", "edges"])]
    pub graph: Option<String>,
    #[arg(long, requires = "edges")]
    pub vertices: Option<usize>,
    /// Edges `u-v,...` (1-based).
    #[arg(long, requires = "vertices")]
    pub edges: Option<String>,
    /// Append the problem's strengthening sentences to R⁺.
    #[arg(long)]
    pub strengthen: bool,
    /// Add context constants so the embedding becomes explicit.
    #[arg(long)]
    pub explicit: bool,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub file: String,
    /// Solutions, one per line as Γ indices (`{0,3}` or `0 3`; `{}` for the empty set).
    #[arg(long, conflicts_with = "oracle")]
    pub solutions: Option<String>,
    /// Take the solutions from the problem oracle named on the `problem:` line.
    #[arg(long)]
    pub oracle: bool,
    /// Largest |Γ| for exhaustive solution enumeration when no solutions are given.
    #[arg(long, default_value_t = 16)]
    pub max_gamma: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: String,
    /// Number of seeded selection runs (seeds 0..k).
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    pub seeds: u64,
    /// Depth-first search instead of seeded sampling.
    #[arg(long)]
    pub exhaustive: bool,
    /// Stop after this many distinct solutions.
    #[arg(long, default_value_t = usize::MAX)]
    pub limit: usize,
    /// Prefer atoms whose context constants do not conflict.
    #[arg(long)]
    pub grounding: bool,
    /// Eliminate context constants first when that preserves the solutions.
    #[arg(long)]
    pub drop_context: bool,
    /// Read one solution from each freest-model atom of this size instead of selecting atoms.
    #[arg(long, conflicts_with_all = ["exhaustive", "grounding"])]
    pub atom_size: Option<usize>,
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Error::usage(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::usage(format!("reading `{path}`: {e}")))?;
    }
    Ok(text)
}

fn crossing(cli: &Cli) -> CrossingOptions {
    let mut opts = CrossingOptions::default();
    if let Some(b) = cli.budget {
        opts.budget = usize::try_from(b).unwrap_or(usize::MAX);
    }
    if cli.given_order {
        opts.order = CrossingOrder::Given;
    }
    opts
}

fn problem_of(e: &Embedding) -> Result<Option<Problem>> {
    Problem::of_embedding(e).transpose()
}

fn gen(args: &GenArgs, opts: &CrossingOptions, stdin: &mut dyn Read) -> Result<String> {
    let mut spec = match args.kind {
        Kind::Trivial => "trivial".to_string(),
        Kind::VerticalBars => "vertical_bars".into(),
        Kind::Nqueens => "nqueens".into(),
        Kind::Sudoku => "sudoku".into(),
        Kind::Hamiltonian => "hamiltonian".into(),
    };
    let mut push = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            spec.push_str(&format!(" {k}={v}"));
        }
    };
    push("variant", args.variant.map(|v| v.to_string()));
    push("m", args.m.map(|v| v.to_string()));
    push("n", args.n.map(|v| v.to_string()));
    push("size", args.size.map(|v| v.to_string()));
    push("hints", args.hints.clone());
    push("fixed", args.fixed.clone());
    push("distinct_q", args.distinct_q.then(|| "true".into()));
    push("vertices", args.vertices.map(|v| v.to_string()));
    push("edges", args.edges.clone());
    let problem = match (&args.graph, args.kind) {
        (Some(path), Kind::Hamiltonian) => {
            let graph: Graph = read_input(path, stdin)?.parse()?;
            Problem::Hamiltonian { graph, variant: args.variant.unwrap_or(3) }
        }
        (Some(_), _) => return Err(Error::usage("--graph only applies to hamiltonian")),
        (None, _) => spec.parse()?,
    };
    let mut e = problem.build()?;
    if args.strengthen {
        let extra = problem.strengthening(&e, opts)?;
        e = e.with_extra_positive(extra)?;
    }
    if args.explicit {
        e = make_explicit(&e, None)?;
    }
    Ok(dsl::serialize(&e))
}

/// Parses a solutions file: one Γ-index set per line.
pub fn parse_solutions(text: &str, gamma_len: usize) -> Result<Vec<Solution>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let inner = line.strip_prefix('{').and_then(|l| l.strip_suffix('}')).unwrap_or(line);
        let mut members = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::usage(format!("solutions line {}: `{tok}` is not a Γ index", ln + 1)))?;
            if i >= gamma_len {
                return Err(Error::usage(format!(
                    "solutions line {}: index {i} out of range (|Γ| = {gamma_len})",
                    ln + 1
                )));
            }
            members.push(i);
        }
        out.push(Solution::new(members));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn classify(args: &ClassifyArgs, opts: &CrossingOptions, stdin: &mut dyn Read) -> Result<String> {
    let e = dsl::parse(&read_input(&args.file, stdin)?)?;
    let solutions = if let Some(path) = &args.solutions {
        parse_solutions(&read_input(path, stdin)?, e.gamma().len())?
    } else if args.oracle {
        let p = problem_of(&e)?.ok_or_else(|| Error::usage("--oracle needs a `problem:` line in the input"))?;
        p.oracle_solutions()?
    } else {
        e.enumerate_solutions(args.max_gamma, opts)?
    };
    let report = Analysis::new(&e, solutions, opts)?.report()?;
    Ok(match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    })
}

fn solve(args: &SolveArgs, opts: &CrossingOptions, stdin: &mut dyn Read) -> Result<String> {
    let e = dsl::parse(&read_input(&args.file, stdin)?)?;
    let problem = problem_of(&e)?;
    let selection = if args.grounding {
        let conflicts = problem.as_ref().map(|p| p.conflict_pairs(&e)).unwrap_or_default();
        SelectionStrategy::grounding_priority(conflicts)
    } else {
        SelectionStrategy::first_found()
    };
    let mode = if args.exhaustive {
        SearchMode::Exhaustive { limit: args.limit }
    } else {
        SearchMode::Sampling { seeds: (0..args.seeds).collect() }
    };
    let sopts = SolveOptions { mode, selection, crossing: opts.clone(), drop_context: args.drop_context, explore_gamma: true };
    let mut notes = Vec::new();
    let mut found: Vec<Solution> = match args.atom_size {
        None => solver::solve(&e, &sopts)?.into_iter().map(|f| f.solution).collect(),
        Some(size) => {
            let reduced = if args.drop_context { e.without_context()? } else { None };
            let target = reduced.as_ref().unwrap_or(&e);
            let free = target.freest_model(opts)?;
            let mut sols = Vec::new();
            for r in solver::atoms_as_solutions(target, &free, size, None, opts)? {
                match r {
                    Ok(s) if !sols.contains(&s) => sols.push(s),
                    Ok(_) => {}
                    Err(why) => notes.push(why),
                }
            }
            sols
        }
    };
    found.truncate(args.limit);
    if found.is_empty() {
        return Err(Error::infeasible("no solution found"));
    }
    let mut out = format!("solutions: {}\n", found.len());
    for why in &notes {
        out.push_str(&format!("# rejected: {why}\n"));
    }
    for (k, s) in found.iter().enumerate() {
        let idx: Vec<String> = s.members().iter().map(usize::to_string).collect();
        out.push_str(&format!("\n# solution {} {{{}}}\n", k + 1, idx.join(",")));
        match &problem {
            Some(p) => {
                let d = p.decode(s);
                if !d.complete {
                    out.push_str("# incomplete decoding\n");
                }
                out.push_str(&d.text);
            }
            None => {
                out.push_str(&e.render_solution(s));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn spectrum(file: &str, opts: &CrossingOptions, stdin: &mut dyn Read) -> Result<String> {
    let text = read_input(file, stdin)?;
    let is_dump = text.lines().any(|l| l.trim_start().starts_with('{'));
    let m = if is_dump { dsl::parse_model(&text)? } else { dsl::parse(&text)?.freest_model(opts)? };
    Ok(dsl::spectrum_tsv(&m))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let opts = crossing(cli);
    match &cli.command {
        Command::Gen(args) => gen(args, &opts, stdin),
        Command::Build { file, restrict } => {
            let e = dsl::parse(&read_input(file, stdin)?)?;
            let mut m = e.freest_model(&opts)?;
            if *restrict {
                m = m.restriction(e.interp())?;
            }
            Ok(dsl::serialize_model(&m))
        }
        Command::Spectrum { file } => spectrum(file, &opts, stdin),
        Command::Classify(args) => classify(args, &opts, stdin),
        Command::Solve(args) => solve(args, &opts, stdin),
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(out) => match stdout.write_all(out.as_bytes()) {
            Ok(()) => 0,
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
            Err(e) => {
                let _ = writeln!(stderr, "semlat: writing output: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "semlat: {e}");
            e.exit_code()
        }
    }
}
