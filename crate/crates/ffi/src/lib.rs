//! C ABI over the semlat library.
//!
//! Objects cross the boundary as opaque handles created by `semlat_*_parse`
//! or `semlat_*_generate` and released with the matching `_free` function.
//! Every fallible call returns a [`SemlatStatus`]; on failure the message is
//! available from [`semlat_last_error_message`] on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and must
//! be released with [`semlat_string_free`].

use semlat::algebra::CrossingOptions;
use semlat::embedding::{Analysis, Embedding, Solution};
use semlat::problems::Problem;
use semlat::solver::{self, SearchMode, SelectionStrategy, SolveOptions};
use semlat::{dsl, AtomizedModel, Error};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemlatStatus {
    Ok = 0,
    /// No model or solution exists.
    Infeasible = 1,
    /// Bad argument or precondition violation.
    Usage = 2,
    /// The atom budget was exceeded.
    Resource = 3,
    /// Text input failed to parse; the message carries the code and position.
    Parse = 4,
    /// A required pointer was null or a string was not UTF-8.
    InvalidArgument = 5,
    /// An internal panic was caught.
    Internal = 6,
}

/// Opaque embedding handle.
pub struct SemlatEmbedding(Embedding);

/// Opaque atomized model handle.
pub struct SemlatModel(AtomizedModel);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SemlatStatus {
    match e {
        Error::Infeasible(_) => SemlatStatus::Infeasible,
        Error::Usage(_) => SemlatStatus::Usage,
        Error::Resource(_) => SemlatStatus::Resource,
        Error::Parse { .. } => SemlatStatus::Parse,
    }
}

enum Failure {
    Lib(Error),
    Arg(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SemlatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SemlatStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Arg(msg))) => {
            set_error(msg);
            SemlatStatus::InvalidArgument
        }
        Err(_) => {
            set_error("internal error");
            SemlatStatus::Internal
        }
    }
}

/// # Safety
/// `s` is null or a NUL-terminated string.
unsafe fn str_arg<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Arg(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Arg("string argument is not valid UTF-8"))
}

/// # Safety
/// `p` is null or points to a live handle.
unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Arg(what))
}

/// # Safety
/// `out` is null or writable.
unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Arg("output pointer is null"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// # Safety
/// `out` is null or writable.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Arg("output pointer is null"));
    }
    *out = CString::new(s).map_err(|_| Failure::Arg("output contains NUL"))?.into_raw();
    Ok(())
}

fn crossing(budget: usize) -> CrossingOptions {
    if budget == 0 {
        CrossingOptions::default()
    } else {
        CrossingOptions::with_budget(budget)
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next semlat call on this thread.
#[no_mangle]
pub extern "C" fn semlat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn semlat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from a semlat out-parameter and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn semlat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an embedding document.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_embedding_parse(text: *const c_char, out: *mut *mut SemlatEmbedding) -> SemlatStatus {
    guard(|| {
        let text = str_arg(text, "text is null")?;
        put(out, SemlatEmbedding(dsl::parse(text)?))
    })
}

/// Builds a bundled problem from a description such as `nqueens m=4 variant=2`.
///
/// # Safety
/// `spec` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_embedding_generate(spec: *const c_char, out: *mut *mut SemlatEmbedding) -> SemlatStatus {
    guard(|| {
        let problem: Problem = str_arg(spec, "spec is null")?.parse()?;
        put(out, SemlatEmbedding(problem.build()?))
    })
}

/// Canonical document text of an embedding.
///
/// # Safety
/// `e` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_embedding_serialize(e: *const SemlatEmbedding, out: *mut *mut c_char) -> SemlatStatus {
    guard(|| {
        let e = handle(e, "embedding is null")?;
        put_string(out, dsl::serialize(&e.0))
    })
}

/// Number of duples in the separator set Γ.
///
/// # Safety
/// `e` is null or a live handle. Returns 0 for null.
#[no_mangle]
pub unsafe extern "C" fn semlat_embedding_gamma_len(e: *const SemlatEmbedding) -> usize {
    e.as_ref().map_or(0, |e| e.0.gamma().len())
}

/// # Safety
/// `e` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn semlat_embedding_free(e: *mut SemlatEmbedding) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Builds the freest model of R⁺. `budget` 0 selects the default atom budget.
///
/// # Safety
/// `e` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_freest_model(
    e: *const SemlatEmbedding,
    budget: usize,
    out: *mut *mut SemlatModel,
) -> SemlatStatus {
    guard(|| {
        let e = handle(e, "embedding is null")?;
        put(out, SemlatModel(e.0.freest_model(&crossing(budget))?))
    })
}

/// Reads a model dump.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_model_parse(text: *const c_char, out: *mut *mut SemlatModel) -> SemlatStatus {
    guard(|| {
        let text = str_arg(text, "text is null")?;
        put(out, SemlatModel(dsl::parse_model(text)?))
    })
}

/// Number of canonical atoms; 0 for null.
///
/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn semlat_model_atom_count(m: *const SemlatModel) -> usize {
    m.as_ref().map_or(0, |m| m.0.len())
}

/// Canonical model dump.
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_model_dump(m: *const SemlatModel, out: *mut *mut c_char) -> SemlatStatus {
    guard(|| {
        let m = handle(m, "model is null")?;
        put_string(out, dsl::serialize_model(&m.0))
    })
}

/// Atom-size histogram as `size<TAB>count` lines.
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_model_spectrum(m: *const SemlatModel, out: *mut *mut c_char) -> SemlatStatus {
    guard(|| {
        let m = handle(m, "model is null")?;
        put_string(out, dsl::spectrum_tsv(&m.0))
    })
}

/// # Safety
/// `m` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn semlat_model_free(m: *mut SemlatModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Classification report as JSON. Solutions come from the problem oracle when
/// the embedding names a bundled problem, else from exhaustive enumeration
/// (|Γ| ≤ 16).
///
/// # Safety
/// `e` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_classify(e: *const SemlatEmbedding, budget: usize, out: *mut *mut c_char) -> SemlatStatus {
    guard(|| {
        let e = &handle(e, "embedding is null")?.0;
        let opts = crossing(budget);
        let solutions = match Problem::of_embedding(e) {
            Some(p) => p?.oracle_solutions()?,
            None => e.enumerate_solutions(16, &opts)?,
        };
        let report = Analysis::new(e, solutions, &opts)?.report()?;
        put_string(out, report.to_json())
    })
}

/// Solves with `seeds` seeded selection runs, or a depth-first search when
/// `exhaustive` is nonzero. Writes one solution per line as comma-separated
/// Γ indices in braces. Returns `Infeasible` when nothing is found.
///
/// # Safety
/// `e` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn semlat_solve(
    e: *const SemlatEmbedding,
    seeds: u32,
    exhaustive: i32,
    budget: usize,
    out: *mut *mut c_char,
) -> SemlatStatus {
    guard(|| {
        let e = &handle(e, "embedding is null")?.0;
        let mode = if exhaustive != 0 {
            SearchMode::Exhaustive { limit: usize::MAX }
        } else {
            SearchMode::Sampling { seeds: (0..u64::from(seeds.max(1))).collect() }
        };
        let opts = SolveOptions {
            mode,
            selection: SelectionStrategy::first_found(),
            crossing: crossing(budget),
            drop_context: exhaustive != 0,
            explore_gamma: true,
        };
        let found = solver::solve(e, &opts)?;
        if found.is_empty() {
            return Err(Error::infeasible("no solution found").into());
        }
        let text: String = found.iter().map(|f| format!("{}\n", render(&f.solution))).collect();
        put_string(out, text)
    })
}

fn render(s: &Solution) -> String {
    let idx: Vec<String> = s.members().iter().map(usize::to_string).collect();
    format!("{{{}}}", idx.join(","))
}
