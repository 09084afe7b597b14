#![allow(dead_code)]

use semlat::algebra::CrossingOptions;
use semlat::embedding::{Embedding, Solution};
use semlat::problems::Problem;
use semlat::{Atom, AtomizedModel, ConstantTable};
use std::collections::BTreeSet;

pub fn opts() -> CrossingOptions {
    CrossingOptions::default()
}

pub fn build(spec: &str) -> Embedding {
    spec.parse::<Problem>().unwrap().build().unwrap()
}

/// Splits `w1b1q1` into `w1`, `b1`, `q1`: a letter plus any trailing digits.
pub fn symbols(token: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for ch in token.chars() {
        if ch.is_ascii_digit() {
            out.last_mut().expect("digit before any letter").push(ch);
        } else {
            out.push(ch.to_string());
        }
    }
    out
}

/// Atoms written as space-separated tokens of concatenated symbols, each
/// symbol translated to a constant name by `name`.
pub fn atoms_with(table: &ConstantTable, list: &str, name: impl Fn(&str) -> String) -> BTreeSet<Atom> {
    list.split_whitespace()
        .map(|tok| {
            let names: Vec<String> = symbols(tok).iter().map(|s| name(s)).collect();
            Atom::from_names(table, names.iter().map(String::as_str)).unwrap()
        })
        .collect()
}

/// Single-letter constants.
pub fn atoms(table: &ConstantTable, list: &str) -> BTreeSet<Atom> {
    atoms_with(table, list, str::to_string)
}

/// 2×2 grid cells numbered 1..4 row-major: `w3` is `w_2_1`, `n1` is `n_1`.
pub fn bar_name(sym: &str) -> String {
    let (head, digits) = sym.split_at(1);
    if digits.is_empty() || head == "n" {
        return if digits.is_empty() { head.to_string() } else { format!("n_{digits}") };
    }
    let k: usize = digits.parse().unwrap();
    format!("{head}_{}_{}", (k - 1) / 2 + 1, (k - 1) % 2 + 1)
}

pub fn set_of(m: &AtomizedModel) -> BTreeSet<Atom> {
    m.atoms().iter().cloned().collect()
}

pub fn render(table: &ConstantTable, atoms: &BTreeSet<Atom>) -> String {
    let mut v: Vec<String> = atoms.iter().map(|a| a.render(table)).collect();
    v.sort();
    v.join(" ")
}

/// Collects mismatches instead of stopping at the first one.
#[derive(Default)]
pub struct Check {
    pub failures: Vec<String>,
}

impl Check {
    pub fn ok(&mut self, label: &str, cond: bool) {
        if !cond {
            self.failures.push(label.to_string());
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    pub fn atoms(&mut self, label: &str, table: &ConstantTable, got: &BTreeSet<Atom>, want: &BTreeSet<Atom>) {
        if got != want {
            let extra: BTreeSet<Atom> = got.difference(want).cloned().collect();
            let missing: BTreeSet<Atom> = want.difference(got).cloned().collect();
            self.failures.push(format!(
                "{label}: extra [{}] missing [{}]",
                render(table, &extra),
                render(table, &missing)
            ));
        }
    }

    pub fn finish(self) -> Result<(), String> {
        if self.failures.is_empty() {
            Ok(())
        } else {
            Err(self.failures.join("; "))
        }
    }
}

pub fn solutions(members: &[&[usize]]) -> Vec<Solution> {
    members.iter().map(|m| Solution::new(m.iter().copied())).collect()
}
