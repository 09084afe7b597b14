//! Canonical text output.

use crate::algebra::{AtomizedModel, Duple};
use crate::constants::ConstantTable;
use crate::embedding::{Embedding, ScopeFormula};
use std::fmt::Write;

fn duple_block(out: &mut String, header: &str, duples: &[Duple], table: &ConstantTable) {
    if duples.is_empty() {
        return;
    }
    out.push_str(header);
    out.push_str(":\n");
    for d in duples {
        let _ = writeln!(out, "  {}", d.render(table));
    }
}

pub(crate) fn serialize(e: &Embedding) -> String {
    let table = e.table();
    let mut out = String::new();
    if let Some(p) = e.problem() {
        let _ = writeln!(out, "problem: {p}");
    }
    let _ = writeln!(out, "constants: {}", table.names().join(" "));
    let _ = writeln!(out, "interp: {}", table.render(e.interp()).join(" "));
    duple_block(&mut out, "pos", e.rpos(), table);
    duple_block(&mut out, "neg", e.rneg(), table);
    duple_block(&mut out, "gamma", e.gamma(), table);
    if *e.scope() != ScopeFormula::True {
        let _ = writeln!(out, "scope: {}", scope_text(e.scope(), e.gamma(), table));
    }
    if !e.context().is_empty() {
        out.push_str("context:\n");
        for (i, k) in e.context() {
            let _ = writeln!(out, "  {i} -> {}", table.render(k).join(" "));
        }
    }
    out
}

/// `Γ[i] ∧ Γ[j]` with `Γ[j]` the mirror of `Γ[i]`, printed as `=`.
fn as_equality<'a>(f: &ScopeFormula, gamma: &'a [Duple]) -> Option<&'a Duple> {
    let ScopeFormula::And(items) = f else { return None };
    let [ScopeFormula::Leaf(i), ScopeFormula::Leaf(j)] = items.as_slice() else { return None };
    let (a, b) = (&gamma[*i], &gamma[*j]);
    (a.lhs == b.rhs && a.rhs == b.lhs).then_some(a)
}

/// Renders a scope formula so that reading it back yields the same tree.
pub(crate) fn scope_text(f: &ScopeFormula, gamma: &[Duple], table: &ConstantTable) -> String {
    if let Some(d) = as_equality(f, gamma) {
        return format!("{} = {}", d.lhs.render(table), d.rhs.render(table));
    }
    match f {
        ScopeFormula::True => "true".into(),
        ScopeFormula::False => "false".into(),
        ScopeFormula::Leaf(i) => {
            let d = &gamma[*i];
            format!("{} <= {}", d.lhs.render(table), d.rhs.render(table))
        }
        ScopeFormula::Not(g) => format!("!({})", scope_text(g, gamma, table)),
        ScopeFormula::And(items) => match items.len() {
            0 => "true".into(),
            1 => scope_text(&items[0], gamma, table),
            _ => items
                .iter()
                .map(|g| {
                    let nested = matches!(g, ScopeFormula::Or(_))
                        || (matches!(g, ScopeFormula::And(_)) && as_equality(g, gamma).is_none());
                    wrap(g, nested, gamma, table)
                })
                .collect::<Vec<_>>()
                .join(" & "),
        },
        ScopeFormula::Or(items) => match items.len() {
            0 => "false".into(),
            1 => scope_text(&items[0], gamma, table),
            _ => items
                .iter()
                .map(|g| {
                    let nested = matches!(g, ScopeFormula::Or(_) | ScopeFormula::And(_));
                    wrap(g, nested, gamma, table)
                })
                .collect::<Vec<_>>()
                .join(" | "),
        },
    }
}

fn wrap(f: &ScopeFormula, parens: bool, gamma: &[Duple], table: &ConstantTable) -> String {
    let s = scope_text(f, gamma, table);
    if parens {
        format!("({s})")
    } else {
        s
    }
}

pub(crate) fn serialize_model(m: &AtomizedModel) -> String {
    let table = m.table();
    let mut out = String::new();
    let names = table.render(m.universe());
    if names.is_empty() {
        out.push_str("constants:\n");
    } else {
        let _ = writeln!(out, "constants: {}", names.join(" "));
    }
    for a in m.atoms() {
        let _ = writeln!(out, "{{{}}}", table.render(a.segment()).join(","));
    }
    out
}

pub(crate) fn spectrum_tsv(m: &AtomizedModel) -> String {
    let mut out = String::new();
    for (size, count) in m.spectrum() {
        let _ = writeln!(out, "{size}\t{count}");
    }
    out
}
