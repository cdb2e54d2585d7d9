//! Renderers for the four output formats.
//!
//! The grammars are deliberately small and locked by golden files:
//!
//! * CSV: a cell is written bare iff it consists only of the characters
//!   `0-9`, `/`, `-`; every other cell (including the `n\k` header) is
//!   double-quoted, with embedded quotes doubled. Rows end in `\n`.
//! * JSON: `serde_json` pretty printing with alphabetically ordered keys;
//!   every rational/polynomial is a string in canonical display form.
//! * Markdown: pipe tables; value cells are wrapped in backticks so exact
//!   strings survive rendering.
//! * Text (series/verify only): one record per line.

use daehee_core::{Binding, FamilySpec, Rational, SequenceTable, TriMatrix, VerificationReport};
use serde_json::{json, Value};

/// Quote rule shared by every CSV cell.
pub fn csv_cell(s: &str) -> String {
    let bare = !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_digit() || b == b'/' || b == b'-');
    if bare {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('"', "\"\""))
    }
}

fn csv_line(cells: impl IntoIterator<Item = String>) -> String {
    let mut line = cells.into_iter().collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn markdown_line(cells: impl IntoIterator<Item = String>) -> String {
    format!(
        "| {} |\n",
        cells.into_iter().collect::<Vec<_>>().join(" | ")
    )
}

fn binding_string(b: &Binding) -> String {
    match b {
        Binding::Symbolic => "sym".to_string(),
        Binding::Value(v) => v.to_string(),
    }
}

fn header(corner: &str, width: usize) -> Vec<String> {
    std::iter::once(corner.to_string())
        .chain((0..width).map(|j| j.to_string()))
        .collect()
}

pub fn table_csv(t: &SequenceTable) -> String {
    let mut out = csv_line(
        header("n\\k", t.k_max() + 1)
            .into_iter()
            .map(|c| csv_cell(&c)),
    );
    for n in 0..=t.n_max() {
        out.push_str(&csv_line(std::iter::once(n.to_string()).chain(
            (0..=t.k_max()).map(|k| csv_cell(&t.entry(n, k).to_string())),
        )));
    }
    out
}

pub fn table_markdown(t: &SequenceTable) -> String {
    let head = header("n\\k", t.k_max() + 1);
    let mut out = markdown_line(head.iter().cloned());
    out.push_str(&markdown_line(head.iter().map(|_| "---".to_string())));
    for n in 0..=t.n_max() {
        out.push_str(&markdown_line(
            std::iter::once(n.to_string())
                .chain((0..=t.k_max()).map(|k| format!("`{}`", t.entry(n, k)))),
        ));
    }
    out
}

pub fn table_json(t: &SequenceTable, spec: &FamilySpec, route: &str) -> String {
    let mut bindings = serde_json::Map::new();
    bindings.insert("x".to_string(), Value::String(binding_string(&spec.x)));
    if let Some(l) = &spec.lambda {
        bindings.insert("lambda".to_string(), Value::String(binding_string(l)));
    }
    if let Some(xi) = &spec.xi {
        bindings.insert("xi".to_string(), Value::String(binding_string(xi)));
    }
    let entries: Vec<Value> = (0..=t.n_max())
        .map(|n| {
            Value::Array(
                (0..=t.k_max())
                    .map(|k| Value::String(t.entry(n, k).to_string()))
                    .collect(),
            )
        })
        .collect();
    finish_json(json!({
        "command": "table",
        "family": spec.family.name(),
        "n_max": t.n_max(),
        "k_max": t.k_max(),
        "route": route,
        "bindings": Value::Object(bindings),
        "entries": entries,
    }))
}

pub fn matrix_csv(m: &TriMatrix) -> String {
    let dim = m.dim();
    let mut out = csv_line(header("i\\j", dim).into_iter().map(|c| csv_cell(&c)));
    for i in 0..dim {
        out.push_str(&csv_line(
            std::iter::once(i.to_string())
                .chain((0..dim).map(|j| csv_cell(&m.entry(i, j).to_string()))),
        ));
    }
    out
}

pub fn matrix_markdown(m: &TriMatrix) -> String {
    let dim = m.dim();
    let head = header("i\\j", dim);
    let mut out = markdown_line(head.iter().cloned());
    out.push_str(&markdown_line(head.iter().map(|_| "---".to_string())));
    for i in 0..dim {
        out.push_str(&markdown_line(
            std::iter::once(i.to_string()).chain((0..dim).map(|j| format!("`{}`", m.entry(i, j)))),
        ));
    }
    out
}

pub fn matrix_json(m: &TriMatrix, kind: &str, binding: Option<String>) -> String {
    let dim = m.dim();
    let entries: Vec<Value> = (0..dim)
        .map(|i| {
            Value::Array(
                (0..dim)
                    .map(|j| Value::String(m.entry(i, j).to_string()))
                    .collect(),
            )
        })
        .collect();
    let mut doc = json!({
        "command": "matrix",
        "kind": kind,
        "dim": dim,
        "entries": entries,
    });
    if let Some(b) = binding {
        doc.as_object_mut()
            .expect("document is an object")
            .insert("binding".to_string(), Value::String(b));
    }
    finish_json(doc)
}

pub fn series_text(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (n, c) in coeffs.iter().enumerate() {
        out.push_str(&format!("{n}: {c}\n"));
    }
    out
}

pub fn series_csv(coeffs: &[Rational]) -> String {
    let mut out = csv_line([csv_cell("n"), csv_cell("coefficient")]);
    for (n, c) in coeffs.iter().enumerate() {
        out.push_str(&csv_line([n.to_string(), csv_cell(&c.to_string())]));
    }
    out
}

pub fn series_markdown(coeffs: &[Rational]) -> String {
    let mut out = markdown_line(["n".to_string(), "coefficient".to_string()]);
    out.push_str(&markdown_line(["---".to_string(), "---".to_string()]));
    for (n, c) in coeffs.iter().enumerate() {
        out.push_str(&markdown_line([n.to_string(), format!("`{c}`")]));
    }
    out
}

pub fn series_json(name: &str, k: usize, coeffs: &[Rational]) -> String {
    finish_json(json!({
        "command": "series",
        "name": name,
        "k": k,
        "order": coeffs.len().saturating_sub(1),
        "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    }))
}

pub fn verify_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.ok() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {}: {} instances, {} failures\n",
            r.id, r.instances, r.failures
        ));
        if let Some(w) = &r.witness {
            let label = if r.ok() { "note" } else { "witness" };
            out.push_str(&format!("  {label}: {w}\n"));
        }
    }
    out
}

pub fn verify_csv(reports: &[VerificationReport]) -> String {
    let mut out = csv_line(
        ["id", "instances", "failures", "ok", "witness"]
            .into_iter()
            .map(csv_cell),
    );
    for r in reports {
        out.push_str(&csv_line([
            csv_cell(&r.id),
            r.instances.to_string(),
            r.failures.to_string(),
            csv_cell(if r.ok() { "true" } else { "false" }),
            csv_cell(r.witness.as_deref().unwrap_or("")),
        ]));
    }
    out
}

pub fn verify_markdown(reports: &[VerificationReport]) -> String {
    let head = ["id", "instances", "failures", "ok", "witness"];
    let mut out = markdown_line(head.iter().map(|s| s.to_string()));
    out.push_str(&markdown_line(head.iter().map(|_| "---".to_string())));
    for r in reports {
        out.push_str(&markdown_line([
            r.id.clone(),
            r.instances.to_string(),
            r.failures.to_string(),
            r.ok().to_string(),
            r.witness
                .as_deref()
                .map(|w| format!("`{w}`"))
                .unwrap_or_default(),
        ]));
    }
    out
}

pub fn verify_json(reports: &[VerificationReport]) -> String {
    let suites: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "instances": r.instances,
                "failures": r.failures,
                "ok": r.ok(),
                "witness": r.witness.clone().map(Value::String).unwrap_or(Value::Null),
            })
        })
        .collect();
    finish_json(json!({
        "command": "verify",
        "ok": reports.iter().all(|r| r.ok()),
        "suites": suites,
    }))
}

fn finish_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serialization cannot fail");
    s.push('\n');
    s
}
