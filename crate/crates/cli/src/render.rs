//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{IndicatorRow, ReportDocument};

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn methods_cell(row: &IndicatorRow) -> String {
    row.methods
        .iter()
        .map(|m| match (&m.value, &m.skipped) {
            (Some(v), _) => format!("{}={v}", m.method),
            (None, _) => format!("{}=skip", m.method),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_report(report: &ReportDocument) -> String {
    let mut out = String::new();
    if let Some(d) = &report.description {
        let _ = writeln!(out, "{d}");
    }
    let _ = writeln!(out, "field: {}", report.field);
    if !report.rows.is_empty() {
        let mut table = vec![["module", "twist", "dim", "nu", "bil", "+", "-", "self-dual", "methods", "agree"]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()];
        for r in &report.rows {
            table.push(vec![
                r.module.clone(),
                r.twist.clone().unwrap_or_else(|| "-".into()),
                r.dim.to_string(),
                r.nu.clone(),
                r.dim_bil.to_string(),
                r.dim_plus.to_string(),
                r.dim_minus.to_string(),
                if r.self_dual { "yes" } else { "no" }.into(),
                methods_cell(r),
                if r.agree { "yes" } else { "NO" }.into(),
            ]);
        }
        out.push('\n');
        out.push_str(&aligned(&table));
        for r in &report.rows {
            for m in &r.methods {
                if let Some(reason) = &m.skipped {
                    let _ = writeln!(out, "  {}: {} skipped ({reason})", r.module, m.method);
                }
            }
        }
        for r in report.rows.iter().filter(|r| r.canonical_form.is_some()) {
            let form = r.canonical_form.as_ref().expect("filtered");
            let twist = r.twist.as_deref().map(|t| format!(" [{t}]")).unwrap_or_default();
            let _ = writeln!(out, "\ninvariant form on {}{twist}:", r.module);
            out.push_str(&aligned(&form.iter().map(|row| {
                let mut cells = vec!["  ".to_string()];
                cells.extend(row.iter().cloned());
                cells
            }).collect::<Vec<_>>()));
        }
    }
    if !report.regular.is_empty() {
        out.push('\n');
        let mut table = vec![vec!["reg".to_string(), "twist".into(), "Trace(Q)".into()]];
        for r in &report.regular {
            table.push(vec!["reg".into(), r.twist.clone().unwrap_or_else(|| "-".into()), r.trace_q.clone()]);
        }
        out.push_str(&aligned(&table));
    }
    if !report.doi.is_empty() {
        out.push('\n');
        let mut table = vec![vec!["character".to_string(), "twist".into(), "nu (Doi)".into()]];
        for r in &report.doi {
            table.push(vec![r.character.clone(), r.twist.clone().unwrap_or_else(|| "-".into()), r.nu.clone()]);
        }
        out.push_str(&aligned(&table));
    }
    if let Some(g) = &report.trace_s_global {
        let verdict = if g.equal { "lhs = rhs" } else { "MISMATCH" };
        let _ = writeln!(out, "\nTrace(S) = {}, sum nu(V) chi_V(g) = {}: {verdict}", g.lhs, g.rhs);
    }
    if let Some(c) = &report.coalgebra {
        let verdict = if c.equal { "equal" } else { "MISMATCH" };
        let _ = writeln!(
            out,
            "\nreg_C dual: Trace(Q) = {}, definition = {}: {verdict}",
            c.trace_q, c.definition
        );
    }
    if report.discrepancy {
        let _ = writeln!(out, "\nDISCREPANCY: methods disagree");
    }
    out
}
