//! Text rendering of homology results: the bigraded table in rows-`j`,
//! columns-`H_i` layout and the check report lines.

use std::fmt::Write as _;

use chromsym::homengine::{HomDoc, ResultDoc};

use crate::{CheckReport, CheckState};

fn cell_text(doc: &HomDoc) -> String {
    let mut s = String::new();
    for (k, m) in doc.mults.iter().enumerate() {
        if k > 0 {
            s.push_str(" + ");
        }
        if m.mult != 1 {
            let _ = write!(s, "{}·", m.mult);
        }
        s.push('S');
        s.push('[');
        for (p, part) in m.partition.iter().enumerate() {
            if p > 0 {
                s.push(',');
            }
            let _ = write!(s, "{part}");
        }
        s.push(']');
    }
    s
}

/// Bigraded table, rows `j` top-down from the highest grading, columns
/// `H_i` left-to-right from the highest homological degree.
pub fn render_table(doc: &ResultDoc) -> String {
    if doc.homology.is_empty() {
        return "H_*(G) = 0\n".to_string();
    }
    let max_i = doc.homology.iter().map(|h| h.i).max().unwrap();
    let max_j = doc.homology.iter().map(|h| h.j).max().unwrap();
    let cell = |i: usize, j: usize| -> String {
        doc.homology
            .iter()
            .find(|h| h.i == i && h.j == j)
            .map(cell_text)
            .unwrap_or_else(|| ".".to_string())
    };
    // column widths over cells and footers
    let mut widths = vec![0usize; max_i + 1];
    for (k, w) in widths.iter_mut().enumerate() {
        let i = max_i - k;
        *w = (0..=max_j)
            .map(|j| cell(i, j).chars().count())
            .chain(std::iter::once(format!("H_{i}").chars().count()))
            .max()
            .unwrap();
    }
    let mut out = String::new();
    for j in (0..=max_j).rev() {
        let _ = write!(out, " j={j} |");
        for (k, w) in widths.iter().enumerate() {
            let i = max_i - k;
            let text = cell(i, j);
            let pad = w - text.chars().count();
            let _ = write!(out, " {}{} |", text, " ".repeat(pad));
        }
        out.push('\n');
    }
    let _ = write!(out, "     |");
    for (k, w) in widths.iter().enumerate() {
        let i = max_i - k;
        let text = format!("H_{i}");
        let pad = w - text.chars().count();
        let _ = write!(out, " {}{} |", text, " ".repeat(pad));
    }
    out.push('\n');
    out
}

pub fn render_result(doc: &ResultDoc) -> String {
    let mut out = String::new();
    let edges: Vec<String> = doc
        .graph
        .edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect();
    let _ = writeln!(
        out,
        "graph: n={}, m={}{}{}",
        doc.graph.n,
        doc.graph.edges.len(),
        if edges.is_empty() { "" } else { ", edges " },
        edges.join(" ")
    );
    out.push_str(&render_table(doc));
    let _ = writeln!(out, "Frob(q,t) = {}", doc.frobenius.rendered);
    for (name, ok) in &doc.checks {
        let _ = writeln!(out, "check {name}: {}", if *ok { "pass" } else { "FAIL" });
    }
    out
}

pub fn render_checks(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let state = match &r.state {
            CheckState::Pass => "pass".to_string(),
            CheckState::Fail => "FAIL".to_string(),
            CheckState::Skipped(why) => format!("skipped ({why})"),
        };
        let _ = writeln!(out, "check {:<9} {state}", r.name);
    }
    out
}
