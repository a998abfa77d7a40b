use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader};
use std::path::Path;

use crate::error::Result;
use crate::graph::{read_edge_list, Tree};
use crate::harness::{OpenProblemRecord, Verdict};
use crate::independence::AnalysisReport;

/// Reads an edge-list file; `-` reads standard input.
pub fn parse_tree_file(path: &Path) -> std::result::Result<Tree, String> {
    let parsed: Result<Tree> = if path == Path::new("-") {
        read_edge_list(io::stdin().lock())
    } else {
        let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
        read_edge_list(BufReader::new(file))
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

/// Undirected DOT document. Core vertices are filled, pendant vertices are
/// drawn as double circles.
pub fn export_dot(tree: &Tree, report: &AnalysisReport) -> String {
    let mut out = String::from("graph T {\n  node [shape=circle];\n");
    for v in 0..tree.n() {
        let mut attrs = Vec::new();
        if report.pendants.contains(v) {
            attrs.push("shape=doublecircle");
        }
        if report.core.contains(v) {
            attrs.push("style=filled");
            attrs.push("fillcolor=lightgray");
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for &(u, v) in tree.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn reports_to_json(reports: &[AnalysisReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn report_to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

pub fn verdicts_to_json(verdicts: &[Verdict]) -> String {
    serde_json::to_string_pretty(verdicts).expect("verdicts serialize")
}

pub fn measurements_to_json(records: &[OpenProblemRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}
