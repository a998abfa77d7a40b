//! The edge-list text format.
//!
//! Lines starting with `#` are comments and blank lines are ignored. The
//! first data line holds the order `n`; each of the following `n - 1` data
//! lines holds one edge `u v` as two whitespace-separated 0-based labels.

use std::io::BufRead;

use super::Tree;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Tree> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Tree> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let line = line.map_err(|e| parse_error(line_no, e.to_string()))?;
        let data = line.trim();
        if data.is_empty() || data.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = data.split_whitespace().collect();
        match n {
            None => {
                let [count] = fields[..] else {
                    return Err(parse_error(line_no, "expected the vertex count on its own line"));
                };
                n = Some(parse_label(count, line_no)?);
            }
            Some(order) => {
                let [u, v] = fields[..] else {
                    return Err(parse_error(line_no, "expected an edge `u v`"));
                };
                if edges.len() + 1 >= order.max(1) {
                    return Err(parse_error(
                        line_no,
                        format!("more than {} edge lines for {order} vertices", order.saturating_sub(1)),
                    ));
                }
                edges.push((parse_label(u, line_no)?, parse_label(v, line_no)?));
            }
        }
    }
    let Some(n) = n else {
        return Err(parse_error(last_line.max(1), "missing vertex count"));
    };
    if edges.len() + 1 != n.max(1) {
        return Err(parse_error(
            last_line.max(1),
            format!("expected {} edge lines, found {}", n.saturating_sub(1), edges.len()),
        ));
    }
    Tree::from_edges(n, &edges)
}

fn parse_label(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| parse_error(line, format!("`{field}` is not a nonnegative integer")))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_commented_input() {
        assert_eq!(parse_edge_list("2\n0 1\n").unwrap(), Tree::path(2).unwrap());
        assert_eq!(parse_edge_list("# comment\n3\n0 1\n1 2\n").unwrap(), Tree::path(3).unwrap());
        assert_eq!(parse_edge_list("\n3\n\n  0   1 \n# mid\n1\t2").unwrap(), Tree::path(3).unwrap());
    }

    #[test]
    fn edge_count_mismatch_is_a_parse_error() {
        assert!(matches!(parse_edge_list("3\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("2\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn malformed_lines_report_their_number() {
        assert_eq!(
            parse_edge_list("3\n0 1\n1 x\n"),
            Err(Error::Parse { line: 3, message: "`x` is not a nonnegative integer".into() })
        );
        assert!(matches!(parse_edge_list("3 4\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("# only\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn structural_errors_pass_through() {
        assert!(matches!(parse_edge_list("3\n0 1\n0 1\n"), Err(Error::NotATree(_))));
        assert!(matches!(parse_edge_list("1\n"), Err(Error::TooSmall(1))));
    }
}
