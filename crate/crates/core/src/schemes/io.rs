//! Text formats for relation tables and graphs.
//!
//! Scheme file: a header line `n r`, then `n` lines of `n` space-separated
//! relation indices in `0..r`. Graph file: a header line `n`, then `n` lines
//! of `n` characters `0`/`1`. In both, lines starting with `#` are comments
//! and trailing whitespace is ignored.

use std::fmt::Write;

use super::{Graph, RelationTable, SchemeError};

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty())
}

fn parse_err(line: usize, reason: impl Into<String>) -> SchemeError {
    SchemeError::Parse { line, reason: reason.into() }
}

pub fn parse_scheme_file(text: &str) -> Result<RelationTable, SchemeError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n r`"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(parse_err(hline, "header must be `n r`"));
    }
    let parse_usize = |s: &str, line: usize| s.parse::<usize>().map_err(|_| parse_err(line, format!("`{s}` is not a non-negative integer")));
    let n = parse_usize(nums[0], hline)?;
    let r = parse_usize(nums[1], hline)?;
    if n == 0 || r == 0 {
        return Err(parse_err(hline, "order and rank must be positive"));
    }
    let mut entries = Vec::with_capacity(n * n);
    let mut last_line = hline;
    for row in 0..n {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {n} rows, found {row}")))?;
        last_line = lno;
        let vals: Vec<&str> = line.split_whitespace().collect();
        if vals.len() != n {
            return Err(parse_err(lno, format!("row has {} entries, expected {n}", vals.len())));
        }
        for v in vals {
            let e = parse_usize(v, lno)?;
            if e >= r {
                return Err(parse_err(lno, format!("entry {e} out of range 0..{r}")));
            }
            entries.push(e);
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, "trailing content after the table"));
    }
    RelationTable::new(n, r, entries).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn serialize_scheme_file(table: &RelationTable) -> String {
    let n = table.order();
    let mut out = format!("{} {}\n", n, table.rank());
    for x in 0..n {
        let row: Vec<String> = table.row(x).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph_file(text: &str) -> Result<Graph, SchemeError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n`"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_err(hline, "header must be the vertex count"))?;
    let mut adj = Vec::with_capacity(n * n);
    let mut last_line = hline;
    for row in 0..n {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {n} rows, found {row}")))?;
        last_line = lno;
        let line = line.trim_start();
        if line.chars().count() != n {
            return Err(parse_err(lno, format!("row has {} characters, expected {n}", line.chars().count())));
        }
        for c in line.chars() {
            match c {
                '0' => adj.push(false),
                '1' => adj.push(true),
                other => return Err(parse_err(lno, format!("unexpected character `{other}`"))),
            }
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, "trailing content after the adjacency matrix"));
    }
    Graph::from_adjacency(n, adj).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn serialize_graph_file(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * (n + 1) + 8);
    writeln!(out, "{n}").expect("writing to a String");
    for x in 0..n {
        out.extend((0..n).map(|y| if g.adjacent(x, y) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::{johnson, shrikhande};

    #[test]
    fn scheme_roundtrip() {
        let t = johnson(5).unwrap().table().clone();
        let text = serialize_scheme_file(&t);
        assert!(text.starts_with("10 3\n0 1 1 1 1 1 1 2 2 2\n"));
        assert_eq!(parse_scheme_file(&text).unwrap(), t);
    }

    #[test]
    fn comments_and_trailing_whitespace() {
        let text = "# a comment\n2 2   \n0 1\t\n# between rows\n1 0\n";
        let t = parse_scheme_file(text).unwrap();
        assert_eq!(t.entries(), &[0, 1, 1, 0]);
    }

    #[test]
    fn scheme_parse_errors() {
        let out_of_range = "2 2\n0 2\n1 0\n";
        assert!(matches!(parse_scheme_file(out_of_range), Err(SchemeError::Parse { line: 2, .. })));
        let ragged = "2 2\n0 1 1\n1 0\n";
        assert!(matches!(parse_scheme_file(ragged), Err(SchemeError::Parse { line: 2, .. })));
        let short = "3 2\n0 1 1\n1 0 1\n";
        assert!(matches!(parse_scheme_file(short), Err(SchemeError::Parse { line: 4, .. })));
        assert!(parse_scheme_file("").is_err());
        assert!(parse_scheme_file("2 x\n").is_err());
    }

    #[test]
    fn graph_roundtrip() {
        let g = shrikhande();
        let text = serialize_graph_file(&g);
        assert_eq!(text.lines().count(), 17);
        assert_eq!(parse_graph_file(&text).unwrap(), g);
        assert!(parse_graph_file("2\n01\n11\n").is_err());
        assert!(parse_graph_file("2\n01\n1x\n").is_err());
    }
}
