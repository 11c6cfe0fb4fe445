//! Plain-text table grammar.
//!
//! ```text
//! # comment lines start with '#'
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! J: 0 2 1
//! ```
//!
//! The first non-comment line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated entries in `[0, n)` and an optional `J:` line. Blank
//! lines are ignored inside a single document and separate documents in a
//! multi-document file.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{CayleyTable, TotalMap, DEFAULT_MAX_TABLE_ORDER};
use crate::search::CiStructure;

/// A parsed table file. `j` has the table's order when present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDocument {
    pub table: CayleyTable,
    pub j: Option<TotalMap>,
    pub source_name: String,
}

impl TableDocument {
    pub fn new(table: CayleyTable, j: Option<TotalMap>, source_name: impl Into<String>) -> Self {
        if let Some(j) = &j {
            assert_eq!(j.order(), table.order(), "J must match the table order");
        }
        TableDocument {
            table,
            j,
            source_name: source_name.into(),
        }
    }

    pub fn from_structure(s: &CiStructure, source_name: impl Into<String>) -> Self {
        TableDocument::new(s.table.clone(), Some(s.jr.clone()), source_name)
    }
}

/// Parse failure; every variant carries the 1-based line it refers to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: bad header: {reason}")]
    BadHeader { line: usize, reason: String },
    #[error("line {line}: bad row: {reason}")]
    BadRow { line: usize, reason: String },
    #[error("line {line}: bad J line: {reason}")]
    BadJLine { line: usize, reason: String },
    #[error("line {line}: entry {value} is out of range for order {order}")]
    EntryOutOfRange {
        line: usize,
        value: usize,
        order: usize,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::BadHeader { line, .. }
            | ParseError::BadRow { line, .. }
            | ParseError::BadJLine { line, .. }
            | ParseError::EntryOutOfRange { line, .. } => *line,
        }
    }
}

type Numbered<'a> = (usize, &'a str);

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

fn parse_entries(
    line: usize,
    text: &str,
    order: usize,
    bad: impl Fn(usize, String) -> ParseError,
) -> Result<Vec<usize>, ParseError> {
    let values = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| bad(line, format!("`{tok}` is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != order {
        return Err(bad(
            line,
            format!("expected {order} entries, found {}", values.len()),
        ));
    }
    if let Some(&value) = values.iter().find(|&&v| v >= order) {
        return Err(ParseError::EntryOutOfRange { line, value, order });
    }
    Ok(values)
}

fn parse_lines(
    lines: &[Numbered<'_>],
    last_line: usize,
    source_name: &str,
) -> Result<TableDocument, ParseError> {
    let mut it = lines
        .iter()
        .copied()
        .filter(|(_, l)| !l.trim().is_empty() && !is_comment(l));

    let (header_line, header) = it.next().ok_or_else(|| ParseError::BadHeader {
        line: last_line + 1,
        reason: "missing order line".into(),
    })?;
    let order: usize = header.trim().parse().map_err(|_| ParseError::BadHeader {
        line: header_line,
        reason: format!("`{}` is not a single integer", header.trim()),
    })?;
    if order == 0 || order > DEFAULT_MAX_TABLE_ORDER {
        return Err(ParseError::BadHeader {
            line: header_line,
            reason: format!("order must be in 1..={DEFAULT_MAX_TABLE_ORDER}"),
        });
    }

    let mut entries = Vec::with_capacity(order * order);
    let mut prev = header_line;
    for _ in 0..order {
        let (line, text) = it.next().ok_or_else(|| ParseError::BadRow {
            line: last_line + 1,
            reason: format!("expected {order} rows"),
        })?;
        if text.trim_start().starts_with("J:") {
            return Err(ParseError::BadRow {
                line,
                reason: format!("expected {order} rows before the J line"),
            });
        }
        entries.extend(parse_entries(line, text, order, |line, reason| {
            ParseError::BadRow { line, reason }
        })?);
        prev = line;
    }

    let j = match it.next() {
        None => None,
        Some((line, text)) => {
            let rest =
                text.trim_start()
                    .strip_prefix("J:")
                    .ok_or_else(|| ParseError::BadJLine {
                        line,
                        reason: "expected `J:` or end of document".into(),
                    })?;
            let image = parse_entries(line, rest, order, |line, reason| ParseError::BadJLine {
                line,
                reason,
            })?;
            prev = line;
            Some(TotalMap::new(image).expect("validated image"))
        }
    };
    if let Some((line, _)) = it.next() {
        return Err(ParseError::BadJLine {
            line,
            reason: format!("unexpected content after line {prev}"),
        });
    }
    let table = CayleyTable::new(order, entries).expect("validated rows");
    Ok(TableDocument::new(table, j, source_name))
}

/// Parses a single document.
pub fn parse_table(source_name: &str, text: &str) -> Result<TableDocument, ParseError> {
    let lines: Vec<Numbered<'_>> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    parse_lines(&lines, lines.len(), source_name)
}

/// Parses a file holding one or more documents separated by blank lines.
/// Blocks consisting only of comments are skipped.
pub fn parse_documents(source_name: &str, text: &str) -> Result<Vec<TableDocument>, ParseError> {
    let mut docs = Vec::new();
    let mut block: Vec<Numbered<'_>> = Vec::new();
    let mut flush = |block: &mut Vec<Numbered<'_>>| -> Result<(), ParseError> {
        if block.iter().any(|(_, l)| !is_comment(l)) {
            let last = block.last().map_or(0, |(n, _)| *n);
            docs.push(parse_lines(block, last, source_name)?);
        }
        block.clear();
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            flush(&mut block)?;
        } else {
            block.push((i + 1, line));
        }
    }
    flush(&mut block)?;
    if docs.is_empty() {
        return Err(ParseError::BadHeader {
            line: text.lines().count() + 1,
            reason: "no table found".into(),
        });
    }
    Ok(docs)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders a document in the grammar accepted by [`parse_table`].
pub fn render_document(doc: &TableDocument) -> String {
    let mut out = String::new();
    writeln!(out, "{}", doc.table.order()).unwrap();
    for row in doc.table.rows() {
        writeln!(out, "{}", join(row)).unwrap();
    }
    if let Some(j) = &doc.j {
        writeln!(out, "J: {}", join(j.image())).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_z3_with_j() {
        let doc = parse_table("z3", "3\n0 1 2\n1 2 0\n2 0 1\nJ: 0 2 1").unwrap();
        assert_eq!(doc.table, CayleyTable::cyclic_group(3).unwrap());
        assert_eq!(doc.j, Some(TotalMap::new(vec![0, 2, 1]).unwrap()));
        assert_eq!(doc.source_name, "z3");
    }

    #[test]
    fn parses_trivial() {
        let doc = parse_table("t", "1\n0").unwrap();
        assert_eq!(doc.table.entries(), &[0]);
        assert_eq!(doc.j, None);
    }

    #[test]
    fn out_of_range_carries_line() {
        assert_eq!(
            parse_table("bad", "2\n0 1\n1 2"),
            Err(ParseError::EntryOutOfRange {
                line: 3,
                value: 2,
                order: 2
            })
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = parse_table(
            "c",
            "# header\n\n2\n# row comment\n0 1\n1 0\n\nJ: 0 1\n# trailing\n",
        )
        .unwrap();
        assert_eq!(doc.table, CayleyTable::cyclic_group(2).unwrap());
        assert!(doc.j.is_some());
    }

    #[test]
    fn error_kinds_and_lines() {
        let err = |text| parse_table("e", text).unwrap_err();
        assert!(matches!(err("x\n0"), ParseError::BadHeader { line: 1, .. }));
        assert!(matches!(
            err("2 2\n0 1\n1 0"),
            ParseError::BadHeader { line: 1, .. }
        ));
        assert!(matches!(err("0"), ParseError::BadHeader { line: 1, .. }));
        assert!(matches!(err(""), ParseError::BadHeader { line: 1, .. }));
        assert!(matches!(
            err("2\n0 1 1\n1 0"),
            ParseError::BadRow { line: 2, .. }
        ));
        assert!(matches!(err("2\n0 1"), ParseError::BadRow { line: 3, .. }));
        assert!(matches!(
            err("2\n0 1\nJ: 0 1"),
            ParseError::BadRow { line: 3, .. }
        ));
        assert!(matches!(
            err("2\n0 -1\n1 0"),
            ParseError::BadRow { line: 2, .. }
        ));
        assert!(matches!(
            err("2\n0 1\n1 0\nK: 0 1"),
            ParseError::BadJLine { line: 4, .. }
        ));
        assert!(matches!(
            err("2\n0 1\n1 0\nJ: 0"),
            ParseError::BadJLine { line: 4, .. }
        ));
        assert!(matches!(
            err("2\n0 1\n1 0\nJ: 0 1\n0 1"),
            ParseError::BadJLine { line: 5, .. }
        ));
        assert!(matches!(
            err("2\n0 1\n1 0\nJ: 0 5"),
            ParseError::EntryOutOfRange {
                line: 4,
                value: 5,
                ..
            }
        ));
    }

    #[test]
    fn multi_document_files() {
        let text = "# enumeration\n\n1\n0\nJ: 0\n\n2\n0 1\n1 0\nJ: 0 1\n";
        let docs = parse_documents("multi", text).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[1].table.order(), 2);
        let err = parse_documents("multi", "1\n0\n\n2\n0 1\n1 3\n").unwrap_err();
        assert_eq!(err.line(), 6);
        assert!(parse_documents("empty", "# nothing\n").is_err());
    }

    #[test]
    fn render_then_parse() {
        let doc = parse_table("z3", "3\n0 1 2\n1 2 0\n2 0 1\nJ: 0 2 1").unwrap();
        let text = render_document(&doc);
        assert_eq!(text, "3\n0 1 2\n1 2 0\n2 0 1\nJ: 0 2 1\n");
        assert_eq!(parse_table("z3", &text).unwrap(), doc);
    }
}
