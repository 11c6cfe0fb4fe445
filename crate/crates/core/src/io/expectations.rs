//! Regression expectations: one `order <n> mode <mode> pairs <count> classes <count>`
//! line per entry, `#` comments allowed.

use std::fmt;

use crate::error::Result;
use crate::search::{enumerate, group_classes, Mode, SearchConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expectation {
    pub order: usize,
    pub mode: Mode,
    pub pairs: usize,
    pub classes: usize,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {} mode {} pairs {} classes {}",
            self.order, self.mode, self.pairs, self.classes
        )
    }
}

/// Parses expectation lines, skipping blanks and comments. Errors carry the line number.
pub fn parse_expectations(text: &str) -> std::result::Result<Vec<Expectation>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            parse_line(l).ok_or_else(|| format!("line {}: malformed expectation `{l}`", i + 1))
        })
        .collect()
}

fn parse_line(line: &str) -> Option<Expectation> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["order", n, "mode", mode, "pairs", pairs, "classes", classes] => Some(Expectation {
            order: n.parse().ok()?,
            mode: mode.parse().ok()?,
            pairs: pairs.parse().ok()?,
            classes: classes.parse().ok()?,
        }),
        _ => None,
    }
}

/// Recomputes an expectation line from the engine.
pub fn compute_expectation(config: &SearchConfig) -> Result<Expectation> {
    let structures = enumerate(config)?;
    Ok(Expectation {
        order: config.order,
        mode: config.mode,
        pairs: structures.len(),
        classes: group_classes(&structures)?.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip() {
        let e = Expectation {
            order: 3,
            mode: Mode::Oracle,
            pairs: 6,
            classes: 2,
        };
        assert_eq!(e.to_string(), "order 3 mode oracle pairs 6 classes 2");
        assert_eq!(
            parse_expectations(&format!("# note\n\n{e}\n")).unwrap(),
            vec![e]
        );
        assert!(parse_expectations("order x mode oracle pairs 1 classes 1").is_err());
    }
}
