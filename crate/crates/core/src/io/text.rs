//! Plain-text algebra files.
//!
//! ```text
//! # comment
//! size 3
//! elements 0 a 1
//! order
//! 1 1 1
//! 0 1 1
//! 0 0 1
//! mult
//! 0 0 0
//! 0 0 a
//! 0 a 1
//! ```
//!
//! `elements` is optional (default names `0`, `a`, `b`, …, `1`); an
//! `impl` section in the shape of `mult` may follow and is cross-checked
//! against the derived residuum.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::algebra::{default_names, ResiduatedLattice, ValidationReport};

/// A syntax problem at a 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Clone, Debug, Error)]
pub enum ParseError {
    #[error("{}", join_lines(.0))]
    Syntax(Vec<Diagnostic>),
    #[error("{}", .report.describe(.names).join("\n"))]
    Invalid {
        report: ValidationReport,
        names: Vec<String>,
    },
}

fn join_lines(d: &[Diagnostic]) -> String {
    d.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
}

impl ParseError {
    /// Human-readable messages, one per problem.
    pub fn messages(&self) -> Vec<String> {
        match self {
            ParseError::Syntax(d) => d.iter().map(|d| d.to_string()).collect(),
            ParseError::Invalid { report, names } => report.describe(names),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Order,
    Mult,
    Impl,
}

impl Section {
    fn name(self) -> &'static str {
        match self {
            Section::Order => "order",
            Section::Mult => "mult",
            Section::Impl => "impl",
        }
    }
}

struct Parser {
    diags: Vec<Diagnostic>,
    size: Option<usize>,
    names: Option<Vec<String>>,
    order: Vec<Vec<bool>>,
    mult: Vec<Vec<usize>>,
    imp: Vec<Vec<usize>>,
    seen: Vec<Section>,
    current: Option<(Section, usize)>,
}

impl Parser {
    fn err(&mut self, line: usize, message: impl Into<String>) {
        self.diags.push(Diagnostic {
            line,
            message: message.into(),
        });
    }

    fn lookup(&self) -> HashMap<String, usize> {
        let names = self
            .names
            .clone()
            .unwrap_or_else(|| default_names(self.size.unwrap_or(0)));
        names.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
    }

    fn header(&mut self, line: usize, words: &[&str]) -> bool {
        match words[0] {
            "size" => {
                if self.size.is_some() {
                    self.err(line, "duplicate `size` line");
                } else if words.len() != 2 {
                    self.err(line, "expected `size N`");
                } else {
                    match words[1].parse::<usize>() {
                        Ok(n) if (1..=crate::elements::MAX_SIZE).contains(&n) => self.size = Some(n),
                        Ok(n) => self.err(line, format!("size {n} out of range 1..={}", crate::elements::MAX_SIZE)),
                        Err(_) => self.err(line, format!("`{}` is not a size", words[1])),
                    }
                }
                true
            }
            "elements" => {
                let Some(n) = self.size else {
                    self.err(line, "`elements` before `size`");
                    return true;
                };
                let names: Vec<String> = words[1..].iter().map(|s| s.to_string()).collect();
                if names.len() != n {
                    self.err(line, format!("expected {n} element names, found {}", names.len()));
                } else if let Some(dup) = (0..n).find(|&i| names[..i].contains(&names[i])) {
                    self.err(line, format!("element name `{}` repeated", names[dup]));
                } else if self.seen.contains(&Section::Mult) || self.seen.contains(&Section::Impl) {
                    self.err(line, "`elements` must precede the tables");
                } else {
                    self.names = Some(names);
                }
                true
            }
            "order" | "mult" | "impl" if words.len() == 1 => {
                let sec = match words[0] {
                    "order" => Section::Order,
                    "mult" => Section::Mult,
                    _ => Section::Impl,
                };
                if self.size.is_none() {
                    self.err(line, format!("`{}` before `size`", sec.name()));
                } else if self.seen.contains(&sec) {
                    self.err(line, format!("duplicate `{}` section", sec.name()));
                }
                self.seen.push(sec);
                self.current = Some((sec, line));
                true
            }
            _ => false,
        }
    }

    fn row(&mut self, line: usize, words: &[&str]) {
        let Some((sec, _)) = self.current else {
            self.err(line, format!("unexpected `{}`", words.join(" ")));
            return;
        };
        let n = self.size.unwrap_or(0);
        if words.len() != n {
            self.err(
                line,
                format!("{} row has {} entries, expected {n}", sec.name(), words.len()),
            );
            return;
        }
        match sec {
            Section::Order => {
                if self.order.len() == n {
                    self.err(line, "too many `order` rows");
                    return;
                }
                let mut row = Vec::with_capacity(n);
                for w in words {
                    match *w {
                        "0" => row.push(false),
                        "1" => row.push(true),
                        other => {
                            self.err(line, format!("order entry `{other}` is not 0 or 1"));
                            return;
                        }
                    }
                }
                self.order.push(row);
            }
            Section::Mult | Section::Impl => {
                let lookup = self.lookup();
                let mut row = Vec::with_capacity(n);
                for w in words {
                    match lookup.get(*w) {
                        Some(&i) => row.push(i),
                        None => {
                            self.err(line, format!("unknown element `{w}`"));
                            return;
                        }
                    }
                }
                let table = if sec == Section::Mult {
                    &mut self.mult
                } else {
                    &mut self.imp
                };
                if table.len() == n {
                    self.err(line, format!("too many `{}` rows", sec.name()));
                    return;
                }
                table.push(row);
            }
        }
    }
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<ResiduatedLattice, ParseError> {
    let mut p = Parser {
        diags: Vec::new(),
        size: None,
        names: None,
        order: Vec::new(),
        mult: Vec::new(),
        imp: Vec::new(),
        seen: Vec::new(),
        current: None,
    };
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = trimmed.split_whitespace().collect();
        if !p.header(line, &words) {
            p.row(line, &words);
        }
    }
    let end = last_line.max(1);
    match p.size {
        None => p.err(end, "missing `size` line"),
        Some(n) => {
            for (sec, table_len) in [(Section::Order, p.order.len()), (Section::Mult, p.mult.len())] {
                if !p.seen.contains(&sec) {
                    p.err(end, format!("missing `{}` section", sec.name()));
                } else if table_len != n && p.diags.is_empty() {
                    p.err(end, format!("`{}` has {table_len} rows, expected {n}", sec.name()));
                }
            }
            if p.seen.contains(&Section::Impl) && p.imp.len() != n && p.diags.is_empty() {
                p.err(end, format!("`impl` has {} rows, expected {n}", p.imp.len()));
            }
        }
    }
    if !p.diags.is_empty() {
        return Err(ParseError::Syntax(p.diags));
    }
    let n = p.size.unwrap();
    let names = p.names.unwrap_or_else(|| default_names(n));
    let imp = p.seen.contains(&Section::Impl).then_some(p.imp);
    match ResiduatedLattice::build(&p.order, &p.mult, imp.as_deref()) {
        Ok(a) => Ok(a.with_names(names)),
        Err(report) => Err(ParseError::Invalid { report, names }),
    }
}

/// Writes an algebra in the file format, including its implication table.
pub fn serialize_algebra(a: &ResiduatedLattice) -> String {
    let n = a.size();
    let names = a.names();
    let mut out = String::new();
    writeln!(out, "size {n}").unwrap();
    writeln!(out, "elements {}", names.join(" ")).unwrap();
    out.push_str("order\n");
    for x in 0..n {
        let row: Vec<&str> = (0..n).map(|y| if a.leq(x, y) { "1" } else { "0" }).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    for (title, f) in [
        ("mult", &(|x, y| a.mult(x, y)) as &dyn Fn(usize, usize) -> usize),
        ("impl", &|x, y| a.imp(x, y)),
    ] {
        writeln!(out, "{title}").unwrap();
        for x in 0..n {
            let row: Vec<&str> = (0..n).map(|y| names[f(x, y)].as_str()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO: &str = "size 2\norder\n1 1\n0 1\nmult\n0 0\n0 1\n";

    #[test]
    fn two_element_boolean_algebra() {
        let a = parse_algebra(TWO).unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(a.names(), ["0", "1"]);
        assert!(a.classify().mv);
    }

    #[test]
    fn round_trip() {
        let a = parse_algebra(TWO).unwrap();
        let text = serialize_algebra(&a);
        let b = parse_algebra(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(serialize_algebra(&b), text);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let bad = "# header\nsize 2\norder\n1 1\n0 2\nmult\n0 x\n0 1\n";
        let ParseError::Syntax(d) = parse_algebra(bad).unwrap_err() else {
            panic!("expected syntax errors");
        };
        assert_eq!(d[0].line, 5);
        assert!(d[0].message.contains("not 0 or 1"));
        assert_eq!(d[1].line, 7);
        assert!(d[1].message.contains("unknown element `x`"));
    }

    #[test]
    fn missing_sections_and_wrong_width() {
        let err = parse_algebra("size 2\norder\n1 1 1\n").unwrap_err();
        let msgs = err.messages();
        assert!(msgs.iter().any(|m| m.starts_with("line 3:") && m.contains("3 entries")));
        assert!(msgs.iter().any(|m| m.contains("missing `mult`")));
        assert!(parse_algebra("").is_err());
    }

    #[test]
    fn validation_errors_use_names() {
        let text = "size 2\nelements z u\norder\n1 1\n0 1\nmult\nz z\nz z\n";
        let err = parse_algebra(text).unwrap_err();
        assert!(matches!(err, ParseError::Invalid { .. }));
        assert!(err.messages().iter().any(|m| m == "unit law violated at (u,u)"));
    }
}
