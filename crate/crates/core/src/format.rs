//! The `rcm 1` colouring text format.
//!
//! ```text
//! rcm 1
//! <N>
//! <row 1: 1 char>
//! <row 2: 2 chars>
//! ...
//! <row N-1: N-1 chars>
//! ```
//!
//! Character `j` (0-based) of row `i` is the colour of the pair `{i, j}`,
//! `R` or `B`. The final newline is optional.

use std::fmt::Write as _;

use thiserror::Error;

use crate::colouring::{Colour, ColouredCompleteGraph};

pub const COLOURING_HEADER: &str = "rcm 1";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header {expected:?}")]
    BadHeader { line: usize, expected: &'static str },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: expected {expected} characters, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("line {line}: illegal character {found:?}")]
    IllegalCharacter { line: usize, found: char },
    #[error("unexpected end of input after line {line}")]
    Truncated { line: usize },
    #[error("line {line}: trailing content")]
    TrailingContent { line: usize },
}

pub fn serialize_colouring(g: &ColouredCompleteGraph) -> String {
    let n = g.vertex_count();
    let mut out = String::with_capacity(n * n / 2 + 16);
    let _ = write!(out, "{COLOURING_HEADER}\n{n}\n");
    for i in 1..n {
        for j in 0..i {
            out.push(g.colour(i, j).as_char());
        }
        out.push('\n');
    }
    out
}

pub fn parse_colouring(text: &str) -> Result<ColouredCompleteGraph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, COLOURING_HEADER)) => {}
        _ => return Err(ParseError::BadHeader { line: 1, expected: COLOURING_HEADER }),
    }
    let (line, count) = lines.next().ok_or(ParseError::Truncated { line: 1 })?;
    let n: usize = count.trim().parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("vertex count {count:?} is not a non-negative integer"),
    })?;
    if n == 0 {
        return Err(ParseError::Malformed { line, message: "vertex count must be positive".into() });
    }
    let mut red = Vec::new();
    let mut last = line;
    for i in 1..n {
        let (line, row) = lines.next().ok_or(ParseError::Truncated { line: last })?;
        last = line;
        let found = row.chars().count();
        if found != i {
            return Err(ParseError::RowLength { line, expected: i, found });
        }
        for (j, c) in row.chars().enumerate() {
            match Colour::from_char(c) {
                Some(Colour::Red) => red.push((i, j)),
                Some(Colour::Blue) => {}
                None => return Err(ParseError::IllegalCharacter { line, found: c }),
            }
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingContent { line });
    }
    Ok(ColouredCompleteGraph::from_red_pairs(n, &red).expect("pairs are in range by construction"))
}
