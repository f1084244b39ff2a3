//! Certificates for monochromatic connected clique matchings and their
//! `rcmcert 1` text form.
//!
//! ```text
//! rcmcert 1
//! R              colour, R or B
//! 4 18           r n
//! 0 71 142 213   n lines of r vertices
//! ...
//! edge 0 71      optional connectivity witness edges
//! ```

use std::fmt::Write as _;

use crate::colouring::Colour;
use crate::format::ParseError;

pub const CERTIFICATE_HEADER: &str = "rcmcert 1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub colour: Colour,
    pub r: usize,
    pub cliques: Vec<Vec<usize>>,
    /// Smallest vertex of the monochromatic component holding the cliques,
    /// when known. Not part of the text form.
    pub component_root: Option<usize>,
    /// Edges of `colour` linking the cliques' first vertices. Informational;
    /// the verifier recomputes connectivity itself.
    pub witness_edges: Vec<(usize, usize)>,
    /// True when the search ran on the colour-exchanged graph. Not part of the
    /// text form.
    pub colour_roles_swapped: bool,
}

impl Certificate {
    pub fn new(colour: Colour, r: usize, cliques: Vec<Vec<usize>>) -> Self {
        Self {
            colour,
            r,
            cliques,
            component_root: None,
            witness_edges: Vec::new(),
            colour_roles_swapped: false,
        }
    }

    /// Number of cliques carried.
    pub fn n(&self) -> usize {
        self.cliques.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{CERTIFICATE_HEADER}\n{}\n{} {}\n", self.colour.as_char(), self.r, self.n());
        for clique in &self.cliques {
            let line: Vec<String> = clique.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        for (u, v) in &self.witness_edges {
            let _ = writeln!(out, "edge {u} {v}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, CERTIFICATE_HEADER)) => {}
            _ => return Err(ParseError::BadHeader { line: 1, expected: CERTIFICATE_HEADER }),
        }
        let (line, c) = lines.next().ok_or(ParseError::Truncated { line: 1 })?;
        let colour = match c.trim() {
            "R" => Colour::Red,
            "B" => Colour::Blue,
            other => {
                return Err(ParseError::Malformed { line, message: format!("colour {other:?} is not R or B") })
            }
        };
        let (line, dims) = lines.next().ok_or(ParseError::Truncated { line })?;
        let dims = parse_numbers(line, dims)?;
        let [r, n] = dims[..] else {
            return Err(ParseError::Malformed { line, message: "expected \"r n\"".into() });
        };
        let mut cliques = Vec::with_capacity(n);
        let mut last = line;
        for _ in 0..n {
            let (line, row) = lines.next().ok_or(ParseError::Truncated { line: last })?;
            last = line;
            let clique = parse_numbers(line, row)?;
            if clique.len() != r {
                return Err(ParseError::RowLength { line, expected: r, found: clique.len() });
            }
            cliques.push(clique);
        }
        let mut witness_edges = Vec::new();
        for (line, row) in lines {
            if row.trim().is_empty() {
                continue;
            }
            let Some(rest) = row.strip_prefix("edge ") else {
                return Err(ParseError::TrailingContent { line });
            };
            let ends = parse_numbers(line, rest)?;
            let [u, v] = ends[..] else {
                return Err(ParseError::Malformed { line, message: "expected \"edge u v\"".into() });
            };
            witness_edges.push((u, v));
        }
        Ok(Self { colour, r, cliques, component_root: None, witness_edges, colour_roles_swapped: false })
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| ParseError::Malformed { line, message: format!("{t:?} is not a vertex index") })
        })
        .collect()
}
