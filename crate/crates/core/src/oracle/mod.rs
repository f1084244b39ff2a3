//! Ground truth at desk scale: exact decisions, certificate checking and
//! exhaustive computation of tiny connected-matching Ramsey numbers.

mod exhaustive;
mod packing;
mod small;
mod verify;

pub use exhaustive::{ramsey_connected_exact, RamseyOutcome, DEFAULT_LEAF_BUDGET};
pub use packing::{
    best_connected_packing, max_connected_packing, packings_per_component, BudgetExceeded, Cliques, PackingSolver,
    DEFAULT_NODE_BUDGET,
};
pub use small::SmallColouring;
pub use verify::{check_disjoint_monochromatic, spanning_witness, verify_certificate, Rejection};

use std::fmt;
use std::str::FromStr;

use crate::certificate::Certificate;
use crate::colouring::{Colour, ColouredCompleteGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// All cliques inside one monochromatic component.
    Connected,
    /// Disjoint monochromatic cliques anywhere.
    Unconnected,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "connected" => Ok(Mode::Connected),
            "unconnected" => Ok(Mode::Unconnected),
            other => Err(format!("unknown mode {other:?}; expected connected or unconnected")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Connected => "connected",
            Mode::Unconnected => "unconnected",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionResult {
    pub answer: bool,
    /// Present iff `answer`. In unconnected mode the cliques need not share a
    /// component.
    pub witness: Option<Certificate>,
    pub mode: Mode,
}

pub fn decide(g: &ColouredCompleteGraph, r: usize, n: usize, mode: Mode) -> DecisionResult {
    decide_with_budget(g, r, n, mode, DEFAULT_NODE_BUDGET).expect("desk-scale input")
}

/// Exact decision: does some colour hold n disjoint K_r (inside one of its
/// components, in connected mode)? Red is tried first.
pub fn decide_with_budget(
    g: &ColouredCompleteGraph,
    r: usize,
    n: usize,
    mode: Mode,
    budget: u64,
) -> Result<DecisionResult, BudgetExceeded> {
    assert!(r >= 2 && n >= 1, "decide needs r >= 2 and n >= 1");
    let mut left = budget;
    for colour in [Colour::Red, Colour::Blue] {
        let cliques = match mode {
            Mode::Connected => {
                let (packing, component) = best_connected_packing(g, colour, r, &mut left)?;
                if packing.len() < n {
                    continue;
                }
                let cliques: Vec<Vec<usize>> = packing.into_iter().take(n).collect();
                let mut cert = Certificate::new(colour, r, cliques);
                cert.component_root = component.and_then(|c| c.first());
                cert.witness_edges = spanning_witness(g, colour, &cert.cliques);
                return Ok(DecisionResult { answer: true, witness: Some(cert), mode });
            }
            Mode::Unconnected => {
                let per = packings_per_component(g, colour, r, &mut left)?;
                per.into_iter().flat_map(|(_, p)| p).collect::<Vec<_>>()
            }
        };
        if cliques.len() >= n {
            let cert = Certificate::new(colour, r, cliques.into_iter().take(n).collect());
            return Ok(DecisionResult { answer: true, witness: Some(cert), mode });
        }
    }
    Ok(DecisionResult { answer: false, witness: None, mode })
}
