//! Lower-bound constructions and seeded test corpora.

use std::ops::Range;

use thiserror::Error;

use crate::colouring::{Colour, ColouredCompleteGraph};
use crate::rng::{self, Probability};

/// Chromatic number, order and smallest colour-class size of a target graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BurrParams {
    pub chi: usize,
    pub order: usize,
    pub sigma: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("invalid parameters: chi = {chi}, order = {order}, sigma = {sigma}")]
    InvalidBurrParams { chi: usize, order: usize, sigma: usize },
    #[error("clique size r = {0} must be at least 2")]
    CliqueTooSmall(usize),
    #[error("matching size n must be at least 1")]
    EmptyMatching,
    #[error("{flips} flips requested but only {pairs} pairs exist")]
    TooManyFlips { flips: usize, pairs: usize },
}

impl BurrParams {
    pub fn new(chi: usize, order: usize, sigma: usize) -> Result<Self, ExtremalError> {
        if chi < 2 || order < chi || sigma < 1 {
            return Err(ExtremalError::InvalidBurrParams { chi, order, sigma });
        }
        Ok(Self { chi, order, sigma })
    }

    /// The parameters of nK_r: chromatic number r, order rn, smallest class n.
    pub fn clique_matching(r: usize, n: usize) -> Result<Self, ExtremalError> {
        Self::new(r, r * n, n)
    }
}

/// (χ − 1)(|G| − 1) + σ.
pub fn burr_lower_bound(p: BurrParams) -> usize {
    (p.chi - 1) * (p.order - 1) + p.sigma
}

/// Index ranges of the parts of [`burr_colouring`]: r − 1 parts of size
/// rn − 1, then the small part Y of size n − 1 (possibly empty).
pub fn burr_layout(r: usize, n: usize) -> Vec<Range<usize>> {
    let big = r * n - 1;
    let mut parts: Vec<Range<usize>> = (0..r - 1).map(|i| i * big..(i + 1) * big).collect();
    let start = (r - 1) * big;
    parts.push(start..start + n - 1);
    parts
}

/// Blue cliques on the parts of [`burr_layout`], red between parts.
///
/// Has (r − 1)(rn − 1) + n − 1 vertices and no monochromatic connected nK_r:
/// blue components are too small, and every red K_r needs a vertex of Y.
pub fn burr_colouring(r: usize, n: usize) -> Result<ColouredCompleteGraph, ExtremalError> {
    if r < 2 {
        return Err(ExtremalError::CliqueTooSmall(r));
    }
    if n < 1 {
        return Err(ExtremalError::EmptyMatching);
    }
    let layout = burr_layout(r, n);
    let total = layout.last().map_or(0, |y| y.end);
    let part_of = |v: usize| layout.iter().position(|p| p.contains(&v)).expect("layout covers all vertices");
    let parts: Vec<usize> = (0..total).map(part_of).collect();
    Ok(ColouredCompleteGraph::from_fn(total, |u, v| {
        if parts[u] == parts[v] {
            Colour::Blue
        } else {
            Colour::Red
        }
    })
    .expect("burr colouring has at least one vertex"))
}

/// Each pair `(i, j)`, `i > j`, in row-major order is red with probability
/// `red_probability`, one SplitMix64 draw per pair.
///
/// # Panics
/// If `vertex_count == 0`.
pub fn random_colouring(vertex_count: usize, red_probability: Probability, seed: u64) -> ColouredCompleteGraph {
    let mut gen = rng::generator(seed);
    ColouredCompleteGraph::from_fn(vertex_count, |_, _| {
        if red_probability.sample(&mut gen) {
            Colour::Red
        } else {
            Colour::Blue
        }
    })
    .expect("vertex_count must be positive")
}

/// The pair at row-major lower-triangular position `index`.
pub fn pair_at(index: usize) -> (usize, usize) {
    // Row i starts at i(i-1)/2.
    let mut i = (((8 * index + 1) as f64).sqrt() as usize).div_ceil(2);
    while i * (i - 1) / 2 > index {
        i -= 1;
    }
    while (i + 1) * i / 2 <= index {
        i += 1;
    }
    (i, index - i * (i - 1) / 2)
}

/// Toggles exactly `flips` distinct pairs, chosen uniformly without
/// replacement. Applying it twice with the same arguments restores `g`.
pub fn perturb(g: &ColouredCompleteGraph, flips: usize, seed: u64) -> Result<ColouredCompleteGraph, ExtremalError> {
    let pairs = g.pair_count();
    if flips > pairs {
        return Err(ExtremalError::TooManyFlips { flips, pairs });
    }
    let mut gen = rng::generator(seed);
    let chosen: Vec<(usize, usize)> =
        rng::sample_without_replacement(&mut gen, pairs, flips).into_iter().map(pair_at).collect();
    Ok(g.with_toggled(&chosen))
}

/// Appends one vertex joined to every old vertex, each edge red with
/// probability `red_probability`.
pub fn with_extra_vertex(g: &ColouredCompleteGraph, red_probability: Probability, seed: u64) -> ColouredCompleteGraph {
    let old = g.vertex_count();
    let mut gen = rng::generator(seed);
    let new_edges: Vec<Colour> = (0..old)
        .map(|_| if red_probability.sample(&mut gen) { Colour::Red } else { Colour::Blue })
        .collect();
    ColouredCompleteGraph::from_fn(old + 1, |u, v| if u == old { new_edges[v] } else { g.colour(u, v) })
        .expect("non-empty")
}

/// The extremal colouring for (r, n) grown to the theorem's vertex count by
/// one vertex with seeded fair-coin colours, then `flips` seeded toggles.
pub fn perturbed_burr(r: usize, n: usize, flips: usize, seed: u64) -> Result<ColouredCompleteGraph, ExtremalError> {
    let base = burr_colouring(r, n)?;
    let grown = with_extra_vertex(&base, Probability::new(1, 2).expect("valid"), seed);
    perturb(&grown, flips, seed.wrapping_add(1))
}
