//! Packing augmentations: each replaces some red cliques of the packing by
//! strictly more red cliques.

use std::fmt;

use thiserror::Error;

use crate::colouring::{CliquePacking, Colour, ColouredCompleteGraph};
use crate::vertex_set::VertexSet;

/// Which structural contradiction produced an augmentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// r blue components outside the packing: one vertex from each.
    ComponentCount,
    /// A red edge inside one of r − 1 blue components.
    RedEdgeInside,
    /// Two disjoint pairs of a clique, each red-complete to the components
    /// other than its own.
    TwoPairs,
    /// Four vertices of a clique paired with the same component.
    FourWithSame,
    /// A vertex with a red neighbour in every component, plus a pair.
    RedNeighbourPlusPair,
    /// Two vertices that each have a red neighbour in every component.
    TwoRedNeighbours,
    /// A red edge between two triples paired with the same component.
    TripleRedEdge,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::ComponentCount => "component-count",
            Rule::RedEdgeInside => "red-edge-inside",
            Rule::TwoPairs => "two-pairs",
            Rule::FourWithSame => "four-with-same",
            Rule::RedNeighbourPlusPair => "red-neighbour-plus-pair",
            Rule::TwoRedNeighbours => "two-red-neighbours",
            Rule::TripleRedEdge => "triple-red-edge",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    pub retire: Vec<Vec<usize>>,
    pub install: Vec<Vec<usize>>,
    pub rule: Rule,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AugmentationError {
    #[error("retired clique {0:?} is not in the packing")]
    NotInPacking(Vec<usize>),
    #[error("installed clique {0:?} has the wrong size")]
    WrongSize(Vec<usize>),
    #[error("installed clique {0:?} is not monochromatic in the packing colour")]
    NotMonochromatic(Vec<usize>),
    #[error("vertex {0} would be covered twice")]
    Overlap(usize),
    #[error("installs {install} cliques for {retire} retired; no gain")]
    NoGain { retire: usize, install: usize },
}

/// Returns the packing with `aug.retire` removed and `aug.install` appended.
pub fn apply_augmentation(
    g: &ColouredCompleteGraph,
    packing: &CliquePacking,
    aug: &Augmentation,
) -> Result<CliquePacking, AugmentationError> {
    if aug.install.len() < aug.retire.len() + 1 {
        return Err(AugmentationError::NoGain { retire: aug.retire.len(), install: aug.install.len() });
    }
    let mut kept: Vec<Vec<usize>> = packing.cliques.clone();
    for gone in &aug.retire {
        let mut key = gone.clone();
        key.sort_unstable();
        let at = kept.iter().position(|c| *c == key).ok_or_else(|| AugmentationError::NotInPacking(gone.clone()))?;
        kept.remove(at);
    }
    let mut covered = VertexSet::from_vertices(g.vertex_count(), kept.iter().flatten().copied());
    for new in &aug.install {
        if new.len() != packing.r {
            return Err(AugmentationError::WrongSize(new.clone()));
        }
        if !g.is_monochromatic_clique(new, packing.colour) {
            return Err(AugmentationError::NotMonochromatic(new.clone()));
        }
        for &v in new {
            if covered.contains(v) {
                return Err(AugmentationError::Overlap(v));
            }
            covered.insert(v);
        }
        let mut sorted = new.clone();
        sorted.sort_unstable();
        kept.push(sorted);
    }
    Ok(CliquePacking { colour: packing.colour, r: packing.r, cliques: kept })
}

/// Hands out distinct component vertices for completing new red cliques.
pub(crate) struct Completer<'a> {
    g: &'a ColouredCompleteGraph,
    components: &'a [VertexSet],
    used: VertexSet,
}

impl<'a> Completer<'a> {
    pub fn new(g: &'a ColouredCompleteGraph, components: &'a [VertexSet]) -> Self {
        Self { g, components, used: VertexSet::empty(g.vertex_count()) }
    }

    pub fn reserve(&mut self, v: usize) {
        self.used.insert(v);
    }

    /// Smallest unused vertex of component `k` red to every vertex of `core`.
    fn pick(&mut self, k: usize, core: &[usize]) -> Option<usize> {
        let v = self.components[k]
            .iter()
            .find(|&v| !self.used.contains(v) && core.iter().all(|&c| self.g.colour(c, v) == Colour::Red))?;
        self.used.insert(v);
        Some(v)
    }

    /// `core` plus one vertex from every component not in `skip`.
    pub fn complete(&mut self, core: &[usize], skip: &[usize]) -> Option<Vec<usize>> {
        let mut clique = core.to_vec();
        for k in 0..self.components.len() {
            if !skip.contains(&k) {
                clique.push(self.pick(k, core)?);
            }
        }
        clique.sort_unstable();
        Some(clique)
    }
}
