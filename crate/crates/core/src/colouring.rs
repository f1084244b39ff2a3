//! Red/blue edge colourings of complete graphs and the clique primitives the
//! finder and the oracles are built from.

use std::fmt;

use thiserror::Error;

use crate::vertex_set::{words_for, VertexSet, WORD_BITS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Colour> {
        match c {
            'R' => Some(Colour::Red),
            'B' => Some(Colour::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColouringError {
    #[error("a colouring needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A complete graph on `0..N` with every edge coloured red or blue.
///
/// Stored as one packed red row and one packed blue row per vertex; the blue
/// row is the complement of the red row with the diagonal cleared. The value
/// is immutable once built and can be shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct ColouredCompleteGraph {
    n: usize,
    stride: usize,
    red: Vec<u64>,
    blue: Vec<u64>,
}

impl ColouredCompleteGraph {
    /// Builds the colouring in which exactly the listed pairs are red.
    /// Duplicate pairs are harmless.
    pub fn from_red_pairs(
        vertex_count: usize,
        red_pairs: &[(usize, usize)],
    ) -> Result<Self, ColouringError> {
        if vertex_count == 0 {
            return Err(ColouringError::NoVertices);
        }
        let stride = words_for(vertex_count);
        let mut red = vec![0u64; vertex_count * stride];
        for &(u, v) in red_pairs {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(ColouringError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(ColouringError::SelfLoop(u));
            }
            red[u * stride + v / WORD_BITS] |= 1 << (v % WORD_BITS);
            red[v * stride + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        }
        Ok(Self::from_red_rows(vertex_count, red))
    }

    /// Builds a colouring from a symmetric colour function evaluated on `u > v`.
    pub fn from_fn<F: FnMut(usize, usize) -> Colour>(
        vertex_count: usize,
        mut colour_of: F,
    ) -> Result<Self, ColouringError> {
        if vertex_count == 0 {
            return Err(ColouringError::NoVertices);
        }
        let stride = words_for(vertex_count);
        let mut red = vec![0u64; vertex_count * stride];
        for u in 1..vertex_count {
            for v in 0..u {
                if colour_of(u, v) == Colour::Red {
                    red[u * stride + v / WORD_BITS] |= 1 << (v % WORD_BITS);
                    red[v * stride + u / WORD_BITS] |= 1 << (u % WORD_BITS);
                }
            }
        }
        Ok(Self::from_red_rows(vertex_count, red))
    }

    pub fn monochromatic(vertex_count: usize, colour: Colour) -> Result<Self, ColouringError> {
        Self::from_fn(vertex_count, |_, _| colour)
    }

    fn from_red_rows(n: usize, red: Vec<u64>) -> Self {
        let stride = words_for(n);
        let mut blue = vec![0u64; n * stride];
        let full = VertexSet::full(n);
        for v in 0..n {
            for w in 0..stride {
                blue[v * stride + w] = !red[v * stride + w] & full.words()[w];
            }
            blue[v * stride + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
        Self { n, stride, red, blue }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// # Panics
    /// On `u == v` or out-of-range vertices.
    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Colour {
        assert!(u != v, "no colour on the diagonal ({u})");
        assert!(u < self.n && v < self.n, "pair ({u}, {v}) out of range");
        if self.red[u * self.stride + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1 {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    #[inline]
    pub(crate) fn row(&self, v: usize, colour: Colour) -> &[u64] {
        let rows = match colour {
            Colour::Red => &self.red,
            Colour::Blue => &self.blue,
        };
        &rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbours(&self, v: usize, colour: Colour) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v, colour).to_vec())
    }

    /// Number of `colour` neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, colour: Colour, set: &VertexSet) -> usize {
        self.row(v, colour)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Same vertices with red and blue exchanged.
    pub fn swapped(&self) -> Self {
        Self { n: self.n, stride: self.stride, red: self.blue.clone(), blue: self.red.clone() }
    }

    /// Copy of the colouring with the listed pairs toggled.
    pub fn with_toggled(&self, pairs: &[(usize, usize)]) -> Self {
        let mut red = self.red.clone();
        for &(u, v) in pairs {
            assert!(u != v && u < self.n && v < self.n);
            red[u * self.stride + v / WORD_BITS] ^= 1 << (v % WORD_BITS);
            red[v * self.stride + u / WORD_BITS] ^= 1 << (u % WORD_BITS);
        }
        Self::from_red_rows(self.n, red)
    }

    /// Red pairs `(u, v)` with `u > v`, in row-major lower-triangular order.
    pub fn red_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..self.n {
            for v in 0..u {
                if self.colour(u, v) == Colour::Red {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced colouring on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self, ColouringError> {
        Self::from_fn(vertices.len(), |a, b| self.colour(vertices[a], vertices[b]))
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Connected components of the `colour` subgraph induced on `within`,
    /// ordered by their smallest vertex.
    pub fn colour_components(&self, colour: Colour, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut components = Vec::new();
        while let Some(seed) = remaining.first() {
            let mut component = VertexSet::empty(self.n);
            component.insert(seed);
            remaining.remove(seed);
            let mut frontier = vec![seed];
            while let Some(v) = frontier.pop() {
                let row = self.row(v, colour);
                for (w, (&r, rem)) in row.iter().zip(remaining.words()).enumerate() {
                    let mut hits = r & rem;
                    while hits != 0 {
                        let u = w * WORD_BITS + hits.trailing_zeros() as usize;
                        hits &= hits - 1;
                        frontier.push(u);
                        component.insert(u);
                    }
                }
                remaining.difference_with(&component);
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self, colour: Colour) -> bool {
        self.colour_components(colour, &self.all_vertices()).len() <= 1
    }

    /// True iff every pair inside `vertices` has colour `colour`.
    pub fn is_monochromatic_clique(&self, vertices: &[usize], colour: Colour) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| u != v && self.colour(u, v) == colour)
        })
    }

    pub fn is_monochromatic_set(&self, set: &VertexSet, colour: Colour) -> bool {
        set.iter().all(|v| {
            let row = self.row(v, colour);
            let mut others = set.clone();
            others.remove(v);
            others.words().iter().zip(row).all(|(o, r)| o & !r == 0)
        })
    }

    /// Lexicographically smallest `colour` clique of size `r` inside `within`.
    pub fn find_clique(&self, colour: Colour, r: usize, within: &VertexSet) -> Option<Vec<usize>> {
        self.find_clique_from(colour, r, within, 0)
    }

    /// As [`Self::find_clique`], considering only cliques whose smallest
    /// vertex is at least `start`.
    fn find_clique_from(
        &self,
        colour: Colour,
        r: usize,
        within: &VertexSet,
        start: usize,
    ) -> Option<Vec<usize>> {
        if r == 0 {
            return Some(Vec::new());
        }
        let mut top = within.words().to_vec();
        for (w, word) in top.iter_mut().enumerate() {
            let lo = w * WORD_BITS;
            if start >= lo + WORD_BITS {
                *word = 0;
            } else if start > lo {
                *word &= !((1u64 << (start - lo)) - 1);
            }
        }
        let mut scratch = vec![0u64; self.stride * r];
        let mut chosen = Vec::with_capacity(r);
        if self.extend_clique(colour, &top, r, &mut scratch, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    // Depth-first over candidates in increasing order; the first clique found
    // is the lexicographically smallest one.
    fn extend_clique(
        &self,
        colour: Colour,
        candidates: &[u64],
        need: usize,
        scratch: &mut [u64],
        chosen: &mut Vec<usize>,
    ) -> bool {
        let stride = self.stride;
        let (level, deeper) = scratch.split_at_mut(stride);
        level.copy_from_slice(candidates);
        let mut remaining: usize = level.iter().map(|w| w.count_ones() as usize).sum();
        while remaining >= need {
            let Some(w) = level.iter().position(|&x| x != 0) else { break };
            let v = w * WORD_BITS + level[w].trailing_zeros() as usize;
            level[w] &= level[w] - 1;
            remaining -= 1;
            if need == 1 {
                chosen.push(v);
                return true;
            }
            let row = self.row(v, colour);
            let next: Vec<u64> = level.iter().zip(row).map(|(a, b)| a & b).collect();
            let next_count: usize = next.iter().map(|w| w.count_ones() as usize).sum();
            if next_count + 1 < need {
                continue;
            }
            chosen.push(v);
            if self.extend_clique(colour, &next, need - 1, deeper, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Greedy maximal packing: repeatedly takes the lexicographically smallest
    /// `colour` r-clique among the still-uncovered vertices of `within`.
    ///
    /// No r-clique of `colour` survives in the uncovered remainder.
    pub fn greedy_clique_packing(&self, colour: Colour, r: usize, within: &VertexSet) -> CliquePacking {
        let mut packing = CliquePacking::new(colour, r);
        self.extend_packing(&mut packing, within);
        packing
    }

    /// Extends `packing` greedily inside `within` until it is maximal there.
    pub fn extend_packing(&self, packing: &mut CliquePacking, within: &VertexSet) {
        let mut uncovered = within.difference(&packing.vertex_set(self.n));
        let mut start = 0;
        while let Some(clique) = self.find_clique_from(packing.colour, packing.r, &uncovered, start) {
            start = clique[0];
            for &v in &clique {
                uncovered.remove(v);
            }
            packing.cliques.push(clique);
        }
    }
}

impl fmt::Debug for ColouredCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColouredCompleteGraph {{ n: {}, red: {:?} }}", self.n, self.red_pairs())
    }
}

/// Pairwise vertex-disjoint monochromatic r-cliques, each stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePacking {
    pub colour: Colour,
    pub r: usize,
    pub cliques: Vec<Vec<usize>>,
}

impl CliquePacking {
    pub fn new(colour: Colour, r: usize) -> Self {
        Self { colour, r, cliques: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_vertices(universe, self.cliques.iter().flatten().copied())
    }

    /// Checks disjointness, sizes and colour against `g`.
    pub fn is_valid_in(&self, g: &ColouredCompleteGraph) -> bool {
        let mut seen = VertexSet::empty(g.vertex_count());
        for c in &self.cliques {
            if c.len() != self.r || c.iter().any(|&v| v >= g.vertex_count() || seen.contains(v)) {
                return false;
            }
            if !g.is_monochromatic_clique(c, self.colour) {
                return false;
            }
            for &v in c {
                seen.insert(v);
            }
        }
        true
    }
}
