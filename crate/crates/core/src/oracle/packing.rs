//! Exact maximum packings of disjoint monochromatic r-cliques by
//! branch-and-bound.

use std::collections::HashMap;

use thiserror::Error;

use crate::colouring::{Colour, ColouredCompleteGraph};
use crate::vertex_set::{VertexSet, WORD_BITS};

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("search budget of {budget} nodes exhausted")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// All `colour` cliques of a fixed size inside a candidate set, in
/// lexicographic order.
pub struct Cliques<'g> {
    g: &'g ColouredCompleteGraph,
    colour: Colour,
    need: usize,
    stack: Vec<Vec<u64>>,
    chosen: Vec<usize>,
    emitted_empty: bool,
}

impl<'g> Cliques<'g> {
    pub fn new(g: &'g ColouredCompleteGraph, colour: Colour, size: usize, candidates: &VertexSet) -> Self {
        Self {
            g,
            colour,
            need: size,
            stack: vec![candidates.words().to_vec()],
            chosen: Vec::with_capacity(size),
            emitted_empty: false,
        }
    }
}

impl Iterator for Cliques<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.need == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Vec::new());
        }
        loop {
            let top = self.stack.last_mut()?;
            let left: usize = top.iter().map(|w| w.count_ones() as usize).sum();
            if left < self.need - self.chosen.len() {
                self.stack.pop();
                self.chosen.pop();
                continue;
            }
            let w = top.iter().position(|&x| x != 0).expect("left > 0");
            let v = w * WORD_BITS + top[w].trailing_zeros() as usize;
            top[w] &= top[w] - 1;
            if self.chosen.len() + 1 == self.need {
                let mut out = self.chosen.clone();
                out.push(v);
                return Some(out);
            }
            let next: Vec<u64> = top.iter().zip(self.g.row(v, self.colour)).map(|(a, b)| a & b).collect();
            self.chosen.push(v);
            self.stack.push(next);
        }
    }
}

enum Step {
    Leaf,
    Take(Vec<usize>, VertexSet),
    Skip(VertexSet),
}

/// Branch-and-bound over the lowest available vertex: either it joins one
/// of the cliques through it, or it is discarded. Exact values of visited
/// residual sets are memoized.
pub struct PackingSolver<'g> {
    g: &'g ColouredCompleteGraph,
    colour: Colour,
    r: usize,
    memo: HashMap<VertexSet, (usize, Step)>,
    nodes: u64,
    budget: u64,
}

impl<'g> PackingSolver<'g> {
    pub fn new(g: &'g ColouredCompleteGraph, colour: Colour, r: usize, budget: u64) -> Self {
        assert!(r >= 1);
        Self { g, colour, r, memo: HashMap::new(), nodes: 0, budget }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Maximum packing inside `within`, with one optimal packing.
    pub fn maximum(&mut self, within: &VertexSet) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
        self.solve(within.clone())?;
        let mut out = Vec::new();
        let mut current = within.clone();
        loop {
            match &self.memo[&current].1 {
                Step::Leaf => return Ok(out),
                Step::Take(clique, next) => {
                    out.push(clique.clone());
                    current = next.clone();
                }
                Step::Skip(next) => current = next.clone(),
            }
        }
    }

    fn solve(&mut self, avail: VertexSet) -> Result<usize, BudgetExceeded> {
        if let Some((value, _)) = self.memo.get(&avail) {
            return Ok(*value);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded { budget: self.budget });
        }
        let live = self.clique_vertices(&avail);
        let bound = self.colour_class_bound(&live);
        let Some(v) = live.first().filter(|_| bound > 0) else {
            self.memo.insert(avail, (0, Step::Leaf));
            return Ok(0);
        };
        let mut best = 0;
        let mut step = Step::Leaf;
        let mut through_v = live.intersection(&self.g.neighbours(v, self.colour));
        through_v.remove(v);
        let g = self.g;
        for rest in Cliques::new(g, self.colour, self.r - 1, &through_v) {
            let mut clique = Vec::with_capacity(self.r);
            clique.push(v);
            clique.extend(rest);
            let mut next = live.clone();
            for &u in &clique {
                next.remove(u);
            }
            if self.colour_class_bound(&next) < best {
                continue;
            }
            let value = 1 + self.solve(next.clone())?;
            if value > best {
                best = value;
                step = Step::Take(clique, next);
            }
            if best == bound {
                break;
            }
        }
        if best < bound {
            let mut next = live.clone();
            next.remove(v);
            if self.colour_class_bound(&next) > best {
                let value = self.solve(next.clone())?;
                if value > best {
                    best = value;
                    step = Step::Skip(next);
                }
            }
        }
        self.memo.insert(avail, (best, step));
        Ok(best)
    }

    /// Vertices of `avail` lying in at least one r-clique inside `avail`.
    fn clique_vertices(&self, avail: &VertexSet) -> VertexSet {
        let mut live = VertexSet::empty(avail.universe());
        for v in avail.iter() {
            if live.contains(v) {
                continue;
            }
            let mut around = avail.intersection(&self.g.neighbours(v, self.colour));
            around.remove(v);
            if let Some(rest) = self.g.find_clique(self.colour, self.r - 1, &around) {
                live.insert(v);
                for u in rest {
                    live.insert(u);
                }
            }
        }
        live
    }

    /// Largest P with Σ_j min(|I_j|, P) ≥ rP over a greedy partition of `avail`
    /// into sets independent in `colour`; a clique meets each such set at most
    /// once.
    fn colour_class_bound(&self, avail: &VertexSet) -> usize {
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in avail.iter() {
            let row = self.g.row(v, self.colour);
            let slot = classes
                .iter_mut()
                .find(|c| c.words().iter().zip(row).all(|(a, b)| a & b == 0));
            match slot {
                Some(c) => c.insert(v),
                None => classes.push(VertexSet::from_vertices(avail.universe(), [v])),
            }
        }
        let sizes: Vec<usize> = classes.iter().map(VertexSet::count).collect();
        let mut p = avail.count() / self.r;
        while p > 0 && sizes.iter().map(|&s| s.min(p)).sum::<usize>() < self.r * p {
            p -= 1;
        }
        p
    }
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// A colour component with a maximum packing inside it.
pub type ComponentPacking = (VertexSet, Vec<Vec<usize>>);

/// Maximum packing inside each `colour` component, in component order.
/// `budget` is the node allowance left and is decremented as nodes are spent.
pub fn packings_per_component(
    g: &ColouredCompleteGraph,
    colour: Colour,
    r: usize,
    budget: &mut u64,
) -> Result<Vec<ComponentPacking>, BudgetExceeded> {
    let mut out = Vec::new();
    for component in g.colour_components(colour, &g.all_vertices()) {
        let mut solver = PackingSolver::new(g, colour, r, *budget);
        let packing = solver.maximum(&component);
        *budget -= solver.nodes().min(*budget);
        out.push((component, packing?));
    }
    Ok(out)
}

/// Best packing inside a single `colour` component, with that component.
pub fn best_connected_packing(
    g: &ColouredCompleteGraph,
    colour: Colour,
    r: usize,
    budget: &mut u64,
) -> Result<(Vec<Vec<usize>>, Option<VertexSet>), BudgetExceeded> {
    let mut best: (Vec<Vec<usize>>, Option<VertexSet>) = (Vec::new(), None);
    for component in g.colour_components(colour, &g.all_vertices()) {
        if component.count() / r <= best.0.len() {
            continue;
        }
        let mut solver = PackingSolver::new(g, colour, r, *budget);
        let packing = solver.maximum(&component);
        *budget -= solver.nodes().min(*budget);
        let packing = packing?;
        if packing.len() > best.0.len() {
            best = (packing, Some(component));
        }
    }
    Ok(best)
}

/// Maximum over `colour` components of the maximum disjoint `colour` K_r
/// packing inside that component.
pub fn max_connected_packing(g: &ColouredCompleteGraph, colour: Colour, r: usize) -> usize {
    best_connected_packing(g, colour, r, &mut DEFAULT_NODE_BUDGET.clone()).expect("desk-scale input").0.len()
}
