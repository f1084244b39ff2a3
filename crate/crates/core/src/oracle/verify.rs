//! Independent certificate checking.
//!
//! Reads the colouring only through [`ColouredCompleteGraph::colour`] and does
//! its own connectivity search, so it shares nothing with the finder.

use std::collections::VecDeque;
use std::fmt;

use crate::certificate::Certificate;
use crate::colouring::{Colour, ColouredCompleteGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    WrongCliqueCount { expected: usize, found: usize },
    WrongCliqueSize { clique: usize, expected: usize, found: usize },
    VertexOutOfRange { clique: usize, vertex: usize },
    NotDisjoint { vertex: usize, first: usize, second: usize },
    NotMonochromatic { clique: usize, u: usize, v: usize },
    NotInOneComponent { u: usize, v: usize },
    BadWitnessEdge { u: usize, v: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::WrongCliqueCount { expected, found } => {
                write!(f, "wrong clique count: expected {expected}, found {found}")
            }
            Rejection::WrongCliqueSize { clique, expected, found } => {
                write!(f, "clique {clique} has {found} vertices, expected {expected}")
            }
            Rejection::VertexOutOfRange { clique, vertex } => {
                write!(f, "clique {clique} names vertex {vertex}, which is out of range")
            }
            Rejection::NotDisjoint { vertex, first, second } => {
                write!(f, "not disjoint: vertex {vertex} appears in cliques {first} and {second}")
            }
            Rejection::NotMonochromatic { clique, u, v } => {
                write!(f, "not monochromatic: clique {clique} has pair ({u}, {v}) in the other colour")
            }
            Rejection::NotInOneComponent { u, v } => {
                write!(f, "not in one component: vertices {u} and {v} are not joined in the stated colour")
            }
            Rejection::BadWitnessEdge { u, v } => write!(f, "witness edge ({u}, {v}) is not in the stated colour"),
        }
    }
}

/// Accepts iff the certificate carries `n` pairwise-disjoint `r`-cliques, all
/// in `cert.colour` and all inside one connected component of that colour.
pub fn verify_certificate(g: &ColouredCompleteGraph, cert: &Certificate, r: usize, n: usize) -> Result<(), Rejection> {
    check_disjoint_monochromatic(g, cert.colour, &cert.cliques, r, n)?;
    let vertex_count = g.vertex_count();
    for &(u, v) in &cert.witness_edges {
        if u >= vertex_count || v >= vertex_count || u == v || g.colour(u, v) != cert.colour {
            return Err(Rejection::BadWitnessEdge { u, v });
        }
    }
    let Some(&anchor) = cert.cliques.iter().flatten().next() else { return Ok(()) };
    let reach = reachable(g, cert.colour, anchor);
    for &v in cert.cliques.iter().flatten() {
        if !reach[v] {
            return Err(Rejection::NotInOneComponent { u: anchor, v });
        }
    }
    Ok(())
}

/// The clique-level checks without the connectivity requirement.
pub fn check_disjoint_monochromatic(
    g: &ColouredCompleteGraph,
    colour: Colour,
    cliques: &[Vec<usize>],
    r: usize,
    n: usize,
) -> Result<(), Rejection> {
    if cliques.len() != n {
        return Err(Rejection::WrongCliqueCount { expected: n, found: cliques.len() });
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for (i, clique) in cliques.iter().enumerate() {
        if clique.len() != r {
            return Err(Rejection::WrongCliqueSize { clique: i, expected: r, found: clique.len() });
        }
        for &v in clique {
            if v >= g.vertex_count() {
                return Err(Rejection::VertexOutOfRange { clique: i, vertex: v });
            }
            if let Some(first) = owner[v] {
                return Err(Rejection::NotDisjoint { vertex: v, first, second: i });
            }
            owner[v] = Some(i);
        }
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                if g.colour(u, v) != colour {
                    return Err(Rejection::NotMonochromatic { clique: i, u, v });
                }
            }
        }
    }
    Ok(())
}

fn reachable(g: &ColouredCompleteGraph, colour: Colour, start: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for (v, seen_v) in seen.iter_mut().enumerate() {
            if !*seen_v && v != u && g.colour(u, v) == colour {
                *seen_v = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Edges of `colour` that connect the first vertex of every clique to the
/// first vertex of clique 0, along breadth-first shortest paths.
pub fn spanning_witness(g: &ColouredCompleteGraph, colour: Colour, cliques: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let Some(root) = cliques.first().and_then(|c| c.first().copied()) else { return Vec::new() };
    let n = g.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for (v, seen_v) in seen.iter_mut().enumerate() {
            if !*seen_v && v != u && g.colour(u, v) == colour {
                *seen_v = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    let mut used = vec![false; n];
    used[root] = true;
    let mut edges = Vec::new();
    for clique in &cliques[1..] {
        let mut v = clique[0];
        while !used[v] {
            used[v] = true;
            let Some(p) = parent[v] else { break };
            edges.push((p.min(v), p.max(v)));
            v = p;
        }
    }
    edges
}
