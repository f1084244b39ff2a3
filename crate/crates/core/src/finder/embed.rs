//! Choosing the host component and embedding n blue cliques into it.

use crate::colouring::{Colour, ColouredCompleteGraph};
use crate::vertex_set::VertexSet;

use super::StructureViolation;

/// Red packing cliques sorted by type, with the per-component host sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueClassification {
    pub type_s: Vec<Vec<usize>>,
    pub type_t: Vec<Vec<usize>>,
    pub components: Vec<VertexSet>,
    /// Per component: one vertex from each type-I clique.
    pub s_selected: Vec<Vec<usize>>,
    /// Per component: single vertices of type-II cliques.
    pub t_star: Vec<Vec<usize>>,
    /// Per component: triples of type-II cliques.
    pub t_delta: Vec<Vec<[usize; 3]>>,
    /// Per component: the component plus its selected and paired vertices.
    pub d: Vec<VertexSet>,
}

impl CliqueClassification {
    pub fn d_sizes(&self) -> Vec<usize> {
        self.d.iter().map(VertexSet::count).collect()
    }

    /// Number of vertices (three per triple) in each component's triples.
    pub fn t_delta_sizes(&self) -> Vec<usize> {
        self.t_delta.iter().map(|t| 3 * t.len()).collect()
    }

    /// Checks the bookkeeping identities of a classification.
    pub fn check(&self, vertex_count: usize, n: usize) -> Result<(), StructureViolation> {
        let total: usize = self.type_s.len() + self.d.iter().map(VertexSet::count).sum::<usize>();
        if total != vertex_count {
            return Err(StructureViolation::new(
                "counting-identity",
                Vec::new(),
                format!("|S| + sum |D_i| = {total}, expected {vertex_count}"),
            ));
        }
        for i in 0..self.components.len() {
            let covered = self.s_selected[i].len() + self.t_star[i].len();
            if covered + self.t_delta[i].len() + 1 > n {
                return Err(StructureViolation::new(
                    "triple-budget",
                    self.t_delta[i].iter().flatten().copied().collect(),
                    format!(
                        "component {i}: |S_i| = {}, |T_i*| = {}, {} triples with n = {n}",
                        self.s_selected[i].len(),
                        self.t_star[i].len(),
                        self.t_delta[i].len()
                    ),
                ));
            }
        }
        Ok(())
    }
}

/// First component with |D_i| ≥ rn + 1, else the first with |D_i| = rn
/// whose triples do not number exactly one.
pub fn select_target(d_sizes: &[usize], t_delta_sizes: &[usize], r: usize, n: usize) -> Option<usize> {
    let need = r * n;
    d_sizes
        .iter()
        .position(|&d| d > need)
        .or_else(|| (0..d_sizes.len()).find(|&i| d_sizes[i] >= need && t_delta_sizes[i] != 3))
}

/// Vertices of the residual component, handed out in increasing order.
struct Residual {
    left: std::vec::IntoIter<usize>,
}

impl Residual {
    fn take(&mut self, k: usize, stage: &'static str) -> Result<Vec<usize>, StructureViolation> {
        let out: Vec<usize> = self.left.by_ref().take(k).collect();
        if out.len() < k {
            return Err(StructureViolation::new(stage, out, format!("component ran out of vertices: needed {k}")));
        }
        Ok(out)
    }
}

/// n disjoint blue r-cliques inside D_i.
pub fn embed_blue_matching(
    g: &ColouredCompleteGraph,
    i: usize,
    class: &CliqueClassification,
    r: usize,
    n: usize,
) -> Result<Vec<Vec<usize>>, StructureViolation> {
    let component = &class.components[i];
    let consumers: Vec<usize> = class.s_selected[i].iter().chain(&class.t_star[i]).copied().collect();
    let mut cliques = assign_partners(g, component, &consumers, r)?;

    let used = VertexSet::from_vertices(g.vertex_count(), cliques.iter().flatten().copied());
    let mut residual = Residual { left: component.difference(&used).to_vec().into_iter() };

    let triangles = &class.t_delta[i];
    let m = triangles.len();
    match m {
        0 => {}
        1 => {
            for &v in &triangles[0][..2] {
                let mut clique = vec![v];
                clique.extend(residual.take(r - 1, "embed-single-triangle")?);
                cliques.push(clique);
            }
        }
        _ if m < r => {
            for j in 0..3 {
                let mut clique: Vec<usize> = triangles.iter().map(|t| t[j]).collect();
                clique.extend(residual.take(r - m, "embed-mixed")?);
                cliques.push(clique);
            }
        }
        _ => {
            // One vertex per triangle in each window of r consecutive entries.
            let column_major: Vec<usize> = (0..3).flat_map(|j| triangles.iter().map(move |t| t[j])).collect();
            for chunk in column_major.chunks(r) {
                let mut clique = chunk.to_vec();
                clique.extend(residual.take(r - chunk.len(), "embed-chunked")?);
                cliques.push(clique);
            }
        }
    }
    while cliques.len() < n {
        cliques.push(residual.take(r, "embed-rest")?);
    }
    cliques.truncate(n);
    for clique in &mut cliques {
        clique.sort_unstable();
        if !g.is_monochromatic_clique(clique, Colour::Blue) {
            return Err(StructureViolation::new("embed-colour", clique.clone(), "embedded clique is not blue".into()));
        }
    }
    Ok(cliques)
}

/// Gives each consumer r − 1 component vertices it is blue to. Each consumer
/// is red to at most one component vertex; when the pool left for a consumer
/// is only that vertex plus too few others, it is swapped into an earlier
/// allocation.
fn assign_partners(
    g: &ColouredCompleteGraph,
    component: &VertexSet,
    consumers: &[usize],
    r: usize,
) -> Result<Vec<Vec<usize>>, StructureViolation> {
    let forbidden: Vec<Option<usize>> = consumers
        .iter()
        .map(|&u| {
            let mut red = g.neighbours(u, Colour::Red);
            red.intersect_with(component);
            match red.count() {
                0 => Ok(None),
                1 => Ok(red.first()),
                _ => Err(StructureViolation::new(
                    "embed-partners",
                    std::iter::once(u).chain(red.iter()).collect(),
                    format!("vertex {u} has {} red neighbours in the host component", red.count()),
                )),
            }
        })
        .collect::<Result<_, _>>()?;

    let mut free = component.clone();
    let mut allocations: Vec<Vec<usize>> = Vec::with_capacity(consumers.len());
    for (k, &u) in consumers.iter().enumerate() {
        let mut allowed = free.clone();
        if let Some(f) = forbidden[k] {
            allowed.remove(f);
        }
        if allowed.count() < r - 1 {
            if let Some(f) = forbidden[k].filter(|&f| free.contains(f)) {
                swap_into_earlier(&mut allocations, &forbidden, f, &mut free);
                allowed = free.clone();
                allowed.remove(f);
            }
        }
        let partners: Vec<usize> = allowed.iter().take(r - 1).collect();
        if partners.len() < r - 1 {
            return Err(StructureViolation::new(
                "embed-partners",
                vec![u],
                format!("only {} partners available for vertex {u}", partners.len()),
            ));
        }
        for &p in &partners {
            free.remove(p);
        }
        allocations.push(partners);
    }
    Ok(consumers.iter().zip(allocations).map(|(&u, p)| std::iter::once(u).chain(p).collect()).collect())
}

// Puts `f` into the first earlier allocation whose consumer is blue to it,
// releasing one of that allocation's vertices.
fn swap_into_earlier(allocations: &mut [Vec<usize>], forbidden: &[Option<usize>], f: usize, free: &mut VertexSet) {
    for (k, partners) in allocations.iter_mut().enumerate() {
        if forbidden[k] == Some(f) {
            continue;
        }
        let released = partners[0];
        partners[0] = f;
        free.remove(f);
        free.insert(released);
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_for(component: VertexSet, t_delta: Vec<[usize; 3]>) -> CliqueClassification {
        let mut d = component.clone();
        for t in &t_delta {
            for &v in t {
                d.insert(v);
            }
        }
        CliqueClassification {
            type_s: Vec::new(),
            type_t: Vec::new(),
            components: vec![component],
            s_selected: vec![Vec::new()],
            t_star: vec![Vec::new()],
            t_delta: vec![t_delta],
            d: vec![d],
        }
    }

    #[test]
    fn select_target_examples() {
        assert_eq!(select_target(&[72, 71, 71], &[0, 0, 0], 4, 18), Some(0));
        assert_eq!(select_target(&[73, 60, 60], &[3, 0, 0], 4, 18), Some(0));
        assert_eq!(select_target(&[72, 72, 59], &[3, 0, 0], 4, 18), Some(1));
        assert_eq!(select_target(&[72, 71, 71], &[3, 0, 0], 4, 18), None);
    }

    #[test]
    fn plain_blue_clique() {
        let g = ColouredCompleteGraph::monochromatic(8, Colour::Blue).unwrap();
        let class = class_for(g.all_vertices(), Vec::new());
        let out = embed_blue_matching(&g, 0, &class, 4, 2).unwrap();
        assert_eq!(out, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
    }

    // Blue K_b on 0..b plus triangles on b.. that are red inside and blue to
    // everything else.
    fn with_triangles(b: usize, m: usize) -> (ColouredCompleteGraph, CliqueClassification) {
        let total = b + 3 * m;
        let tri = |v: usize| if v >= b { Some((v - b) / 3) } else { None };
        let g = ColouredCompleteGraph::from_fn(total, |u, v| match (tri(u), tri(v)) {
            (Some(a), Some(c)) if a == c => Colour::Red,
            _ => Colour::Blue,
        })
        .unwrap();
        let triangles = (0..m).map(|t| [b + 3 * t, b + 3 * t + 1, b + 3 * t + 2]).collect();
        let class = class_for(VertexSet::from_vertices(total, 0..b), triangles);
        (g, class)
    }

    #[test]
    fn two_triangles_mixed() {
        let (g, class) = with_triangles(6, 2);
        let out = embed_blue_matching(&g, 0, &class, 4, 3).unwrap();
        assert_eq!(out, vec![vec![0, 1, 6, 9], vec![2, 3, 7, 10], vec![4, 5, 8, 11]]);
    }

    #[test]
    fn one_triangle_uses_two_vertices() {
        let (g, class) = with_triangles(6, 1);
        let out = embed_blue_matching(&g, 0, &class, 4, 2).unwrap();
        assert_eq!(out, vec![vec![0, 1, 2, 6], vec![3, 4, 5, 7]]);
    }

    #[test]
    fn many_triangles_are_chunked() {
        let (g, class) = with_triangles(9, 5);
        let out = embed_blue_matching(&g, 0, &class, 4, 6).unwrap();
        assert_eq!(out.len(), 6);
        let all: Vec<usize> = out.concat();
        assert_eq!(VertexSet::from_vertices(g.vertex_count(), all.iter().copied()).count(), 24);
        assert!(out.iter().all(|c| g.is_monochromatic_clique(c, Colour::Blue)));
    }

    #[test]
    fn partner_swap_repairs_the_last_consumer() {
        // Component 0..6. Consumer 6 takes 0, 1, 2; consumer 7 is red to 3 and
        // would be left with 4 and 5 only, so 3 moves to consumer 6.
        let g = ColouredCompleteGraph::from_fn(8, |u, v| if (u, v) == (7, 3) { Colour::Red } else { Colour::Blue })
            .unwrap();
        let component = VertexSet::from_vertices(8, 0..6);
        let out = assign_partners(&g, &component, &[6, 7], 4).unwrap();
        assert_eq!(out, vec![vec![6, 3, 1, 2], vec![7, 0, 4, 5]]);
        assert!(out.iter().all(|c| g.is_monochromatic_clique(c, Colour::Blue)));
    }
}
