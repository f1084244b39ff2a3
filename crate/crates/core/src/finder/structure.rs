//! Blue structure of the vertices left uncovered by a maximal red packing.

use crate::colouring::{CliquePacking, Colour, ColouredCompleteGraph};
use crate::vertex_set::VertexSet;

use super::augment::{Augmentation, Completer, Rule};
use super::StructureViolation;

/// Stable blue structure outside the red packing: exactly r − 1 blue cliques,
/// pairwise joined in red, covering every uncovered vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueStructure {
    pub components: Vec<VertexSet>,
    /// Uncovered vertices missed by a greedy blue packing of the uncovered
    /// set. Diagnostic only.
    pub absorbed_z: VertexSet,
    pub pairwise_red: bool,
}

/// A blue connected matching found directly among the uncovered vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueWin {
    pub component: VertexSet,
    pub cliques: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Analysis {
    Stable(BlueStructure),
    Augment(Augmentation),
    Win(BlueWin),
}

/// Analyses the blue graph on the vertices outside `packing`, which must be a
/// maximal red packing with fewer than `n` cliques.
pub fn analyse_blue_structure(
    g: &ColouredCompleteGraph,
    packing: &CliquePacking,
    n: usize,
) -> Result<Analysis, StructureViolation> {
    let r = packing.r;
    let outside = g.all_vertices().difference(&packing.vertex_set(g.vertex_count()));
    let components = g.colour_components(Colour::Blue, &outside);

    let mut blue_packed = VertexSet::empty(g.vertex_count());
    for component in &components {
        let blue = g.greedy_clique_packing(Colour::Blue, r, component);
        if blue.len() >= n {
            let cliques = blue.cliques.into_iter().take(n).collect();
            return Ok(Analysis::Win(BlueWin { component: component.clone(), cliques }));
        }
        blue_packed.union_with(&blue.vertex_set(g.vertex_count()));
    }

    if components.len() >= r {
        let install = vec![components[..r].iter().map(|c| c.first().expect("nonempty component")).collect()];
        return Ok(Analysis::Augment(Augmentation { retire: Vec::new(), install, rule: Rule::ComponentCount }));
    }
    if components.len() + 1 < r {
        return Err(StructureViolation::new(
            "component-count",
            outside.to_vec(),
            format!("{} blue components outside the red packing, expected {}", components.len(), r - 1),
        ));
    }

    for (i, component) in components.iter().enumerate() {
        for u in component.iter() {
            let mut red_inside = g.neighbours(u, Colour::Red);
            red_inside.intersect_with(component);
            if let Some(v) = red_inside.iter().find(|&v| v > u) {
                let mut completer = Completer::new(g, &components);
                let clique = completer.complete(&[u, v], &[i]).expect("components are pairwise red");
                return Ok(Analysis::Augment(Augmentation {
                    retire: Vec::new(),
                    install: vec![clique],
                    rule: Rule::RedEdgeInside,
                }));
            }
        }
    }

    let pairwise_red = components.iter().enumerate().all(|(i, a)| {
        components[i + 1..].iter().all(|b| a.iter().all(|u| g.degree_into(u, Colour::Blue, b) == 0))
    });
    Ok(Analysis::Stable(BlueStructure {
        components,
        absorbed_z: outside.difference(&blue_packed),
        pairwise_red,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(sizes: &[usize]) -> ColouredCompleteGraph {
        let mut part = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        ColouredCompleteGraph::from_fn(part.len(), |u, v| if part[u] == part[v] { Colour::Blue } else { Colour::Red })
            .unwrap()
    }

    #[test]
    fn three_blue_sevens_are_stable() {
        let g = blocks(&[7, 7, 7]);
        let empty = CliquePacking::new(Colour::Red, 4);
        match analyse_blue_structure(&g, &empty, 2).unwrap() {
            Analysis::Stable(s) => {
                let sizes: Vec<usize> = s.components.iter().map(VertexSet::count).collect();
                assert_eq!(sizes, vec![7, 7, 7]);
                assert!(s.pairwise_red);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn large_blue_clique_wins() {
        let g = blocks(&[8, 3, 3]);
        let empty = CliquePacking::new(Colour::Red, 4);
        match analyse_blue_structure(&g, &empty, 2).unwrap() {
            Analysis::Win(w) => {
                assert_eq!(w.cliques, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
                assert_eq!(w.component.count(), 8);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn four_components_give_a_red_clique() {
        let g = blocks(&[2, 2, 2, 2]);
        let empty = CliquePacking::new(Colour::Red, 4);
        match analyse_blue_structure(&g, &empty, 3).unwrap() {
            Analysis::Augment(a) => {
                assert_eq!(a.rule, Rule::ComponentCount);
                assert_eq!(a.install, vec![vec![0, 2, 4, 6]]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn red_edge_inside_a_component() {
        // Vertices 0 and 1 share a blue neighbour 2 but are joined in red.
        let g = blocks(&[3, 3, 3]).with_toggled(&[(1, 0)]);
        let empty = CliquePacking::new(Colour::Red, 4);
        match analyse_blue_structure(&g, &empty, 3).unwrap() {
            Analysis::Augment(a) => {
                assert_eq!(a.rule, Rule::RedEdgeInside);
                assert_eq!(a.install, vec![vec![0, 1, 3, 6]]);
                assert!(g.is_monochromatic_clique(&a.install[0], Colour::Red));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn too_few_components_is_a_violation() {
        let g = blocks(&[3, 3]);
        let empty = CliquePacking::new(Colour::Red, 4);
        let err = analyse_blue_structure(&g, &empty, 3).unwrap_err();
        assert_eq!(err.stage, "component-count");
    }
}
