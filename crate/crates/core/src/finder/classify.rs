//! Classification of the red packing cliques against a stable blue structure.

use crate::colouring::{Colour, ColouredCompleteGraph};
use crate::vertex_set::VertexSet;

use super::augment::{Augmentation, Completer, Rule};
use super::structure::BlueStructure;
use super::StructureViolation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueKind {
    /// `selections[k]` is a clique vertex blue to all but at most one vertex
    /// of component k.
    TypeI { selections: Vec<usize> },
    /// Three vertices blue-complete to `triple_component`, and one vertex
    /// blue-complete to each component in `singles` (component, vertex). The
    /// remaining component gets nothing.
    TypeII { triple: [usize; 3], triple_component: usize, singles: Vec<(usize, usize)> },
    Augment(Augmentation),
}

#[derive(Clone, Copy, Debug)]
struct Profile {
    v: usize,
    /// The one component holding blue neighbours of `v`, if any.
    target: Option<usize>,
    red_in_target: usize,
}

impl Profile {
    fn defective(&self) -> bool {
        self.target.is_none() || self.red_in_target > 0
    }

    /// True iff `v` is red-complete to every component other than `k`.
    fn pairs_with(&self, k: usize) -> bool {
        self.target.is_none_or(|t| t == k)
    }
}

fn profile(g: &ColouredCompleteGraph, v: usize, components: &[VertexSet]) -> Result<Profile, StructureViolation> {
    let blue: Vec<usize> = (0..components.len()).filter(|&k| g.degree_into(v, Colour::Blue, &components[k]) > 0).collect();
    if blue.len() > 1 {
        return Err(StructureViolation::new(
            "blue-to-two-components",
            vec![v],
            format!("packing vertex {v} has blue neighbours in components {blue:?}"),
        ));
    }
    let target = blue.first().copied();
    let red_in_target = target.map_or(0, |t| g.degree_into(v, Colour::Red, &components[t]));
    Ok(Profile { v, target, red_in_target })
}

/// Classifies one red clique of the packing, or returns an augmentation that
/// breaks it into two red cliques.
pub fn classify_clique(
    g: &ColouredCompleteGraph,
    clique: &[usize],
    structure: &BlueStructure,
) -> Result<CliqueKind, StructureViolation> {
    let components = &structure.components;
    let profiles = clique.iter().map(|&v| profile(g, v, components)).collect::<Result<Vec<_>, _>>()?;

    if let Some(c) = profiles.iter().position(Profile::defective) {
        if let Some(aug) = red_neighbour_plus_pair(g, clique, &profiles, c, components) {
            return Ok(CliqueKind::Augment(aug));
        }
        if let Some(aug) = two_red_neighbours(g, clique, &profiles, c, components) {
            return Ok(CliqueKind::Augment(aug));
        }
        return type_one(clique, &profiles, components.len());
    }

    let mut by_component: Vec<Vec<usize>> = vec![Vec::new(); components.len()];
    for p in &profiles {
        by_component[p.target.expect("not defective")].push(p.v);
    }
    if let Some(i) = by_component.iter().position(|vs| vs.len() >= 4) {
        let vs = &by_component[i];
        let mut completer = Completer::new(g, components);
        if let (Some(a), Some(b)) = (completer.complete(&vs[..2], &[i]), completer.complete(&vs[2..4], &[i])) {
            return Ok(CliqueKind::Augment(Augmentation {
                retire: vec![clique.to_vec()],
                install: vec![a, b],
                rule: Rule::FourWithSame,
            }));
        }
    }
    let doubles: Vec<usize> = (0..components.len()).filter(|&k| by_component[k].len() >= 2).collect();
    if let [i, j, ..] = doubles[..] {
        let mut completer = Completer::new(g, components);
        let a = completer.complete(&by_component[i][..2], &[i]);
        let b = completer.complete(&by_component[j][..2], &[j]);
        if let (Some(a), Some(b)) = (a, b) {
            return Ok(CliqueKind::Augment(Augmentation {
                retire: vec![clique.to_vec()],
                install: vec![a, b],
                rule: Rule::TwoPairs,
            }));
        }
    }
    match doubles[..] {
        [i] if by_component[i].len() == 2 => Ok(CliqueKind::TypeI {
            selections: by_component.iter().map(|vs| vs[0]).collect(),
        }),
        [i] if by_component[i].len() == 3 => {
            let vs = &by_component[i];
            Ok(CliqueKind::TypeII {
                triple: [vs[0], vs[1], vs[2]],
                triple_component: i,
                singles: (0..components.len()).filter(|&k| by_component[k].len() == 1).map(|k| (k, by_component[k][0])).collect(),
            })
        }
        _ => Err(StructureViolation::new(
            "clique-type",
            clique.to_vec(),
            format!("no clique type or augmentation for pairing {by_component:?}"),
        )),
    }
}

// A defective vertex c (red neighbour in every component it could pair with)
// plus two other vertices that can pair with a common component j.
fn red_neighbour_plus_pair(
    g: &ColouredCompleteGraph,
    clique: &[usize],
    profiles: &[Profile],
    c: usize,
    components: &[VertexSet],
) -> Option<Augmentation> {
    let k = components.len();
    for a in 0..profiles.len() {
        for b in a + 1..profiles.len() {
            if a == c || b == c {
                continue;
            }
            let Some(j) = (0..k).find(|&j| profiles[a].pairs_with(j) && profiles[b].pairs_with(j)) else { continue };
            let pc = profiles[c];
            let i = pc.target.unwrap_or(j);
            let mut completer = Completer::new(g, components);
            let Some(x) = first_red_in(g, pc.v, &components[i]) else { continue };
            completer.reserve(x);
            let first = completer.complete(&[pc.v, x], &[i]);
            let second = completer.complete(&[profiles[a].v, profiles[b].v], &[j]);
            if let (Some(first), Some(second)) = (first, second) {
                return Some(Augmentation {
                    retire: vec![clique.to_vec()],
                    install: vec![first, second],
                    rule: Rule::RedNeighbourPlusPair,
                });
            }
        }
    }
    None
}

// Two defective vertices with distinct red neighbours in components they can
// pair with.
fn two_red_neighbours(
    g: &ColouredCompleteGraph,
    clique: &[usize],
    profiles: &[Profile],
    c: usize,
    components: &[VertexSet],
) -> Option<Augmentation> {
    let k = components.len();
    let pc = profiles[c];
    for pd in profiles.iter().filter(|p| p.v != pc.v && p.defective()) {
        for i in (0..k).filter(|&i| pc.pairs_with(i)) {
            for j in (0..k).filter(|&j| pd.pairs_with(j)) {
                let red_c = red_within(g, pc.v, &components[i]);
                let red_d = red_within(g, pd.v, &components[j]);
                let Some((x, y)) = red_c.iter().find_map(|x| red_d.iter().find(|&y| y != x).map(|y| (x, y))) else {
                    continue;
                };
                let mut completer = Completer::new(g, components);
                completer.reserve(x);
                completer.reserve(y);
                let first = completer.complete(&[pc.v, x], &[i]);
                let second = completer.complete(&[pd.v, y], &[j]);
                if let (Some(first), Some(second)) = (first, second) {
                    return Some(Augmentation {
                        retire: vec![clique.to_vec()],
                        install: vec![first, second],
                        rule: Rule::TwoRedNeighbours,
                    });
                }
            }
        }
    }
    None
}

// For each component, the vertex paired with it that has the fewest red
// neighbours there (at most one), smallest index first.
fn type_one(clique: &[usize], profiles: &[Profile], k: usize) -> Result<CliqueKind, StructureViolation> {
    let mut selections = Vec::with_capacity(k);
    for comp in 0..k {
        let pick = profiles
            .iter()
            .filter(|p| p.target == Some(comp) && p.red_in_target <= 1)
            .min_by_key(|p| (p.red_in_target, p.v));
        match pick {
            Some(p) => selections.push(p.v),
            None => {
                return Err(StructureViolation::new(
                    "clique-type",
                    clique.to_vec(),
                    format!("no clique vertex is blue to all but one vertex of component {comp}"),
                ))
            }
        }
    }
    Ok(CliqueKind::TypeI { selections })
}

fn red_within(g: &ColouredCompleteGraph, v: usize, set: &VertexSet) -> VertexSet {
    let mut red = g.neighbours(v, Colour::Red);
    red.intersect_with(set);
    red
}

fn first_red_in(g: &ColouredCompleteGraph, v: usize, set: &VertexSet) -> Option<usize> {
    red_within(g, v, set).first()
}

/// Looks for a red edge between two triples paired with component `i`. Each
/// entry is (packing clique, its triple).
pub fn check_triple_blue(
    g: &ColouredCompleteGraph,
    i: usize,
    triples: &[(Vec<usize>, [usize; 3])],
    structure: &BlueStructure,
) -> Result<Option<Augmentation>, StructureViolation> {
    for (a, (clique_a, xs)) in triples.iter().enumerate() {
        for (clique_b, ys) in &triples[a + 1..] {
            for (p, &x) in xs.iter().enumerate() {
                for (q, &y) in ys.iter().enumerate() {
                    if g.colour(x, y) != Colour::Red {
                        continue;
                    }
                    let rest_x: Vec<usize> = (0..3).filter(|&t| t != p).map(|t| xs[t]).collect();
                    let rest_y: Vec<usize> = (0..3).filter(|&t| t != q).map(|t| ys[t]).collect();
                    let mut completer = Completer::new(g, &structure.components);
                    let install: Option<Vec<Vec<usize>>> =
                        [vec![x, y], rest_x, rest_y].iter().map(|core| completer.complete(core, &[i])).collect();
                    return match install {
                        Some(install) => Ok(Some(Augmentation {
                            retire: vec![clique_a.clone(), clique_b.clone()],
                            install,
                            rule: Rule::TripleRedEdge,
                        })),
                        None => Err(StructureViolation::new(
                            "triple-red-edge",
                            vec![x, y],
                            "components too small to complete three red cliques".to_string(),
                        )),
                    };
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Components {0..5}, {5..10}, {10..15} as blue cliques joined in red,
    /// plus a red K_4 on 15..19 whose vertex v (15 + index) is blue to the
    /// component `pairing[index]` (all of it) and red elsewhere.
    fn fixture(pairing: [usize; 4]) -> (ColouredCompleteGraph, BlueStructure, Vec<usize>) {
        let part = |v: usize| if v < 15 { Some(v / 5) } else { None };
        let g = ColouredCompleteGraph::from_fn(19, |u, v| match (part(u), part(v)) {
            (Some(a), Some(b)) => if a == b { Colour::Blue } else { Colour::Red },
            (None, None) => Colour::Red,
            (Some(a), None) => if pairing[v - 15] == a { Colour::Blue } else { Colour::Red },
            (None, Some(b)) => if pairing[u - 15] == b { Colour::Blue } else { Colour::Red },
        })
        .unwrap();
        let components = (0..3).map(|k| VertexSet::from_vertices(19, k * 5..k * 5 + 5)).collect();
        let structure = BlueStructure { components, absorbed_z: VertexSet::empty(19), pairwise_red: true };
        (g, structure, vec![15, 16, 17, 18])
    }

    #[test]
    fn one_red_neighbour_still_type_one() {
        let (g, s, clique) = fixture([0, 0, 1, 2]);
        // v1 = 15 gets a single red neighbour in B_1.
        let g = g.with_toggled(&[(15, 2)]);
        match classify_clique(&g, &clique, &s).unwrap() {
            CliqueKind::TypeI { selections } => assert_eq!(selections, vec![16, 17, 18]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn triple_and_single() {
        let (g, s, clique) = fixture([0, 0, 0, 1]);
        match classify_clique(&g, &clique, &s).unwrap() {
            CliqueKind::TypeII { triple, triple_component, singles } => {
                assert_eq!(triple, [15, 16, 17]);
                assert_eq!(triple_component, 0);
                assert_eq!(singles, vec![(1, 18)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_pairs_break_the_clique() {
        let (g, s, clique) = fixture([0, 0, 1, 1]);
        match classify_clique(&g, &clique, &s).unwrap() {
            CliqueKind::Augment(a) => {
                assert_eq!(a.rule, Rule::TwoPairs);
                assert_eq!(a.install, vec![vec![5, 10, 15, 16], vec![0, 11, 17, 18]]);
                assert!(a.install.iter().all(|c| g.is_monochromatic_clique(c, Colour::Red)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn four_with_same() {
        let (g, s, clique) = fixture([2, 2, 2, 2]);
        match classify_clique(&g, &clique, &s).unwrap() {
            CliqueKind::Augment(a) => {
                assert_eq!(a.rule, Rule::FourWithSame);
                assert!(a.install.iter().all(|c| g.is_monochromatic_clique(c, Colour::Red)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fully_red_vertex_with_a_pair() {
        // Vertex 15 is red to everything; 16 and 17 both pair with B_2.
        let (g, s, clique) = fixture([0, 1, 1, 2]);
        let toggles: Vec<(usize, usize)> = (0..5).map(|b| (15, b)).collect();
        let g = g.with_toggled(&toggles);
        match classify_clique(&g, &clique, &s).unwrap() {
            CliqueKind::Augment(a) => {
                assert_eq!(a.rule, Rule::RedNeighbourPlusPair);
                assert!(a.install.iter().all(|c| g.is_monochromatic_clique(c, Colour::Red)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_defective_vertices() {
        // No two vertices share a component apart from 15 and 18, and 15 is
        // itself defective, so only the second rule applies.
        let (g, s, clique) = fixture([0, 1, 2, 0]);
        let g = g.with_toggled(&[(15, 0), (16, 5)]);
        let kind = classify_clique(&g, &clique, &s).unwrap();
        let CliqueKind::Augment(a) = kind else { panic!("{kind:?}") };
        assert_eq!(a.rule, Rule::TwoRedNeighbours);
        assert_eq!(a.install, vec![vec![0, 6, 10, 15], vec![1, 5, 11, 16]]);
        assert!(a.install.iter().all(|c| g.is_monochromatic_clique(c, Colour::Red)));
        assert_eq!(a.install.len(), 2);
    }

    #[test]
    fn blue_to_two_components_is_a_violation() {
        let (g, s, clique) = fixture([0, 1, 2, 0]);
        let g = g.with_toggled(&[(15, 5)]);
        let err = classify_clique(&g, &clique, &s).unwrap_err();
        assert_eq!(err.stage, "blue-to-two-components");
        assert_eq!(err.evidence, vec![15]);
    }

    #[test]
    fn triples_all_blue_are_fine() {
        let (g, s, _) = fixture([0, 0, 0, 1]);
        let one = vec![(vec![15, 16, 17, 18], [15, 16, 17])];
        assert_eq!(check_triple_blue(&g, 0, &one, &s).unwrap(), None);
    }

    #[test]
    fn red_edge_between_triples() {
        // Two red K_4's on 15..19 and 19..23, each with a triple blue to B_1
        // and a single blue to B_2; triples joined in blue except 15-19.
        let part = |v: usize| if v < 15 { Some(v / 5) } else { None };
        let pairing = |v: usize| if matches!(v, 18 | 22) { 1 } else { 0 };
        let g = ColouredCompleteGraph::from_fn(23, |u, v| match (part(u), part(v)) {
            (Some(a), Some(b)) => if a == b { Colour::Blue } else { Colour::Red },
            (Some(a), None) => if pairing(v) == a { Colour::Blue } else { Colour::Red },
            (None, Some(b)) => if pairing(u) == b { Colour::Blue } else { Colour::Red },
            (None, None) => {
                let (lo, hi) = (u.min(v), u.max(v));
                if (lo < 19) == (hi < 19) || (lo, hi) == (15, 19) {
                    Colour::Red
                } else {
                    Colour::Blue
                }
            }
        })
        .unwrap();
        let components = (0..3).map(|k| VertexSet::from_vertices(23, k * 5..k * 5 + 5)).collect();
        let s = BlueStructure { components, absorbed_z: VertexSet::empty(23), pairwise_red: true };
        let triples = vec![(vec![15, 16, 17, 18], [15, 16, 17]), (vec![19, 20, 21, 22], [19, 20, 21])];
        let aug = check_triple_blue(&g, 0, &triples, &s).unwrap().unwrap();
        assert_eq!(aug.rule, Rule::TripleRedEdge);
        assert_eq!(aug.retire.len(), 2);
        assert_eq!(aug.install.len(), 3);
        assert_eq!(aug.install[0], vec![5, 10, 15, 19]);
        assert!(aug.install.iter().all(|c| g.is_monochromatic_clique(c, Colour::Red)));
        let mut all: Vec<usize> = aug.install.concat();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 12);
    }
}
