//! Constructive search for a monochromatic connected clique matching on
//! colourings at or above the theorem bound.
//!
//! The search keeps a maximal red clique packing. While it has fewer than n
//! cliques, the blue graph on the uncovered vertices is analysed; every
//! structural defect yields an [`Augmentation`] that enlarges the packing.
//! Once no defect remains, the packing cliques are classified and n blue
//! cliques are embedded into one blue component.
//!
//! "Red" and "blue" below are the search colours: the search runs on a
//! colouring whose red graph is connected, swapping colours first if needed.

mod augment;
mod classify;
mod embed;
mod structure;

pub use augment::{apply_augmentation, Augmentation, AugmentationError, Rule};
pub use classify::{check_triple_blue, classify_clique, CliqueKind};
pub use embed::{embed_blue_matching, select_target, CliqueClassification};
pub use structure::{analyse_blue_structure, Analysis, BlueStructure, BlueWin};

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::certificate::Certificate;
use crate::colouring::{CliquePacking, Colour, ColouredCompleteGraph};
use crate::format::serialize_colouring;
use crate::oracle::spanning_witness;
use crate::params::{Params, RegimeError};
use crate::vertex_set::VertexSet;

/// A structural fact the construction relies on turned out false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureViolation {
    pub stage: &'static str,
    pub evidence: Vec<usize>,
    pub detail: String,
    /// Key=value dump of the search state followed by the colouring.
    pub state: String,
}

impl StructureViolation {
    pub fn new(stage: &'static str, evidence: Vec<usize>, detail: String) -> Self {
        Self { stage, evidence, detail, state: String::new() }
    }

    /// Full multi-line dump.
    pub fn dump(&self) -> String {
        let mut out = format!("stage={}\ndetail={}\nevidence={}\n", self.stage, self.detail, join(&self.evidence, " "));
        out.push_str(&self.state);
        out
    }
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "structure violation at {}: {}", self.stage, self.detail)
    }
}

impl std::error::Error for StructureViolation {}

#[derive(Debug, Error)]
pub enum FinderError {
    #[error(transparent)]
    Regime(#[from] RegimeError),
    #[error(transparent)]
    Violation(Box<StructureViolation>),
}

/// How the certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    RedPacking,
    /// n blue cliques inside one blue component of the uncovered vertices.
    BlueComponent,
    /// Two blue components linked through a packing vertex.
    BlueLinked,
    BlueEmbedding,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::RedPacking => "red-packing",
            Outcome::BlueComponent => "blue-component",
            Outcome::BlueLinked => "blue-linked",
            Outcome::BlueEmbedding => "blue-embedding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: Rule,
    pub before: usize,
    /// Packing size after the augmentation and greedy re-extension.
    pub after: usize,
}

/// Summary of one search, printable as key=value lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FinderReport {
    pub outcome: Option<Outcome>,
    pub swapped: bool,
    pub trace: Vec<TraceEntry>,
    pub packing_size: usize,
    pub component_sizes: Vec<usize>,
    pub absorbed_z: usize,
    pub s_count: usize,
    pub t_count: usize,
    pub d_sizes: Vec<usize>,
    pub t_delta_sizes: Vec<usize>,
    pub target: Option<usize>,
}

impl FinderReport {
    pub fn augmentations(&self) -> usize {
        self.trace.len()
    }

    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let outcome = self.outcome.map_or("none", Outcome::as_str);
        let _ = writeln!(out, "outcome={outcome}");
        let _ = writeln!(out, "swapped={}", self.swapped);
        let _ = writeln!(out, "augmentations={}", self.trace.len());
        let _ = writeln!(out, "packing_size={}", self.packing_size);
        let _ = writeln!(out, "component_sizes={}", join(&self.component_sizes, ","));
        let _ = writeln!(out, "absorbed_z={}", self.absorbed_z);
        let _ = writeln!(out, "s={}", self.s_count);
        let _ = writeln!(out, "t={}", self.t_count);
        let _ = writeln!(out, "d_sizes={}", join(&self.d_sizes, ","));
        let _ = writeln!(out, "t_delta_sizes={}", join(&self.t_delta_sizes, ","));
        let target = self.target.map_or("none".to_string(), |t| t.to_string());
        let _ = writeln!(out, "target={target}");
        let steps: Vec<String> =
            self.trace.iter().map(|e| format!("{}:{}->{}", e.rule, e.before, e.after)).collect();
        let _ = writeln!(out, "trace={}", steps.join(","));
        out
    }
}

fn join(values: &[usize], sep: &str) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinderRun {
    /// In the colours of the input.
    pub certificate: Certificate,
    pub report: FinderReport,
}

/// The colour whose graph is connected, Red when both are, and whether it is
/// Blue (so that the search must swap colours).
pub fn choose_search_colour(g: &ColouredCompleteGraph) -> (Colour, bool) {
    if g.is_connected(Colour::Red) {
        (Colour::Red, false)
    } else {
        (Colour::Blue, true)
    }
}

/// A monochromatic connected nK_r in `g`. Requires r ≥ 4, n at least the
/// Ramsey number of K_r (from the built-in table or `ramsey_bound`) and at
/// least (r² − r + 1)n − r + 1 vertices.
pub fn find_connected_clique_matching(
    g: &ColouredCompleteGraph,
    r: usize,
    n: usize,
    ramsey_bound: Option<usize>,
) -> Result<FinderRun, FinderError> {
    Params::new(r, n, g.vertex_count()).check_theorem_regime(ramsey_bound)?;
    let (_, swapped) = choose_search_colour(g);
    let search_graph;
    let h = if swapped {
        search_graph = g.swapped();
        &search_graph
    } else {
        g
    };
    let mut search = Search { g: h, r, n, report: FinderReport { swapped, ..FinderReport::default() } };
    let (colour, cliques) = search.run().map_err(|mut v| {
        v.state = search.state_dump(&v);
        FinderError::Violation(Box::new(v))
    })?;

    let mut certificate = Certificate::new(if swapped { colour.other() } else { colour }, r, cliques);
    certificate.colour_roles_swapped = swapped;
    certificate.witness_edges = spanning_witness(g, certificate.colour, &certificate.cliques);
    let first = certificate.cliques[0][0];
    certificate.component_root = g
        .colour_components(certificate.colour, &g.all_vertices())
        .into_iter()
        .find(|c| c.contains(first))
        .and_then(|c| c.first());
    Ok(FinderRun { certificate, report: search.report })
}

struct Search<'g> {
    g: &'g ColouredCompleteGraph,
    r: usize,
    n: usize,
    report: FinderReport,
}

impl Search<'_> {
    fn run(&mut self) -> Result<(Colour, Vec<Vec<usize>>), StructureViolation> {
        let (g, r, n) = (self.g, self.r, self.n);
        let all = g.all_vertices();
        let mut packing = g.greedy_clique_packing(Colour::Red, r, &all);
        loop {
            self.report.packing_size = packing.len();
            if packing.len() >= n {
                self.report.outcome = Some(Outcome::RedPacking);
                return Ok((Colour::Red, packing.cliques[..n].to_vec()));
            }
            if self.report.trace.len() > n {
                return Err(StructureViolation::new(
                    "progress",
                    Vec::new(),
                    format!("{} augmentations without reaching {n} cliques", self.report.trace.len()),
                ));
            }
            let aug = match analyse_blue_structure(g, &packing, n)? {
                Analysis::Win(win) => {
                    self.report.component_sizes = vec![win.component.count()];
                    self.report.outcome = Some(Outcome::BlueComponent);
                    return Ok((Colour::Blue, win.cliques));
                }
                Analysis::Augment(aug) => aug,
                Analysis::Stable(structure) => {
                    self.report.component_sizes = structure.components.iter().map(VertexSet::count).collect();
                    self.report.absorbed_z = structure.absorbed_z.count();
                    if let Some(cliques) = self.linked_components(&packing, &structure)? {
                        self.report.outcome = Some(Outcome::BlueLinked);
                        return Ok((Colour::Blue, cliques));
                    }
                    match self.classify(&packing, &structure)? {
                        Err(aug) => aug,
                        Ok(class) => {
                            let cliques = self.embed(&class)?;
                            self.report.outcome = Some(Outcome::BlueEmbedding);
                            return Ok((Colour::Blue, cliques));
                        }
                    }
                }
            };
            let before = packing.len();
            let mut next = apply_augmentation(g, &packing, &aug).map_err(|e| {
                StructureViolation::new("augmentation", aug.install.concat(), format!("{}: {e}", aug.rule))
            })?;
            g.extend_packing(&mut next, &all);
            self.report.trace.push(TraceEntry { rule: aug.rule, before, after: next.len() });
            packing = next;
        }
    }

    /// A packing vertex with blue neighbours in two components links them
    /// into one blue component. Both components are blue cliques of at most
    /// rn − 1 vertices whose sizes add up to enough for n blue cliques.
    fn linked_components(
        &self,
        packing: &CliquePacking,
        structure: &BlueStructure,
    ) -> Result<Option<Vec<Vec<usize>>>, StructureViolation> {
        let (g, r, n) = (self.g, self.r, self.n);
        for v in packing.vertex_set(g.vertex_count()).iter() {
            let blue: Vec<usize> = (0..structure.components.len())
                .filter(|&k| g.degree_into(v, Colour::Blue, &structure.components[k]) > 0)
                .collect();
            if let [i, j, ..] = blue[..] {
                let mut cliques = Vec::new();
                for k in [i, j] {
                    let members = structure.components[k].to_vec();
                    cliques.extend(members.chunks_exact(r).map(<[usize]>::to_vec));
                }
                if cliques.len() < n {
                    return Err(StructureViolation::new(
                        "linked-components",
                        vec![v],
                        format!("components {i} and {j} linked by {v} hold only {} blue cliques", cliques.len()),
                    ));
                }
                cliques.truncate(n);
                return Ok(Some(cliques));
            }
        }
        Ok(None)
    }

    /// Classifies every packing clique; the inner `Err` is an augmentation
    /// found on the way.
    fn classify(
        &mut self,
        packing: &CliquePacking,
        structure: &BlueStructure,
    ) -> Result<Result<CliqueClassification, Augmentation>, StructureViolation> {
        let g = self.g;
        let k = structure.components.len();
        let mut class = CliqueClassification {
            type_s: Vec::new(),
            type_t: Vec::new(),
            components: structure.components.clone(),
            s_selected: vec![Vec::new(); k],
            t_star: vec![Vec::new(); k],
            t_delta: vec![Vec::new(); k],
            d: structure.components.clone(),
        };
        let mut triples: Vec<Vec<(Vec<usize>, [usize; 3])>> = vec![Vec::new(); k];
        for clique in &packing.cliques {
            match classify_clique(g, clique, structure)? {
                CliqueKind::Augment(aug) => return Ok(Err(aug)),
                CliqueKind::TypeI { selections } => {
                    for (i, v) in selections.into_iter().enumerate() {
                        class.s_selected[i].push(v);
                        class.d[i].insert(v);
                    }
                    class.type_s.push(clique.clone());
                }
                CliqueKind::TypeII { triple, triple_component, singles } => {
                    for (i, v) in singles {
                        class.t_star[i].push(v);
                        class.d[i].insert(v);
                    }
                    for v in triple {
                        class.d[triple_component].insert(v);
                    }
                    class.t_delta[triple_component].push(triple);
                    triples[triple_component].push((clique.clone(), triple));
                    class.type_t.push(clique.clone());
                }
            }
        }
        for (i, list) in triples.iter().enumerate() {
            if let Some(aug) = check_triple_blue(g, i, list, structure)? {
                return Ok(Err(aug));
            }
        }
        class.check(g.vertex_count(), self.n)?;
        self.report.s_count = class.type_s.len();
        self.report.t_count = class.type_t.len();
        self.report.d_sizes = class.d_sizes();
        self.report.t_delta_sizes = class.t_delta_sizes();
        Ok(Ok(class))
    }

    fn embed(&mut self, class: &CliqueClassification) -> Result<Vec<Vec<usize>>, StructureViolation> {
        let (d_sizes, t_sizes) = (class.d_sizes(), class.t_delta_sizes());
        let Some(i) = select_target(&d_sizes, &t_sizes, self.r, self.n) else {
            return Err(StructureViolation::new(
                "select-target",
                Vec::new(),
                format!("no host component among |D_i| = {d_sizes:?} with |T_i triples| = {t_sizes:?}"),
            ));
        };
        self.report.target = Some(i);
        embed_blue_matching(self.g, i, class, self.r, self.n)
    }

    fn state_dump(&self, violation: &StructureViolation) -> String {
        let mut out = format!("r={}\nn={}\n", self.r, self.n);
        out.push_str(&self.report.to_key_values());
        let _ = writeln!(out, "evidence_count={}", violation.evidence.len());
        out.push_str("colouring:\n");
        let text = if self.report.swapped { serialize_colouring(&self.g.swapped()) } else { serialize_colouring(self.g) };
        out.push_str(&text);
        out
    }
}
