//! Exhaustive computation of R(c(nK_r)) for tiny parameters.
//!
//! Colourings of K_m are grown one vertex at a time. A partial colouring on
//! vertices `0..=k` that already contains a monochromatic connected nK_r is
//! dropped, since every extension keeps that witness and its component only
//! grows. The pair {0, 1} is fixed red because swapping colours preserves the
//! property. No other symmetry is broken.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::small::SmallColouring;
use super::{decide_with_budget, Mode, DEFAULT_NODE_BUDGET};
use crate::colouring::{Colour, ColouredCompleteGraph};
use crate::extremal::burr_colouring;

/// Default cap on leaf decisions per call.
pub const DEFAULT_LEAF_BUDGET: u64 = 1 << 30;

const MAX_VERTICES: usize = 64;
// Prefixes of this many vertices are distributed over worker threads.
const SPLIT_VERTICES: usize = 6;
const FLUSH_EVERY: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// Every colouring of K_m has the property; `failing_witness` is a
    /// colouring of K_{m-1} without it.
    Value { m: usize, failing_witness: ColouredCompleteGraph, leaves: u64 },
    Unknown { reason: String, leaves: u64 },
}

/// Least m ≤ `m_max` such that every 2-colouring of K_m has a monochromatic
/// connected nK_r, or `Unknown` when `m_max` or `budget` (leaf decisions) is
/// insufficient. Never returns a wrong value.
pub fn ramsey_connected_exact(r: usize, n: usize, m_max: usize, budget: u64) -> RamseyOutcome {
    assert!(r >= 2 && n >= 1, "need r >= 2 and n >= 1");
    let mut leaves = 0u64;
    // The extremal colouring is the first candidate for a failing colouring.
    let (mut m, mut witness) = match burr_colouring(r, n) {
        Ok(burr) if burr.vertex_count() <= MAX_VERTICES => {
            match decide_with_budget(&burr, r, n, Mode::Connected, DEFAULT_NODE_BUDGET) {
                Ok(d) if !d.answer => (burr.vertex_count() + 1, Some(burr)),
                _ => (1, None),
            }
        }
        _ => (1, None),
    };
    if m > MAX_VERTICES.min(m_max) {
        return RamseyOutcome::Unknown {
            reason: format!("a colouring of K_{} avoids the target, so the value exceeds m_max = {m_max}", m - 1),
            leaves,
        };
    }
    while m <= m_max.min(MAX_VERTICES) {
        let search = find_failing(r, n, m, budget.saturating_sub(leaves), true);
        leaves += search.leaves;
        if search.exceeded {
            return RamseyOutcome::Unknown { reason: format!("leaf budget {budget} exhausted at m = {m}"), leaves };
        }
        match search.failing {
            Some(rows) => {
                witness = Some(rows_to_graph(&rows, m));
                m += 1;
            }
            None => {
                // K_1 always fails, so some smaller m has produced a witness.
                let failing_witness = witness.expect("m >= 2 here");
                return RamseyOutcome::Value { m, failing_witness, leaves };
            }
        }
    }
    RamseyOutcome::Unknown { reason: format!("every m up to m_max = {m_max} has a failing colouring"), leaves }
}

fn rows_to_graph(rows: &[u64], m: usize) -> ColouredCompleteGraph {
    ColouredCompleteGraph::from_fn(m, |u, v| if rows[u] >> v & 1 == 1 { Colour::Red } else { Colour::Blue })
        .expect("m >= 1")
}

pub(crate) struct Search {
    pub failing: Option<Vec<u64>>,
    pub leaves: u64,
    pub exceeded: bool,
}

/// First colouring of K_m (in enumeration order) without a monochromatic
/// connected nK_r. The outcome does not depend on `parallel`.
pub(crate) fn find_failing(r: usize, n: usize, m: usize, budget: u64, parallel: bool) -> Search {
    assert!((1..=MAX_VERTICES).contains(&m));
    let counter = Counter { total: AtomicU64::new(0), budget };
    if m == 1 {
        // One vertex carries no clique for r >= 2.
        return Search { failing: Some(vec![0]), leaves: 0, exceeded: false };
    }
    let split = SPLIT_VERTICES.min(m);
    let mut prefixes = Vec::new();
    let mut local = 0u64;
    let mut rows = vec![0u64; MAX_VERTICES];
    let complete = extend(&mut rows, 1, split, r, n, &counter, &mut local, &mut |rows| {
        prefixes.push(rows[..split].to_vec());
        false
    });
    counter.flush(&mut local);
    debug_assert!(!complete || counter.exceeded());
    if counter.exceeded() {
        return Search { failing: None, leaves: counter.total(), exceeded: true };
    }
    if split == m {
        let failing = prefixes.into_iter().next();
        return Search { failing, leaves: counter.total(), exceeded: false };
    }

    let run = |prefix: &Vec<u64>| -> Option<Vec<u64>> {
        let mut rows = vec![0u64; MAX_VERTICES];
        rows[..split].copy_from_slice(prefix);
        let mut local = 0u64;
        let mut found = None;
        extend(&mut rows, split, m, r, n, &counter, &mut local, &mut |rows| {
            found = Some(rows[..m].to_vec());
            true
        });
        counter.flush(&mut local);
        found
    };
    let results: Vec<Option<Vec<u64>>> =
        if parallel { prefixes.par_iter().map(run).collect() } else { prefixes.iter().map(run).collect() };
    let exceeded = counter.exceeded();
    Search {
        failing: if exceeded { None } else { results.into_iter().flatten().next() },
        leaves: counter.total(),
        exceeded,
    }
}

struct Counter {
    total: AtomicU64,
    budget: u64,
}

impl Counter {
    fn flush(&self, local: &mut u64) {
        self.total.fetch_add(*local, Ordering::Relaxed);
        *local = 0;
    }

    fn total(&self) -> u64 {
        self.total.load(Ordering::Relaxed)
    }

    fn exceeded(&self) -> bool {
        self.total() > self.budget
    }
}

/// Colours the edges from vertex `k` back to `0..k` in every way, for
/// `k` up to `target - 1`. Calls `on_full` with each surviving colouring of
/// `0..target`; stops when it returns true. Returns true iff stopped early.
#[allow(clippy::too_many_arguments)]
fn extend(
    rows: &mut [u64],
    k: usize,
    target: usize,
    r: usize,
    n: usize,
    counter: &Counter,
    local: &mut u64,
    on_full: &mut dyn FnMut(&[u64]) -> bool,
) -> bool {
    if k == target {
        return on_full(rows);
    }
    let choices: u64 = if k == 1 { 1 } else { 1 << k };
    let first: u64 = if k == 1 { 1 } else { 0 };
    for mask in first..first + choices {
        *local += 1;
        if *local >= FLUSH_EVERY {
            counter.flush(local);
            if counter.exceeded() {
                return true;
            }
        }
        for (j, row) in rows.iter_mut().enumerate().take(k) {
            if mask >> j & 1 == 1 {
                *row |= 1 << k;
            } else {
                *row &= !(1 << k);
            }
        }
        rows[k] = mask;
        if (SmallColouring { red: rows, m: k + 1 }).has_connected_matching(r, n) {
            continue;
        }
        if extend(rows, k + 1, target, r, n, counter, local, on_full) {
            return true;
        }
    }
    for row in rows.iter_mut().take(k) {
        *row &= !(1 << k);
    }
    rows[k] = 0;
    false
}
