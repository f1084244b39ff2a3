//! Decision kernel for colourings on at most 64 vertices, one `u64` row per
//! vertex. Used at the leaves of the exhaustive search.

#[inline]
fn low_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Red rows of the first `m` vertices plus the derived blue rows.
#[derive(Clone, Copy)]
pub struct SmallColouring<'a> {
    pub red: &'a [u64],
    pub m: usize,
}

impl SmallColouring<'_> {
    fn rows(&self, red_side: bool) -> [u64; 64] {
        let full = low_mask(self.m);
        let mut rows = [0u64; 64];
        for (v, row) in rows.iter_mut().enumerate().take(self.m) {
            *row = if red_side { self.red[v] & full } else { !self.red[v] & full & !(1 << v) };
        }
        rows
    }

    /// True iff some colour has n disjoint r-cliques inside one component.
    pub fn has_connected_matching(&self, r: usize, n: usize) -> bool {
        if n == 0 {
            return true;
        }
        [true, false].into_iter().any(|red_side| {
            let rows = self.rows(red_side);
            components(&rows, low_mask(self.m))
                .into_iter()
                .any(|c| packs_at_least(&rows, c, r, n))
        })
    }
}

fn components(rows: &[u64; 64], mut left: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & left & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

fn packs_at_least(rows: &[u64; 64], avail: u64, r: usize, target: usize) -> bool {
    if target == 0 {
        return true;
    }
    if (avail.count_ones() as usize) < r * target {
        return false;
    }
    let v = avail.trailing_zeros() as usize;
    let rest = avail & !(1 << v);
    if through(rows, rest & rows[v], r - 1, 1 << v, &mut |clique| packs_at_least(rows, avail & !clique, r, target - 1))
    {
        return true;
    }
    packs_at_least(rows, rest, r, target)
}

// Enumerates cliques `chosen ∪ K` with |K| = need, K ⊆ candidates; stops when
// `found` returns true.
fn through(rows: &[u64; 64], mut candidates: u64, need: usize, chosen: u64, found: &mut dyn FnMut(u64) -> bool) -> bool {
    if need == 0 {
        return found(chosen);
    }
    while candidates.count_ones() as usize >= need {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if through(rows, candidates & rows[v], need - 1, chosen | 1 << v, found) {
            return true;
        }
    }
    false
}
