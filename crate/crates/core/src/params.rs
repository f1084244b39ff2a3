//! Parameters of the connected clique-matching problem and the regime in
//! which the finder's guarantee applies.

use thiserror::Error;

/// Known diagonal Ramsey numbers R(K_r). Larger r have no exact value;
/// callers must supply an upper bound.
pub fn ramsey_constant(r: usize) -> Option<usize> {
    match r {
        1 => Some(1),
        2 => Some(2),
        3 => Some(6),
        4 => Some(18),
        _ => None,
    }
}

/// (r² − r + 1)n − r + 1: the least N forcing a monochromatic connected nK_r.
pub fn theorem_bound(r: usize, n: usize) -> usize {
    (r * r - r + 1) * n + 1 - r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub r: usize,
    pub n: usize,
    pub vertex_count: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegimeError {
    #[error("clique size r = {0} is below 4; the finder covers r >= 4 only")]
    CliqueTooSmall(usize),
    #[error("no known value of R(K_{0}); supply an upper bound for it")]
    UnknownRamseyConstant(usize),
    #[error("n = {n} is below R(K_r) = {ramsey}")]
    MatchingTooSmall { n: usize, ramsey: usize },
    #[error("N = {vertex_count} is below the theorem bound {bound}")]
    TooFewVertices { vertex_count: usize, bound: usize },
}

impl Params {
    pub fn new(r: usize, n: usize, vertex_count: usize) -> Self {
        Self { r, n, vertex_count }
    }

    /// Checks r ≥ 4, n ≥ R(K_r) and N ≥ (r² − r + 1)n − r + 1.
    ///
    /// `ramsey_bound` overrides the table and must be an upper bound on R(K_r);
    /// it is required for r ≥ 5.
    pub fn check_theorem_regime(&self, ramsey_bound: Option<usize>) -> Result<(), RegimeError> {
        if self.r < 4 {
            return Err(RegimeError::CliqueTooSmall(self.r));
        }
        let ramsey = ramsey_bound
            .or_else(|| ramsey_constant(self.r))
            .ok_or(RegimeError::UnknownRamseyConstant(self.r))?;
        if self.n < ramsey {
            return Err(RegimeError::MatchingTooSmall { n: self.n, ramsey });
        }
        let bound = theorem_bound(self.r, self.n);
        if self.vertex_count < bound {
            return Err(RegimeError::TooFewVertices { vertex_count: self.vertex_count, bound });
        }
        Ok(())
    }

    pub fn theorem_regime(&self, ramsey_bound: Option<usize>) -> bool {
        self.check_theorem_regime(ramsey_bound).is_ok()
    }
}
