//! Seeded randomness with a fixed, portable transition.
//!
//! All generators here are SplitMix64 with the state set to the seed
//! (`x += 0x9e3779b97f4a7c15`, then the standard two multiply-xorshift
//! rounds). Every derived draw below is specified in terms of `next_u64`
//! only, so corpora can be reproduced bit-for-bit elsewhere.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

pub fn generator(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Uniform draw from `0..bound` by rejection on the top of the 64-bit range.
///
/// # Panics
/// If `bound == 0`.
pub fn below<R: RngCore>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0);
    // Largest multiple of `bound` that fits; draws at or above it are rejected.
    let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return x % bound;
        }
    }
}

/// A probability `numerator / denominator` with `numerator <= denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probability {
    numerator: u64,
    denominator: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProbabilityError {
    #[error("probability must lie in [0, 1]")]
    OutOfRange,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse probability {0:?}; expected a decimal like 0.25 or a ratio like 1/4")]
    Syntax(String),
}

impl Probability {
    pub const ZERO: Probability = Probability { numerator: 0, denominator: 1 };
    pub const ONE: Probability = Probability { numerator: 1, denominator: 1 };

    pub fn new(numerator: u64, denominator: u64) -> Result<Self, ProbabilityError> {
        if denominator == 0 {
            return Err(ProbabilityError::ZeroDenominator);
        }
        if numerator > denominator {
            return Err(ProbabilityError::OutOfRange);
        }
        Ok(Self { numerator, denominator })
    }

    /// One Bernoulli trial from a single 64-bit draw `x`: success iff
    /// `x * denominator < numerator * 2^64`.
    pub fn sample<R: RngCore>(&self, rng: &mut R) -> bool {
        let x = rng.next_u64() as u128;
        x * (self.denominator as u128) < (self.numerator as u128) << 64
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Probability {
    type Err = ProbabilityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let syntax = || ProbabilityError::Syntax(s.to_string());
        if let Some((a, b)) = s.split_once('/') {
            let a = a.trim().parse().map_err(|_| syntax())?;
            let b = b.trim().parse().map_err(|_| syntax())?;
            return Probability::new(a, b);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(syntax());
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return Err(syntax());
        }
        let denominator = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| syntax())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| syntax())? };
        let numerator = int
            .checked_mul(denominator)
            .and_then(|x| x.checked_add(frac))
            .ok_or(ProbabilityError::OutOfRange)?;
        Probability::new(numerator, denominator)
    }
}

/// `k` distinct indices from `0..total`, by the first `k` steps of a
/// Fisher-Yates shuffle driven by [`below`]. Order is the draw order.
pub fn sample_without_replacement<R: RngCore>(rng: &mut R, total: usize, k: usize) -> Vec<usize> {
    assert!(k <= total);
    let mut pool: Vec<usize> = (0..total).collect();
    for i in 0..k {
        let j = i + below(rng, (total - i) as u64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(k);
    pool
}
