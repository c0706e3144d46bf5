//! Betti numbers, cycle tests and reduction modulo boundaries.
//!
//! A rank over `Z/p` never exceeds the rank over `Q`, so modular Betti
//! numbers can only overshoot. Agreement with an exact run (or a second
//! prime) is what certifies a table.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{Chain, ChainComplexRep};
use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, rank_rational, PrimeField, TaggedReducer, DEFAULT_PRIME};

/// Column cap per degree for exact rational elimination.
pub const DEFAULT_EXACT_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    Modular { prime: u64 },
    Exact { cap: usize },
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Modular { prime: DEFAULT_PRIME }
    }
}

impl RankMode {
    pub fn exact() -> Self {
        RankMode::Exact { cap: DEFAULT_EXACT_CAP }
    }
}

/// `dim H_r` for every degree of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub complex: String,
    pub betti: BTreeMap<isize, usize>,
    pub prime: Option<u64>,
    pub exact: bool,
}

impl BettiTable {
    pub fn get(&self, r: isize) -> usize {
        self.betti.get(&r).copied().unwrap_or(0)
    }

    /// `Σ_r (-1)^r dim H_r`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().map(|(&r, &b)| if r.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn nonzero_degrees(&self) -> Vec<isize> {
        self.betti.iter().filter(|(_, &b)| b > 0).map(|(&r, _)| r).collect()
    }
}

/// Ranks of every boundary matrix, indexed like the degrees.
pub fn boundary_ranks(c: &ChainComplexRep, mode: RankMode) -> Result<Vec<usize>> {
    if let RankMode::Modular { prime } = mode {
        PrimeField::new(prime)?;
    }
    if let RankMode::Exact { cap } = mode {
        if let Some(r) = c.degrees().find(|&r| c.dim(r) > cap) {
            return Err(Error::TooLarge(format!(
                "degree {r} has {} columns, above the exact-mode cap {cap}",
                c.dim(r)
            )));
        }
    }
    c.degrees()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|r| {
            let m = c.boundary(r).unwrap();
            match mode {
                RankMode::Modular { prime } => rank_mod_p(m, prime),
                RankMode::Exact { .. } => Ok(rank_rational(m)),
            }
        })
        .collect()
}

/// `dim H_r = |basis_r| - rank ∂_r - rank ∂_{r+1}`.
pub fn betti_numbers(c: &ChainComplexRep, mode: RankMode) -> Result<BettiTable> {
    let ranks = boundary_ranks(c, mode)?;
    let rank = |r: isize| ranks.get((r + 1) as usize).copied().unwrap_or(0);
    let betti = c.degrees().map(|r| (r, c.dim(r) - rank(r) - rank(r + 1))).collect();
    let (prime, exact) = match mode {
        RankMode::Modular { prime } => (Some(prime), false),
        RankMode::Exact { .. } => (None, true),
    };
    Ok(BettiTable { complex: c.kind().name().to_string(), betti, prime, exact })
}

/// True iff `∂x = 0` over the integers.
pub fn is_cycle(c: &ChainComplexRep, x: &Chain) -> Result<bool> {
    Ok(c.apply_boundary(x)?.is_zero())
}

/// Solves `x ≡ Σ c_i b_i` modulo the boundaries at one degree, reusing the
/// factorization across many right-hand sides.
pub struct HomologyReducer<'a> {
    complex: &'a ChainComplexRep,
    degree: isize,
    field: PrimeField,
    reducer: TaggedReducer,
}

impl<'a> HomologyReducer<'a> {
    pub fn new(c: &'a ChainComplexRep, r: isize, basis_cycles: &[Chain], prime: u64) -> Result<Self> {
        let field = PrimeField::new(prime)?;
        let mut reducer = TaggedReducer::new(field, basis_cycles.len());
        if let Some(up) = c.boundary(r + 1) {
            for col in up.columns() {
                reducer.add_relation(col);
            }
        }
        for (i, b) in basis_cycles.iter().enumerate() {
            if b.degree() != r {
                return Err(Error::Degree(format!("basis cycle {i} has degree {}, expected {r}", b.degree())));
            }
            if !is_cycle(c, b)? {
                return Err(Error::NotACycle(format!("basis cycle {i}: {b}")));
            }
            let coords = to_column(c.coordinates(b)?);
            if !reducer.add_tagged(i, &coords) {
                return Err(Error::Inconsistent(format!("basis cycle {i} depends on the others modulo boundaries")));
            }
        }
        Ok(HomologyReducer { complex: c, degree: r, field, reducer })
    }

    /// Coordinates of `x`, lifted to the symmetric range of the prime field.
    pub fn coordinates(&self, x: &Chain) -> Result<Vec<i64>> {
        if x.degree() != self.degree {
            return Err(Error::Degree(format!("chain has degree {}, expected {}", x.degree(), self.degree)));
        }
        if !is_cycle(self.complex, x)? {
            return Err(Error::NotACycle(x.to_string()));
        }
        let coords = to_column(self.complex.coordinates(x)?);
        let sol = self
            .reducer
            .solve(&coords)
            .ok_or_else(|| Error::Inconsistent(format!("{x} is not in the span of the given cycles")))?;
        Ok(sol.into_iter().map(|v| self.field.lift(v)).collect())
    }
}

fn to_column(coords: Vec<(usize, i64)>) -> Vec<(u32, i64)> {
    let mut col: Vec<(u32, i64)> = coords.into_iter().map(|(i, v)| (i as u32, v)).collect();
    col.sort_unstable_by_key(|&(i, _)| i);
    col
}

/// The unique `c` with `x - Σ c_i b_i ∈ im ∂_{r+1}`, solved over `Z/p`.
pub fn reduce_mod_boundaries(
    c: &ChainComplexRep,
    r: isize,
    x: &Chain,
    basis_cycles: &[Chain],
    prime: u64,
) -> Result<Vec<i64>> {
    HomologyReducer::new(c, r, basis_cycles, prime)?.coordinates(x)
}
