//! Chromatic polynomials of hypergraphs.
//!
//! A coloring is proper when no hyperedge is monochromatic, so a proper
//! coloring is the same as an ordered choice of colors for a set partition
//! whose blocks contain no hyperedge. Counting those partitions by block
//! count gives the polynomial in the falling-factorial basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, VertexSet};

/// Largest vertex count accepted by the partition-counting routines.
pub const MAX_CHROMATIC_VERTICES: usize = 12;

/// Integer polynomial; `coeffs[j]` is the coefficient of `λ^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    pub coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * x as i128 + c as i128)
    }

    /// Sum of absolute values of the coefficients.
    pub fn abs_coefficient_sum(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

/// `N_m` for `m = 1..n`: unordered partitions into `m` blocks, none containing an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreePartitionVector {
    /// `counts[m - 1] = N_m`.
    pub counts: Vec<u64>,
}

impl FreePartitionVector {
    pub fn get(&self, m: usize) -> u64 {
        m.checked_sub(1).and_then(|i| self.counts.get(i)).copied().unwrap_or(0)
    }
}

fn check_size(h: &Hypergraph) -> Result<()> {
    if h.n() > MAX_CHROMATIC_VERTICES {
        return Err(Error::TooLarge(format!(
            "partition counting is limited to n <= {MAX_CHROMATIC_VERTICES}, got {}",
            h.n()
        )));
    }
    Ok(())
}

/// Counts hyperedge-free set partitions by number of blocks.
pub fn free_partition_vector(h: &Hypergraph) -> Result<FreePartitionVector> {
    check_size(h)?;
    let n = h.n();
    let mut counts = vec![0u64; n];

    // Blocks only ever grow, so a block that contains an edge can be pruned at once.
    fn rec(v: usize, n: usize, h: &Hypergraph, blocks: &mut Vec<VertexSet>, counts: &mut [u64]) {
        if v > n {
            counts[blocks.len() - 1] += 1;
            return;
        }
        for i in 0..blocks.len() {
            let grown = blocks[i].union(VertexSet::singleton(v));
            if h.contains_edge(grown) {
                continue;
            }
            let old = std::mem::replace(&mut blocks[i], grown);
            rec(v + 1, n, h, blocks, counts);
            blocks[i] = old;
        }
        let single = VertexSet::singleton(v);
        if !h.contains_edge(single) {
            blocks.push(single);
            rec(v + 1, n, h, blocks, counts);
            blocks.pop();
        }
    }

    rec(1, n, h, &mut Vec::with_capacity(n), &mut counts);
    Ok(FreePartitionVector { counts })
}

/// `χ_H(λ) = Σ_m N_m · λ(λ-1)…(λ-m+1)` in the monomial basis.
pub fn chromatic_polynomial(h: &Hypergraph) -> Result<Polynomial> {
    let free = free_partition_vector(h)?;
    let n = h.n();
    let mut acc = vec![0i64; n + 1];
    // falling[j]: coefficients of λ(λ-1)…(λ-m+1), updated in place per m
    let mut falling = vec![0i64; n + 1];
    falling[0] = 1;
    for m in 1..=n {
        // multiply by (λ - (m - 1))
        let shift = (m - 1) as i64;
        for j in (0..=m).rev() {
            let from_lower = if j > 0 { falling[j - 1] } else { 0 };
            falling[j] = from_lower - shift * falling[j];
        }
        let nm = free.get(m) as i64;
        for j in 0..=m {
            acc[j] += nm * falling[j];
        }
    }
    Ok(Polynomial::new(acc))
}

/// Exhaustive count of proper `λ`-colorings over all `λ^n` maps.
pub fn count_proper_colorings(h: &Hypergraph, lambda: u64) -> Result<u64> {
    let n = h.n() as u32;
    let total = lambda
        .checked_pow(n)
        .ok_or_else(|| Error::Overflow(format!("{lambda}^{n} does not fit in 64 bits")))?;
    if total > 1 << 36 {
        return Err(Error::TooLarge(format!("{total} colorings is beyond the brute-force limit")));
    }
    if lambda == 0 {
        return Ok(0);
    }
    let n = n as usize;
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.iter().map(|v| v - 1).collect()).collect();
    let mut colors = vec![0u64; n];
    let mut count = 0u64;
    loop {
        let proper = edges.iter().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]));
        if proper {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            colors[i] += 1;
            if colors[i] < lambda {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Predicted Hodge-piece dimensions of the top homology of the coloring complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeProfile {
    /// `dims[j] = d_j`.
    pub dims: Vec<i64>,
    pub total: i64,
}

/// `d_j = (-1)^(n-k) · [λ^j](χ_H(-λ) - (-λ)^n)`.
pub fn hodge_dimension_profile(h: &Hypergraph, k: usize) -> Result<HodgeProfile> {
    let chi = chromatic_polynomial(h)?;
    let n = h.n();
    let outer = if (n + k).is_multiple_of(2) { 1 } else { -1 };
    let dims: Vec<i64> = (0..=n)
        .map(|j| {
            let mut c = if j % 2 == 0 { chi.coeff(j) } else { -chi.coeff(j) };
            if j == n {
                c -= if n.is_multiple_of(2) { 1 } else { -1 };
            }
            outer * c
        })
        .collect();
    let total = dims.iter().sum();
    Ok(HodgeProfile { dims, total })
}
