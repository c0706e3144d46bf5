//! Column-sparse integer matrices and rank computation over `Z/p` and `Q`.
//!
//! Both rank routines use the same column reduction: every column is reduced
//! against earlier pivots keyed by their largest row index until it either
//! vanishes or claims a fresh pivot row.

use std::collections::HashMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default modulus for ranks, `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// One sparse column: `(row, value)` pairs sorted by row, no zeros.
pub type SparseColumn = Vec<(u32, i64)>;

/// Integer matrix stored one sparse column per source basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseColumn>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    /// Builds a matrix from unsorted `(row, value)` lists; duplicate rows are summed.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = cols.into_iter().map(normalize_column).collect();
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseColumn] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j].binary_search_by_key(&(i as u32), |&(r, _)| r).map(|p| self.cols[j][p].1).unwrap_or(0)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.cols.iter().flatten().map(|&(_, v)| v.abs()).max().unwrap_or(0)
    }

    /// `self · x` for a sparse vector `x` indexed by column.
    pub fn mul_sparse(&self, x: &[(usize, i64)]) -> SparseColumn {
        let mut acc: Vec<(u32, i64)> = Vec::new();
        for &(j, c) in x {
            acc.extend(self.cols[j].iter().map(|&(r, v)| (r, v * c)));
        }
        normalize_column(acc)
    }

    /// `self · other`; both operands column-sparse.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != other.nrows {
            return Err(Error::Degree(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let cols = other
            .cols
            .iter()
            .map(|c| self.mul_sparse(&c.iter().map(|&(r, v)| (r as usize, v)).collect::<Vec<_>>()))
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, cols })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| normalize_column(a.iter().chain(b).copied().collect()))
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    /// Coordinate triplets `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |&(r, v)| (r as usize, j, v)))
            .collect()
    }

    /// Writes the text dump: header `rows cols nnz`, then one `row col value` line per entry.
    pub fn write_triplets<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{} {} {}", self.nrows, self.ncols(), self.nnz())?;
        for (r, c, v) in self.triplets() {
            writeln!(out, "{r} {c} {v}")?;
        }
        Ok(())
    }
}

fn normalize_column(mut col: Vec<(u32, i64)>) -> SparseColumn {
    col.sort_unstable_by_key(|&(r, _)| r);
    let mut out: SparseColumn = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// Trial-division primality; the moduli used here stay below `2^32`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic in `Z/p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric lift into `(-p/2, p/2]`.
    pub fn lift(self, v: u64) -> i64 {
        if v > self.p / 2 {
            v as i64 - self.p as i64
        } else {
            v as i64
        }
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        let (mut base, mut e, mut acc) = (a, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

type ModColumn = Vec<(u32, u64)>;

/// `a - c·b` over `Z/p`, sparse and sorted.
fn axpy_mod(f: PrimeField, a: &[(u32, u64)], c: u64, b: &[(u32, u64)]) -> ModColumn {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.sub(0, f.mul(c, b[j].1))));
            j += 1;
        } else {
            let v = f.sub(a[i].1, f.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `Z/p`.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> Result<usize> {
    let f = PrimeField::new(p)?;
    let mut pivots: HashMap<u32, ModColumn> = HashMap::new();
    for col in &m.cols {
        let mut v: ModColumn = col.iter().map(|&(r, x)| (r, f.reduce(x))).filter(|&(_, x)| x != 0).collect();
        while let Some(&(low, x)) = v.last() {
            match pivots.get(&low) {
                Some(piv) => v = axpy_mod(f, &v, x, piv),
                None => {
                    let inv = f.inv(x);
                    v.iter_mut().for_each(|e| e.1 = f.mul(e.1, inv));
                    pivots.insert(low, v);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

/// `a·pivot_low - b·low` scaled for fraction-free elimination, then divided by content.
fn eliminate_exact(v: &[(u32, BigInt)], piv: &[(u32, BigInt)]) -> Vec<(u32, BigInt)> {
    let a = &piv.last().unwrap().1;
    let b = &v.last().unwrap().1;
    let g = a.gcd(b);
    let (sa, sb) = (a / &g, b / &g);
    let mut out: Vec<(u32, BigInt)> = Vec::with_capacity(v.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < piv.len() {
        if j == piv.len() || (i < v.len() && v[i].0 < piv[j].0) {
            out.push((v[i].0, &sa * &v[i].1));
            i += 1;
        } else if i == v.len() || piv[j].0 < v[i].0 {
            out.push((piv[j].0, -(&sb * &piv[j].1)));
            j += 1;
        } else {
            let x = &sa * &v[i].1 - &sb * &piv[j].1;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    let content = out.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        out.iter_mut().for_each(|(_, x)| *x = &*x / &content);
    }
    out
}

/// Rank over the rationals by fraction-free column elimination on big integers.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    let mut pivots: HashMap<u32, Vec<(u32, BigInt)>> = HashMap::new();
    for col in &m.cols {
        let mut v: Vec<(u32, BigInt)> = col.iter().map(|&(r, x)| (r, BigInt::from(x))).collect();
        while let Some(low) = v.last().map(|&(r, _)| r) {
            match pivots.get(&low) {
                Some(piv) => v = eliminate_exact(&v, piv),
                None => {
                    if v.last().unwrap().1.is_negative() {
                        v.iter_mut().for_each(|(_, x)| *x = -&*x);
                    }
                    pivots.insert(low, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Incremental reduction modulo a subspace, tracking coordinates against
/// a list of distinguished vectors (used to solve `x ≡ Σ c_i b_i` modulo
/// the column space of a boundary matrix).
pub struct TaggedReducer {
    field: PrimeField,
    tags: usize,
    pivots: HashMap<u32, (ModColumn, Vec<u64>)>,
}

impl TaggedReducer {
    /// `tags` is the number of distinguished vectors that will be inserted.
    pub fn new(field: PrimeField, tags: usize) -> Self {
        TaggedReducer { field, tags, pivots: HashMap::new() }
    }

    fn to_mod(&self, v: &[(u32, i64)]) -> ModColumn {
        v.iter().map(|&(r, x)| (r, self.field.reduce(x))).filter(|&(_, x)| x != 0).collect()
    }

    /// Reduces `v` completely; returns the residual and the accumulated tag combination.
    fn reduce(&self, mut v: ModColumn, mut tag: Vec<u64>) -> (ModColumn, Vec<u64>) {
        let f = self.field;
        while let Some(&(low, x)) = v.last() {
            let Some((piv, ptag)) = self.pivots.get(&low) else { break };
            v = axpy_mod(f, &v, x, piv);
            for (t, &pt) in tag.iter_mut().zip(ptag) {
                *t = f.sub(*t, f.mul(x, pt));
            }
        }
        (v, tag)
    }

    fn insert(&mut self, v: ModColumn, tag: Vec<u64>) -> bool {
        let (mut v, mut tag) = self.reduce(v, tag);
        let Some(&(low, x)) = v.last() else { return false };
        let inv = self.field.inv(x);
        v.iter_mut().for_each(|e| e.1 = self.field.mul(e.1, inv));
        tag.iter_mut().for_each(|t| *t = self.field.mul(*t, inv));
        self.pivots.insert(low, (v, tag));
        true
    }

    /// Adds an untagged spanning vector (a boundary column).
    pub fn add_relation(&mut self, v: &[(u32, i64)]) {
        let v = self.to_mod(v);
        self.insert(v, vec![0; self.tags]);
    }

    /// Adds distinguished vector number `i`; false when it is dependent on what is already present.
    pub fn add_tagged(&mut self, i: usize, v: &[(u32, i64)]) -> bool {
        let mut tag = vec![0; self.tags];
        tag[i] = 1;
        let v = self.to_mod(v);
        self.insert(v, tag)
    }

    /// Coordinates `c` with `x - Σ c_i b_i` in the relation span, if any.
    pub fn solve(&self, x: &[(u32, i64)]) -> Option<Vec<u64>> {
        let (res, tag) = self.reduce(self.to_mod(x), vec![0; self.tags]);
        // x - Σ α_j v_j = res and v_j ≡ Σ t_j b; tag holds -Σ α_j t_j
        res.is_empty().then(|| tag.into_iter().map(|t| self.field.sub(0, t)).collect())
    }
}
