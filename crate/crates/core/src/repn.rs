//! Symmetric-group actions on chain groups, hook characters and homology
//! characters.

use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complexes::{standard_cycle, Chain, ChainComplexRep};
use crate::error::{Error, Result};
use crate::homology::HomologyReducer;
use crate::hypercore::{canonicalize_cyclic, k_subsets, Family, Hypergraph, OrderedPartition};

/// Permutation of `{1..n}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// `images[i - 1]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPartition(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of disjoint cycles, e.g. `[[1, 2], [3, 4, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v == 0 || v > n || used[v] {
                    return Err(Error::InvalidPartition(format!("bad cycle list {cycles:?} on {n} points")));
                }
                used[v] = true;
                images[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&v| self.apply(v)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.apply(v);
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut wrote = false;
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v.to_string());
                v = self.apply(v);
            }
            write!(f, "({})", cyc.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("cycle type {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// Parses `"2,1,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("bad cycle type {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }

    pub fn identity(n: usize) -> Self {
        CycleType { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Sign of any permutation of this type.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All partitions of `n`, sorted so that `1^n` comes first and `(n)` last.
pub fn partitions_of(n: usize) -> Vec<CycleType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType { parts: cur.clone() });
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Group acting on a complex by relabeling vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActingGroup {
    Symmetric,
    /// Permutations fixing vertex 1.
    StabilizerOfOne,
}

impl ActingGroup {
    /// Largest of the two groups that preserves the edge set of `h`.
    pub fn of(h: &Hypergraph) -> Result<Self> {
        let n = h.n();
        let cycle = |from: usize| -> Vec<usize> { (1..=n).map(|v| if v < from { v } else if v == n { from } else { v + 1 }).collect() };
        let swap = |a: usize, b: usize| -> Vec<usize> {
            (1..=n).map(|v| if v == a { b } else if v == b { a } else { v }).collect()
        };
        if n < 2 || (h.is_invariant_under(&swap(1, 2)) && h.is_invariant_under(&cycle(1))) {
            return Ok(ActingGroup::Symmetric);
        }
        if n < 3 || (h.is_invariant_under(&swap(2, 3)) && h.is_invariant_under(&cycle(2))) {
            return Ok(ActingGroup::StabilizerOfOne);
        }
        Err(Error::NotClosed(format!("the edge set of {h:?} is not invariant under the permutations fixing 1")))
    }

    pub fn contains(self, g: &Permutation) -> bool {
        match self {
            ActingGroup::Symmetric => true,
            ActingGroup::StabilizerOfOne => g.apply(1) == 1,
        }
    }

    /// Cycle types indexing the conjugacy classes considered for this group.
    pub fn cycle_types(self, n: usize) -> Vec<CycleType> {
        partitions_of(n).into_iter().filter(|t| self == ActingGroup::Symmetric || t.parts.contains(&1)).collect()
    }
}

/// Canonical element of type `t`: cycles filled with consecutive integers in
/// increasing order, longest first. For the stabilizer group one fixed point
/// is spent on vertex 1 and the cycles start at 2.
pub fn representative(t: &CycleType, group: ActingGroup) -> Result<Permutation> {
    let n = t.size();
    let mut parts = t.parts.clone();
    let mut next = 1;
    if group == ActingGroup::StabilizerOfOne {
        let i = parts
            .iter()
            .rposition(|&p| p == 1)
            .ok_or_else(|| Error::Unsupported(format!("cycle type {t} fixes no point, so it misses the stabilizer of 1")))?;
        parts.remove(i);
        next = 2;
    }
    let mut cycles = Vec::with_capacity(parts.len());
    for p in parts {
        cycles.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    Permutation::from_cycles(n, &cycles)
}

fn image_of_face(c: &ChainComplexRep, g: &Permutation, face: &OrderedPartition) -> Result<(OrderedPartition, i64)> {
    let moved = face.relabel(g.images());
    let (face, sign) = if c.kind().is_cyclic() {
        let (class, s) = canonicalize_cyclic(&moved)?;
        (class.into_rep(), s)
    } else {
        (moved, 1)
    };
    if c.index_of(face.degree(), &face).is_none() {
        return Err(Error::NotClosed(format!("{face} (image under {g}) is not a basis face of the {} complex", c.kind())));
    }
    Ok((face, sign))
}

/// Relabels every block of every term by `g`, re-canonicalizing in the cyclic case.
pub fn permute_chain(c: &ChainComplexRep, g: &Permutation, x: &Chain) -> Result<Chain> {
    if g.n() != c.n() {
        return Err(Error::OutOfRange(format!("permutation on {} points, complex on {}", g.n(), c.n())));
    }
    let mut out = Chain::zero(x.degree());
    for (face, coef) in x.terms() {
        let (img, sign) = image_of_face(c, g, face)?;
        out.add_term(img, sign * coef);
    }
    Ok(out)
}

fn group_of(c: &ChainComplexRep) -> Result<ActingGroup> {
    ActingGroup::of(c.source())
}

/// Trace of the canonical element of type `t` on the degree-`r` chain group.
pub fn chain_character(c: &ChainComplexRep, t: &CycleType, r: isize) -> Result<i64> {
    let g = representative(t, group_of(c)?)?;
    chain_trace(c, &g, r)
}

/// Trace of an arbitrary element on the degree-`r` chain group.
pub fn chain_trace(c: &ChainComplexRep, g: &Permutation, r: isize) -> Result<i64> {
    if g.n() != c.n() {
        return Err(Error::OutOfRange(format!("permutation on {} points, complex on {}", g.n(), c.n())));
    }
    let mut trace = 0;
    for face in c.basis(r) {
        let (img, sign) = image_of_face(c, g, face)?;
        if &img == face {
            trace += sign;
        }
    }
    Ok(trace)
}

/// Character of the Specht module of shape `λ` at cycle type `t`, by the
/// Murnaghan–Nakayama rule on beta-numbers.
pub fn murnaghan_nakayama(shape: &[usize], t: &CycleType) -> Result<i64> {
    if shape.windows(2).any(|w| w[0] < w[1]) || shape.contains(&0) {
        return Err(Error::InvalidPartition(format!("{shape:?} is not a partition")));
    }
    if shape.iter().sum::<usize>() != t.size() {
        return Err(Error::InvalidPartition(format!("shape {shape:?} and cycle type {t} have different sizes")));
    }
    let len = shape.len();
    let beads: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();

    fn rec(beads: &mut Vec<usize>, parts: &[usize]) -> i64 {
        let Some((&k, rest)) = parts.split_first() else {
            return 1;
        };
        let mut total = 0;
        for i in 0..beads.len() {
            let b = beads[i];
            if b < k || beads.contains(&(b - k)) {
                continue;
            }
            let between = beads.iter().filter(|&&x| x > b - k && x < b).count();
            beads[i] = b - k;
            let sub = rec(beads, rest);
            beads[i] = b;
            total += if between % 2 == 0 { sub } else { -sub };
        }
        total
    }

    Ok(rec(&mut beads.clone(), &t.parts))
}

/// Character of the hook `(n - m, 1^m)` at `t`.
pub fn hook_character(n: usize, m: usize, t: &CycleType) -> Result<i64> {
    if n == 0 || m >= n {
        return Err(Error::InvalidPartition(format!("no hook (n-m, 1^m) with n = {n}, m = {m}")));
    }
    let mut shape = vec![n - m];
    shape.extend(std::iter::repeat_n(1, m));
    murnaghan_nakayama(&shape, t)
}

fn ensure_standard_basis(c: &ChainComplexRep, r: isize) -> Result<()> {
    if !c.kind().is_cyclic() || c.kind().is_quotient() {
        return Err(Error::WrongKind(format!("standard cycles span homology only for cyclic complexes, got {}", c.kind())));
    }
    let n = c.n() as isize;
    match c.source().family() {
        Family::Looped => {}
        Family::Star { k, center: 1 } => {
            if r > n - k as isize - 1 {
                return Err(Error::Degree(format!(
                    "standard cycles cover degrees -1..={} for this star, got {r}",
                    n - k as isize - 1
                )));
            }
        }
        other => {
            return Err(Error::Unsupported(format!(
                "homology characters need E_n or a star centered at 1, got {other:?}"
            )))
        }
    }
    if !c.degrees().contains(&r) {
        return Err(Error::Degree(format!("degree {r} outside {:?}", c.degrees())));
    }
    Ok(())
}

/// Standard cycles of degree `r`: one per subset `A` of `{2..n}` of size `n - r - 2`.
pub fn standard_cycles(n: usize, r: isize) -> Result<Vec<Chain>> {
    let size = n as isize - r - 2;
    if size < 0 || size > n as isize - 1 {
        return Err(Error::Degree(format!("no standard cycles of degree {r} on {n} vertices")));
    }
    k_subsets(n - 1, size as usize)
        .into_iter()
        .map(|s| {
            let a: Vec<usize> = s.iter().map(|v| v + 1).collect();
            standard_cycle(n, &a)
        })
        .collect()
}

/// Trace of the canonical element of type `t` on `H_r`, computed from the
/// standard cycles reduced modulo boundaries.
pub fn homology_character(c: &ChainComplexRep, r: isize, t: &CycleType) -> Result<i64> {
    ensure_standard_basis(c, r)?;
    let cycles = standard_cycles(c.n(), r)?;
    let reducer = HomologyReducer::new(c, r, &cycles, crate::linalg::DEFAULT_PRIME)?;
    homology_trace_with(c, &reducer, &cycles, &representative(t, group_of(c)?)?)
}

/// Same as [`homology_character`] for an explicit group element.
pub fn homology_trace(c: &ChainComplexRep, r: isize, g: &Permutation) -> Result<i64> {
    ensure_standard_basis(c, r)?;
    let cycles = standard_cycles(c.n(), r)?;
    let reducer = HomologyReducer::new(c, r, &cycles, crate::linalg::DEFAULT_PRIME)?;
    homology_trace_with(c, &reducer, &cycles, g)
}

fn homology_trace_with(c: &ChainComplexRep, reducer: &HomologyReducer, cycles: &[Chain], g: &Permutation) -> Result<i64> {
    let mut trace = 0;
    for (i, b) in cycles.iter().enumerate() {
        trace += reducer.coordinates(&permute_chain(c, g, b)?)?[i];
    }
    Ok(trace)
}

/// Character values on every conjugacy class of the acting group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterRow {
    pub degree: isize,
    pub rows: Vec<(CycleType, i64)>,
    pub group: ActingGroup,
}

impl CharacterRow {
    pub fn get(&self, t: &CycleType) -> Option<i64> {
        self.rows.iter().find(|(s, _)| s == t).map(|&(_, v)| v)
    }

    pub fn values(&self) -> Vec<i64> {
        self.rows.iter().map(|&(_, v)| v).collect()
    }
}

impl Serialize for CharacterRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a [(CycleType, i64)]);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (t, v) in self.0 {
                    m.serialize_entry(&t.to_string(), v)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("degree", &self.degree)?;
        m.serialize_entry("rows", &Rows(&self.rows))?;
        if self.group != ActingGroup::Symmetric {
            m.serialize_entry("group", &self.group)?;
        }
        m.end()
    }
}

/// Homology character row at degree `r`, one value per class of the acting group.
pub fn character_row(c: &ChainComplexRep, r: isize) -> Result<CharacterRow> {
    ensure_standard_basis(c, r)?;
    let group = group_of(c)?;
    let cycles = standard_cycles(c.n(), r)?;
    let reducer = HomologyReducer::new(c, r, &cycles, crate::linalg::DEFAULT_PRIME)?;
    let rows = group
        .cycle_types(c.n())
        .into_par_iter()
        .map(|t| {
            let g = representative(&t, group)?;
            Ok((t, homology_trace_with(c, &reducer, &cycles, &g)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterRow { degree: r, rows, group })
}

/// Hook character row `(n - m, 1^m)` on the classes of `group`.
pub fn hook_row(n: usize, m: usize, group: ActingGroup, degree: isize) -> Result<CharacterRow> {
    let rows = group
        .cycle_types(n)
        .into_iter()
        .map(|t| Ok((t.clone(), hook_character(n, m, &t)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterRow { degree, rows, group })
}

fn alternating(r: isize, v: i64) -> i64 {
    if r.rem_euclid(2) == 0 {
        v
    } else {
        -v
    }
}

/// Both sides of the trace identity
/// `Σ_r (-1)^r chain_character(t, r) = Σ_r (-1)^r hook_character(n, r + 1, t)`.
pub fn hopf_trace_sides(c: &ChainComplexRep, t: &CycleType) -> Result<(i64, i64)> {
    let n = c.n();
    let mut chain = 0;
    let mut hook = 0;
    for r in c.degrees() {
        chain += alternating(r, chain_character(c, t, r)?);
        hook += alternating(r, hook_character(n, (r + 1) as usize, t)?);
    }
    Ok((chain, hook))
}

/// True when the two sides of [`hopf_trace_sides`] agree.
pub fn hopf_trace_check(c: &ChainComplexRep, t: &CycleType) -> Result<bool> {
    let (a, b) = hopf_trace_sides(c, t)?;
    Ok(a == b)
}
