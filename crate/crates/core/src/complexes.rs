//! Chain complexes built from ordered set partitions.
//!
//! Every complex is augmented: degree `-1` holds the single-block partition
//! whenever it qualifies. Bases are sorted with the global partition order
//! and boundary matrices are stored one sparse column per source face.
//!
//! * coloring: ordered partitions with some block containing an edge, boundary
//!   `Σ_i (-1)^i (…, B_i ∪ B_{i+1}, …)`;
//! * cyclic: canonical classes (block of 1 first) with some block containing an
//!   edge, boundary `Σ_i (-1)^(i+1) […, B_i ∪ B_{i+1}, …] + (-1)^(r+3) [B_1 ∪ B_m, B_2, …]`;
//! * complements and tree complexes: classes in which no block contains a
//!   forbidden set. They are quotients, so boundary terms that would create a
//!   forbidden block are dropped.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercore::{
    canonicalize_cyclic, enumerate_cyclic_classes, enumerate_ordered_partitions, k_subsets, CyclicClass,
    Hypergraph, OrderedPartition, VertexSet,
};
use crate::linalg::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    Coloring,
    Cyclic,
    CyclicComplement,
    PartialComplement,
    Tree,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::Coloring => "coloring",
            ComplexKind::Cyclic => "cyclic",
            ComplexKind::CyclicComplement => "cyclic-complement",
            ComplexKind::PartialComplement => "partial-complement",
            ComplexKind::Tree => "tree",
        }
    }

    pub fn is_cyclic(self) -> bool {
        self != ComplexKind::Coloring
    }

    /// Quotient kinds drop boundary terms that leave the basis.
    pub fn is_quotient(self) -> bool {
        matches!(self, ComplexKind::CyclicComplement | ComplexKind::PartialComplement | ComplexKind::Tree)
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A chain: degree plus integer coefficients on faces (canonical
/// representatives for the cyclic kinds). Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    degree: isize,
    terms: BTreeMap<OrderedPartition, i64>,
}

impl Chain {
    pub fn zero(degree: isize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(degree: isize, terms: impl IntoIterator<Item = (OrderedPartition, i64)>) -> Self {
        let mut c = Chain::zero(degree);
        for (f, v) in terms {
            c.add_term(f, v);
        }
        c
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn add_term(&mut self, face: OrderedPartition, coef: i64) {
        debug_assert_eq!(face.degree(), self.degree);
        match self.terms.entry(face) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if coef != 0 {
                    v.insert(coef);
                }
            }
        }
    }

    pub fn coefficient(&self, face: &OrderedPartition) -> i64 {
        self.terms.get(face).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrderedPartition, i64)> {
        self.terms.iter().map(|(f, &v)| (f, v))
    }

    pub fn scaled(&self, c: i64) -> Chain {
        if c == 0 {
            return Chain::zero(self.degree);
        }
        Chain { degree: self.degree, terms: self.terms.iter().map(|(f, &v)| (f.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (f, v) in other.terms() {
            out.add_term(f.clone(), -v);
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (face, v)) in self.terms.iter().enumerate() {
            let sign = if *v < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = v.abs();
            let space = if i > 0 { " " } else { "" };
            if mag == 1 {
                write!(f, "{space}{sign}{face}")?;
            } else {
                write!(f, "{space}{sign}{mag}{face}")?;
            }
        }
        Ok(())
    }
}

/// Raw boundary terms of an ordered partition in the coloring complex.
pub fn coloring_boundary_terms(p: &OrderedPartition) -> Vec<(OrderedPartition, i64)> {
    (1..p.len()).map(|i| (p.merge_adjacent(i - 1), if i % 2 == 1 { -1 } else { 1 })).collect()
}

/// Boundary terms of the class of `p` (any rotation), each re-canonicalized.
pub fn cyclic_boundary_terms(p: &OrderedPartition) -> Vec<(CyclicClass, i64)> {
    let m = p.len();
    if m < 2 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(m);
    for i in 1..m {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let (c, s) = canonicalize_cyclic(&p.merge_adjacent(i - 1)).expect("merge keeps vertex 1");
        out.push((c, sign * s));
    }
    // (-1)^(r+3) with r = m - 2
    let sign = if m % 2 == 1 { 1 } else { -1 };
    let (c, s) = canonicalize_cyclic(&p.merge_wraparound()).expect("merge keeps vertex 1");
    out.push((c, sign * s));
    out
}

/// Per-degree bases and boundary matrices of one of the complexes.
#[derive(Clone, Debug)]
pub struct ChainComplexRep {
    kind: ComplexKind,
    n: usize,
    source: Hypergraph,
    forbidden: Vec<VertexSet>,
    /// `basis[r + 1]`
    basis: Vec<Vec<OrderedPartition>>,
    index: Vec<HashMap<OrderedPartition, usize>>,
    /// `boundary[r + 1]` maps degree `r` to degree `r - 1`.
    boundary: Vec<SparseMatrix>,
}

impl ChainComplexRep {
    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The hypergraph the complex was built from (the tree, for tree complexes;
    /// `complete(n, k)` for complements).
    pub fn source(&self) -> &Hypergraph {
        &self.source
    }

    /// Sets no block may contain (quotient kinds only).
    pub fn forbidden(&self) -> &[VertexSet] {
        &self.forbidden
    }

    /// `-1..=n-2`.
    pub fn degrees(&self) -> RangeInclusive<isize> {
        -1..=self.n as isize - 2
    }

    fn slot(&self, r: isize) -> Option<usize> {
        self.degrees().contains(&r).then(|| (r + 1) as usize)
    }

    pub fn basis(&self, r: isize) -> &[OrderedPartition] {
        self.slot(r).map_or(&[], |i| &self.basis[i])
    }

    pub fn dim(&self, r: isize) -> usize {
        self.basis(r).len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees().map(|r| self.dim(r)).collect()
    }

    pub fn index_of(&self, r: isize, face: &OrderedPartition) -> Option<usize> {
        self.slot(r).and_then(|i| self.index[i].get(face).copied())
    }

    /// Boundary out of degree `r`; `None` outside `-1..=n-2`.
    pub fn boundary(&self, r: isize) -> Option<&SparseMatrix> {
        self.slot(r).map(|i| &self.boundary[i])
    }

    /// The class of basis element `i` at degree `r` (cyclic kinds).
    pub fn class(&self, r: isize, i: usize) -> Result<CyclicClass> {
        if !self.kind.is_cyclic() {
            return Err(Error::WrongKind(format!("{} complex has no cyclic classes", self.kind)));
        }
        CyclicClass::from_canonical(self.basis(r)[i].clone())
    }

    /// Whether `face` satisfies the membership rule of this complex.
    pub fn admits(&self, face: &OrderedPartition) -> bool {
        admits(self.kind, &self.source, &self.forbidden, face.blocks())
    }

    /// Coordinates of a chain in the degree basis.
    pub fn coordinates(&self, x: &Chain) -> Result<Vec<(usize, i64)>> {
        let r = x.degree();
        if self.slot(r).is_none() {
            return Err(Error::Degree(format!("degree {r} outside {:?}", self.degrees())));
        }
        x.terms()
            .map(|(f, v)| self.index_of(r, f).map(|i| (i, v)).ok_or_else(|| Error::NotInBasis(f.to_string())))
            .collect()
    }

    /// Chain from coordinates in the degree-`r` basis.
    pub fn chain_from_column(&self, r: isize, col: &[(u32, i64)]) -> Chain {
        let basis = self.basis(r);
        Chain::from_terms(r, col.iter().map(|&(i, v)| (basis[i as usize].clone(), v)))
    }

    /// `∂x` computed through the stored matrix.
    pub fn apply_boundary(&self, x: &Chain) -> Result<Chain> {
        let coords = self.coordinates(x)?;
        let r = x.degree();
        let col = self.boundary(r).unwrap().mul_sparse(&coords);
        Ok(self.chain_from_column(r - 1, &col))
    }

    /// Raw boundary terms of a face under this complex's rule, before dropping
    /// terms that leave the basis.
    pub fn face_terms(&self, face: &OrderedPartition) -> Vec<(OrderedPartition, i64)> {
        if self.kind.is_cyclic() {
            cyclic_boundary_terms(face).into_iter().map(|(c, s)| (c.into_rep(), s)).collect()
        } else {
            coloring_boundary_terms(face)
        }
    }

    /// Checks `∂_{r-1} ∘ ∂_r = 0` for every degree.
    pub fn verify_boundary_squared(&self) -> Result<()> {
        for r in self.degrees().skip(1) {
            let prod = self.boundary(r - 1).unwrap().mul(self.boundary(r).unwrap())?;
            if !prod.is_zero() {
                return Err(Error::BoundarySquared(r));
            }
        }
        Ok(())
    }

    /// Writes `basis_<r>.json` and `boundary_<r>.txt` for every degree into `dir`.
    pub fn dump(&self, dir: &std::path::Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        for r in self.degrees() {
            let basis = serde_json::to_string(self.basis(r)).expect("partitions serialize");
            std::fs::write(dir.join(format!("basis_{r}.json")), basis)?;
            let file = std::fs::File::create(dir.join(format!("boundary_{r}.txt")))?;
            self.boundary(r).unwrap().write_triplets(std::io::BufWriter::new(file))?;
        }
        Ok(())
    }
}

fn admits(kind: ComplexKind, source: &Hypergraph, forbidden: &[VertexSet], blocks: &[VertexSet]) -> bool {
    if kind.is_quotient() {
        blocks.iter().all(|b| forbidden.iter().all(|&w| !b.is_superset_of(w)))
    } else {
        blocks.iter().any(|&b| source.contains_edge(b))
    }
}

fn build(kind: ComplexKind, source: Hypergraph, forbidden: Vec<VertexSet>) -> Result<ChainComplexRep> {
    let n = source.n();
    let filter = |blocks: &[VertexSet]| admits(kind, &source, &forbidden, blocks);
    let mut basis = Vec::with_capacity(n);
    // degree r has m = r + 2 blocks
    for m in 1..=n {
        let faces = if kind.is_cyclic() {
            enumerate_cyclic_classes(n, m, Some(&filter))?.into_iter().map(CyclicClass::into_rep).collect()
        } else {
            enumerate_ordered_partitions(n, m, Some(&filter))?
        };
        basis.push(faces);
    }
    let index: Vec<HashMap<OrderedPartition, usize>> =
        basis.iter().map(|b| b.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect()).collect();

    let mut boundary = Vec::with_capacity(n);
    boundary.push(SparseMatrix::zeros(0, basis[0].len()));
    for slot in 1..n {
        let target = &index[slot - 1];
        let cols: Vec<Vec<(u32, i64)>> = basis[slot]
            .par_iter()
            .map(|face| {
                let terms = if kind.is_cyclic() {
                    cyclic_boundary_terms(face).into_iter().map(|(c, s)| (c.into_rep(), s)).collect()
                } else {
                    coloring_boundary_terms(face)
                };
                terms
                    .into_iter()
                    .filter_map(|(t, s)| match target.get(&t) {
                        Some(&i) => Some((i as u32, s)),
                        None if kind.is_quotient() => None,
                        None => panic!("boundary term {t} of {face} left the {kind} complex"),
                    })
                    .collect()
            })
            .collect();
        boundary.push(SparseMatrix::from_columns(basis[slot - 1].len(), cols));
    }

    let c = ChainComplexRep { kind, n, source, forbidden, basis, index, boundary };
    c.verify_boundary_squared()?;
    Ok(c)
}

/// The coloring complex of `h`: ordered partitions with a block containing an edge.
pub fn build_coloring_complex(h: &Hypergraph) -> Result<ChainComplexRep> {
    if h.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    build(ComplexKind::Coloring, h.clone(), Vec::new())
}

/// The cyclic coloring complex of `h`.
pub fn build_cyclic_complex(h: &Hypergraph) -> Result<ChainComplexRep> {
    if h.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    build(ComplexKind::Cyclic, h.clone(), Vec::new())
}

/// The cyclic coloring complex of the looped complete graph `E_n`.
pub fn build_en_complex(n: usize) -> Result<ChainComplexRep> {
    build_cyclic_complex(&Hypergraph::looped(n)?)
}

/// Classes in which no block contains one of the first `l` `k`-subsets
/// (lexicographic order); `None` forbids all of them.
pub fn build_cyclic_complement(n: usize, k: usize, l: Option<usize>) -> Result<ChainComplexRep> {
    let h = Hypergraph::complete(n, k)?;
    let all = h.edge_count();
    let l = l.unwrap_or(all);
    if l > all {
        return Err(Error::OutOfRange(format!("l = {l} exceeds C({n},{k}) = {all}")));
    }
    let kind = if l == all { ComplexKind::CyclicComplement } else { ComplexKind::PartialComplement };
    let forbidden = k_subsets(n, k).into_iter().take(l).collect();
    build(kind, h, forbidden)
}

/// Classes in which no block contains one of the first `l` tree edges.
pub fn build_tree_complex(tree: &Hypergraph, l: usize) -> Result<ChainComplexRep> {
    tree.check_rooted_tree()?;
    if l > tree.edge_count() {
        return Err(Error::OutOfRange(format!("l = {l} exceeds the {} tree edges", tree.edge_count())));
    }
    let forbidden = tree.edges()[..l].to_vec();
    build(ComplexKind::Tree, tree.clone(), forbidden)
}

fn for_each_signed_permutation(items: &mut [usize], k: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
    if k == items.len() {
        f(items, sign);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_signed_permutation(items, k + 1, if i == k { sign } else { -sign }, f);
        items.swap(k, i);
    }
}

/// `Σ_σ sgn(σ) [A ∪ {1}, a_σ(1), …, a_σ(t)]` over orderings of the remaining
/// vertices `a_1 < … < a_t` as singleton blocks; degree `t - 1`.
pub fn standard_cycle(n: usize, a: &[usize]) -> Result<Chain> {
    let mut first = VertexSet::from_labels(n, a)?;
    if first.contains(1) {
        return Err(Error::OutOfRange("the subset must avoid vertex 1".into()));
    }
    first.insert(1);
    let mut rest: Vec<usize> = VertexSet::full(n).minus(first).to_vec();
    let degree = rest.len() as isize - 1;
    let mut chain = Chain::zero(degree);
    for_each_signed_permutation(&mut rest, 0, 1, &mut |perm, sign| {
        let mut blocks = Vec::with_capacity(perm.len() + 1);
        blocks.push(first);
        blocks.extend(perm.iter().map(|&v| VertexSet::singleton(v)));
        chain.add_term(OrderedPartition::from_blocks_unchecked(blocks), sign);
    });
    Ok(chain)
}

/// Splits the boundary out of degree `r` into the part preserving `|B_1|`
/// (`M0`) and the part increasing it (`M1`).
pub fn filtered_boundary_split(c: &ChainComplexRep, r: isize) -> Result<(SparseMatrix, SparseMatrix)> {
    if !c.kind().is_cyclic() {
        return Err(Error::WrongKind(format!("the |B_1| grading needs a cyclic complex, got {}", c.kind())));
    }
    let full = c.boundary(r).ok_or_else(|| Error::Degree(format!("degree {r} outside {:?}", c.degrees())))?;
    let mut m0 = Vec::with_capacity(full.ncols());
    let mut m1 = Vec::with_capacity(full.ncols());
    for face in c.basis(r) {
        let size = face.blocks()[0].len();
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (t, s) in c.face_terms(face) {
            let Some(i) = c.index_of(r - 1, &t) else { continue };
            if t.blocks()[0].len() > size {
                b.push((i as u32, s));
            } else {
                a.push((i as u32, s));
            }
        }
        m0.push(a);
        m1.push(b);
    }
    let rows = full.nrows();
    Ok((SparseMatrix::from_columns(rows, m0), SparseMatrix::from_columns(rows, m1)))
}
